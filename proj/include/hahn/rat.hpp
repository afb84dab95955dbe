// Copyright 2026 The hahn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HAHN_RAT_HPP
#define HAHN_RAT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hahn/error.hpp"

namespace hahn {

/// Exact rational, always canonical (gcd 1, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Exact p-adic valuation of a nonzero rational.
long padic_valuation(const Rat& r, unsigned long p);

/// p^k as a rational, k of either sign.
Rat rat_pow(unsigned long p, long k);

bool is_integer(const Rat& r);

/// Certification bound of a series: a rational, or +infinity for exact series.
class Cap {
 public:
  Cap() = default;  // +inf
  Cap(Rat r) : value_(std::move(r)) {}
  Cap(long n) : value_(Rat(n)) {}

  static Cap infinity() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rat& value() const;

  friend Cap min(const Cap& a, const Cap& b);
  friend Cap operator+(const Cap& a, const Rat& r);
  friend Cap operator+(const Cap& a, const Cap& b);
  friend Cap operator*(const Cap& a, const Rat& r);  // r > 0

  friend bool operator==(const Cap& a, const Cap& b) = default;
  friend std::strong_ordering operator<=>(const Cap& a, const Cap& b);

  /// True when the exponent lies strictly below the cap.
  bool above(const Rat& e) const { return is_infinite() || e < *value_; }

 private:
  std::optional<Rat> value_;
};

std::string to_string(const Cap& c);
std::ostream& operator<<(std::ostream& os, const Cap& c);

}  // namespace hahn

#endif  // HAHN_RAT_HPP
