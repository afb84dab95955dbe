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

#ifndef HAHN_ADDITIVE_HPP
#define HAHN_ADDITIVE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hahn/field.hpp"

namespace hahn {

/// P(x) = a_0 x + a_1 x^p + ... + a_n x^(p^n) with a_n != 0.
/// Over Q only the linear case n = 0 exists.
class AdditivePoly {
 public:
  AdditivePoly(FieldCtx ctx, std::vector<Coeff> coeffs);

  /// Sparse form "a*x^q + ... + b*x", q a power of p (also "x^p^i").
  static AdditivePoly parse(const FieldCtx& ctx, std::string_view text);
  /// x^q - x over F_q.
  static AdditivePoly canonical(const FieldCtx& ctx);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
  std::size_t top() const { return coeffs_.size() - 1; }

  std::string to_string() const;

  friend bool operator==(const AdditivePoly& a, const AdditivePoly& b) {
    return a.ctx_ == b.ctx_ && a.coeffs_ == b.coeffs_;
  }

 private:
  FieldCtx ctx_;
  std::vector<Coeff> coeffs_;
};

Coeff additive_eval(const AdditivePoly& P, const Coeff& c);

/// P = F^j o Q with Q separable (nonzero x-coefficient).
struct SeparablePart {
  AdditivePoly separable;
  unsigned frobenius_power = 0;
};

SeparablePart separable_part(const AdditivePoly& P);

/// Smallest element (code order) with P(x) = c, by exhaustive search.
std::optional<Coeff> additive_preimage(const AdditivePoly& P, const Coeff& c);

struct HypothesisAVerdict {
  bool satisfies = true;
  std::optional<Coeff> witness;  // a value with no preimage
};

/// Surjectivity of P on k (canonical x^q - x when P is omitted); Q satisfies
/// by convention.
HypothesisAVerdict hypothesis_a_check(const FieldCtx& ctx, const std::optional<AdditivePoly>& P = std::nullopt);

}  // namespace hahn

#endif  // HAHN_ADDITIVE_HPP
