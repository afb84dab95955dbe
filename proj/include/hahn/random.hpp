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

#ifndef HAHN_RANDOM_HPP
#define HAHN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "hahn/additive.hpp"
#include "hahn/series.hpp"

namespace hahn {

struct SeriesShape {
  unsigned min_terms = 1;
  unsigned max_terms = 5;
  Rat lo = -2;   // exponents drawn from [lo, hi]
  Rat hi = 3;
  unsigned max_den = 4;
  bool exact = true;  // otherwise cap drawn just above the largest exponent
};

/// Seeded generators for randomized property checks.
class RandomSeries {
 public:
  RandomSeries(FieldCtx ctx, std::uint64_t seed) : ctx_(std::move(ctx)), rng_(seed) {}

  const FieldCtx& ctx() const { return ctx_; }
  std::mt19937_64& engine() { return rng_; }

  Coeff coeff();
  Coeff nonzero_coeff();
  Rat exponent(const Rat& lo, const Rat& hi, unsigned max_den);
  Series series(const SeriesShape& shape = {});
  /// Monic with leading exponent in (0, 2].
  Series monic_positive(unsigned max_terms = 3, unsigned max_den = 3);
  /// Random series with the constant coefficient removed.
  Series trace_zero(const SeriesShape& shape = {});
  AdditivePoly additive(unsigned max_top = 2);
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }

 private:
  FieldCtx ctx_;
  std::mt19937_64 rng_;
};

}  // namespace hahn

#endif  // HAHN_RANDOM_HPP
