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

#ifndef HAHN_POWERS_HPP
#define HAHN_POWERS_HPP

#include "hahn/series.hpp"

namespace hahn {

/// binom(i, n) = i (i-1) ... (i-n+1) / n! as an exact rational.
Rat binomial_exact(const Rat& i, unsigned long n);

/// binom(i, n) mapped into ctx. In characteristic p the denominator of i must
/// be prime to p; the value is computed with Lucas' theorem on the p-adic
/// digits of i.
Coeff rat_binomial(const FieldCtx& ctx, const Rat& i, unsigned long n);

/// Termwise Frobenius sum c t^e -> sum c^(p^b) t^(e p^b); the cap scales by p^b.
/// This is the map z -> z^(p^b) in characteristic p.
Series frobenius_termwise(const Series& x, long b);

/// x^i for monic x. Writes x = t^m (1 + eps) and expands (1 + eps)^i by the
/// binomial series; in characteristic p the exponent is split as i = p^b q
/// with q prime to p and the p^b part is applied termwise.
Series pow_rat(const Series& x, const Rat& i, const Cap& requested);

/// pow_rat(x, 1/n).
Series nth_root(const Series& x, unsigned long n, const Cap& requested);

}  // namespace hahn

#endif  // HAHN_POWERS_HPP
