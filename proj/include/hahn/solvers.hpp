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

#ifndef HAHN_SOLVERS_HPP
#define HAHN_SOLVERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hahn/additive.hpp"
#include "hahn/series.hpp"

namespace hahn {

/// Constant coefficient; needs cap > 0.
Coeff trace(const Series& x);

/// Additive polynomial applied to a series: sum a_i x^(p^i), each p-power
/// taken termwise.
Series additive_eval(const AdditivePoly& P, const Series& x);

/// Solves P(x) = b by leading-term elimination. Negative exponents of b are
/// cleared from the most negative one upward (solution terms accumulate at
/// 0 from below), positive ones from the lowest upward. The result is
/// certified below a cap >= target (or as far as b's cap allows); a nonzero
/// constant term of b is lifted through P on k or raises NoSolution.
/// Without a target: min(0, v(b))/2 for b with negative support, else cap_b
/// (8 when b is exact).
Series solve_additive(const AdditivePoly& P, const Series& b, std::optional<Rat> target_cap = std::nullopt);

/// The trace-zero y with y^(p^n) + y = x - Tr(x).
Series artin_schreier_h(const Series& x, unsigned n, std::optional<Rat> target_cap = std::nullopt);

enum class Sign { Negative, Positive };

/// Sign of v(x) for trace-zero x read off Tr(x^p / (x^p - x)).
Sign valuation_sign_via_trace(const Series& x);

/// Leading coefficient c: x/c is monic and has n-th roots for every n.
Coeff norm_leading(const Series& x);

struct IntersectionEntry {
  AdditivePoly poly;
  bool solvable = false;
  std::optional<Coeff> obstruction;  // the trace when it is not in P(k)
};

/// Membership of x in P(K) for each P: trace-zero x must be solvable for
/// every P; otherwise the constant Tr(x) decides.
std::vector<IntersectionEntry> intersection_spotcheck(const Series& x, const std::vector<AdditivePoly>& polys);

}  // namespace hahn

#endif  // HAHN_SOLVERS_HPP
