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

#ifndef HAHN_TESTS_SUPPORT_HPP
#define HAHN_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "hahn/expr.hpp"
#include "hahn/field.hpp"
#include "hahn/series.hpp"

namespace hahn::testing {

inline std::vector<FieldCtx> small_fields() {
  return {make_field("F2"), make_field("F3"), make_field("F4"), make_field("F9"), FieldCtx::rationals()};
}

inline std::vector<FieldCtx> finite_fields() {
  return {make_field("F2"), make_field("F3"), make_field("F4"), make_field("F8"), make_field("F9")};
}

inline Series S(const FieldCtx& ctx, const std::string& text, const Rat& cap = Rat(8)) {
  return expr::parse_series(ctx, text, cap);
}

inline Series T(const FieldCtx& ctx, const Rat& e) { return Series::t_pow(ctx, e); }

inline Rat R(long n, long d = 1) { return make_rat(n, d); }

// Naive polynomials over F_p, lowest degree first; used as an independent
// model of F_{p^e}.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = [&] {
    for (std::uint64_t x = 1; x < p; ++x)
      if (x * m.back() % p == 1) return x;
    return std::uint64_t{0};
  }();
  while (a.size() >= m.size()) {
    const std::uint64_t f = a.back() * lead_inv % p;
    const std::size_t s = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[s + i] = (a[s + i] + p * p - f * m[i] % p) % p;
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline Poly poly_from_code(std::uint64_t code, std::uint64_t p) {
  Poly r;
  while (code) {
    r.push_back(code % p);
    code /= p;
  }
  return r;
}

inline std::uint64_t poly_code(const Poly& a, std::uint64_t p) {
  std::uint64_t c = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) c = c * p + *it;
  return c;
}

// Irreducible iff no monic factor of degree 1..e/2 divides it.
inline bool irreducible_by_trial_division(std::uint64_t p, const std::vector<std::uint64_t>& low) {
  Poly f(low.begin(), low.end());
  f.push_back(1);
  const std::size_t e = low.size();
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = poly_from_code(c, p);
      g.resize(d, 0);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace hahn::testing

#endif  // HAHN_TESTS_SUPPORT_HPP
