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

#include "doctest.h"

#include "hahn/morphisms.hpp"
#include "hahn/powers.hpp"
#include "hahn/random.hpp"
#include "support.hpp"

using namespace hahn;
using namespace hahn::testing;

namespace {

ExpHom random_hom(RandomSeries& rs) {
  if (rs.below(5) == 0) return ExpHom::trivial(rs.ctx());
  return ExpHom(rs.ctx(), {{12, rs.nonzero_coeff()}});
}

}  // namespace

TEST_CASE("committed exponent homomorphisms") {
  const FieldCtx F9 = make_field("F9");
  const Coeff g = F9.gen();
  const ExpHom lam(F9, {{2, g}, {1, F9.mul(g, g)}});
  CHECK(lam(R(1, 2)) == g);
  CHECK(lam(R(3, 2)) == F9.pow(g, 3L));
  CHECK(lam(R(-1, 2)) == F9.inv(g));
  CHECK(lam.queryable(R(7)));
  CHECK_FALSE(lam.queryable(R(1, 3)));
  CHECK_THROWS_AS(lam(R(1, 3)), DomainError);
  CHECK_THROWS_AS(ExpHom(F9, {{2, g}, {1, F9.one()}}), DomainError);
  CHECK_THROWS_AS(ExpHom(F9, {{2, F9.zero()}}), DomainError);
  CHECK(ExpHom::trivial(F9)(R(5, 7)) == F9.one());
  for (long k = -6; k <= 6; ++k) CHECK(F9.is_one(F9.mul(lam(R(k, 2)), lam.inverse()(R(k, 2)))));
}

TEST_CASE("rescaling and exponent scaling") {
  const FieldCtx F4 = make_field("F4");
  const ExpHom lam(F4, {{1, F4.gen()}});
  CHECK(psi_lambda(lam, S(F4, "1 + t + t^2 + O(t^3)")) == S(F4, "1 + g*t + (g+1)*t^2 + O(t^3)"));
  CHECK(thm2_map(ExpHom::trivial(F4), R(3, 2), S(F4, "t^(-2) + t + O(t^2)")) == S(F4, "t^(-3) + t^(3/2) + O(t^3)"));
  CHECK_THROWS_AS(thm2_map(lam, R(0), T(F4, R(1))), DomainError);
  CHECK_THROWS_AS(psi_lambda(lam, T(F4, R(1, 2))), DomainError);
}

TEST_CASE("rescalings and substitutions are ring homomorphisms") {
  for (const auto& F : small_fields()) {
    RandomSeries rs(F, 41);
    SeriesShape shape;
    shape.exact = false;
    const Cap req(R(5));
    for (int i = 0; i < 25; ++i) {
      const Series a = rs.series(shape), b = rs.series(shape);
      const ExpHom lam = random_hom(rs);
      CHECK(agree_below(psi_lambda(lam, a + b), psi_lambda(lam, a) + psi_lambda(lam, b)));
      CHECK(agree_below(psi_lambda(lam, a * b), psi_lambda(lam, a) * psi_lambda(lam, b)));
      CHECK(agree_below(psi_lambda(lam.inverse(), psi_lambda(lam, a)), a));
      const Rat r = rs.exponent(R(1, 3), R(3), 3);
      CHECK(agree_below(thm2_map(lam, r, a * b), thm2_map(lam, r, a) * thm2_map(lam, r, b)));
      const Series x = rs.monic_positive();
      const Series sa = substitute(x, a, req).value, sb = substitute(x, b, req).value;
      CHECK(agree_below(substitute(x, a + b, req).value, sa + sb));
      CHECK(agree_below(substitute(x, a * b, req).value, sa * sb));
    }
  }
}

TEST_CASE("substituting into t and by t") {
  for (const auto& F : small_fields()) {
    RandomSeries rs(F, 43);
    for (int i = 0; i < 20; ++i) {
      const Series x = rs.monic_positive();
      const SubstitutionResult r = substitute(x, T(F, R(1)), Cap(R(4)));
      CHECK(r.value == x);
      CHECK(r.achieved_cap.is_infinite());
      const Series y = rs.series();
      CHECK(agree_below(substitute(T(F, R(1)), y, Cap(R(6))).value, y));
    }
  }
}

TEST_CASE("valuation multiplies under substitution") {
  for (const auto& F : small_fields()) {
    RandomSeries rs(F, 47);
    for (int i = 0; i < 30; ++i) {
      const Series x = rs.monic_positive(), y = rs.series();
      if (!y.has_leading_term()) continue;
      const SubstitutionResult r = substitute(x, y, Cap(R(6)));
      const Rat expected = x.leading_exponent() * y.leading_exponent();
      if (!r.achieved_cap.above(expected)) continue;
      CHECK(valuation(r.value).value == expected);
    }
  }
}

TEST_CASE("substitution preconditions and the achieved cap") {
  const FieldCtx F3 = make_field("F3");
  CHECK_THROWS_AS(substitute(S(F3, "2*t"), T(F3, R(1)), Cap(R(2))), DomainError);
  CHECK_THROWS_AS(substitute(S(F3, "t^(-1)"), T(F3, R(1)), Cap(R(2))), DomainError);
  // m * cap_y bounds the result
  const SubstitutionResult r = substitute(S(F3, "t^2"), S(F3, "1 + t + O(t^3)"), Cap(R(100)));
  CHECK(r.achieved_cap == Cap(R(6)));
  CHECK(r.value == S(F3, "1 + t^2 + O(t^6)"));
}

TEST_CASE("the divergent substitution in characteristic p") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const FieldCtx F = FieldCtx::finite(p);
    const Series x = T(F, R(1)) - T(F, R(2));
    Series y(F);
    for (long k = 1; k <= 6; ++k) {
      y = y + T(F, -rat_pow(p, -k));
      const SubstitutionResult r = substitute(x, y, Cap(R(1)));
      CHECK(r.value.coeff(R(0)) == F.from_int(k));
      CHECK(r.diagnostics.hypothesis_a_risk == (k >= 2));
      REQUIRE(r.diagnostics.terms.size() == static_cast<std::size_t>(k));
      CHECK(r.diagnostics.terms.front().padic_valuation == -1);
      CHECK(r.diagnostics.terms.back().padic_valuation == -k);
    }
  }
  // Over Q the binomial expansions never reach t^0.
  const FieldCtx Q;
  const SubstitutionResult r = substitute(S(Q, "t - t^2"), S(Q, "t^(-1/2) + t^(-1/4)"), Cap(R(1)));
  CHECK_FALSE(r.diagnostics.hypothesis_a_risk);
  CHECK(Q.is_zero(r.value.coeff(R(0))));
  CHECK(r.value.coeff(R(1, 2)) == Q.from_rat(R(1, 2)));
}

TEST_CASE("orbit classes") {
  const FieldCtx F9 = make_field("F9");
  CHECK(to_string(F9, classify_orbit(S(F9, "t^(-1/3) + g"))) == "S_inf");
  CHECK(to_string(F9, classify_orbit(S(F9, "t^(1/3) + O(t)"))) == "S_0");
  CHECK(to_string(F9, classify_orbit(S(F9, "g + 2*t"))) == "S_c(g)");
  CHECK(to_string(F9, classify_orbit(S(F9, "g + 1 + t^(1/2) + O(t)"))) == "S_c(g+1)");
  // the known part cannot rule out a bare constant
  CHECK_THROWS_AS(classify_orbit(S(F9, "g + 1 + O(t^(1/2))")), PrecisionError);
  CHECK_THROWS_AS(classify_orbit(S(F9, "O(t^(-1))")), PrecisionError);
  CHECK_THROWS_AS(classify_orbit(S(F9, "O(1)")), PrecisionError);
  CHECK_THROWS_AS(classify_orbit(S(F9, "g")), DomainError);
  CHECK_THROWS_AS(classify_orbit(Series(F9)), DomainError);
}

TEST_CASE("orbit witnesses carry t onto y") {
  for (const auto& F : small_fields()) {
    RandomSeries rs(F, 53);
    const Cap req(R(4));
    int checked = 0, unreachable = 0;
    for (int i = 0; i < 40; ++i) {
      const Series y = rs.series();
      OrbitClass cls;
      try {
        cls = classify_orbit(y);
      } catch (const Error&) {
        continue;
      }
      Transform T{F, {}};
      try {
        T = orbit_transform(y, req);
      } catch (const DomainError&) {
        ++unreachable;  // leading coefficient needs a root outside the field
        continue;
      }
      const Series image = apply_transform(T, Series::t_pow(F, R(1)), req);
      CAPTURE(to_string(y));
      CHECK(agree_below(image, y, req));
      CHECK(classify_orbit(image) == cls);
      ++checked;
    }
    CHECK(checked > 10);
    if (F.is_finite() && F.order() == 2) CHECK(unreachable == 0);
  }
}
