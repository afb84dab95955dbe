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

#include "hahn/random.hpp"
#include "hahn/series.hpp"
#include "support.hpp"

using namespace hahn;
using namespace hahn::testing;

TEST_CASE("construction enforces the invariants") {
  const FieldCtx F2 = make_field("F2");
  CHECK_THROWS_AS(Series(F2, {{R(1), F2.zero()}}), DomainError);
  CHECK_THROWS_AS(Series(F2, {{R(3), F2.one()}}, Cap(R(3))), DomainError);
  CHECK_THROWS_AS(Series(F2, {{R(1), F2.element(5)}}), DomainError);
  const Series x(F2, {{R(1, 2), F2.one()}}, Cap(R(2)));
  CHECK(x.coeff(R(1, 2)) == F2.one());
  CHECK(F2.is_zero(x.coeff(R(1))));
  CHECK_THROWS_AS(x.coeff(R(2)), PrecisionError);
}

TEST_CASE("valuation, leading term and monic") {
  const FieldCtx F9 = make_field("F9");
  const Series x = S(F9, "g*t^(-1/2) + t + O(t^3)");
  CHECK(valuation(x).kind == Valuation::Kind::Finite);
  CHECK(valuation(x).value == R(-1, 2));
  CHECK(x.leading_coeff() == F9.gen());
  CHECK_FALSE(x.is_monic());
  CHECK(valuation(Series(F9)).kind == Valuation::Kind::Infinity);
  const Valuation v = valuation(Series::big_o(F9, R(2)));
  CHECK(v.kind == Valuation::Kind::UnknownAtLeast);
  CHECK(v.value == R(2));
  CHECK(valuation_bound(S(F9, "O(t^2)")) == Cap(R(2)));
}

TEST_CASE("text form") {
  const FieldCtx F2 = make_field("F2"), F4 = make_field("F4");
  const FieldCtx Q;
  CHECK(to_string(Series(F2)) == "0");
  CHECK(to_string(Series::big_o(F2, R(0))) == "O(1)");
  CHECK(to_string(S(F2, "t^(1/2)")) == "t^(1/2)");
  CHECK(to_string(S(Q, "1 - 2*t + 1/3*t^2 + O(t^4)")) == "1 - 2*t + 1/3*t^2 + O(t^4)");
  CHECK(to_string(S(F4, "(g+1)*t")) == "(g+1)*t");
  CHECK(to_string(S(F4, "g*t^(-3) + O(t^(-1/2))")) == "g*t^(-3) + O(t^(-1/2))");
}

TEST_CASE("the cap of a sum and a product") {
  const FieldCtx F3 = make_field("F3");
  const Series a = S(F3, "t + O(t^3)"), b = S(F3, "t^(-1) + 2 + O(t^2)");
  CHECK((a + b).cap() == Cap(R(2)));
  // min(3 + (-1), 2 + 1)
  CHECK((a * b).cap() == Cap(R(2)));
  CHECK(to_string(a * b) == "1 + 2*t + O(t^2)");
  // nothing visible: the cap itself bounds the valuation
  const Series o = Series::big_o(F3, R(1));
  CHECK((o * b).cap() == Cap(R(0)));
}

TEST_CASE("inversion reproduces the geometric series") {
  for (const auto& F : small_fields()) {
    const Series x = T(F, R(1)) - T(F, R(2));
    const Series inv = invert(x, Cap(R(12)));
    CHECK(inv.cap() == Cap(R(12)));
    for (long k = -1; k < 12; ++k) CHECK(F.is_one(inv.coeff(R(k))));
    CHECK(inv.terms().size() == 13);
  }
  const FieldCtx F2 = make_field("F2");
  // an exact monomial has an exact inverse
  CHECK(invert(S(F2, "t^(2/3)"), Cap(R(1))) == T(F2, R(-2, 3)));
  // capped input: cap_x - 2v
  CHECK(invert(S(F2, "t + O(t^3)"), Cap(R(10))).cap() == Cap(R(1)));
  CHECK_THROWS_AS(invert(Series(F2), Cap(R(1))), DomainError);
  // a request at or below -v certifies only the absence of lower terms
  CHECK(invert(S(F2, "t^(3/2) + t^2"), Cap(R(-2))) == Series::big_o(F2, R(-2)));
  CHECK(invert(S(F2, "t^(3/2) + t^2"), Cap(R(-3, 2))) == Series::big_o(F2, R(-3, 2)));
}

TEST_CASE("scale, shift and pow_int") {
  const FieldCtx Q;
  const Series x = S(Q, "1 + t");
  CHECK(pow_int(x, 3) == S(Q, "1 + 3*t + 3*t^2 + t^3"));
  CHECK(pow_int(x, 0) == Series::constant(Q, Q.one()));
  CHECK(shift(x, R(-1, 2)) == S(Q, "t^(-1/2) + t^(1/2)"));
  CHECK(scale(x, Q.zero()).is_exact_zero());
  const FieldCtx F2 = make_field("F2");
  CHECK(pow_int(S(F2, "1 + t"), 4) == S(F2, "1 + t^4"));
}

TEST_CASE("truncation and agreement") {
  const FieldCtx F2 = make_field("F2");
  const Series x = S(F2, "1 + t + t^5");
  CHECK(x.truncate(Cap(R(2))) == S(F2, "1 + t + O(t^2)"));
  CHECK(x.truncate(Cap::infinity()) == x);
  CHECK(agree_below(x, S(F2, "1 + t + t^3"), Cap(R(3))));
  CHECK_FALSE(agree_below(x, S(F2, "1 + t + t^3"), Cap(R(4))));
  CHECK(agree_below(x, S(F2, "1 + O(t)")));
}

TEST_CASE("ring laws on random series") {
  for (const auto& F : small_fields()) {
    RandomSeries rs(F, 17);
    SeriesShape capped;
    capped.exact = false;
    for (int i = 0; i < 60; ++i) {
      const Series a = rs.series(i % 2 ? capped : SeriesShape{}), b = rs.series(capped), c = rs.series();
      CHECK(agree_below(a + b, b + a));
      CHECK(agree_below(a * b, b * a));
      CHECK(agree_below((a + b) + c, a + (b + c)));
      CHECK(agree_below((a * b) * c, a * (b * c)));
      CHECK(agree_below(a * (b + c), a * b + a * c));
      CHECK(agree_below(a - a, Series(F)));
      if (a.has_leading_term()) {
        const Series q = div(b, a, Cap(R(6)));
        CHECK(agree_below(q * a, b));
      }
    }
  }
}

TEST_CASE("products of polynomials against schoolbook multiplication") {
  const FieldCtx F9 = make_field("F9");
  RandomSeries rs(F9, 5);
  SeriesShape ints;
  ints.max_den = 1;
  ints.lo = 0;
  ints.hi = 6;
  for (int i = 0; i < 50; ++i) {
    const Series a = rs.series(ints), b = rs.series(ints);
    std::vector<Coeff> prod(13, F9.zero());
    for (long e = 0; e <= 6; ++e)
      for (long f = 0; f <= 6; ++f) prod[e + f] = F9.add(prod[e + f], F9.mul(a.coeff(R(e)), b.coeff(R(f))));
    const Series ab = a * b;
    CHECK(ab.is_exact());
    for (long k = 0; k <= 12; ++k) CHECK(ab.coeff(R(k)) == prod[k]);
  }
}
