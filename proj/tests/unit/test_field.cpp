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

#include "hahn/field.hpp"
#include "support.hpp"

using namespace hahn;
using namespace hahn::testing;

TEST_CASE("rationals parse and print canonically") {
  CHECK(parse_rat("-6/4") == R(-3, 2));
  CHECK(to_string(parse_rat("4/2")) == "2");
  CHECK(to_string(R(-1, 16)) == "-1/16");
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("x"), ParseError);
  CHECK(padic_valuation(R(12, 5), 2) == 2);
  CHECK(padic_valuation(R(1, 9), 3) == -2);
  CHECK(rat_pow(2, -3) == R(1, 8));
}

TEST_CASE("cap ordering treats infinity as the top element") {
  const Cap inf = Cap::infinity();
  CHECK(Cap(R(5)) < inf);
  CHECK(min(inf, Cap(R(-1, 2))) == Cap(R(-1, 2)));
  CHECK((inf + R(3)).is_infinite());
  CHECK(Cap(R(1, 2)) + Cap(R(1, 3)) == Cap(R(5, 6)));
  CHECK(Cap(R(3)) * R(1, 3) == Cap(R(1)));
  CHECK(Cap(R(1)).above(R(0)));
  CHECK_FALSE(Cap(R(1)).above(R(1)));
  CHECK(to_string(inf) == "inf");
}

TEST_CASE("field specs and default moduli") {
  CHECK(make_field("F9").modulus_string() == "x^2+1");
  CHECK(make_field("F4").modulus_string() == "x^2+x+1");
  CHECK(make_field("F9:x^2+2*x+2").spec() == "F9:x^2+2*x+2");
  CHECK(make_field("Q").characteristic() == 0);
  CHECK(make_field("F8").degree() == 3);
  CHECK_THROWS_AS(make_field("F6"), Error);
  CHECK_THROWS_AS(make_field("F9:x^2+x+1"), Error);  // reducible mod 3: (x+2)^2
  CHECK_THROWS_AS(make_field("F1"), Error);
  CHECK_FALSE(make_field("F9") == make_field("F9:x^2+2*x+2"));
}

TEST_CASE("Rabin irreducibility agrees with trial division") {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (std::size_t e = 1; e <= (p == 2 ? 6u : 3u); ++e) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < e; ++i) count *= p;
      for (std::uint64_t c = 0; c < count; ++c) {
        Poly low = poly_from_code(c, p);
        low.resize(e, 0);
        CAPTURE(p);
        CAPTURE(c);
        CHECK(is_irreducible(p, low) == irreducible_by_trial_division(p, low));
      }
    }
  }
}

TEST_CASE("extension arithmetic matches polynomial arithmetic modulo the modulus") {
  for (const char* spec : {"F4", "F8", "F9", "F27", "F25", "F16"}) {
    const FieldCtx F = make_field(spec);
    const std::uint64_t p = F.characteristic();
    Poly m(F.modulus().begin(), F.modulus().end());
    m.push_back(1);
    for (std::uint64_t a = 0; a < F.order(); ++a) {
      for (std::uint64_t b = 0; b < F.order(); ++b) {
        const Coeff x = F.element(a), y = F.element(b);
        const Poly prod = poly_mod(poly_mul(poly_from_code(a, p), poly_from_code(b, p), p), m, p);
        REQUIRE(F.code(F.mul(x, y)) == poly_code(prod, p));
        REQUIRE(F.sub(F.add(x, y), y) == x);
      }
      if (a != 0) REQUIRE(F.is_one(F.mul(F.element(a), F.inv(F.element(a)))));
    }
  }
}

TEST_CASE("field axioms and Frobenius on every small field") {
  for (const auto& F : finite_fields()) {
    const auto el = F.elements();
    const std::uint64_t p = F.characteristic();
    for (const auto& a : el) {
      CHECK(F.pow(a, static_cast<long>(F.order())) == a);
      CHECK(frobenius(F, frobenius(F, a, 1), -1) == a);
      CHECK(frobenius(F, a, 1) == F.pow(a, static_cast<long>(p)));
      CHECK(frobenius(F, a, static_cast<long>(F.degree())) == a);
      for (const auto& b : el) CHECK(frobenius(F, F.add(a, b), 1) == F.add(frobenius(F, a, 1), frobenius(F, b, 1)));
    }
  }
  const FieldCtx Q;
  CHECK(Q.div(Q.from_int(3), Q.from_int(6)) == Q.from_rat(R(1, 2)));
  CHECK_THROWS_AS(Q.inv(Q.zero()), DomainError);
}

TEST_CASE("coefficient text round-trips") {
  for (const auto& F : small_fields()) {
    if (F.is_finite()) {
      for (const auto& a : F.elements()) CHECK(F.parse_coeff(F.format(a)) == a);
    }
  }
  const FieldCtx F9 = make_field("F9");
  CHECK(F9.format(F9.add(F9.gen(), F9.one())) == "g+1");
  CHECK(F9.format(F9.mul(F9.gen(), F9.gen())) == "2");  // g^2 = -1
  const FieldCtx Q;
  CHECK(Q.format(Q.from_rat(R(-7, 3))) == "-7/3");
  CHECK_THROWS_AS(make_field("F3").gen(), DomainError);
}

TEST_CASE("nth roots enumerate in code order") {
  const FieldCtx F9 = make_field("F9");
  for (const auto& c : F9.elements()) {
    for (unsigned long n = 1; n <= 8; ++n) {
      const auto roots = nth_roots(F9, c, n);
      std::size_t expected = 0;
      for (const auto& r : F9.elements())
        if (F9.pow(r, static_cast<long>(n)) == c) ++expected;
      CHECK(roots.size() == expected);
      for (std::size_t i = 1; i < roots.size(); ++i) CHECK(F9.code(roots[i - 1]) < F9.code(roots[i]));
    }
  }
  const FieldCtx Q;
  CHECK(nth_roots(Q, Q.from_rat(R(9, 4)), 2) == std::vector<Coeff>{Q.from_rat(R(3, 2)), Q.from_rat(R(-3, 2))});
  CHECK(nth_roots(Q, Q.from_int(-8), 3) == std::vector<Coeff>{Q.from_int(-2)});
  CHECK(nth_roots(Q, Q.from_int(-4), 2).empty());
  CHECK_THROWS_AS(nth_roots(Q, Q.from_int(2), 2), DomainError);
}

TEST_CASE("mixing fields is rejected") {
  const FieldCtx F2 = make_field("F2"), F3 = make_field("F3");
  CHECK_THROWS_AS(T(F2, R(1)) + T(F3, R(1)), FieldMismatch);
}
