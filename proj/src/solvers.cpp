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

#include "hahn/solvers.hpp"

#include "hahn/powers.hpp"

namespace hahn {

Coeff trace(const Series& x) {
  if (!x.cap().above(Rat(0))) throw PrecisionError("trace needs the constant coefficient certified (cap > 0)");
  return x.coeff(Rat(0));
}

Series additive_eval(const AdditivePoly& P, const Series& x) {
  if (!(P.ctx() == x.ctx())) throw FieldMismatch();
  Series acc(x.ctx());
  for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
    if (P.ctx().is_zero(P[i])) continue;
    const Series power = P.ctx().is_finite() ? frobenius_termwise(x, static_cast<long>(i)) : x;
    acc = add(acc, scale(power, P[i]));
  }
  return acc;
}

namespace {

Rat default_target(const Series& b) {
  if (b.has_leading_term() && b.leading_exponent() < 0) return b.leading_exponent() / 2;
  if (b.cap().is_finite()) return b.cap().value();
  return Rat(8);
}

// Q applied to the monomial c t^e.
Series apply_to_monomial(const AdditivePoly& Q, const Coeff& c, const Rat& e) {
  const auto& ctx = Q.ctx();
  const unsigned long p = ctx.characteristic();
  Series::Terms t;
  Coeff power = c;
  Rat exp = e;
  for (std::size_t i = 0; i < Q.coeffs().size(); ++i) {
    if (i > 0) {
      power = ctx.pow(power, static_cast<long>(p));
      exp *= p;
    }
    const Coeff v = ctx.mul(Q[i], power);
    if (!ctx.is_zero(v)) t.emplace(exp, v);
  }
  return Series(ctx, std::move(t));
}

}  // namespace

Series solve_additive(const AdditivePoly& P, const Series& b, std::optional<Rat> target_cap) {
  const auto& ctx = P.ctx();
  if (!(ctx == b.ctx())) throw FieldMismatch();
  if (!ctx.is_finite()) return scale(b, ctx.inv(P[0]));

  const Rat target = target_cap ? *target_cap : default_target(b);
  const auto [Q, j] = separable_part(P);
  const unsigned long p = ctx.characteristic();
  const std::size_t n = Q.top();
  const Rat top_power = rat_pow(p, static_cast<long>(n));

  // P = F^j o Q, so P(x) = b iff Q(x) = b^(1/p^j).
  Series residual = frobenius_termwise(b, -static_cast<long>(j));
  Series::Terms solution;

  if (residual.cap().above(Rat(0))) {
    const Coeff c = b.coeff(Rat(0));
    if (!ctx.is_zero(c)) {
      const auto lift = additive_preimage(P, c);
      if (!lift) throw NoSolution(ctx.format(c));
      solution.emplace(Rat(0), *lift);
      residual = sub(residual, Series::constant(ctx, frobenius(ctx, c, -static_cast<long>(j))));
    }
  }

  // Case 2 terms solve down to exponent/p^n, so stop the residual at target p^n.
  const Rat stop = target < 0 ? Rat(target * top_power) : target;
  while (residual.has_leading_term() && residual.leading_exponent() < stop) {
    const Rat e = residual.leading_exponent();
    const Coeff lead = residual.leading_coeff();
    Coeff c;
    Rat exp;
    if (e < 0) {
      if (stop >= 0) throw PrecisionError("negative support: solutions accumulate at 0 from below; use a negative target cap");
      c = frobenius(ctx, ctx.div(lead, Q[n]), -static_cast<long>(n));
      exp = e / top_power;
    } else {
      c = ctx.div(lead, Q[0]);
      exp = e;
    }
    auto [it, inserted] = solution.emplace(exp, c);
    if (!inserted) {
      it->second = ctx.add(it->second, c);
      if (ctx.is_zero(it->second)) solution.erase(it);
    }
    residual = sub(residual, apply_to_monomial(Q, c, exp));
  }

  const Cap unresolved = valuation_bound(residual);
  Cap cap = unresolved;
  if (unresolved.is_finite() && unresolved.value() < 0) cap = Cap(Rat(unresolved.value() / top_power));
  return Series(ctx, std::move(solution)).truncate(cap);
}

Series artin_schreier_h(const Series& x, unsigned n, std::optional<Rat> target_cap) {
  const auto& ctx = x.ctx();
  if (!ctx.is_finite()) throw DomainError("Artin-Schreier operator needs positive characteristic");
  if (n == 0) throw DomainError("n must be positive");
  std::vector<Coeff> coeffs(n + 1, ctx.zero());
  coeffs[0] = ctx.one();
  coeffs[n] = ctx.one();
  const Series rhs = sub(x, Series::constant(ctx, trace(x)));
  return solve_additive(AdditivePoly(ctx, std::move(coeffs)), rhs, target_cap);
}

Sign valuation_sign_via_trace(const Series& x) {
  const auto& ctx = x.ctx();
  if (!ctx.is_finite()) throw DomainError("sign via trace needs positive characteristic");
  if (!ctx.is_zero(trace(x))) throw DomainError("sign via trace needs Tr(x) = 0");
  if (!x.has_leading_term()) throw PrecisionError("sign via trace needs a visible leading term");
  const Series xp = frobenius_termwise(x, 1);
  const Series quotient = div(xp, sub(xp, x), Cap(1));
  if (!quotient.cap().above(Rat(0)))
    throw PrecisionError("not enough precision to certify Tr(x^p/(x^p - x))");
  const Coeff tr = trace(quotient);
  if (ctx.is_zero(tr)) return Sign::Positive;
  if (ctx.is_one(tr)) return Sign::Negative;
  throw DomainError("unexpected trace " + ctx.format(tr));
}

Coeff norm_leading(const Series& x) {
  if (!x.ctx().is_finite()) throw DomainError("norm is defined for finite coefficient fields");
  if (!x.has_leading_term()) throw PrecisionError("norm needs a visible leading term");
  return x.leading_coeff();
}

std::vector<IntersectionEntry> intersection_spotcheck(const Series& x, const std::vector<AdditivePoly>& polys) {
  std::vector<IntersectionEntry> out;
  const Coeff tr = trace(x);
  for (const auto& P : polys) {
    IntersectionEntry entry{P, false, std::nullopt};
    try {
      solve_additive(P, x);
      entry.solvable = true;
    } catch (const NoSolution&) {
      entry.obstruction = tr;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace hahn
