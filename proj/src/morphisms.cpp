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

#include "hahn/morphisms.hpp"

#include <numeric>

#include "hahn/powers.hpp"

namespace hahn {

ExpHom ExpHom::trivial(const FieldCtx& ctx) { return ExpHom(ctx); }

ExpHom::ExpHom(FieldCtx ctx, std::vector<Pair> committed) : ctx_(std::move(ctx)), committed_(std::move(committed)) {
  for (const auto& [d, u] : committed_) {
    if (d == 0) throw DomainError("committed denominator must be positive");
    if (!ctx_.contains(u) || ctx_.is_zero(u)) throw DomainError("committed value must be a nonzero field element");
  }
  for (std::size_t i = 0; i < committed_.size(); ++i) {
    for (std::size_t j = i + 1; j < committed_.size(); ++j) {
      const auto& [d1, u1] = committed_[i];
      const auto& [d2, u2] = committed_[j];
      const unsigned long g = std::gcd(d1, d2);
      // Both define lambda(1/g).
      if (!(ctx_.pow(u1, static_cast<long>(d1 / g)) == ctx_.pow(u2, static_cast<long>(d2 / g))))
        throw DomainError("committed values for 1/" + std::to_string(d1) + " and 1/" + std::to_string(d2) +
                          " are incompatible");
    }
  }
}

bool ExpHom::queryable(const Rat& e) const {
  if (trivial_ || e == 0) return true;
  for (const auto& [d, u] : committed_)
    if (mpz_divisible_p(Int(d).get_mpz_t(), e.get_den().get_mpz_t())) return true;
  return false;
}

Coeff ExpHom::operator()(const Rat& e) const {
  if (trivial_ || e == 0) return ctx_.one();
  for (const auto& [d, u] : committed_) {
    if (mpz_divisible_p(Int(d).get_mpz_t(), e.get_den().get_mpz_t())) {
      const Rat k = e * Rat(Int(d));  // e = k / d
      return ctx_.pow(u, k.get_num());
    }
  }
  throw DomainError("lambda(" + to_string(e) + ") is outside the committed lattices");
}

ExpHom ExpHom::inverse() const {
  if (trivial_) return *this;
  std::vector<Pair> inv;
  for (const auto& [d, u] : committed_) inv.emplace_back(d, ctx_.inv(u));
  return ExpHom(ctx_, std::move(inv));
}

Series psi_lambda(const ExpHom& lambda, const Series& y) { return thm2_map(lambda, Rat(1), y); }

Series thm2_map(const ExpHom& lambda, const Rat& r, const Series& y) {
  if (!(lambda.ctx() == y.ctx())) throw FieldMismatch();
  if (r <= 0) throw DomainError("exponent scale r must be positive");
  const auto& ctx = y.ctx();
  Series::Terms t;
  for (const auto& [e, c] : y.terms()) t.emplace(Rat(e * r), ctx.mul(lambda(e), c));
  return Series(ctx, std::move(t), y.cap() * r);
}

SubstitutionResult substitute(const Series& x, const Series& y, const Cap& requested) {
  if (!(x.ctx() == y.ctx())) throw FieldMismatch();
  if (!x.has_leading_term()) throw PrecisionError("substitution needs a visible leading term");
  if (!x.is_monic()) throw DomainError("substitution needs a monic series");
  const Rat m = x.leading_exponent();
  if (m <= 0) throw DomainError("substitution needs positive valuation");
  const auto& ctx = x.ctx();

  const Cap tail = y.cap() * m;  // the unknown part of y maps to valuation >= m cap_y
  const Cap target = min(requested, tail);
  SubstitutionDiagnostics diag;
  Series sum(ctx);
  bool skipped = false;
  for (const auto& [e, c] : y.terms()) {
    if (!target.above(Rat(m * e))) {
      skipped = true;
      break;
    }
    Series term = scale(pow_rat(x, e, target), c);
    TermContribution tc{e, std::nullopt, term.cap()};
    if (ctx.is_finite() && e != 0) tc.padic_valuation = padic_valuation(e, ctx.characteristic());
    diag.terms.push_back(std::move(tc));
    sum = add(sum, term);
  }
  if (ctx.is_finite()) {
    // Ascending exponents whose p-adic valuations keep dropping below zero.
    std::optional<long> prev;
    for (const auto& tc : diag.terms) {
      if (!tc.padic_valuation || *tc.padic_valuation >= 0) continue;
      if (prev && *tc.padic_valuation < *prev) diag.hypothesis_a_risk = true;
      prev = prev ? std::max(*prev, *tc.padic_valuation) : *tc.padic_valuation;
    }
  }
  Series value = sum.truncate(skipped ? target : tail);
  Cap achieved = value.cap();
  return {std::move(value), std::move(achieved), std::move(diag)};
}

OrbitClass classify_orbit(const Series& y) {
  const auto& ctx = y.ctx();
  if (!y.has_leading_term()) {
    if (y.is_exact()) throw DomainError("zero is a constant, not in any orbit");
    throw PrecisionError("orbit undecidable: no visible leading term below cap " + to_string(y.cap()));
  }
  const Rat& v = y.leading_exponent();
  if (v < 0) return {true, ctx.zero()};
  if (v > 0) return {false, ctx.zero()};
  if (y.terms().size() == 1) {
    if (y.is_exact()) throw DomainError("bare constant is not in any orbit");
    throw PrecisionError("orbit undecidable: cannot tell the series from a constant below cap " + to_string(y.cap()));
  }
  return {false, y.leading_coeff()};
}

std::string to_string(const FieldCtx& ctx, const OrbitClass& cls) {
  if (cls.infinite) return "S_inf";
  if (ctx.is_zero(cls.c)) return "S_0";
  return "S_c(" + ctx.format(cls.c) + ")";
}

Series apply_transform(const Transform& T, const Series& z, const Cap& requested) {
  Series cur = z;
  for (const auto& s : T.steps) {
    cur = std::visit(
        [&](const auto& st) -> Series {
          using S = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<S, step::Translate>) {
            return add(cur, Series::constant(cur.ctx(), st.c));
          } else if constexpr (std::is_same_v<S, step::Invert>) {
            return invert(cur, requested);
          } else if constexpr (std::is_same_v<S, step::Rescale>) {
            return psi_lambda(st.lambda, cur);
          } else if constexpr (std::is_same_v<S, step::ScaleExp>) {
            return thm2_map(ExpHom::trivial(cur.ctx()), st.r, cur);
          } else {
            return substitute(st.x, cur, requested).value;
          }
        },
        s);
  }
  return cur;
}

namespace {

// Transform taking t to w, for w of positive valuation.
std::vector<TransformStep> positive_witness(const Series& w) {
  const auto& ctx = w.ctx();
  if (w.is_monic()) return {step::Substitute{w}};
  // lambda(v) = leading coefficient on the lattice (1/d)Z spanned by the support.
  Int d = 1;
  for (const auto& [e, c] : w.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_den().get_mpz_t());
  if (!d.fits_ulong_p()) throw DomainError("exponent lattice too fine for a committed lambda");
  const Rat k = w.leading_exponent() * Rat(d);
  const auto roots = nth_roots(ctx, w.leading_coeff(), k.get_num().get_ui());
  if (roots.empty())
    throw DomainError("leading coefficient " + ctx.format(w.leading_coeff()) + " is not reachable by a constructible lambda");
  const ExpHom lambda(ctx, {{d.get_ui(), roots.front()}});
  Series x = psi_lambda(lambda.inverse(), w);
  return {step::Substitute{std::move(x)}, step::Rescale{lambda}};
}

}  // namespace

Transform orbit_transform(const Series& y, const Cap& requested) {
  const OrbitClass cls = classify_orbit(y);
  Transform T{y.ctx(), {}};
  if (cls.infinite) {
    // 1/y lies in S_0; inverting back at `requested` needs 1/y below requested - 2 v(y).
    const Series w = invert(y, requested + Rat(-2 * y.leading_exponent()));
    T.steps = positive_witness(w);
    T.steps.emplace_back(step::Invert{});
  } else if (!y.ctx().is_zero(cls.c)) {
    T.steps = positive_witness(sub(y, Series::constant(y.ctx(), cls.c)));
    T.steps.emplace_back(step::Translate{cls.c});
  } else {
    T.steps = positive_witness(y);
  }
  return T;
}

}  // namespace hahn
