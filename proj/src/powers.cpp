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

#include "hahn/powers.hpp"

#include <vector>

namespace hahn {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 invmod(u64 a, u64 p) {
  u64 r = 1, n = p - 2;
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

// binom(x, k) mod p for 0 <= x, k < p.
u64 small_binomial(u64 x, u64 k, u64 p) {
  if (k > x) return 0;
  u64 num = 1, den = 1;
  for (u64 j = 0; j < k; ++j) {
    num = mulmod(num, x - j, p);
    den = mulmod(den, j + 1, p);
  }
  return mulmod(num, invmod(den, p), p);
}

// Successive binomial coefficients binom(i, n) in a fixed field.
class BinomialSequence {
 public:
  BinomialSequence(const FieldCtx& ctx, const Rat& i) : ctx_(ctx), i_(i), rest_(i) {
    if (ctx.is_finite() && mpz_divisible_ui_p(i.get_den().get_mpz_t(), ctx.characteristic()))
      throw DomainError("binomial exponent " + to_string(i) + " has denominator divisible by the characteristic");
  }

  Coeff at(unsigned long n) {
    if (!ctx_.is_finite()) {
      while (computed_ < n) {
        ++computed_;
        exact_ *= (i_ - (computed_ - 1));
        exact_ /= computed_;
      }
      if (n < computed_) return ctx_.from_rat(binomial_exact(i_, n));
      return ctx_.from_rat(exact_);
    }
    const u64 p = ctx_.characteristic();
    u64 value = 1;
    std::size_t j = 0;
    for (unsigned long k = n; k > 0 && value != 0; k /= p, ++j)
      value = mulmod(value, small_binomial(digit(j), k % p, p), p);
    return ctx_.from_int(static_cast<long>(value));
  }

 private:
  // j-th p-adic digit of i.
  u64 digit(std::size_t j) {
    const u64 p = ctx_.characteristic();
    while (digits_.size() <= j) {
      const Rat& r = rest_;
      const u64 num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
      const u64 den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
      const u64 d = mulmod(num, invmod(den, p), p);
      digits_.push_back(d);
      rest_ = (rest_ - Rat(static_cast<unsigned long>(d))) / Rat(static_cast<unsigned long>(p));
    }
    return digits_[j];
  }

  FieldCtx ctx_;
  Rat i_;
  Rat exact_ = 1;
  unsigned long computed_ = 0;
  Rat rest_;
  std::vector<u64> digits_;
};

}  // namespace

Rat binomial_exact(const Rat& i, unsigned long n) {
  Rat r = 1;
  for (unsigned long k = 0; k < n; ++k) {
    r *= (i - k);
    r /= (k + 1);
  }
  return r;
}

Coeff rat_binomial(const FieldCtx& ctx, const Rat& i, unsigned long n) { return BinomialSequence(ctx, i).at(n); }

Series frobenius_termwise(const Series& x, long b) {
  const auto& ctx = x.ctx();
  if (!ctx.is_finite()) throw DomainError("termwise Frobenius needs positive characteristic");
  if (b == 0) return x;
  const Rat factor = rat_pow(ctx.characteristic(), b);
  Series::Terms t;
  for (const auto& [e, c] : x.terms()) t.emplace(Rat(e * factor), frobenius(ctx, c, b));
  return Series(ctx, std::move(t), x.cap() * factor);
}

Series pow_rat(const Series& x, const Rat& i, const Cap& requested) {
  const auto& ctx = x.ctx();
  if (x.is_exact_zero()) throw DomainError("power of zero");
  if (!x.has_leading_term()) throw PrecisionError("power of a series with no visible leading term");
  if (!x.is_monic()) throw DomainError("rational powers need a monic base");
  const Series one = Series::constant(ctx, ctx.one());
  if (i == 0) return one;
  const Rat m = x.leading_exponent();
  const Rat lead_exp = m * i;
  const Series eps = sub(shift(x, -m), one);
  if (eps.is_exact_zero()) return Series::t_pow(ctx, lead_exp);

  long b = 0;
  Rat q = i;
  if (ctx.is_finite()) {
    b = padic_valuation(i, ctx.characteristic());
    q = i / rat_pow(ctx.characteristic(), b);
  }
  // Precision needed for (1 + eps)^q before the termwise p^b map.
  // An exact base with a nonnegative integer q gives a finite, exact result.
  const bool terminates = is_integer(q) && q >= 0 && eps.is_exact();
  const unsigned long last = terminates ? q.get_num().get_ui() : 0;
  const Cap relative = terminates ? Cap::infinity()
                                  : (requested + Rat(-lead_exp)) *
                                        rat_pow(ctx.is_finite() ? ctx.characteristic() : 1, -b);
  if (!terminates && relative.is_infinite()) throw DomainError("the binomial series does not terminate; a finite cap is required");

  BinomialSequence binom(ctx, q);
  Series::Terms acc{{Rat(0), ctx.one()}};
  Cap acc_cap = relative;
  Series power = one.truncate(relative);
  for (unsigned long n = 1;; ++n) {
    if (terminates && n > last) break;
    power = mul(power, eps).truncate(relative);
    acc_cap = min(acc_cap, power.cap());
    if (!(valuation_bound(power) < relative)) break;
    const Coeff c = binom.at(n);
    if (ctx.is_zero(c)) continue;
    for (const auto& [e, v] : power.terms()) {
      const Coeff term = ctx.mul(v, c);
      auto [it, inserted] = acc.emplace(e, term);
      if (!inserted) it->second = ctx.add(it->second, term);
    }
  }
  std::erase_if(acc, [&](const auto& kv) { return ctx.is_zero(kv.second) || !acc_cap.above(kv.first); });
  const Series sum(ctx, std::move(acc), acc_cap);
  Series z = ctx.is_finite() ? frobenius_termwise(sum, b) : sum;
  z = shift(z, lead_exp);
  return terminates ? z : z.truncate(requested);
}

Series nth_root(const Series& x, unsigned long n, const Cap& requested) {
  if (n == 0) throw DomainError("root index must be positive");
  Rat r(Int(1), Int(n));
  return pow_rat(x, r, requested);
}

}  // namespace hahn
