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

#include "hahn/series.hpp"

#include <ostream>

namespace hahn {

namespace {

void check_same(const Series& x, const Series& y) {
  if (!(x.ctx() == y.ctx())) throw FieldMismatch();
}

bool is_compound(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}

std::string power_of_t(const Rat& e) {
  if (e == 1) return "t";
  if (is_integer(e) && e > 0) return "t^" + to_string(e);
  return "t^(" + to_string(e) + ")";
}

}  // namespace

Series::Series(FieldCtx ctx, Terms terms, Cap cap) : ctx_(std::move(ctx)), terms_(std::move(terms)), cap_(std::move(cap)) {
  for (const auto& [e, c] : terms_) {
    if (!ctx_.contains(c)) throw FieldMismatch();
    if (ctx_.is_zero(c)) throw DomainError("zero coefficient stored at exponent " + to_string(e));
    if (!cap_.above(e)) throw DomainError("term at exponent " + to_string(e) + " is not below cap " + to_string(cap_));
  }
}

Series Series::constant(const FieldCtx& ctx, const Coeff& c) { return monomial(ctx, c, Rat(0)); }

Series Series::monomial(const FieldCtx& ctx, const Coeff& c, const Rat& e) {
  Terms t;
  if (!ctx.is_zero(c)) t.emplace(e, c);
  return Series(ctx, std::move(t));
}

Series Series::t_pow(const FieldCtx& ctx, const Rat& e) { return monomial(ctx, ctx.one(), e); }

Series Series::big_o(const FieldCtx& ctx, const Rat& cap) { return Series(ctx, {}, Cap(cap)); }

const Rat& Series::leading_exponent() const {
  if (terms_.empty()) throw PrecisionError("no visible leading term");
  return terms_.begin()->first;
}

const Coeff& Series::leading_coeff() const {
  if (terms_.empty()) throw PrecisionError("no visible leading term");
  return terms_.begin()->second;
}

bool Series::is_monic() const { return has_leading_term() && ctx_.is_one(leading_coeff()); }

Coeff Series::coeff(const Rat& e) const {
  if (!cap_.above(e)) throw PrecisionError("coefficient at " + to_string(e) + " is not certified below cap " + to_string(cap_));
  auto it = terms_.find(e);
  return it == terms_.end() ? ctx_.zero() : it->second;
}

Series Series::truncate(const Cap& c) const {
  const Cap nc = min(cap_, c);
  if (nc == cap_) return *this;
  Terms t;
  for (const auto& [e, v] : terms_) {
    if (!nc.above(e)) break;
    t.emplace(e, v);
  }
  return Series(ctx_, std::move(t), nc);
}

Valuation valuation(const Series& x) {
  if (x.has_leading_term()) return {Valuation::Kind::Finite, x.leading_exponent()};
  if (x.is_exact()) return {Valuation::Kind::Infinity, Rat(0)};
  return {Valuation::Kind::UnknownAtLeast, x.cap().value()};
}

Cap valuation_bound(const Series& x) {
  if (x.has_leading_term()) return Cap(x.leading_exponent());
  return x.cap();
}

Series add(const Series& x, const Series& y) {
  check_same(x, y);
  const auto& ctx = x.ctx();
  const Cap cap = min(x.cap(), y.cap());
  Series::Terms t;
  for (const auto& [e, c] : x.terms()) {
    if (!cap.above(e)) break;
    t.emplace(e, c);
  }
  for (const auto& [e, c] : y.terms()) {
    if (!cap.above(e)) break;
    auto [it, inserted] = t.emplace(e, c);
    if (!inserted) {
      it->second = ctx.add(it->second, c);
      if (ctx.is_zero(it->second)) t.erase(it);
    }
  }
  return Series(ctx, std::move(t), cap);
}

Series neg(const Series& x) {
  Series::Terms t;
  for (const auto& [e, c] : x.terms()) t.emplace(e, x.ctx().neg(c));
  return Series(x.ctx(), std::move(t), x.cap());
}

Series sub(const Series& x, const Series& y) { return add(x, neg(y)); }

Series mul(const Series& x, const Series& y) {
  check_same(x, y);
  const auto& ctx = x.ctx();
  const Cap cap = min(x.cap() + valuation_bound(y), y.cap() + valuation_bound(x));
  Series::Terms t;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      Rat e = ex + ey;
      if (!cap.above(e)) break;
      const Coeff prod = ctx.mul(cx, cy);
      auto [it, inserted] = t.emplace(std::move(e), prod);
      if (!inserted) it->second = ctx.add(it->second, prod);
    }
  }
  std::erase_if(t, [&](const auto& kv) { return ctx.is_zero(kv.second); });
  return Series(ctx, std::move(t), cap);
}

Series scale(const Series& x, const Coeff& c) {
  const auto& ctx = x.ctx();
  if (!ctx.contains(c)) throw FieldMismatch();
  if (ctx.is_zero(c)) return Series(ctx);
  Series::Terms t;
  for (const auto& [e, v] : x.terms()) t.emplace(e, ctx.mul(v, c));
  return Series(ctx, std::move(t), x.cap());
}

Series shift(const Series& x, const Rat& s) {
  Series::Terms t;
  for (const auto& [e, v] : x.terms()) t.emplace(Rat(e + s), v);
  return Series(x.ctx(), std::move(t), x.cap() + s);
}

Series invert(const Series& x, const Cap& requested) {
  if (x.is_exact_zero()) throw DomainError("division by zero");
  if (!x.has_leading_term()) throw PrecisionError("cannot invert: no visible leading term");
  const auto& ctx = x.ctx();
  const Rat v = x.leading_exponent();
  const Coeff c_inv = ctx.inv(x.leading_coeff());
  // x = c t^v (1 + eps)
  const Series eps = sub(shift(scale(x, c_inv), -v), Series::constant(ctx, ctx.one()));
  if (eps.is_exact_zero()) return Series::monomial(ctx, c_inv, -v);
  const Cap result_cap = min(requested, x.cap() + Rat(-2 * v));
  if (result_cap.is_infinite()) throw DomainError("inverse has an infinite expansion; a finite cap is required");
  const Cap relative = result_cap + v;
  // nothing but the absence of terms below -v is certified
  if (!relative.above(Rat(0))) return Series::big_o(ctx, result_cap.value());
  const Series step = neg(eps).truncate(relative);
  Series sum = Series::constant(ctx, ctx.one()).truncate(relative);
  Series power = sum;
  // v(eps) > 0, so the n-th power has valuation >= n * v(eps) and the loop ends.
  while (true) {
    power = mul(power, step).truncate(relative);
    if (!(valuation_bound(power) < relative)) break;
    sum = add(sum, power);
  }
  return shift(scale(sum, c_inv), -v).truncate(result_cap);
}

Series div(const Series& x, const Series& y, const Cap& requested) {
  check_same(x, y);
  if (x.is_exact_zero()) return x;
  const Cap vx = valuation_bound(x);
  const Cap inv_cap = requested.is_infinite() ? requested : requested + Rat(-vx.value());
  return mul(x, invert(y, inv_cap)).truncate(requested);
}

Series pow_int(const Series& x, unsigned long n) {
  Series result = Series::constant(x.ctx(), x.ctx().one());
  Series base = x;
  while (n) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return result;
}

bool agree_below(const Series& a, const Series& b, const Cap& bound) {
  check_same(a, b);
  const Cap joint = min(bound, min(a.cap(), b.cap()));
  auto ia = a.terms().begin(), ib = b.terms().begin();
  auto below = [&](auto it, const Series& s) { return it != s.terms().end() && joint.above(it->first); };
  while (below(ia, a) || below(ib, b)) {
    if (!below(ib, b) || (below(ia, a) && ia->first < ib->first)) return false;
    if (!below(ia, a) || ib->first < ia->first) return false;
    if (!(ia->second == ib->second)) return false;
    ++ia;
    ++ib;
  }
  return true;
}

std::string to_string(const Series& x) {
  const auto& ctx = x.ctx();
  std::string out;
  for (const auto& [e, c] : x.terms()) {
    std::string cs = ctx.format(c);
    bool negative = false;
    if (cs[0] == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    std::string body;
    if (e == 0) {
      body = is_compound(cs) ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      body = power_of_t(e);
    } else {
      body = (is_compound(cs) ? "(" + cs + ")" : cs) + "*" + power_of_t(e);
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  if (x.is_exact()) return out.empty() ? "0" : out;
  const Rat& cap = x.cap().value();
  const std::string o = cap == 0 ? "O(1)" : "O(" + power_of_t(cap) + ")";
  return out.empty() ? o : out + " + " + o;
}

std::ostream& operator<<(std::ostream& os, const Series& x) { return os << to_string(x); }

}  // namespace hahn
