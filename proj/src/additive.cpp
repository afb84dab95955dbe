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

#include "hahn/additive.hpp"

#include <cctype>

namespace hahn {

namespace {

bool is_compound(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}

}  // namespace

AdditivePoly::AdditivePoly(FieldCtx ctx, std::vector<Coeff> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!ctx_.contains(c)) throw FieldMismatch();
  while (!coeffs_.empty() && ctx_.is_zero(coeffs_.back())) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("additive polynomial must be nonzero");
  if (!ctx_.is_finite() && coeffs_.size() > 1)
    throw DomainError("nonlinear additive polynomials exist only in positive characteristic");
}

AdditivePoly AdditivePoly::canonical(const FieldCtx& ctx) {
  if (!ctx.is_finite()) throw DomainError("x^q - x needs a finite field");
  std::vector<Coeff> c(ctx.degree() + 1, ctx.zero());
  c[0] = ctx.neg(ctx.one());
  c.back() = ctx.one();
  return AdditivePoly(ctx, std::move(c));
}

AdditivePoly AdditivePoly::parse(const FieldCtx& ctx, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  const Int p = ctx.is_finite() ? Int(std::to_string(ctx.characteristic())) : Int(0);
  std::vector<Coeff> coeffs;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError(why + " in additive polynomial '" + s + "'", i + 1); };
  auto read_int = [&]() {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) fail("expected integer");
    Int v(s.substr(i, j - i));
    i = j;
    return v;
  };
  if (s.empty()) fail("empty input");
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    // Coefficient: "(...)*", or a run without x followed by '*'.
    Coeff a = ctx.one();
    if (i < s.size() && s[i] == '(') {
      const auto close = s.find(')', i);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      a = ctx.parse_coeff(s.substr(i + 1, close - i - 1));
      i = close + 1;
      if (i >= s.size() || s[i] != '*') fail("expected *");
      ++i;
    } else if (i < s.size() && s[i] != 'x') {
      const auto star = s.find('*', i);
      if (star == std::string::npos) fail("expected coefficient*x");
      a = ctx.parse_coeff(s.substr(i, star - i));
      i = star + 1;
    }
    if (i >= s.size() || s[i] != 'x') fail("expected x");
    ++i;
    Int degree = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      degree = read_int();
      if (i < s.size() && s[i] == '^') {
        ++i;
        const Int k = read_int();
        if (degree != p) fail("base of x^b^k must be the characteristic");
        mpz_pow_ui(degree.get_mpz_t(), p.get_mpz_t(), k.get_ui());
      }
    }
    std::size_t idx = 0;
    Int d = degree;
    if (d != 1) {
      if (p == 0) fail("x^n with n > 1 is not additive in characteristic 0");
      while (d > 1 && mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        d /= p;
        ++idx;
      }
      if (d != 1) fail("exponent " + degree.get_str() + " is not a power of the characteristic");
    }
    if (coeffs.size() <= idx) coeffs.resize(idx + 1, ctx.zero());
    coeffs[idx] = negative ? ctx.sub(coeffs[idx], a) : ctx.add(coeffs[idx], a);
  }
  return AdditivePoly(ctx, std::move(coeffs));
}

std::string AdditivePoly::to_string() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (ctx_.is_zero(coeffs_[i])) continue;
    std::string c = ctx_.format(coeffs_[i]);
    bool negative = false;
    if (!ctx_.is_finite() && c[0] == '-') {
      negative = true;
      c.erase(0, 1);
    }
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (c != "1") out += (is_compound(c) ? "(" + c + ")" : c) + "*";
    if (i == 0) {
      out += "x";
    } else {
      Int deg;
      mpz_ui_pow_ui(deg.get_mpz_t(), ctx_.characteristic(), i);
      out += "x^" + deg.get_str();
    }
  }
  return out;
}

Coeff additive_eval(const AdditivePoly& P, const Coeff& c) {
  const auto& ctx = P.ctx();
  if (!ctx.contains(c)) throw FieldMismatch();
  Coeff acc = ctx.zero();
  Coeff power = c;  // c^(p^i)
  for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
    if (i > 0) power = ctx.pow(power, static_cast<long>(ctx.characteristic()));
    acc = ctx.add(acc, ctx.mul(P[i], power));
  }
  return acc;
}

SeparablePart separable_part(const AdditivePoly& P) {
  const auto& ctx = P.ctx();
  std::size_t j = 0;
  while (ctx.is_zero(P[j])) ++j;
  if (j == 0) return {P, 0};
  std::vector<Coeff> q;
  for (std::size_t i = j; i < P.coeffs().size(); ++i) q.push_back(frobenius(ctx, P[i], -static_cast<long>(j)));
  return {AdditivePoly(ctx, std::move(q)), static_cast<unsigned>(j)};
}

std::optional<Coeff> additive_preimage(const AdditivePoly& P, const Coeff& c) {
  const auto& ctx = P.ctx();
  if (!ctx.is_finite()) return ctx.div(c, P[0]);
  for (const Coeff& x : ctx.elements())
    if (additive_eval(P, x) == c) return x;
  return std::nullopt;
}

HypothesisAVerdict hypothesis_a_check(const FieldCtx& ctx, const std::optional<AdditivePoly>& P) {
  if (!ctx.is_finite()) return {};
  const AdditivePoly poly = P ? *P : AdditivePoly::canonical(ctx);
  if (!(poly.ctx() == ctx)) throw FieldMismatch();
  const auto elems = ctx.elements();
  std::vector<bool> hit(elems.size(), false);
  for (const Coeff& x : elems) hit[ctx.code(additive_eval(poly, x))] = true;
  for (std::size_t code = 0; code < hit.size(); ++code)
    if (!hit[code]) return {false, ctx.element(code)};
  return {};
}

}  // namespace hahn
