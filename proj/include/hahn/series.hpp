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

#ifndef HAHN_SERIES_HPP
#define HAHN_SERIES_HPP

#include <map>
#include <string>

#include "hahn/field.hpp"
#include "hahn/rat.hpp"

namespace hahn {

/// Generalized power series sum c_e t^e over rational exponents, known exactly
/// below its cap. Stored terms are nonzero and lie strictly below the cap;
/// an infinite cap means the series is finitely supported and fully known.
class Series {
 public:
  using Terms = std::map<Rat, Coeff>;

  /// Exact zero.
  explicit Series(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  /// Throws on a zero coefficient, a coefficient outside ctx, or a term at or above cap.
  Series(FieldCtx ctx, Terms terms, Cap cap = Cap::infinity());

  static Series constant(const FieldCtx& ctx, const Coeff& c);
  static Series monomial(const FieldCtx& ctx, const Coeff& c, const Rat& e);
  /// t^e with coefficient 1.
  static Series t_pow(const FieldCtx& ctx, const Rat& e);
  /// O(t^cap): nothing known below cap except that nothing is there.
  static Series big_o(const FieldCtx& ctx, const Rat& cap);

  const FieldCtx& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  const Cap& cap() const { return cap_; }
  bool is_exact() const { return cap_.is_infinite(); }
  bool is_exact_zero() const { return terms_.empty() && cap_.is_infinite(); }
  bool has_leading_term() const { return !terms_.empty(); }

  const Rat& leading_exponent() const;
  const Coeff& leading_coeff() const;
  bool is_monic() const;

  /// Coefficient at e; throws PrecisionError when e is not below the cap.
  Coeff coeff(const Rat& e) const;

  /// Lowers the cap (never raises it) and drops terms at or above it.
  Series truncate(const Cap& c) const;

  friend bool operator==(const Series& a, const Series& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_ && a.cap_ == b.cap_;
  }

 private:
  FieldCtx ctx_;
  Terms terms_;
  Cap cap_;
};

/// v(x): a rational, +infinity for exact zero, or "at least cap" when nothing is known.
struct Valuation {
  enum class Kind { Finite, Infinity, UnknownAtLeast };
  Kind kind = Kind::Infinity;
  Rat value;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation valuation(const Series& x);

/// Lower bound for the valuation: leading exponent if visible, else the cap.
Cap valuation_bound(const Series& x);

Series add(const Series& x, const Series& y);
Series sub(const Series& x, const Series& y);
Series neg(const Series& x);
Series mul(const Series& x, const Series& y);
Series scale(const Series& x, const Coeff& c);
/// x * t^e.
Series shift(const Series& x, const Rat& e);
/// 1/x below min(requested, cap_x - 2 v(x)); exact when x is an exact monomial.
Series invert(const Series& x, const Cap& requested);
Series div(const Series& x, const Series& y, const Cap& requested);
/// x^n for a nonnegative integer n by repeated squaring.
Series pow_int(const Series& x, unsigned long n);

inline Series operator+(const Series& x, const Series& y) { return add(x, y); }
inline Series operator-(const Series& x, const Series& y) { return sub(x, y); }
inline Series operator-(const Series& x) { return neg(x); }
inline Series operator*(const Series& x, const Series& y) { return mul(x, y); }

/// Coefficients agree at every exponent below min(bound, cap_a, cap_b).
bool agree_below(const Series& a, const Series& b, const Cap& bound = Cap::infinity());

/// Text form, e.g. "t^(-1) + 1 + 2*t^(1/2) + O(t^4)".
std::string to_string(const Series& x);
std::ostream& operator<<(std::ostream& os, const Series& x);

}  // namespace hahn

#endif  // HAHN_SERIES_HPP
