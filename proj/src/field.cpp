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

#include "hahn/field.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace hahn {

namespace detail {
struct FieldData {
  std::uint64_t p = 0;
  unsigned e = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // low coefficients of the monic modulus
};
}  // namespace detail

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using Poly = std::vector<u64>;  // low to high, over F_p

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 n, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    n >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic or not (leading coefficient invertible).
Poly poly_rem(Poly a, const Poly& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 lead_inv = invmod(f.back(), p);
  while (a.size() > df) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_rem(std::move(r), f, p);
}

Poly poly_powmod(Poly base, u64 n, const Poly& f, u64 p) {
  Poly r = poly_rem(Poly{1}, f, p);
  while (n) {
    if (n & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Poly full_modulus(const std::vector<u64>& low) {
  Poly f = low;
  f.push_back(1);
  return f;
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& low) {
  const std::size_t e = low.size();
  if (e == 0) return false;
  if (e == 1) return true;
  const Poly f = full_modulus(low);
  const Poly x{0, 1};
  auto frob_iter = [&](std::size_t k) {
    Poly h = x;
    for (std::size_t i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
    return h;
  };
  Poly full = frob_iter(e);
  if (full != poly_rem(x, f, p)) return false;
  for (u64 r : prime_factors(e)) {
    Poly h = frob_iter(e / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    Poly g = poly_gcd(h, f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldCtx::FieldCtx() : d_(std::make_shared<const detail::FieldData>()) {}

FieldCtx FieldCtx::finite(std::uint64_t p, unsigned e, std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p) || p >= (u64{1} << 31)) throw DomainError("characteristic " + std::to_string(p) + " is not a supported prime");
  if (e < 1 || e > kMaxDegree) throw DomainError("extension degree " + std::to_string(e) + " out of range 1.." + std::to_string(kMaxDegree));
  u64 q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (u64{1} << 62) / p) throw DomainError("field order exceeds 2^62");
    q *= p;
  }
  auto data = std::make_shared<detail::FieldData>();
  data->p = p;
  data->e = e;
  data->q = q;
  if (modulus) {
    if (modulus->size() != e) throw DomainError("modulus degree does not match extension degree");
    for (auto c : *modulus)
      if (c >= p) throw DomainError("modulus coefficient out of range");
    if (!is_irreducible(p, *modulus)) throw DomainError("modulus is reducible over F_" + std::to_string(p));
    data->modulus = *modulus;
  } else if (e == 1) {
    data->modulus = {0};
  } else {
    std::vector<u64> low(e, 0);
    for (u64 code = 0; code < q; ++code) {
      u64 c = code;
      for (unsigned i = 0; i < e; ++i) {
        low[i] = c % p;
        c /= p;
      }
      if (is_irreducible(p, low)) break;
    }
    data->modulus = low;
  }
  return FieldCtx(std::move(data));
}

FieldCtx FieldCtx::parse(std::string_view spec_text) {
  const std::string s = strip_spaces(spec_text);
  if (s == "Q") return rationals();
  if (s.size() < 2 || s[0] != 'F') throw ParseError("field spec must be Q or F<q>[:modulus]", 1);
  const auto colon = s.find(':');
  const std::string qtext = s.substr(1, colon == std::string::npos ? std::string::npos : colon - 1);
  if (qtext.empty() || !std::all_of(qtext.begin(), qtext.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("invalid field order '" + qtext + "'", 2);
  const u64 q = std::stoull(qtext);
  if (q < 2) throw DomainError("field order " + qtext + " is not a prime power");
  u64 p = q;
  unsigned e = 0;
  for (u64 d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  for (u64 r = q; r > 1; r /= p) {
    if (r % p != 0) throw DomainError("field order " + qtext + " is not a prime power");
    ++e;
  }
  if (colon == std::string::npos) return finite(p, e);

  // Modulus: polynomial in x with integer coefficients, monic of degree e.
  const std::string m = s.substr(colon + 1);
  std::vector<Int> coeffs(e + 1, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError(why, colon + 2 + i); };
  if (m.empty()) fail("empty modulus");
  while (i < m.size()) {
    int sign = 1;
    if (m[i] == '+' || m[i] == '-') {
      sign = m[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail("expected + or -");
    }
    Int c = 1;
    bool have_num = false;
    std::size_t j = i;
    while (j < m.size() && std::isdigit(static_cast<unsigned char>(m[j]))) ++j;
    if (j > i) {
      c = Int(m.substr(i, j - i));
      have_num = true;
      i = j;
    }
    unsigned long deg = 0;
    if (i < m.size() && m[i] == '*') {
      if (!have_num) fail("unexpected *");
      ++i;
      if (i >= m.size() || m[i] != 'x') fail("expected x");
    }
    if (i < m.size() && m[i] == 'x') {
      ++i;
      deg = 1;
      if (i < m.size() && m[i] == '^') {
        ++i;
        std::size_t k = i;
        while (k < m.size() && std::isdigit(static_cast<unsigned char>(m[k]))) ++k;
        if (k == i) fail("expected exponent");
        deg = std::stoul(m.substr(i, k - i));
        i = k;
      }
    } else if (!have_num) {
      fail("expected term");
    }
    if (deg > e) throw DomainError("modulus degree exceeds extension degree");
    coeffs[deg] += sign * c;
  }
  std::vector<u64> low(e);
  for (unsigned k = 0; k <= e; ++k) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), coeffs[k].get_mpz_t(), p);
    if (k == e) {
      if (r != 1) throw DomainError("modulus must be monic of degree " + std::to_string(e));
    } else {
      low[k] = r.get_ui();
    }
  }
  return finite(p, e, low);
}

FieldCtx make_field(std::string_view spec) { return FieldCtx::parse(spec); }

std::uint64_t FieldCtx::characteristic() const { return d_->p; }
unsigned FieldCtx::degree() const { return d_->e; }
std::uint64_t FieldCtx::order() const { return d_->q; }
const std::vector<std::uint64_t>& FieldCtx::modulus() const { return d_->modulus; }

std::string FieldCtx::modulus_string() const {
  if (!is_finite()) return "";
  std::string out = d_->e == 1 ? "x" : "x^" + std::to_string(d_->e);
  for (unsigned k = d_->e; k-- > 0;) {
    const u64 c = d_->modulus[k];
    if (c == 0) continue;
    out += "+";
    if (k == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return out;
}

std::string FieldCtx::spec() const {
  if (!is_finite()) return "Q";
  std::string s = "F" + std::to_string(d_->q);
  if (d_->e > 1) s += ":" + modulus_string();
  return s;
}

bool operator==(const FieldCtx& a, const FieldCtx& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->p == b.d_->p && a.d_->e == b.d_->e && (a.d_->e == 1 || a.d_->modulus == b.d_->modulus);
}

std::ostream& operator<<(std::ostream& os, const FieldCtx& ctx) { return os << ctx.spec(); }

Coeff FieldCtx::zero() const { return is_finite() ? Coeff(FiniteElem{0}) : Coeff(Rat(0)); }
Coeff FieldCtx::one() const { return is_finite() ? Coeff(FiniteElem{1}) : Coeff(Rat(1)); }

Coeff FieldCtx::from_int(long n) const { return from_int(Int(n)); }

Coeff FieldCtx::from_int(const Int& n) const {
  if (!is_finite()) return Coeff(Rat(n));
  return Coeff(FiniteElem{mpz_fdiv_ui(n.get_mpz_t(), d_->p)});
}

Coeff FieldCtx::from_rat(const Rat& r) const {
  if (!is_finite()) return Coeff(r);
  const u64 den = mpz_fdiv_ui(r.get_den().get_mpz_t(), d_->p);
  if (den == 0) throw DomainError("denominator of " + to_string(r) + " is divisible by " + std::to_string(d_->p));
  const u64 num = mpz_fdiv_ui(r.get_num().get_mpz_t(), d_->p);
  return Coeff(FiniteElem{mulmod(num, invmod(den, d_->p), d_->p)});
}

Coeff FieldCtx::gen() const {
  if (!is_finite() || d_->e < 2) throw DomainError("generator g exists only in proper extensions F_{p^e}, e > 1");
  return Coeff(FiniteElem{d_->p});
}

Coeff FieldCtx::element(std::uint64_t c) const {
  if (!is_finite() || c >= d_->q) throw DomainError("element code out of range");
  return Coeff(FiniteElem{c});
}

std::uint64_t FieldCtx::code(const Coeff& c) const {
  if (!is_finite() || c.is_rational()) throw DomainError("code() needs a finite-field element");
  return c.finite().code;
}

std::vector<Coeff> FieldCtx::elements() const {
  if (!is_finite()) throw DomainError("cannot enumerate an infinite field");
  if (d_->q > kExhaustiveLimit) throw DomainError("field too large for exhaustive enumeration");
  std::vector<Coeff> out;
  out.reserve(d_->q);
  for (u64 c = 0; c < d_->q; ++c) out.emplace_back(FiniteElem{c});
  return out;
}

std::vector<std::uint64_t> FieldCtx::digits(const Coeff& c) const {
  u64 code = this->code(c);
  std::vector<u64> out(d_->e);
  for (auto& v : out) {
    v = code % d_->p;
    code /= d_->p;
  }
  return out;
}

bool FieldCtx::is_zero(const Coeff& c) const { return c.is_rational() ? c.rational() == 0 : c.finite().code == 0; }
bool FieldCtx::is_one(const Coeff& c) const { return c.is_rational() ? c.rational() == 1 : c.finite().code == 1; }

bool FieldCtx::contains(const Coeff& c) const {
  if (!is_finite()) return c.is_rational();
  return !c.is_rational() && c.finite().code < d_->q;
}

namespace {

struct Digits {
  std::array<u64, 2 * FieldCtx::kMaxDegree> v{};
};

Digits decode(u64 code, const detail::FieldData& d) {
  Digits out;
  for (unsigned i = 0; i < d.e; ++i) {
    out.v[i] = code % d.p;
    code /= d.p;
  }
  return out;
}

u64 encode(const Digits& dg, const detail::FieldData& d) {
  u64 code = 0;
  for (unsigned i = d.e; i-- > 0;) code = code * d.p + dg.v[i];
  return code;
}

}  // namespace

Coeff FieldCtx::add(const Coeff& a, const Coeff& b) const {
  if (!is_finite()) return Coeff(Rat(a.rational() + b.rational()));
  const auto& d = *d_;
  if (d.e == 1) return Coeff(FiniteElem{(a.finite().code + b.finite().code) % d.p});
  Digits x = decode(a.finite().code, d), y = decode(b.finite().code, d);
  for (unsigned i = 0; i < d.e; ++i) x.v[i] = (x.v[i] + y.v[i]) % d.p;
  return Coeff(FiniteElem{encode(x, d)});
}

Coeff FieldCtx::neg(const Coeff& a) const {
  if (!is_finite()) return Coeff(Rat(-a.rational()));
  const auto& d = *d_;
  if (d.e == 1) return Coeff(FiniteElem{(d.p - a.finite().code) % d.p});
  Digits x = decode(a.finite().code, d);
  for (unsigned i = 0; i < d.e; ++i) x.v[i] = (d.p - x.v[i]) % d.p;
  return Coeff(FiniteElem{encode(x, d)});
}

Coeff FieldCtx::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff FieldCtx::mul(const Coeff& a, const Coeff& b) const {
  if (!is_finite()) return Coeff(Rat(a.rational() * b.rational()));
  const auto& d = *d_;
  if (d.e == 1) return Coeff(FiniteElem{mulmod(a.finite().code, b.finite().code, d.p)});
  const Digits x = decode(a.finite().code, d), y = decode(b.finite().code, d);
  Digits r;
  for (unsigned i = 0; i < d.e; ++i) {
    if (x.v[i] == 0) continue;
    for (unsigned j = 0; j < d.e; ++j) r.v[i + j] = (r.v[i + j] + mulmod(x.v[i], y.v[j], d.p)) % d.p;
  }
  // g^e = -(m_0 + m_1 g + ... + m_{e-1} g^{e-1})
  for (unsigned k = 2 * d.e - 2; k >= d.e; --k) {
    const u64 c = r.v[k];
    if (c == 0) continue;
    r.v[k] = 0;
    for (unsigned i = 0; i < d.e; ++i)
      r.v[k - d.e + i] = (r.v[k - d.e + i] + d.p - mulmod(c, d.modulus[i], d.p)) % d.p;
  }
  return Coeff(FiniteElem{encode(r, d)});
}

Coeff FieldCtx::pow(const Coeff& a, const Int& n) const {
  if (n < 0) return pow(inv(a), Int(-n));
  if (!is_finite()) {
    if (!n.fits_ulong_p()) throw DomainError("exponent too large for a rational power");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), a.rational().get_num_mpz_t(), n.get_ui());
    mpz_pow_ui(r.get_den_mpz_t(), a.rational().get_den_mpz_t(), n.get_ui());
    r.canonicalize();
    return Coeff(r);
  }
  if (n == 0) return one();
  if (is_zero(a)) return zero();
  u64 k = mpz_fdiv_ui(n.get_mpz_t(), d_->q - 1);
  if (k == 0) k = d_->q - 1;
  Coeff base = a, result = one();
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coeff FieldCtx::inv(const Coeff& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  if (!is_finite()) return Coeff(Rat(1 / a.rational()));
  if (d_->e == 1) return Coeff(FiniteElem{invmod(a.finite().code, d_->p)});
  return pow(a, Int(std::to_string(d_->q - 2)));
}

Coeff FieldCtx::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

std::string FieldCtx::format(const Coeff& c) const {
  if (!is_finite()) return to_string(c.rational());
  const auto dg = digits(c);
  std::string out;
  for (unsigned i = d_->e; i-- > 0;) {
    const u64 v = dg[i];
    if (v == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1) out += std::to_string(v) + "*";
    out += i == 1 ? "g" : "g^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Coeff FieldCtx::parse_coeff(std::string_view text) const {
  const std::string s = strip_spaces(text);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError(why + " in coefficient '" + s + "'", i + 1); };
  auto read_int = [&]() -> std::string {
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    std::string out = s.substr(i, j - i);
    i = j;
    return out;
  };
  if (s.empty()) fail("empty input");
  Coeff total = zero();
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
    Coeff term = one();
    bool have = false;
    if (std::string num = read_int(); !num.empty()) {
      Rat r{Int(num)};
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = read_int();
        if (den.empty()) fail("expected denominator");
        if (Int(den) == 0) throw DomainError("zero denominator");
        r = Rat(Int(num), Int(den));
        r.canonicalize();
      }
      term = from_rat(r);
      have = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'g') fail("expected g");
      }
    }
    if (i < s.size() && s[i] == 'g') {
      const Coeff g = gen();
      ++i;
      long k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ks = read_int();
        if (ks.empty()) fail("expected exponent");
        k = std::stol(ks);
      }
      term = mul(term, pow(g, k));
      have = true;
    }
    if (!have) fail("expected term");
    total = negative ? sub(total, term) : add(total, term);
  }
  return total;
}

Coeff frobenius(const FieldCtx& ctx, const Coeff& c, long b) {
  if (!ctx.is_finite()) throw DomainError("Frobenius needs positive characteristic");
  const long e = ctx.degree();
  long k = ((b % e) + e) % e;  // c^(p^e) = c
  Coeff r = c;
  for (long i = 0; i < k; ++i) r = ctx.pow(r, static_cast<long>(ctx.characteristic()));
  return r;
}

std::vector<Coeff> nth_roots(const FieldCtx& ctx, const Coeff& c, unsigned long n) {
  if (n == 0) throw DomainError("root index must be positive");
  if (ctx.is_zero(c)) return {ctx.zero()};
  if (ctx.is_finite()) {
    std::vector<Coeff> out;
    for (const Coeff& r : ctx.elements())
      if (ctx.pow(r, static_cast<long>(n)) == c) out.push_back(r);
    return out;
  }
  const Rat& x = c.rational();
  if (n % 2 == 0 && x < 0) return {};
  Int num = abs(x.get_num()), den = x.get_den(), rn, rd;
  const bool exact_num = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) != 0;
  const bool exact_den = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) != 0;
  if (!exact_num || !exact_den)
    throw DomainError("the " + std::to_string(n) + "-th root of " + to_string(x) + " is irrational");
  Rat r(rn, rd);
  r.canonicalize();
  if (x < 0) r = -r;
  if (n % 2 == 0) return {Coeff(r), Coeff(Rat(-r))};
  return {Coeff(r)};
}

}  // namespace hahn
