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

#include "hahn/rat.hpp"

#include <cctype>

namespace hahn {

Rat make_rat(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') throw ParseError("invalid rational '" + s + "'", 1);
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) throw DomainError("zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

long padic_valuation(const Rat& r, unsigned long p) {
  if (r == 0) throw DomainError("p-adic valuation of zero");
  long v = 0;
  Int n = abs(r.get_num());
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++v;
  }
  Int d = r.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
    d /= p;
    --v;
  }
  return v;
}

Rat rat_pow(unsigned long p, long k) {
  Int base;
  mpz_ui_pow_ui(base.get_mpz_t(), p, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return Rat(base);
  Rat r(Int(1), base);
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

const Rat& Cap::value() const {
  if (!value_) throw DomainError("infinite cap has no finite value");
  return *value_;
}

Cap min(const Cap& a, const Cap& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  return *a.value_ < *b.value_ ? a : b;
}

Cap operator+(const Cap& a, const Rat& r) {
  if (a.is_infinite()) return a;
  return Cap(Rat(*a.value_ + r));
}

Cap operator+(const Cap& a, const Cap& b) {
  if (b.is_infinite()) return b;
  return a + *b.value_;
}

Cap operator*(const Cap& a, const Rat& r) {
  if (r <= 0) throw DomainError("cap scaling factor must be positive");
  if (a.is_infinite()) return a;
  return Cap(Rat(*a.value_ * r));
}

std::strong_ordering operator<=>(const Cap& a, const Cap& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  int c = cmp(*a.value_, *b.value_);
  return c <=> 0;
}

std::string to_string(const Cap& c) { return c.is_infinite() ? "inf" : to_string(c.value()); }

std::ostream& operator<<(std::ostream& os, const Cap& c) { return os << to_string(c); }

}  // namespace hahn
