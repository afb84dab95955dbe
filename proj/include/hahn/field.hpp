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

#ifndef HAHN_FIELD_HPP
#define HAHN_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hahn/rat.hpp"

namespace hahn {

/// Element of F_{p^e}, packed as sum v_i p^i over the basis 1, g, ..., g^(e-1).
struct FiniteElem {
  std::uint64_t code = 0;
  friend auto operator<=>(const FiniteElem&, const FiniteElem&) = default;
};

/// A coefficient: exact rational (char 0) or finite-field element (char p).
/// Arithmetic goes through the owning FieldCtx.
class Coeff {
 public:
  Coeff() = default;
  explicit Coeff(Rat r) : value_(std::move(r)) {}
  explicit Coeff(FiniteElem f) : value_(f) {}

  bool is_rational() const { return std::holds_alternative<Rat>(value_); }
  const Rat& rational() const { return std::get<Rat>(value_); }
  FiniteElem finite() const { return std::get<FiniteElem>(value_); }

  friend bool operator==(const Coeff& a, const Coeff& b) = default;

 private:
  std::variant<Rat, FiniteElem> value_;
};

namespace detail {
struct FieldData;
}

/// Immutable coefficient-field descriptor: the rationals, or F_{p^e} with an
/// explicit monic irreducible modulus. Copies share the same data.
class FieldCtx {
 public:
  static constexpr unsigned kMaxDegree = 12;
  static constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;

  /// The rationals.
  FieldCtx();

  static FieldCtx rationals() { return {}; }
  /// F_{p^e}. `modulus` holds the low coefficients m_0..m_{e-1} of the monic
  /// modulus x^e + m_{e-1} x^{e-1} + ... + m_0; omitted means the first
  /// irreducible in increasing code order.
  static FieldCtx finite(std::uint64_t p, unsigned e = 1,
                         std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);
  /// "Q", "F2", "F9", "F9:x^2+1".
  static FieldCtx parse(std::string_view spec);

  std::uint64_t characteristic() const;
  unsigned degree() const;   // e; 1 for Q
  std::uint64_t order() const;  // q; 0 for Q
  bool is_finite() const { return characteristic() != 0; }
  const std::vector<std::uint64_t>& modulus() const;
  std::string spec() const;
  std::string modulus_string() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long n) const;
  Coeff from_int(const Int& n) const;
  Coeff from_rat(const Rat& r) const;
  /// The class of the indeterminate g; only in proper extensions (e > 1).
  Coeff gen() const;

  // Finite fields: enumeration in code order 0, 1, ..., q-1.
  Coeff element(std::uint64_t code) const;
  std::uint64_t code(const Coeff& c) const;
  std::vector<Coeff> elements() const;  // exhaustive; q <= kExhaustiveLimit
  std::vector<std::uint64_t> digits(const Coeff& c) const;

  bool is_zero(const Coeff& c) const;
  bool is_one(const Coeff& c) const;
  bool contains(const Coeff& c) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;
  Coeff pow(const Coeff& a, const Int& n) const;
  Coeff pow(const Coeff& a, long n) const { return pow(a, Int(n)); }

  std::string format(const Coeff& c) const;
  Coeff parse_coeff(std::string_view text) const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b);

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

std::ostream& operator<<(std::ostream& os, const FieldCtx& ctx);

/// Validated context from a field spec string (see FieldCtx::parse).
FieldCtx make_field(std::string_view spec);

/// c^(p^b); negative b gives iterated p-th roots.
Coeff frobenius(const FieldCtx& ctx, const Coeff& c, long b);

/// All n-th roots of c in the field, in code order (finite) or [r, -r] (Q).
std::vector<Coeff> nth_roots(const FieldCtx& ctx, const Coeff& c, unsigned long n);

bool is_prime(std::uint64_t n);

/// Irreducibility of the monic polynomial x^e + sum m_i x^i over F_p (Rabin's test).
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& low_coeffs);

}  // namespace hahn

#endif  // HAHN_FIELD_HPP
