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

#ifndef HAHN_MORPHISMS_HPP
#define HAHN_MORPHISMS_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hahn/series.hpp"

namespace hahn {

/// A homomorphism lambda: Q -> k^*, known on finitely many lattices (1/d)Z
/// through committed values lambda(1/d) = u_d. Queries outside the committed
/// lattices are errors. The trivial homomorphism answers 1 everywhere.
class ExpHom {
 public:
  using Pair = std::pair<unsigned long, Coeff>;

  static ExpHom trivial(const FieldCtx& ctx);
  /// Checks u_d^(d/g) = u_d'^(d'/g), g = gcd(d, d'), for every committed pair.
  ExpHom(FieldCtx ctx, std::vector<Pair> committed);

  const FieldCtx& ctx() const { return ctx_; }
  bool is_trivial() const { return trivial_; }
  const std::vector<Pair>& committed() const { return committed_; }

  bool queryable(const Rat& e) const;
  Coeff operator()(const Rat& e) const;
  /// The pointwise inverse 1/lambda.
  ExpHom inverse() const;

  friend bool operator==(const ExpHom& a, const ExpHom& b) {
    return a.ctx_ == b.ctx_ && a.trivial_ == b.trivial_ && a.committed_ == b.committed_;
  }

 private:
  explicit ExpHom(FieldCtx ctx) : ctx_(std::move(ctx)), trivial_(true) {}
  FieldCtx ctx_;
  bool trivial_ = false;
  std::vector<Pair> committed_;
};

/// sum c_i t^i -> sum lambda(i) c_i t^i.
Series psi_lambda(const ExpHom& lambda, const Series& y);

/// sum c_i t^i -> sum lambda(i) c_i t^(r i), r > 0; the cap scales by r.
Series thm2_map(const ExpHom& lambda, const Rat& r, const Series& y);

/// One support term of y in a substitution.
struct TermContribution {
  Rat exponent;
  std::optional<long> padic_valuation;  // characteristic p only
  Cap cap;                              // cap certified for c * x^exponent
};

struct SubstitutionDiagnostics {
  std::vector<TermContribution> terms;
  /// Characteristic p and the support holds exponents e1 < e2 whose p-adic
  /// valuations are negative with v_p(e1) > v_p(e2): the pattern under which
  /// x^e contributions keep landing at fixed exponents as the support grows.
  bool hypothesis_a_risk = false;
};

struct SubstitutionResult {
  Series value;
  Cap achieved_cap;
  SubstitutionDiagnostics diagnostics;
};

/// phi_x(y) = sum c_i x^i for monic x with v(x) > 0.
SubstitutionResult substitute(const Series& x, const Series& y, const Cap& requested);

/// Orbit label: S_inf (negative valuation) or S_c = c + S_0.
struct OrbitClass {
  bool infinite = false;
  Coeff c;  // meaningful when !infinite

  friend bool operator==(const OrbitClass&, const OrbitClass&) = default;
};

OrbitClass classify_orbit(const Series& y);
std::string to_string(const FieldCtx& ctx, const OrbitClass& cls);

namespace step {
struct Translate {
  Coeff c;
};
struct Invert {};
struct Rescale {
  ExpHom lambda;
};
struct ScaleExp {
  Rat r;
};
struct Substitute {
  Series x;
};
}  // namespace step

using TransformStep = std::variant<step::Translate, step::Invert, step::Rescale, step::ScaleExp, step::Substitute>;

/// Steps applied left to right: apply([s1, s2], z) = s2(s1(z)).
struct Transform {
  FieldCtx ctx;
  std::vector<TransformStep> steps;
};

Series apply_transform(const Transform& T, const Series& z, const Cap& requested);

/// A transform taking t to y (below certified caps): Substitute by a monic
/// element of S_0, optionally Rescale, then Translate or Invert.
Transform orbit_transform(const Series& y, const Cap& requested);

}  // namespace hahn

#endif  // HAHN_MORPHISMS_HPP
