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

#ifndef HAHN_EXPR_HPP
#define HAHN_EXPR_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hahn/morphisms.hpp"
#include "hahn/series.hpp"

namespace hahn::expr {

// Grammar (t is the uniformizer, g the generator of F_{p^e}):
//
//   program  := stmt (';' stmt)*
//   stmt     := [name '='] sum
//   sum      := product (('+' | '-') product)*
//   product  := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := atom ['^' exponent]
//   exponent := digits | '(' ['-'] digits ['/' digits] ')'
//   atom     := digits | 't' | 'g' | 'O(' ('1' | 't' ['^' exponent]) ')'
//             | name '(' [sum (',' sum)*] ')' | name | string | '(' sum ')'

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  enum class Kind { Number, Gen, T, BigO, Var, Str, Neg, Add, Sub, Mul, Div, Pow, Call };

  Kind kind;
  std::string text;  // number digits, variable/function name, string contents
  Rat exponent;      // Pow and BigO
  std::vector<NodePtr> args;
  std::size_t column = 0;  // 1-based
};

struct Statement {
  std::optional<std::string> name;
  NodePtr value;
};

/// Parses one expression. With a context, `g` is rejected outside F_{p^e}, e > 1.
NodePtr parse(std::string_view text, const FieldCtx* ctx = nullptr);
std::vector<Statement> parse_program(std::string_view text, const FieldCtx* ctx = nullptr);

/// Canonical text with minimal parentheses; parse(format(e)) is structurally e.
std::string format(const Node& e);
bool same_tree(const Node& a, const Node& b);

using Value = std::variant<Series, OrbitClass>;

/// Evaluates expressions over one field. `cap` is the requested precision
/// for operations with infinite expansions (inv, /, fractional ^, subst, root).
class Evaluator {
 public:
  explicit Evaluator(FieldCtx ctx, Rat cap = Rat(8)) : ctx_(std::move(ctx)), cap_(std::move(cap)) {}

  void bind(const std::string& name, Series value) { vars_.insert_or_assign(name, std::move(value)); }
  Value eval(const Node& e);
  /// Runs every statement and returns the value of the last one.
  Value run(std::string_view program);

  const FieldCtx& ctx() const { return ctx_; }

 private:
  Series eval_series(const Node& e);
  Value eval_call(const Node& e);

  FieldCtx ctx_;
  Rat cap_;
  std::map<std::string, Series> vars_;
};

/// A series from its text form ("1 + t^(1/2) + O(t^2)") or any expression
/// built from literals.
Series parse_series(const FieldCtx& ctx, std::string_view text, const Rat& cap = Rat(8));

}  // namespace hahn::expr

#endif  // HAHN_EXPR_HPP
