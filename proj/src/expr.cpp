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

#include "hahn/expr.hpp"

#include <cctype>

#include "hahn/additive.hpp"
#include "hahn/powers.hpp"
#include "hahn/solvers.hpp"

namespace hahn::expr {

namespace {

using Kind = Node::Kind;

NodePtr make(Kind kind, std::size_t column, std::vector<NodePtr> args = {}, std::string text = {}, Rat exponent = 0) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->column = column;
  n->args = std::move(args);
  n->text = std::move(text);
  n->exponent = std::move(exponent);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const FieldCtx* ctx) : s_(text), ctx_(ctx) {}

  std::vector<Statement> program() {
    std::vector<Statement> out;
    do {
      out.push_back(statement());
    } while (accept(';'));
    expect_end();
    return out;
  }

  NodePtr single() {
    NodePtr e = sum();
    expect_end();
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, pos_ + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (peek() != '\0') fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Statement statement() {
    skip();
    const std::size_t save = pos_;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::string name = identifier();
      if (peek() == '=' && name != "t" && name != "g" && name != "O") {
        ++pos_;
        return {name, sum()};
      }
      pos_ = save;
    }
    return {std::nullopt, sum()};
  }

  NodePtr sum() {
    NodePtr left = product();
    while (true) {
      const char c = peek();
      if (c != '+' && c != '-') return left;
      const std::size_t col = ++pos_;
      NodePtr right = product();
      left = make(c == '+' ? Kind::Add : Kind::Sub, col, {left, right});
    }
  }

  NodePtr product() {
    NodePtr left = unary();
    while (true) {
      const char c = peek();
      if (c != '*' && c != '/') return left;
      const std::size_t col = ++pos_;
      NodePtr right = unary();
      left = make(c == '*' ? Kind::Mul : Kind::Div, col, {left, right});
    }
  }

  NodePtr unary() {
    if (peek() == '-') {
      const std::size_t col = ++pos_;
      NodePtr operand = unary();
      return make(Kind::Neg, col, {operand});
    }
    return power();
  }

  Rat exponent() {
    if (accept('(')) {
      const bool negative = accept('-');
      Int num(digits());
      Int den(1);
      if (accept('/')) den = Int(digits());
      if (den == 0) fail("zero denominator");
      expect(')');
      Rat r(negative ? Int(-num) : num, den);
      r.canonicalize();
      return r;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent: digits or (p/q)");
    return Rat(Int(digits()));
  }

  NodePtr power() {
    NodePtr base = atom();
    if (peek() == '^') {
      const std::size_t col = ++pos_;
      Rat r = exponent();  // operands are parsed before the args list is built; GCC leaks on a throw inside it
      return make(Kind::Pow, col, {base}, {}, std::move(r));
    }
    return base;
  }

  NodePtr atom() {
    const char c = peek();
    const std::size_t col = pos_ + 1;
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) return make(Kind::Number, col, {}, digits());
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      expect(')');
      return inner;
    }
    if (c == '"') {
      ++pos_;
      const auto close = s_.find('"', pos_);
      if (close == std::string_view::npos) fail("unterminated string");
      std::string text(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return make(Kind::Str, col, {}, std::move(text));
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(std::string("unexpected '") + c + "'");
    const std::string name = identifier();
    if (name == "t") return make(Kind::T, col);
    if (name == "g") {
      if (ctx_ && (!ctx_->is_finite() || ctx_->degree() < 2))
        throw ParseError("g is not an element of " + ctx_->spec(), col);
      return make(Kind::Gen, col);
    }
    if (name == "O") {
      expect('(');
      Rat cap;
      if (accept('t')) {
        cap = peek() == '^' ? (++pos_, exponent()) : Rat(1);
      } else if (digits() == "1") {
        cap = 0;
      } else {
        fail("expected O(1) or O(t^e)");
      }
      expect(')');
      return make(Kind::BigO, col, {}, {}, cap);
    }
    if (peek() == '(') {
      ++pos_;
      std::vector<NodePtr> args;
      if (!accept(')')) {
        do {
          args.push_back(sum());
        } while (accept(','));
        expect(')');
      }
      return make(Kind::Call, col, std::move(args), name);
    }
    return make(Kind::Var, col, {}, name);
  }

  std::string_view s_;
  const FieldCtx* ctx_;
  std::size_t pos_ = 0;
};

int precedence(const Node& e) {
  switch (e.kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string format_exponent(const Rat& r) {
  if (is_integer(r) && r >= 0) return to_string(r);
  return "(" + to_string(r) + ")";
}

}  // namespace

NodePtr parse(std::string_view text, const FieldCtx* ctx) { return Parser(text, ctx).single(); }

std::vector<Statement> parse_program(std::string_view text, const FieldCtx* ctx) { return Parser(text, ctx).program(); }

std::string format(const Node& e) {
  auto wrap = [](const Node& child, bool paren) { return paren ? "(" + format(child) + ")" : format(child); };
  switch (e.kind) {
    case Kind::Number:
      return e.text;
    case Kind::Gen:
      return "g";
    case Kind::T:
      return "t";
    case Kind::Var:
      return e.text;
    case Kind::Str:
      return "\"" + e.text + "\"";
    case Kind::BigO:
      if (e.exponent == 0) return "O(1)";
      if (e.exponent == 1) return "O(t)";
      return "O(t^" + format_exponent(e.exponent) + ")";
    case Kind::Neg:
      return "-" + wrap(*e.args[0], precedence(*e.args[0]) < 3);
    case Kind::Pow:
      return wrap(*e.args[0], precedence(*e.args[0]) < 5) + "^" + format_exponent(e.exponent);
    case Kind::Call: {
      std::string out = e.text + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? ", " : "") + format(*e.args[i]);
      return out + ")";
    }
    default: {
      const int prec = precedence(e);
      const char* op = e.kind == Kind::Add ? " + " : e.kind == Kind::Sub ? " - " : e.kind == Kind::Mul ? "*" : "/";
      return wrap(*e.args[0], precedence(*e.args[0]) < prec) + op + wrap(*e.args[1], precedence(*e.args[1]) <= prec);
    }
  }
}

bool same_tree(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.exponent != b.exponent || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!same_tree(*a.args[i], *b.args[i])) return false;
  return true;
}

Value Evaluator::run(std::string_view program) {
  std::optional<Value> last;
  for (const auto& st : parse_program(program, &ctx_)) {
    last = eval(*st.value);
    if (st.name) {
      if (!std::holds_alternative<Series>(*last)) throw DomainError("only series can be bound to names");
      bind(*st.name, std::get<Series>(*last));
    }
  }
  return *last;
}

Value Evaluator::eval(const Node& e) {
  if (e.kind == Kind::Call) return eval_call(e);
  return eval_series(e);
}

Series Evaluator::eval_series(const Node& e) {
  const Cap cap(cap_);
  switch (e.kind) {
    case Kind::Number:
      return Series::constant(ctx_, ctx_.from_int(Int(e.text)));
    case Kind::Gen:
      if (!ctx_.is_finite() || ctx_.degree() < 2) throw ParseError("g is not an element of " + ctx_.spec(), e.column);
      return Series::constant(ctx_, ctx_.gen());
    case Kind::T:
      return Series::t_pow(ctx_, Rat(1));
    case Kind::BigO:
      return Series::big_o(ctx_, e.exponent);
    case Kind::Var: {
      auto it = vars_.find(e.text);
      if (it == vars_.end()) throw ParseError("unknown name '" + e.text + "'", e.column);
      return it->second;
    }
    case Kind::Str:
      throw ParseError("string literal outside solve()", e.column);
    case Kind::Neg:
      return neg(eval_series(*e.args[0]));
    case Kind::Add:
      return add(eval_series(*e.args[0]), eval_series(*e.args[1]));
    case Kind::Sub:
      return sub(eval_series(*e.args[0]), eval_series(*e.args[1]));
    case Kind::Mul:
      return mul(eval_series(*e.args[0]), eval_series(*e.args[1]));
    case Kind::Div: {
      const Series num = eval_series(*e.args[0]);
      const Series den = eval_series(*e.args[1]);
      if (den.is_exact() && den.terms().size() == 1) return mul(num, invert(den, Cap::infinity()));
      return div(num, den, cap);
    }
    case Kind::Pow: {
      const Series base = eval_series(*e.args[0]);
      const Rat& i = e.exponent;
      if (is_integer(i)) {
        const Int& n = i.get_num();
        const Int m = abs(n);
        if (!m.fits_ulong_p()) throw DomainError("integer exponent too large");
        const Series p = pow_int(base, m.get_ui());
        return n >= 0 ? p : invert(p, cap);
      }
      return pow_rat(base, i, cap);
    }
    case Kind::Call: {
      Value v = eval_call(e);
      if (!std::holds_alternative<Series>(v)) throw DomainError(e.text + "() does not produce a series");
      return std::get<Series>(v);
    }
  }
  throw Error("unreachable");
}

Value Evaluator::eval_call(const Node& e) {
  const Cap cap(cap_);
  const auto& name = e.text;
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (e.args.size() < lo || e.args.size() > hi)
      throw ParseError(name + "() takes " + std::to_string(lo) + (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments", e.column);
  };
  auto integer_arg = [&](std::size_t k) -> unsigned long {
    const Node& a = *e.args[k];
    if (a.kind != Kind::Number) throw ParseError(name + "() expects an integer literal", a.column);
    return std::stoul(a.text);
  };
  if (name == "inv") {
    arity(1, 1);
    return invert(eval_series(*e.args[0]), cap);
  }
  if (name == "trace") {
    arity(1, 1);
    return Series::constant(ctx_, trace(eval_series(*e.args[0])));
  }
  if (name == "norm") {
    arity(1, 1);
    return Series::constant(ctx_, norm_leading(eval_series(*e.args[0])));
  }
  if (name == "classify") {
    arity(1, 1);
    return classify_orbit(eval_series(*e.args[0]));
  }
  if (name == "subst") {
    arity(2, 2);
    return substitute(eval_series(*e.args[0]), eval_series(*e.args[1]), cap).value;
  }
  if (name == "root") {
    arity(2, 2);
    return nth_root(eval_series(*e.args[0]), integer_arg(1), cap);
  }
  if (name == "h") {
    arity(2, 3);
    std::optional<Rat> target;
    if (e.args.size() == 3) target = eval_series(*e.args[2]).cap().value();
    return artin_schreier_h(eval_series(*e.args[0]), static_cast<unsigned>(integer_arg(1)), target);
  }
  if (name == "solve") {
    arity(2, 3);
    if (e.args[0]->kind != Kind::Str) throw ParseError("solve() expects the additive polynomial as a string", e.args[0]->column);
    const AdditivePoly P = AdditivePoly::parse(ctx_, e.args[0]->text);
    std::optional<Rat> target;
    if (e.args.size() == 3) target = eval_series(*e.args[2]).cap().value();
    return solve_additive(P, eval_series(*e.args[1]), target);
  }
  throw ParseError("unknown function '" + name + "'", e.column);
}

Series parse_series(const FieldCtx& ctx, std::string_view text, const Rat& cap) {
  Evaluator ev(ctx, cap);
  Value v = ev.eval(*parse(text, &ctx));
  if (!std::holds_alternative<Series>(v)) throw DomainError("expected a series");
  return std::get<Series>(v);
}

}  // namespace hahn::expr
