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

#include "cli.hpp"

#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hahn/error.hpp"
#include "hahn/expr.hpp"
#include "hahn/io.hpp"
#include "hahn/powers.hpp"
#include "hahn/random.hpp"
#include "hahn/solvers.hpp"

namespace hahn::cli {
namespace {

struct Globals {
  std::string field = "Q";
  std::string modulus;
  std::string cap;  // empty: command default
  std::string format = "text";
  std::uint64_t seed = 1;

  FieldCtx ctx() const { return make_field(modulus.empty() ? field : field + ":" + modulus); }
  bool json() const { return format == "json"; }
  Rat cap_or(const Rat& fallback) const { return cap.empty() ? fallback : parse_rat(cap); }
  std::optional<Rat> cap_opt() const {
    if (cap.empty()) return std::nullopt;
    return parse_rat(cap);
  }
};

std::string class_json_name(const OrbitClass& c) { return c.infinite ? "S_inf" : "S_c"; }

Json class_to_json(const FieldCtx& ctx, const OrbitClass& c) {
  Json j = {{"class", class_json_name(c)}};
  if (!c.infinite) j["c"] = ctx.format(c.c);
  return j;
}

void print_series(std::ostream& out, const Globals& g, const Series& x) {
  if (g.json())
    out << series_to_json(x).dump() << "\n";
  else
    out << to_string(x) << "\n";
}

void print_coeff(std::ostream& out, const Globals& g, const FieldCtx& ctx, const Coeff& c) {
  if (g.json())
    out << Json{{"value", ctx.format(c)}}.dump() << "\n";
  else
    out << ctx.format(c) << "\n";
}

std::string step_text(const FieldCtx& ctx, const TransformStep& s) {
  return std::visit(
      [&](const auto& st) -> std::string {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, step::Translate>) {
          return "translate " + ctx.format(st.c);
        } else if constexpr (std::is_same_v<T, step::Invert>) {
          return "invert";
        } else if constexpr (std::is_same_v<T, step::Rescale>) {
          if (st.lambda.is_trivial()) return "rescale trivial";
          std::string r = "rescale";
          for (const auto& [d, u] : st.lambda.committed()) r += " lambda(1/" + std::to_string(d) + ")=" + ctx.format(u);
          return r;
        } else if constexpr (std::is_same_v<T, step::ScaleExp>) {
          return "scale_exp " + to_string(st.r);
        } else {
          return "substitute " + to_string(st.x);
        }
      },
      s);
}

void demo_divergence(std::ostream& out, const Globals& g, std::uint64_t p, unsigned K) {
  const FieldCtx ctx = FieldCtx::finite(p);
  const Series x = Series::t_pow(ctx, 1) - Series::t_pow(ctx, 2);
  const Cap requested(g.cap_or(Rat(1)));
  Series y(ctx);
  Json rows = Json::array();
  if (!g.json()) out << "K\tt^0\trisk\tachieved_cap\n";
  for (unsigned k = 1; k <= K; ++k) {
    y = y + Series::t_pow(ctx, Rat(-1) / rat_pow(p, k));
    const SubstitutionResult r = substitute(x, y, requested);
    const std::string c0 = ctx.format(r.value.coeff(Rat(0)));
    const bool risk = r.diagnostics.hypothesis_a_risk;
    if (g.json())
      rows.push_back({{"K", k}, {"t0", c0}, {"risk", risk}, {"achieved_cap", to_string(r.achieved_cap)}});
    else
      out << k << "\t" << c0 << "\t" << (risk ? "yes" : "no") << "\t" << to_string(r.achieved_cap) << "\n";
  }
  if (g.json()) out << Json{{"p", p}, {"rows", rows}}.dump() << "\n";
}

// Randomized algebraic laws; returns the number of failures.
int check_laws(std::ostream& out, const Globals& g, unsigned trials) {
  const FieldCtx ctx = g.ctx();
  RandomSeries rs(ctx, g.seed);
  const Cap req(Rat(6));
  int failures = 0;
  auto expect = [&](bool ok, const std::string& law, unsigned i) {
    if (!ok) {
      ++failures;
      out << "FAIL " << law << " trial " << i << "\n";
    }
  };
  for (unsigned i = 0; i < trials; ++i) {
    const Series a = rs.series(), b = rs.series(), c = rs.series();
    expect(agree_below(mul(a, add(b, c)), add(mul(a, b), mul(a, c))), "distributivity", i);
    expect(agree_below(mul(mul(a, b), c), mul(a, mul(b, c))), "associativity", i);
    const Series x = rs.monic_positive();
    const SubstitutionResult sab = substitute(x, add(a, b), req);
    const SubstitutionResult sa = substitute(x, a, req), sb = substitute(x, b, req);
    expect(agree_below(sab.value, add(sa.value, sb.value)), "substitute additive", i);
    const SubstitutionResult sm = substitute(x, mul(a, b), req);
    expect(agree_below(sm.value, mul(sa.value, sb.value)), "substitute multiplicative", i);
    if (a.has_leading_term()) expect(agree_below(mul(a, invert(a, req)), Series::constant(ctx, ctx.one())), "inverse", i);
  }
  out << (failures == 0 ? "ok" : "failed") << " " << trials << " trials, field " << ctx.spec() << ", seed " << g.seed
      << "\n";
  return failures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized power series over Q and finite fields", "hahn"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "Coefficient field: Q, F<q> or F<q>:<modulus>");
  app.add_option("--modulus", g.modulus, "Monic irreducible modulus for F_{p^e}, e.g. x^2+1");
  app.add_option("--cap", g.cap, "Requested precision (rational, may be negative)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "Seed for randomized subcommands");

  std::string expr, poly, rhs, x_text, y_text, demo_name;
  unsigned n = 1, K = 8, trials = 100;
  std::uint64_t p = 2;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression (statements separated by ';')");
  eval->add_option("expr", expr)->required();
  auto* solve = app.add_subcommand("solve", "Solve P(x) = rhs for an additive polynomial P");
  solve->add_option("--poly", poly)->required();
  solve->add_option("--rhs", rhs)->required();
  auto* subst = app.add_subcommand("subst", "Substitute t -> x in y");
  subst->add_option("--x", x_text)->required();
  subst->add_option("--y", y_text)->required();
  auto* classify = app.add_subcommand("classify", "Orbit class of a series");
  classify->add_option("series", expr)->required();
  auto* witness = app.add_subcommand("orbit-witness", "A transform taking t to the series");
  witness->add_option("series", expr)->required();
  auto* trace_cmd = app.add_subcommand("trace", "Constant coefficient");
  trace_cmd->add_option("series", expr)->required();
  auto* norm = app.add_subcommand("norm", "Leading coefficient norm");
  norm->add_option("series", expr)->required();
  auto* sign = app.add_subcommand("sign-via-trace", "Sign of the valuation of a trace-zero series");
  sign->add_option("series", expr)->required();
  auto* as = app.add_subcommand("artin-schreier", "Trace-zero y with y^(p^n) - y = x - Tr(x)");
  as->add_option("series", expr)->required();
  as->add_option("--n", n)->check(CLI::Range(1u, 16u));
  auto* hypa = app.add_subcommand("hypA", "Surjectivity of an additive polynomial on the residue field");
  hypa->add_option("--poly", poly);
  auto* demo = app.add_subcommand("demo", "Scripted demonstrations");
  demo->add_option("name", demo_name)->required()->check(CLI::IsMember({"char-p-divergence"}));
  demo->add_option("--p", p)->check(CLI::Range(2ul, 1000ul));
  demo->add_option("--K", K)->check(CLI::Range(1u, 12u));
  auto* check = app.add_subcommand("check", "Randomized algebraic law checks");
  check->add_option("--trials", trials)->check(CLI::Range(1u, 100000u));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.push_back("hahn");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (eval->parsed()) {
      expr::Evaluator ev(g.ctx(), g.cap_or(Rat(8)));
      const expr::Value v = ev.run(expr);
      if (const auto* s = std::get_if<Series>(&v))
        print_series(out, g, *s);
      else if (g.json())
        out << class_to_json(ev.ctx(), std::get<OrbitClass>(v)).dump() << "\n";
      else
        out << to_string(ev.ctx(), std::get<OrbitClass>(v)) << "\n";
    } else if (solve->parsed()) {
      const FieldCtx ctx = g.ctx();
      const AdditivePoly P = AdditivePoly::parse(ctx, poly);
      const Series b = expr::parse_series(ctx, rhs);
      print_series(out, g, solve_additive(P, b, g.cap_opt()));
    } else if (subst->parsed()) {
      const FieldCtx ctx = g.ctx();
      const Rat cap = g.cap_or(Rat(8));
      const Series x = expr::parse_series(ctx, x_text, cap), y = expr::parse_series(ctx, y_text, cap);
      const SubstitutionResult r = substitute(x, y, Cap(cap));
      if (g.json()) {
        Json terms = Json::array();
        for (const auto& tc : r.diagnostics.terms) {
          Json t = {{"exponent", to_string(tc.exponent)}, {"cap", to_string(tc.cap)}};
          t["padic_valuation"] = tc.padic_valuation ? Json(*tc.padic_valuation) : Json(nullptr);
          terms.push_back(t);
        }
        out << Json{{"value", series_to_json(r.value)},
                    {"achieved_cap", to_string(r.achieved_cap)},
                    {"hypothesis_a_risk", r.diagnostics.hypothesis_a_risk},
                    {"terms", terms}}
                   .dump()
            << "\n";
      } else {
        out << to_string(r.value) << "\n";
        out << "achieved cap: " << to_string(r.achieved_cap) << "\n";
        out << "hypothesis A risk: " << (r.diagnostics.hypothesis_a_risk ? "yes" : "no") << "\n";
      }
    } else if (classify->parsed()) {
      const FieldCtx ctx = g.ctx();
      const OrbitClass c = classify_orbit(expr::parse_series(ctx, expr, g.cap_or(Rat(8))));
      if (g.json())
        out << class_to_json(ctx, c).dump() << "\n";
      else
        out << to_string(ctx, c) << "\n";
    } else if (witness->parsed()) {
      const FieldCtx ctx = g.ctx();
      const Rat cap = g.cap_or(Rat(8));
      const Transform T = orbit_transform(expr::parse_series(ctx, expr, cap), Cap(cap));
      if (g.json()) {
        out << transform_to_json(T).dump() << "\n";
      } else {
        for (const auto& s : T.steps) out << step_text(ctx, s) << "\n";
      }
    } else if (trace_cmd->parsed()) {
      const FieldCtx ctx = g.ctx();
      print_coeff(out, g, ctx, trace(expr::parse_series(ctx, expr, g.cap_or(Rat(8)))));
    } else if (norm->parsed()) {
      const FieldCtx ctx = g.ctx();
      print_coeff(out, g, ctx, norm_leading(expr::parse_series(ctx, expr, g.cap_or(Rat(8)))));
    } else if (sign->parsed()) {
      const FieldCtx ctx = g.ctx();
      const Sign s = valuation_sign_via_trace(expr::parse_series(ctx, expr, g.cap_or(Rat(8))));
      const char* name = s == Sign::Positive ? "positive" : "negative";
      if (g.json())
        out << Json{{"sign", name}}.dump() << "\n";
      else
        out << name << "\n";
    } else if (as->parsed()) {
      const FieldCtx ctx = g.ctx();
      print_series(out, g, artin_schreier_h(expr::parse_series(ctx, expr), n, g.cap_opt()));
    } else if (hypa->parsed()) {
      const FieldCtx ctx = g.ctx();
      std::optional<AdditivePoly> P;
      if (!poly.empty()) P = AdditivePoly::parse(ctx, poly);
      const HypothesisAVerdict v = hypothesis_a_check(ctx, P);
      if (g.json()) {
        Json j = {{"satisfies", v.satisfies}};
        if (v.witness) j["witness"] = ctx.format(*v.witness);
        out << j.dump() << "\n";
      } else if (v.satisfies) {
        out << "SATISFIES\n";
      } else {
        out << "FAILS: witness b=" << ctx.format(*v.witness) << "\n";
      }
    } else if (demo->parsed()) {
      demo_divergence(out, g, p, K);
    } else if (check->parsed()) {
      return check_laws(out, g, trials) == 0 ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace hahn::cli
