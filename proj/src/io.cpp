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

#include "hahn/io.hpp"

namespace hahn {

namespace {

Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw DomainError("expected an integer in JSON");
}

Json rat_to_json(const Rat& r) { return Json::array({int_to_json(r.get_num()), int_to_json(r.get_den())}); }

Rat rat_from_json(const Json& num, const Json& den) {
  const Int d = int_from_json(den);
  if (d == 0) throw DomainError("zero denominator in JSON");
  Rat r(int_from_json(num), d);
  r.canonicalize();
  return r;
}

}  // namespace

Json series_to_json(const Series& x) {
  Json terms = Json::array();
  for (const auto& [e, c] : x.terms())
    terms.push_back(Json::array({int_to_json(e.get_num()), int_to_json(e.get_den()), x.ctx().format(c)}));
  return Json{{"field", x.ctx().spec()},
              {"terms", std::move(terms)},
              {"cap", x.is_exact() ? Json("inf") : rat_to_json(x.cap().value())}};
}

Series series_from_json(const Json& j) {
  try {
    const FieldCtx ctx = FieldCtx::parse(j.at("field").get<std::string>());
    Series::Terms terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw DomainError("series term must be [num, den, coeff]");
      const Coeff c = ctx.parse_coeff(t[2].get<std::string>());
      if (!terms.emplace(rat_from_json(t[0], t[1]), c).second) throw DomainError("duplicate exponent in JSON series");
    }
    const Json& cap = j.at("cap");
    Cap c = Cap::infinity();
    if (cap.is_array()) {
      if (cap.size() != 2) throw DomainError("cap must be [num, den] or \"inf\"");
      c = Cap(rat_from_json(cap[0], cap[1]));
    } else if (cap != "inf") {
      throw DomainError("cap must be [num, den] or \"inf\"");
    }
    return Series(ctx, std::move(terms), c);
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed series JSON: ") + ex.what());
  }
}

Json transform_to_json(const Transform& T) {
  Json out = Json::array();
  for (const auto& s : T.steps) {
    std::visit(
        [&](const auto& st) {
          using S = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<S, step::Translate>) {
            out.push_back({{"translate", T.ctx.format(st.c)}});
          } else if constexpr (std::is_same_v<S, step::Invert>) {
            out.push_back({{"invert", nullptr}});
          } else if constexpr (std::is_same_v<S, step::Rescale>) {
            Json committed = Json::array();
            for (const auto& [d, u] : st.lambda.committed()) committed.push_back(Json::array({d, T.ctx.format(u)}));
            out.push_back({{"rescale", {{"trivial", st.lambda.is_trivial()}, {"committed", committed}}}});
          } else if constexpr (std::is_same_v<S, step::ScaleExp>) {
            out.push_back({{"scale_exp", rat_to_json(st.r)}});
          } else {
            out.push_back({{"substitute", series_to_json(st.x)}});
          }
        },
        s);
  }
  return out;
}

Transform transform_from_json(const FieldCtx& ctx, const Json& j) {
  Transform T{ctx, {}};
  try {
    for (const auto& item : j) {
      if (!item.is_object() || item.size() != 1) throw DomainError("transform step must be a single-key object");
      const std::string key = item.begin().key();
      const Json& val = item.begin().value();
      if (key == "translate") {
        T.steps.emplace_back(step::Translate{ctx.parse_coeff(val.get<std::string>())});
      } else if (key == "invert") {
        T.steps.emplace_back(step::Invert{});
      } else if (key == "rescale") {
        if (val.value("trivial", false)) {
          T.steps.emplace_back(step::Rescale{ExpHom::trivial(ctx)});
        } else {
          std::vector<ExpHom::Pair> pairs;
          for (const auto& p : val.at("committed")) pairs.emplace_back(p.at(0).get<unsigned long>(), ctx.parse_coeff(p.at(1).get<std::string>()));
          T.steps.emplace_back(step::Rescale{ExpHom(ctx, std::move(pairs))});
        }
      } else if (key == "scale_exp") {
        T.steps.emplace_back(step::ScaleExp{rat_from_json(val.at(0), val.at(1))});
      } else if (key == "substitute") {
        Series x = series_from_json(val);
        if (!(x.ctx() == ctx)) throw FieldMismatch();
        T.steps.emplace_back(step::Substitute{std::move(x)});
      } else {
        throw DomainError("unknown transform step '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("malformed transform JSON: ") + ex.what());
  }
  return T;
}

}  // namespace hahn
