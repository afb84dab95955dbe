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

#ifndef HAHN_IO_HPP
#define HAHN_IO_HPP

#include "json.hpp"

#include "hahn/morphisms.hpp"
#include "hahn/series.hpp"

namespace hahn {

using Json = nlohmann::json;

// {"field": "F9:x^2+1", "terms": [[num, den, "coeff"], ...], "cap": [num, den] | "inf"}
Json series_to_json(const Series& x);
Series series_from_json(const Json& j);

// [{"substitute": {series}}, {"rescale": {"field": .., "committed": [[d, "u"], ...]}},
//  {"translate": "c"}, {"invert": null}, {"scale_exp": [num, den]}]
Json transform_to_json(const Transform& T);
Transform transform_from_json(const FieldCtx& ctx, const Json& j);

}  // namespace hahn

#endif  // HAHN_IO_HPP
