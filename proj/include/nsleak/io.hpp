// Copyright 2026 The nsleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON file formats. Unknown keys are rejected; schema errors carry the path
// of the offending field (e.g. "tuples[2][1]").

#ifndef NSLEAK_IO_HPP_
#define NSLEAK_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nsleak/relation.hpp"
#include "nsleak/stochastic.hpp"
#include "nsleak/value.hpp"

namespace nsleak::io {

using Json = nlohmann::json;

// Parse errors are reported as InputError with line and column.
Json parse_json(std::string_view text, std::string_view origin = "input");
Json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

// {"variables": [...], "alphabets": {var: [...]}, "tuples": [[...], ...]}
// "alphabets" may be omitted, in which case the marginal ranges are used.
Relation relation_from_json(const Json& doc);
Json relation_to_json(const Relation& rel);

// {"from": "X", "to": "Y", "map": {"x1": ["y1"], ...}}
Channel channel_from_json(const Json& doc);
Json channel_to_json(const Channel& ch);

// {"source": ["X"], "domain": [...], "map": {...}, "achieved_leakage": "log2(p/q)"}
// "source" defaults to ["X"]; "domain" must equal the keys of "map".
struct AttributeFile {
  AttributeMap map;
  std::optional<LeakageValue> achieved_leakage;
};
AttributeFile attribute_from_json(const Json& doc);
Json attribute_to_json(const AttributeMap& g,
                       const std::optional<LeakageValue>& achieved = std::nullopt);

// {"weights": {"x1|y1": "1/3", ...}} keyed by join_tuple() in variable order.
RationalDist distribution_from_json(const Relation& rel, const Json& doc);
Json distribution_to_json(const RationalDist& dist);

// {"from": "X", "to": "Y", "map": {"x1": {"y1": "3/4", "y2": "1/4"}, ...}}
StochasticChannel stochastic_channel_from_json(const Json& doc);
Json stochastic_channel_to_json(const StochasticChannel& ch);

}  // namespace nsleak::io

#endif  // NSLEAK_IO_HPP_
