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

#include "nsleak/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "nsleak/errors.hpp"

namespace nsleak::io {
namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

void only_keys(const Json& doc, const std::string& path,
               std::initializer_list<std::string_view> allowed) {
  if (!doc.is_object()) fail(path.empty() ? "document" : path, "expected an object");
  for (const auto& item : doc.items()) {
    bool ok = false;
    for (auto k : allowed) ok = ok || item.key() == k;
    if (!ok) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown key");
  }
}

const Json& required(const Json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing required key");
  return *it;
}

std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> get_strings(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(get_string(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Rational get_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

// Re-raises model-level InputErrors with the document path prefixed.
template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text, std::string_view origin) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.what() carries "line L, column C".
    throw InputError(std::string(origin) + ": invalid JSON: " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Relation relation_from_json(const Json& doc) {
  only_keys(doc, "", {"variables", "alphabets", "tuples"});
  const VarList vars = get_strings(required(doc, "variables"), "variables");
  const Json& tuples_doc = required(doc, "tuples");
  if (!tuples_doc.is_array()) fail("tuples", "expected an array of tuples");
  std::vector<SymbolTuple> tuples;
  for (std::size_t t = 0; t < tuples_doc.size(); ++t) {
    const std::string path = "tuples[" + std::to_string(t) + "]";
    tuples.push_back(get_strings(tuples_doc[t], path));
    if (tuples.back().size() != vars.size()) {
      fail(path, "has " + std::to_string(tuples.back().size()) + " coordinates, expected " +
                     std::to_string(vars.size()));
    }
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const std::string& s = tuples.back()[v];
      with_path(path + "[" + std::to_string(v) + "]", [&] {
        validate_symbol(s);
        return 0;
      });
    }
  }

  if (!doc.contains("alphabets")) {
    return with_path("relation", [&] { return Relation::from_tuples(vars, tuples); });
  }
  const Json& alpha_doc = doc["alphabets"];
  if (!alpha_doc.is_object()) fail("alphabets", "expected an object");
  std::vector<std::vector<Symbol>> alphabets;
  for (const auto& v : vars) {
    auto it = alpha_doc.find(v);
    if (it == alpha_doc.end()) fail("alphabets." + v, "missing alphabet");
    alphabets.push_back(get_strings(*it, "alphabets." + v));
  }
  if (alpha_doc.size() != vars.size()) {
    for (const auto& item : alpha_doc.items()) {
      if (std::find(vars.begin(), vars.end(), item.key()) == vars.end()) {
        fail("alphabets." + item.key(), "not a declared variable");
      }
    }
  }
  // Locate a tuple symbol outside its alphabet before the generic check.
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto& a = alphabets[v];
      if (std::find(a.begin(), a.end(), tuples[t][v]) == a.end()) {
        fail("tuples[" + std::to_string(t) + "][" + std::to_string(v) + "]",
             "symbol '" + tuples[t][v] + "' not in alphabet of " + vars[v]);
      }
    }
  }
  return with_path("relation", [&] { return Relation::create(vars, alphabets, tuples); });
}

Json relation_to_json(const Relation& rel) {
  Json alphabets = Json::object();
  for (std::size_t v = 0; v < rel.arity(); ++v) alphabets[rel.variables()[v]] = rel.alphabet(v);
  Json tuples = Json::array();
  for (const auto& t : rel.tuples()) tuples.push_back(t);
  return {{"variables", rel.variables()}, {"alphabets", alphabets}, {"tuples", tuples}};
}

Channel channel_from_json(const Json& doc) {
  only_keys(doc, "", {"from", "to", "map"});
  const std::string from = get_string(required(doc, "from"), "from");
  const std::string to = get_string(required(doc, "to"), "to");
  const Json& map_doc = required(doc, "map");
  if (!map_doc.is_object()) fail("map", "expected an object");
  std::map<Symbol, std::set<Symbol>> map;
  for (const auto& item : map_doc.items()) {
    const auto ys = get_strings(item.value(), "map." + item.key());
    map[item.key()] = {ys.begin(), ys.end()};
  }
  return with_path("channel", [&] { return Channel::create(from, to, std::move(map)); });
}

Json channel_to_json(const Channel& ch) {
  Json map = Json::object();
  for (const auto& [x, ys] : ch.map()) map[x] = std::vector<Symbol>(ys.begin(), ys.end());
  return {{"from", ch.source()}, {"to", ch.target()}, {"map", map}};
}

AttributeFile attribute_from_json(const Json& doc) {
  only_keys(doc, "", {"source", "domain", "map", "achieved_leakage"});
  VarList source{"X"};
  if (doc.contains("source")) source = get_strings(doc["source"], "source");
  const Json& map_doc = required(doc, "map");
  if (!map_doc.is_object()) fail("map", "expected an object");
  std::map<Symbol, Symbol> image;
  for (const auto& item : map_doc.items()) {
    image[item.key()] = get_string(item.value(), "map." + item.key());
  }
  if (doc.contains("domain")) {
    auto domain = get_strings(doc["domain"], "domain");
    std::sort(domain.begin(), domain.end());
    std::vector<Symbol> keys;
    for (const auto& kv : image) keys.push_back(kv.first);
    if (domain != keys) fail("domain", "must list exactly the keys of map");
  }
  AttributeFile out{with_path("attribute", [&] { return AttributeMap::create(source, image); }),
                    std::nullopt};
  if (doc.contains("achieved_leakage")) {
    const std::string text = get_string(doc["achieved_leakage"], "achieved_leakage");
    out.achieved_leakage =
        with_path("achieved_leakage", [&] { return LeakageValue::parse(text); });
  }
  return out;
}

Json attribute_to_json(const AttributeMap& g, const std::optional<LeakageValue>& achieved) {
  Json map = Json::object();
  for (const auto& [x, u] : g.image()) map[x] = u;
  Json doc{{"source", g.source()}, {"domain", g.domain()}, {"map", map}};
  if (achieved) doc["achieved_leakage"] = achieved->exact();
  return doc;
}

RationalDist distribution_from_json(const Relation& rel, const Json& doc) {
  only_keys(doc, "", {"weights"});
  const Json& w = required(doc, "weights");
  if (!w.is_object()) fail("weights", "expected an object");
  std::map<SymbolTuple, Rational> weights;
  for (const auto& item : w.items()) {
    const std::string path = "weights." + item.key();
    weights[split_tuple(item.key())] = get_rational(item.value(), path);
  }
  return with_path("weights", [&] { return RationalDist::create(rel, weights); });
}

Json distribution_to_json(const RationalDist& dist) {
  Json w = Json::object();
  const auto tuples = dist.relation().tuples();
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    if (dist.weights()[r] != 0) w[join_tuple(tuples[r])] = rational_to_string(dist.weights()[r]);
  }
  return {{"weights", w}};
}

StochasticChannel stochastic_channel_from_json(const Json& doc) {
  only_keys(doc, "", {"from", "to", "map"});
  const std::string from = get_string(required(doc, "from"), "from");
  const std::string to = get_string(required(doc, "to"), "to");
  const Json& map_doc = required(doc, "map");
  if (!map_doc.is_object()) fail("map", "expected an object");
  std::map<Symbol, std::map<Symbol, Rational>> rows;
  for (const auto& row : map_doc.items()) {
    const std::string path = "map." + row.key();
    if (!row.value().is_object()) fail(path, "expected an object of probabilities");
    for (const auto& cell : row.value().items()) {
      rows[row.key()][cell.key()] = get_rational(cell.value(), path + "." + cell.key());
    }
  }
  return with_path("channel", [&] { return StochasticChannel::create(from, to, std::move(rows)); });
}

Json stochastic_channel_to_json(const StochasticChannel& ch) {
  Json map = Json::object();
  for (const auto& [x, row] : ch.rows()) {
    for (const auto& [y, p] : row) map[x][y] = rational_to_string(p);
  }
  return {{"from", ch.source()}, {"to", ch.target()}, {"map", map}};
}

}  // namespace nsleak::io
