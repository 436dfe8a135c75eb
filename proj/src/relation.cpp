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

#include "nsleak/relation.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "nsleak/errors.hpp"

namespace nsleak {
namespace {

void validate_variable_name(std::string_view name) {
  if (name.empty()) throw InputError("variable names must be non-empty");
  if (name.find(',') != std::string_view::npos) {
    throw InputError("variable name '" + std::string(name) +
                     "' may not contain ','");
  }
}

Relation::Row project_row(const Relation::Row& row,
                          const std::vector<std::size_t>& idx) {
  Relation::Row out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(row[i]);
  return out;
}

SymbolTuple decode(const Relation& rel, const Relation::Row& codes,
                   const std::vector<std::size_t>& idx) {
  SymbolTuple out;
  out.reserve(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.push_back(rel.symbol(idx[k], codes[k]));
  }
  return out;
}

void require_disjoint(const std::vector<std::vector<std::size_t>>& groups) {
  std::unordered_set<std::size_t> seen;
  for (const auto& g : groups) {
    if (g.empty()) throw InputError("variable group must be non-empty");
    for (std::size_t v : g) {
      if (!seen.insert(v).second) {
        throw InputError("variable groups must be disjoint");
      }
    }
  }
}

}  // namespace

std::string join_tuple(const SymbolTuple& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += kTupleSeparator;
    out += tuple[i];
  }
  return out;
}

SymbolTuple split_tuple(std::string_view text) {
  SymbolTuple out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(kTupleSeparator, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void validate_symbol(std::string_view symbol) {
  if (symbol.empty()) throw InputError("symbols must be non-empty");
  if (symbol.find(kTupleSeparator) != std::string_view::npos) {
    throw InputError("symbol '" + std::string(symbol) + "' may not contain '" +
                     kTupleSeparator + "'");
  }
}

Relation Relation::create(VarList variables,
                          std::vector<std::vector<Symbol>> alphabets,
                          const std::vector<SymbolTuple>& tuples) {
  if (variables.empty()) throw InputError("relation needs at least one variable");
  if (alphabets.size() != variables.size()) {
    throw InputError("one alphabet per variable is required");
  }
  for (std::size_t i = 0; i < variables.size(); ++i) {
    validate_variable_name(variables[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (variables[i] == variables[j]) {
        throw InputError("duplicate variable '" + variables[i] + "'");
      }
    }
  }
  for (std::size_t v = 0; v < alphabets.size(); ++v) {
    auto& a = alphabets[v];
    for (const Symbol& s : a) validate_symbol(s);
    std::sort(a.begin(), a.end());
    if (auto dup = std::adjacent_find(a.begin(), a.end()); dup != a.end()) {
      throw InputError("symbol '" + *dup + "' repeated in alphabet of " +
                       variables[v]);
    }
  }
  if (tuples.empty()) throw InputError("relation must contain at least one tuple");

  Relation rel;
  rel.variables_ = std::move(variables);
  rel.alphabets_ = std::move(alphabets);
  rel.rows_.reserve(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const SymbolTuple& tuple = tuples[t];
    if (tuple.size() != rel.arity()) {
      throw InputError("tuple " + std::to_string(t) + " has " +
                       std::to_string(tuple.size()) + " coordinates, expected " +
                       std::to_string(rel.arity()));
    }
    Row row(tuple.size());
    for (std::size_t v = 0; v < tuple.size(); ++v) {
      const auto& a = rel.alphabets_[v];
      auto it = std::lower_bound(a.begin(), a.end(), tuple[v]);
      if (it == a.end() || *it != tuple[v]) {
        throw InputError("tuple " + std::to_string(t) + ": symbol '" + tuple[v] +
                         "' not in alphabet of " + rel.variables_[v]);
      }
      row[v] = static_cast<std::uint32_t>(it - a.begin());
    }
    rel.rows_.push_back(std::move(row));
  }
  std::sort(rel.rows_.begin(), rel.rows_.end());
  const auto last = std::unique(rel.rows_.begin(), rel.rows_.end());
  rel.duplicates_dropped_ = static_cast<std::size_t>(rel.rows_.end() - last);
  rel.rows_.erase(last, rel.rows_.end());
  return rel;
}

Relation Relation::from_tuples(VarList variables,
                               const std::vector<SymbolTuple>& tuples) {
  std::vector<std::set<Symbol>> seen(variables.size());
  for (const SymbolTuple& t : tuples) {
    for (std::size_t v = 0; v < t.size() && v < seen.size(); ++v) {
      seen[v].insert(t[v]);
    }
  }
  std::vector<std::vector<Symbol>> alphabets;
  alphabets.reserve(seen.size());
  for (auto& s : seen) alphabets.emplace_back(s.begin(), s.end());
  return create(std::move(variables), std::move(alphabets), tuples);
}

bool Relation::has_variable(std::string_view name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

std::size_t Relation::index_of(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    throw InputError("unknown variable '" + std::string(name) + "'");
  }
  return static_cast<std::size_t>(it - variables_.begin());
}

std::vector<std::size_t> Relation::indices_of(const VarList& names) const {
  if (names.empty()) throw InputError("variable list must be non-empty");
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    const std::size_t i = index_of(n);
    if (std::find(out.begin(), out.end(), i) != out.end()) {
      throw InputError("variable '" + n + "' listed twice");
    }
    out.push_back(i);
  }
  return out;
}

std::uint32_t Relation::code_of(std::size_t var, std::string_view symbol) const {
  const auto& a = alphabets_[var];
  auto it = std::lower_bound(a.begin(), a.end(), symbol);
  if (it == a.end() || *it != symbol) {
    throw InputError("symbol '" + std::string(symbol) + "' not in alphabet of " +
                     variables_[var]);
  }
  return static_cast<std::uint32_t>(it - a.begin());
}

std::vector<SymbolTuple> Relation::tuples() const {
  std::vector<SymbolTuple> out;
  out.reserve(rows_.size());
  for (const Row& row : rows_) {
    SymbolTuple t;
    t.reserve(row.size());
    for (std::size_t v = 0; v < row.size(); ++v) t.push_back(symbol(v, row[v]));
    out.push_back(std::move(t));
  }
  return out;
}

Channel Channel::create(std::string source, std::string target,
                        std::map<Symbol, std::set<Symbol>> map) {
  validate_variable_name(source);
  validate_variable_name(target);
  if (source == target) {
    throw InputError("channel source and target must differ");
  }
  if (map.empty()) throw InputError("channel must map at least one symbol");
  for (const auto& [x, ys] : map) {
    validate_symbol(x);
    if (ys.empty()) {
      throw InputError("channel " + source + "->" + target + ": symbol '" + x +
                       "' has an empty image");
    }
    for (const Symbol& y : ys) validate_symbol(y);
  }
  Channel ch;
  ch.source_ = std::move(source);
  ch.target_ = std::move(target);
  ch.map_ = std::move(map);
  return ch;
}

std::vector<Symbol> Channel::source_alphabet() const {
  std::vector<Symbol> out;
  out.reserve(map_.size());
  for (const auto& kv : map_) out.push_back(kv.first);
  return out;
}

std::vector<Symbol> Channel::target_alphabet() const {
  std::set<Symbol> all;
  for (const auto& kv : map_) all.insert(kv.second.begin(), kv.second.end());
  return {all.begin(), all.end()};
}

const std::set<Symbol>& Channel::image(const Symbol& x) const {
  auto it = map_.find(x);
  if (it == map_.end()) {
    throw InputError("channel " + source_ + "->" + target_ +
                     " is not defined on '" + x + "'");
  }
  return it->second;
}

AttributeMap AttributeMap::create(VarList source, std::map<Symbol, Symbol> image) {
  if (source.empty()) throw InputError("attribute needs a source variable");
  for (const auto& v : source) validate_variable_name(v);
  if (image.empty()) throw InputError("attribute domain must be non-empty");
  for (const auto& [x, u] : image) {
    if (x.empty()) throw InputError("attribute domain symbols must be non-empty");
    validate_symbol(u);
  }
  AttributeMap g;
  g.source_ = std::move(source);
  g.image_ = std::move(image);
  return g;
}

std::vector<Symbol> AttributeMap::domain() const {
  std::vector<Symbol> out;
  out.reserve(image_.size());
  for (const auto& kv : image_) out.push_back(kv.first);
  return out;
}

const Symbol& AttributeMap::operator()(const Symbol& x) const {
  auto it = image_.find(x);
  if (it == image_.end()) {
    throw InputError("attribute is not defined on '" + x + "'");
  }
  return it->second;
}

std::map<Symbol, std::vector<Symbol>> AttributeMap::fibers() const {
  std::map<Symbol, std::vector<Symbol>> out;
  for (const auto& [x, u] : image_) out[u].push_back(x);
  return out;
}

BivariateView bivariate_view(const Relation& rel, const VarList& a,
                             const VarList& b) {
  const auto ia = rel.indices_of(a);
  const auto ib = rel.indices_of(b);
  require_disjoint({ia, ib});

  std::map<Relation::Row, std::uint32_t> a_ids;
  std::map<Relation::Row, std::uint32_t> b_ids;
  for (const auto& row : rel.rows()) {
    a_ids.emplace(project_row(row, ia), 0);
    b_ids.emplace(project_row(row, ib), 0);
  }
  BivariateView view;
  std::uint32_t next = 0;
  for (auto& [codes, id] : a_ids) {
    id = next++;
    view.a_values.push_back(decode(rel, codes, ia));
  }
  next = 0;
  for (auto& [codes, id] : b_ids) {
    id = next++;
    view.b_values.push_back(decode(rel, codes, ib));
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (const auto& row : rel.rows()) {
    pairs.emplace(a_ids.at(project_row(row, ia)), b_ids.at(project_row(row, ib)));
  }
  view.a_given_b.resize(view.b_values.size());
  view.b_given_a.resize(view.a_values.size());
  for (const auto& [x, y] : pairs) {  // sorted by (x, y): both lists stay sorted
    view.a_given_b[y].push_back(x);
    view.b_given_a[x].push_back(y);
  }
  view.pair_count = pairs.size();
  return view;
}

TupleSet marginal(const Relation& rel, const VarList& vars) {
  const auto idx = rel.indices_of(vars);
  TupleSet out;
  for (const auto& row : rel.rows()) {
    out.insert(decode(rel, project_row(row, idx), idx));
  }
  return out;
}

TupleSet conditional(const Relation& rel, const VarList& target,
                     const Assignment& given) {
  const auto idx = rel.indices_of(target);
  std::vector<std::pair<std::size_t, std::uint32_t>> evidence;
  for (const auto& [var, sym] : given) {
    const std::size_t v = rel.index_of(var);
    const auto& a = rel.alphabet(v);
    auto it = std::lower_bound(a.begin(), a.end(), sym);
    if (it == a.end() || *it != sym) {
      throw IncompatibleEvidence("evidence " + var + "=" + sym +
                                 " is not realizable in the relation");
    }
    evidence.emplace_back(v, static_cast<std::uint32_t>(it - a.begin()));
  }
  TupleSet out;
  for (const auto& row : rel.rows()) {
    const bool agrees = std::all_of(evidence.begin(), evidence.end(),
                                    [&](const auto& e) { return row[e.first] == e.second; });
    if (agrees) out.insert(decode(rel, project_row(row, idx), idx));
  }
  if (out.empty()) {
    std::string text;
    for (const auto& [var, sym] : given) {
      if (!text.empty()) text += ", ";
      text += var + "=" + sym;
    }
    throw IncompatibleEvidence("evidence {" + text +
                               "} is not realizable in the relation");
  }
  return out;
}

Channel channel_from_relation(const Relation& rel, const std::string& source,
                              const std::string& target) {
  const BivariateView view = bivariate_view(rel, {source}, {target});
  std::map<Symbol, std::set<Symbol>> map;
  for (std::size_t i = 0; i < view.a_values.size(); ++i) {
    auto& image = map[view.a_values[i][0]];
    for (std::uint32_t j : view.b_given_a[i]) image.insert(view.b_values[j][0]);
  }
  return Channel::create(source, target, std::move(map));
}

Relation relation_from_channel(const Channel& k, const std::vector<Symbol>& inputs) {
  std::vector<SymbolTuple> tuples;
  for (const Symbol& x : inputs) {
    for (const Symbol& y : k.image(x)) tuples.push_back({x, y});
  }
  return Relation::create({k.source(), k.target()},
                          {k.source_alphabet(), k.target_alphabet()}, tuples);
}

Relation compose_markov(const Relation& base, const Channel& k1,
                        const Channel& k2) {
  return compose_chain(base, {k1, k2});
}

Relation compose_chain(const Relation& base, const std::vector<Channel>& channels) {
  if (base.arity() != 1) {
    throw InputError("compose: base range must be over a single variable");
  }
  VarList vars{base.variables()[0]};
  std::vector<std::vector<Symbol>> alphabets{base.alphabet(0)};
  for (const Channel& ch : channels) {
    if (ch.source() != vars.back()) {
      throw InputError("compose: channel " + ch.source() + "->" + ch.target() +
                       " does not continue from " + vars.back());
    }
    if (std::find(vars.begin(), vars.end(), ch.target()) != vars.end()) {
      throw InputError("compose: variable " + ch.target() + " appears twice");
    }
    vars.push_back(ch.target());
    alphabets.push_back(ch.target_alphabet());
  }

  std::vector<SymbolTuple> tuples;
  SymbolTuple path;
  std::function<void(std::size_t)> extend = [&](std::size_t stage) {
    if (stage == channels.size()) {
      tuples.push_back(path);
      return;
    }
    for (const Symbol& next : channels[stage].image(path.back())) {
      path.push_back(next);
      extend(stage + 1);
      path.pop_back();
    }
  };
  for (const auto& row : base.rows()) {
    path.assign(1, base.symbol(0, row[0]));
    extend(0);
  }
  return Relation::create(std::move(vars), std::move(alphabets), tuples);
}

bool is_unrelated(const Relation& rel, const VarList& a, const VarList& b) {
  const BivariateView view = bivariate_view(rel, a, b);
  return view.pair_count == view.a_values.size() * view.b_values.size();
}

bool is_markov(const Relation& rel, const VarList& a, const VarList& b,
               const VarList& c) {
  const auto ia = rel.indices_of(a);
  const auto ib = rel.indices_of(b);
  const auto ic = rel.indices_of(c);
  require_disjoint({ia, ib, ic});

  std::map<Relation::Row, std::set<Relation::Row>> given_b;
  std::map<std::pair<Relation::Row, Relation::Row>, std::set<Relation::Row>> given_bc;
  for (const auto& row : rel.rows()) {
    auto pa = project_row(row, ia);
    auto pb = project_row(row, ib);
    given_b[pb].insert(pa);
    given_bc[{std::move(pb), project_row(row, ic)}].insert(std::move(pa));
  }
  return std::all_of(given_bc.begin(), given_bc.end(), [&](const auto& kv) {
    return kv.second == given_b.at(kv.first.first);
  });
}

Relation apply_attribute(const Relation& rel, const AttributeMap& g,
                         const std::string& name) {
  const auto idx = rel.indices_of(g.source());
  validate_variable_name(name);
  if (rel.has_variable(name)) {
    throw InputError("attribute variable '" + name + "' already exists");
  }
  VarList vars{name};
  vars.insert(vars.end(), rel.variables().begin(), rel.variables().end());
  std::set<Symbol> u_alphabet;
  for (const auto& kv : g.image()) u_alphabet.insert(kv.second);
  std::vector<std::vector<Symbol>> alphabets{{u_alphabet.begin(), u_alphabet.end()}};
  for (std::size_t v = 0; v < rel.arity(); ++v) alphabets.push_back(rel.alphabet(v));

  std::vector<SymbolTuple> tuples;
  tuples.reserve(rel.size());
  for (SymbolTuple t : rel.tuples()) {
    SymbolTuple x;
    for (std::size_t i : idx) x.push_back(t[i]);
    t.insert(t.begin(), g(join_tuple(x)));
    tuples.push_back(std::move(t));
  }
  return Relation::create(std::move(vars), std::move(alphabets), tuples);
}

Relation project(const Relation& rel, const VarList& vars) {
  const auto idx = rel.indices_of(vars);
  std::vector<std::vector<Symbol>> alphabets;
  for (std::size_t i : idx) alphabets.push_back(rel.alphabet(i));
  const TupleSet m = marginal(rel, vars);
  return Relation::create(vars, std::move(alphabets), {m.begin(), m.end()});
}

}  // namespace nsleak
