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

#include "nsleak/stochastic.hpp"

#include <algorithm>
#include <utility>

#include "nsleak/errors.hpp"
#include "nsleak/measures.hpp"

namespace nsleak {
namespace {

SymbolTuple project(const Relation& rel, const Relation::Row& row,
                    const std::vector<std::size_t>& idx) {
  SymbolTuple out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(rel.symbol(i, row[i]));
  return out;
}

}  // namespace

RationalDist RationalDist::create(Relation rel,
                                  const std::map<SymbolTuple, Rational>& weights) {
  const auto& rows = rel.rows();
  std::vector<Rational> w(rows.size(), Rational(0));
  Rational total = 0;
  for (const auto& [tuple, p] : weights) {
    if (tuple.size() != rel.arity()) {
      throw InputError("weight key '" + join_tuple(tuple) + "' has wrong arity");
    }
    Relation::Row row(tuple.size());
    for (std::size_t v = 0; v < tuple.size(); ++v) {
      row[v] = rel.code_of(v, tuple[v]);
    }
    auto it = std::lower_bound(rows.begin(), rows.end(), row);
    if (it == rows.end() || *it != row) {
      throw InputError("weight key '" + join_tuple(tuple) +
                       "' is not a tuple of the relation");
    }
    if (p < 0) {
      throw InputError("weight of '" + join_tuple(tuple) + "' is negative");
    }
    w[static_cast<std::size_t>(it - rows.begin())] = p;
    total += p;
  }
  if (total != 1) {
    throw InputError("weights sum to " + rational_to_string(total) + ", not 1");
  }
  return {std::move(rel), std::move(w)};
}

RationalDist RationalDist::uniform(Relation rel) {
  const Rational p(1, rel.size());
  std::vector<Rational> w(rel.size(), p);
  return {std::move(rel), std::move(w)};
}

ProbabilityMap RationalDist::marginal(const VarList& vars) const {
  const auto idx = rel_.indices_of(vars);
  ProbabilityMap out;
  for (std::size_t r = 0; r < rel_.rows().size(); ++r) {
    out[join_tuple(project(rel_, rel_.rows()[r], idx))] += weights_[r];
  }
  return out;
}

ProbabilityMap RationalDist::conditional(const VarList& target, const VarList& given,
                                         const SymbolTuple& value) const {
  const auto it = rel_.indices_of(target);
  const auto ig = rel_.indices_of(given);
  if (value.size() != ig.size()) {
    throw InputError("conditioning value has wrong arity");
  }
  ProbabilityMap out;
  Rational mass = 0;
  for (std::size_t r = 0; r < rel_.rows().size(); ++r) {
    const auto& row = rel_.rows()[r];
    if (project(rel_, row, ig) != value) continue;
    out[join_tuple(project(rel_, row, it))] += weights_[r];
    mass += weights_[r];
  }
  if (mass == 0) {
    throw InputError("P{" + join_tuple(given) + " = " + join_tuple(value) +
                     "} is zero");
  }
  for (auto& kv : out) kv.second /= mass;
  return out;
}

StochasticChannel StochasticChannel::create(
    std::string source, std::string target,
    std::map<Symbol, std::map<Symbol, Rational>> rows) {
  if (source.empty() || target.empty() || source == target) {
    throw InputError("stochastic channel needs distinct, non-empty variable names");
  }
  if (rows.empty()) throw InputError("stochastic channel has no rows");
  for (const auto& [x, row] : rows) {
    validate_symbol(x);
    Rational sum = 0;
    for (const auto& [y, p] : row) {
      validate_symbol(y);
      if (p < 0) throw InputError("row '" + x + "' has a negative probability");
      sum += p;
    }
    if (sum != 1) {
      throw InputError("row '" + x + "' sums to " + rational_to_string(sum) +
                       ", not 1");
    }
  }
  StochasticChannel ch;
  ch.source_ = std::move(source);
  ch.target_ = std::move(target);
  ch.rows_ = std::move(rows);
  return ch;
}

std::vector<Symbol> StochasticChannel::source_alphabet() const {
  std::vector<Symbol> out;
  for (const auto& kv : rows_) out.push_back(kv.first);
  return out;
}

Rational guessing_entropy(const ProbabilityMap& probabilities) {
  std::vector<std::pair<Rational, Symbol>> order;
  order.reserve(probabilities.size());
  for (const auto& [u, p] : probabilities) order.emplace_back(p, u);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  Rational sum = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    sum += Rational(i + 1) * order[i].first;
  }
  return sum;
}

Rational guessing_entropy(const RationalDist& dist, const VarList& u) {
  return guessing_entropy(dist.marginal(u));
}

Rational cond_guessing_entropy(const RationalDist& dist, const VarList& u,
                               const VarList& y, const SymbolTuple& value) {
  return guessing_entropy(dist.conditional(u, y, value));
}

Rational stochastic_bf_leakage(const RationalDist& dist, const VarList& u,
                               const VarList& y) {
  Rational expected = 0;
  for (const auto& [key, p] : dist.marginal(y)) {
    if (p == 0) continue;
    expected += p * cond_guessing_entropy(dist, u, y, split_tuple(key));
  }
  return guessing_entropy(dist, u) - expected;
}

LeakageValue maximal_stochastic_leakage(const StochasticChannel& ch,
                                        const std::vector<Symbol>& support) {
  if (support.empty()) throw InputError("support of the prior must be non-empty");
  std::map<Symbol, Rational> column_max;
  for (const Symbol& x : support) {
    auto row = ch.rows().find(x);
    if (row == ch.rows().end()) {
      throw InputError("stochastic channel has no row for '" + x + "'");
    }
    for (const auto& [y, p] : row->second) {
      auto [it, inserted] = column_max.emplace(y, p);
      if (!inserted && p > it->second) it->second = p;
    }
  }
  Rational sum = 0;
  for (const auto& kv : column_max) sum += kv.second;
  return LeakageValue::of_ratio(sum);
}

StochasticChannel induced_channel(const RationalDist& dist, const std::string& x,
                                  const std::string& y) {
  std::map<Symbol, std::map<Symbol, Rational>> rows;
  for (const auto& [xs, p] : dist.marginal({x})) {
    if (p == 0) continue;
    auto& row = rows[xs];
    for (const auto& [ys, q] : dist.conditional({y}, {x}, {xs})) {
      if (q != 0) row.emplace(ys, q);
    }
  }
  return StochasticChannel::create(x, y, std::move(rows));
}

EntropyBoundReport entropy_bound_check(const Relation& rel, const VarList& x,
                                       const VarList& y) {
  EntropyBoundReport r{maximal_leakage(rel, x, y),
                       h0(rel, y) + h0_cond(rel, x, y), false};
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace nsleak
