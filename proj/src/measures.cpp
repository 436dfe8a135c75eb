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

#include "nsleak/measures.hpp"

#include <algorithm>
#include <cmath>

#include "nsleak/errors.hpp"

namespace nsleak {
namespace {

struct Extremes {
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  std::size_t argmin = 0;
};

// Smallest and largest conditional range of A over the realizable b; the
// argmin is the first (lexicographically smallest) b attaining the minimum.
Extremes conditional_extremes(const BivariateView& view) {
  Extremes e;
  e.min_size = view.a_values.size() + 1;
  for (std::size_t j = 0; j < view.a_given_b.size(); ++j) {
    const std::size_t n = view.a_given_b[j].size();
    if (n < e.min_size) {
      e.min_size = n;
      e.argmin = j;
    }
    e.max_size = std::max(e.max_size, n);
  }
  return e;
}

std::string fresh_variable_name(const Relation& rel) {
  std::string name = "U";
  for (int i = 1; rel.has_variable(name); ++i) name = "U" + std::to_string(i);
  return name;
}

Symbol identity_label(const SymbolTuple& x) {
  if (x.size() == 1) return x[0];
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += x[i];
  }
  return out + ")";
}

}  // namespace

LeakageValue h0(std::size_t cardinality) {
  if (cardinality == 0) throw InputError("H0 of an empty range is undefined");
  return LeakageValue::of_cardinality(cardinality);
}

LeakageValue h0(const TupleSet& range) { return h0(range.size()); }

LeakageValue h0(const Relation& rel, const VarList& vars) {
  return h0(marginal(rel, vars));
}

LeakageValue h0_cond(const Relation& rel, const VarList& target,
                     const VarList& given) {
  return h0(conditional_extremes(bivariate_view(rel, target, given)).max_size);
}

LeakageValue i0(const Relation& rel, const VarList& a, const VarList& b) {
  const BivariateView view = bivariate_view(rel, a, b);
  return {view.a_values.size(), conditional_extremes(view).max_size};
}

LeakageResult leakage(const Relation& rel, const VarList& target,
                      const VarList& observed) {
  const BivariateView view = bivariate_view(rel, target, observed);
  const Extremes e = conditional_extremes(view);
  return {LeakageValue(view.a_values.size(), e.min_size),
          view.b_values[e.argmin]};
}

LeakageResult attribute_leakage(const Relation& rel, const AttributeMap& g,
                                const VarList& observed) {
  const std::string name = fresh_variable_name(rel);
  return leakage(apply_attribute(rel, g, name), {name}, observed);
}

LeakageValue maximal_leakage(const Relation& rel, const VarList& x,
                             const VarList& y) {
  const BivariateView view = bivariate_view(rel, x, y);
  const Extremes e = conditional_extremes(view);
  return LeakageValue::of_cardinality(view.a_values.size() - e.min_size + 1);
}

WorstAttribute worst_attribute(const Relation& rel, const VarList& x,
                               const VarList& y) {
  const BivariateView view = bivariate_view(rel, x, y);
  const Extremes e = conditional_extremes(view);
  const auto& collapsed = view.a_given_b[e.argmin];

  std::vector<bool> in_x1(view.a_values.size(), false);
  for (std::uint32_t i : collapsed) in_x1[i] = true;
  std::set<Symbol> kept;
  for (std::size_t i = 0; i < view.a_values.size(); ++i) {
    if (!in_x1[i]) kept.insert(identity_label(view.a_values[i]));
  }
  Symbol fresh(kFreshSymbolPrefix);
  for (int k = 1; kept.count(fresh) != 0; ++k) {
    fresh = std::string(kFreshSymbolPrefix) + std::to_string(k);
  }

  std::map<Symbol, Symbol> image;
  for (std::size_t i = 0; i < view.a_values.size(); ++i) {
    image.emplace(join_tuple(view.a_values[i]),
                  in_x1[i] ? fresh : identity_label(view.a_values[i]));
  }
  return {AttributeMap::create(x, std::move(image)), view.b_values[e.argmin],
          fresh};
}

bool is_identifiable(const Relation& rel, const VarList& x, const VarList& y,
                     const PrivacyBudget& budget) {
  const BivariateView view = bivariate_view(rel, x, y);
  const Extremes e = conditional_extremes(view);
  return budget.two_pow_at_least(Rational(view.a_values.size(), e.min_size));
}

MinEpsilon min_epsilon(const Relation& rel, const VarList& x, const VarList& y) {
  const LeakageValue v = leakage(rel, x, y).value;
  return {v, v.is_zero()};
}

IdentifiabilityBound::IdentifiabilityBound(BigInt size_x, PrivacyBudget budget)
    : size_x_(std::move(size_x)), budget_(std::move(budget)) {
  if (size_x_ < 1) throw InputError("identifiability bound needs |[[X]]| >= 1");
}

std::optional<LeakageValue> IdentifiabilityBound::exact() const {
  const auto t = budget_.two_pow();
  if (!t) return std::nullopt;
  const Rational arg = Rational(size_x_) * (1 - 1 / *t) + 1;
  return LeakageValue::of_ratio(arg);
}

double IdentifiabilityBound::approx() const {
  const double n = size_x_.convert_to<double>();
  return std::log2(n * (1.0 - std::exp2(-budget_.approx())) + 1.0);
}

bool IdentifiabilityBound::admits(const LeakageValue& value) const {
  // r <= n (1 - 2^-eps) + 1  <=>  2^-eps <= s with s = (n + 1 - r) / n.
  const Rational n(size_x_);
  const Rational s = (n + 1 - value.argument()) / n;
  if (s <= 0) return false;
  if (s >= 1) return true;
  return budget_.two_pow_at_least(1 / s);
}

IdentifiabilityBound identifiability_bound(std::size_t size_x,
                                           const PrivacyBudget& budget) {
  return {BigInt(size_x), budget};
}

}  // namespace nsleak
