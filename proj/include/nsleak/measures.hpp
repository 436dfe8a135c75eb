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

// Non-stochastic entropy and leakage measures over a Relation: Hartley
// entropy, its worst-case conditional form, 0-mutual information,
// brute-force guessing leakage of an attribute, its supremum over all
// attributes (maximal leakage) and epsilon-identifiability.
//
// Every argument naming variables accepts a group; a group acts as the single
// composite variable formed by its coordinates.

#ifndef NSLEAK_MEASURES_HPP_
#define NSLEAK_MEASURES_HPP_

#include <cstddef>
#include <optional>

#include "nsleak/relation.hpp"
#include "nsleak/value.hpp"

namespace nsleak {

// Reserved prefix of the collapsed symbol produced by worst_attribute().
inline constexpr std::string_view kFreshSymbolPrefix = "__ustar";

LeakageValue h0(std::size_t cardinality);
LeakageValue h0(const TupleSet& range);
// H0 of the marginal range of `vars`.
LeakageValue h0(const Relation& rel, const VarList& vars);
// max over realizable y of log2 |[[target | given = y]]|.
LeakageValue h0_cond(const Relation& rel, const VarList& target,
                     const VarList& given);
// H0(a) - H0(a | b). Stored as log2(|[[a]]| / max_b |[[a|b]]|).
LeakageValue i0(const Relation& rel, const VarList& a, const VarList& b);

struct LeakageResult {
  LeakageValue value;
  // Observation attaining the smallest conditional range (ties: smallest y).
  SymbolTuple witness;
};

// L(target -> observed) = log2(|[[U]]| / min_y |[[U | Y = y]]|).
LeakageResult leakage(const Relation& rel, const VarList& target,
                      const VarList& observed);
// L(g(X) -> observed) without materializing U in the caller's relation.
LeakageResult attribute_leakage(const Relation& rel, const AttributeMap& g,
                                const VarList& observed);

// Closed form log2(|[[X]]| - min_y |[[X|y]]| + 1).
LeakageValue maximal_leakage(const Relation& rel, const VarList& x,
                             const VarList& y);

struct WorstAttribute {
  AttributeMap map;
  SymbolTuple y_star;
  Symbol fresh_symbol;
};

// Collapses [[X | Y = y*]] (y* the argmin of the conditional-range size) to a
// fresh symbol and leaves every other x unchanged. The induced attribute
// attains maximal_leakage().
WorstAttribute worst_attribute(const Relation& rel, const VarList& x,
                               const VarList& y);

// min_y |[[X|y]]| * 2^epsilon >= |[[X]]|, decided exactly.
bool is_identifiable(const Relation& rel, const VarList& x, const VarList& y,
                     const PrivacyBudget& budget);

struct MinEpsilon {
  LeakageValue value;
  // Set when value is zero: any epsilon > 0 qualifies, none equals the bound.
  bool open_bound = false;
};

MinEpsilon min_epsilon(const Relation& rel, const VarList& x, const VarList& y);

// Ceiling log2(n (1 - 2^-epsilon) + 1) on maximal leakage for an
// epsilon-identifiable mapping with |[[X]]| = n.
class IdentifiabilityBound {
 public:
  IdentifiabilityBound(BigInt size_x, PrivacyBudget budget);

  const BigInt& size_x() const { return size_x_; }
  const PrivacyBudget& budget() const { return budget_; }
  // Available when 2^epsilon is rational.
  std::optional<LeakageValue> exact() const;
  double approx() const;
  // Exact test of value <= ceiling.
  bool admits(const LeakageValue& value) const;

 private:
  BigInt size_x_;
  PrivacyBudget budget_;
};

IdentifiabilityBound identifiability_bound(std::size_t size_x,
                                           const PrivacyBudget& budget);

}  // namespace nsleak

#endif  // NSLEAK_MEASURES_HPP_
