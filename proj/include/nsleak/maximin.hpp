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

// Overlap partitions, maximin information and the zero-error capacity bound.

#ifndef NSLEAK_MAXIMIN_HPP_
#define NSLEAK_MAXIMIN_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "nsleak/measures.hpp"
#include "nsleak/relation.hpp"
#include "nsleak/value.hpp"

namespace nsleak {

// Partition of a finite symbol set. Blocks are sorted internally and ordered
// by their smallest element.
class Partition {
 public:
  // Throws InputError unless blocks are non-empty, disjoint and cover ground.
  static Partition create(std::vector<Symbol> ground,
                          std::vector<std::vector<Symbol>> blocks);

  const std::vector<Symbol>& ground() const { return ground_; }
  const std::vector<std::vector<Symbol>>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  // Index of the block holding x; throws InputError if x is not in ground.
  std::size_t block_of(const Symbol& x) const;

  friend bool operator==(const Partition& a, const Partition& b) = default;

 private:
  Partition() = default;
  std::vector<Symbol> ground_;
  std::vector<std::vector<Symbol>> blocks_;
};

// Connected components of [[X]] under "shares a conditional range [[X|y]]".
// Symbols of a composite X are join_tuple() strings.
Partition overlap_partition(const Relation& rel, const VarList& x,
                            const VarList& y);

// I*(X;Y) = log2 of the number of overlap-partition blocks.
LeakageValue maximin_info(const Relation& rel, const VarList& x, const VarList& y);

// x -> "b<k>", k the index of x's overlap block.
AttributeMap common_variable(const Relation& rel, const VarList& x,
                             const VarList& y);

// Compares the block counts of [[X|Y]]* and [[Y|X]]*.
bool maximin_symmetry_check(const Relation& rel, const VarList& x,
                            const VarList& y);

// Largest L(U -> Y) over attributes U = g(X) that Y always determines; this
// equals maximin_info() and is attained by common_variable().
LeakageValue one_shot_supremum(const Relation& rel, const VarList& x,
                               const VarList& y);

inline constexpr std::size_t kDefaultMaxAlphabet = 16;

struct CapacityBound {
  // max over non-empty S of I*(X;Y) with [[X]] = S.
  LeakageValue value;
  // Maximizing S: fewest symbols, then lexicographically smallest.
  std::vector<Symbol> witness;
  // max over S of L*(X -> Y), which must dominate value.
  LeakageValue max_leakage_over_subsets;
  bool below_max_leakage = false;
  std::size_t subsets_searched = 0;

  // Present when a budget was supplied.
  struct IdentifiabilityCheck {
    bool identifiable = false;  // full-alphabet channel is eps-identifiable
    IdentifiabilityBound ceiling;
    bool within_ceiling = false;
  };
  std::optional<IdentifiabilityCheck> identifiability;
};

// Exhaustive search over the non-empty subsets of `alphabet`. Throws
// SearchCapError above max_alphabet symbols, InputError if k is not defined
// on every symbol of the alphabet.
CapacityBound zero_error_capacity_bound(
    const std::vector<Symbol>& alphabet, const Channel& k,
    std::size_t max_alphabet = kDefaultMaxAlphabet,
    const std::optional<PrivacyBudget>& budget = std::nullopt);

}  // namespace nsleak

#endif  // NSLEAK_MAXIMIN_HPP_
