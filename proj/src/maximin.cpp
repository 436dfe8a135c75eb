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

#include "nsleak/maximin.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "nsleak/errors.hpp"
#include "parallel.hpp"
#include "union_find.hpp"

namespace nsleak {
namespace {

std::vector<Symbol> subset_symbols(const std::vector<Symbol>& alphabet,
                                   std::uint64_t mask) {
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (mask >> i & 1U) out.push_back(alphabet[i]);
  }
  return out;
}

struct SubsetScore {
  std::uint64_t mask = 0;
  std::size_t components = 0;
  std::size_t max_leakage_arg = 0;
};

// Strictly better witness: more components, then fewer symbols, then the
// lexicographically smaller symbol list.
bool better_witness(const SubsetScore& a, const SubsetScore& b,
                    const std::vector<Symbol>& alphabet) {
  if (a.components != b.components) return a.components > b.components;
  const int ca = std::popcount(a.mask);
  const int cb = std::popcount(b.mask);
  if (ca != cb) return ca < cb;
  return subset_symbols(alphabet, a.mask) < subset_symbols(alphabet, b.mask);
}

}  // namespace

Partition Partition::create(std::vector<Symbol> ground,
                            std::vector<std::vector<Symbol>> blocks) {
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw InputError("partition ground set has repeated symbols");
  }
  std::vector<Symbol> covered;
  for (auto& block : blocks) {
    if (block.empty()) throw InputError("partition blocks must be non-empty");
    std::sort(block.begin(), block.end());
    covered.insert(covered.end(), block.begin(), block.end());
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
    throw InputError("partition blocks must be disjoint");
  }
  if (covered != ground) throw InputError("partition blocks must cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  Partition p;
  p.ground_ = std::move(ground);
  p.blocks_ = std::move(blocks);
  return p;
}

std::size_t Partition::block_of(const Symbol& x) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), x)) return b;
  }
  throw InputError("symbol '" + x + "' is not in the partition's ground set");
}

Partition overlap_partition(const Relation& rel, const VarList& x,
                            const VarList& y) {
  const BivariateView view = bivariate_view(rel, x, y);
  detail::UnionFind uf(view.a_values.size());
  for (const auto& range : view.a_given_b) {
    for (std::size_t k = 1; k < range.size(); ++k) uf.unite(range[0], range[k]);
  }
  std::map<std::size_t, std::vector<Symbol>> groups;
  std::vector<Symbol> ground;
  for (std::size_t i = 0; i < view.a_values.size(); ++i) {
    ground.push_back(join_tuple(view.a_values[i]));
    groups[uf.find(i)].push_back(ground.back());
  }
  std::vector<std::vector<Symbol>> blocks;
  blocks.reserve(groups.size());
  for (auto& kv : groups) blocks.push_back(std::move(kv.second));
  return Partition::create(std::move(ground), std::move(blocks));
}

LeakageValue maximin_info(const Relation& rel, const VarList& x, const VarList& y) {
  return h0(overlap_partition(rel, x, y).size());
}

AttributeMap common_variable(const Relation& rel, const VarList& x,
                             const VarList& y) {
  const Partition p = overlap_partition(rel, x, y);
  std::map<Symbol, Symbol> image;
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    for (const Symbol& s : p.blocks()[b]) image.emplace(s, "b" + std::to_string(b));
  }
  return AttributeMap::create(x, std::move(image));
}

bool maximin_symmetry_check(const Relation& rel, const VarList& x,
                            const VarList& y) {
  return overlap_partition(rel, x, y).size() == overlap_partition(rel, y, x).size();
}

LeakageValue one_shot_supremum(const Relation& rel, const VarList& x,
                               const VarList& y) {
  return maximin_info(rel, x, y);
}

CapacityBound zero_error_capacity_bound(const std::vector<Symbol>& alphabet_in,
                                        const Channel& k,
                                        std::size_t max_alphabet,
                                        const std::optional<PrivacyBudget>& budget) {
  std::vector<Symbol> alphabet = alphabet_in;
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet.empty()) throw InputError("capacity search needs a non-empty alphabet");
  if (alphabet.size() > max_alphabet || alphabet.size() > 62) {
    throw SearchCapError("alphabet has " + std::to_string(alphabet.size()) +
                         " symbols, above the subset-search cap of " +
                         std::to_string(max_alphabet) +
                         "; raise the cap explicitly (--max-alphabet) to search " +
                         "2^n subsets");
  }

  // For every output symbol, the inputs that can produce it.
  std::map<Symbol, std::uint64_t> producers;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    for (const Symbol& y : k.image(alphabet[i])) producers[y] |= std::uint64_t{1} << i;
  }
  std::vector<std::uint64_t> masks;
  for (const auto& kv : producers) masks.push_back(kv.second);

  const std::size_t n = alphabet.size();
  const std::uint64_t total = (std::uint64_t{1} << n) - 1;
  const std::size_t strata = std::min<std::uint64_t>(total, 256);
  std::vector<SubsetScore> best(strata);
  std::vector<std::size_t> best_leakage(strata, 0);

  detail::parallel_for(strata, [&](std::size_t s) {
    const std::uint64_t lo = 1 + total * s / strata;
    const std::uint64_t hi = 1 + total * (s + 1) / strata;
    for (std::uint64_t subset = lo; subset < hi; ++subset) {
      detail::UnionFind uf(n);
      std::size_t min_range = n + 1;
      for (std::uint64_t m : masks) {
        const std::uint64_t range = m & subset;
        if (range == 0) continue;
        min_range = std::min<std::size_t>(min_range, std::popcount(range));
        const int root = std::countr_zero(range);
        for (std::uint64_t rest = range & (range - 1); rest != 0; rest &= rest - 1) {
          uf.unite(root, std::countr_zero(rest));
        }
      }
      const std::size_t size = std::popcount(subset);
      const SubsetScore score{subset, uf.set_count() - (n - size),
                              size - min_range + 1};
      if (best[s].mask == 0 || better_witness(score, best[s], alphabet)) {
        best[s] = score;
      }
      best_leakage[s] = std::max(best_leakage[s], score.max_leakage_arg);
    }
  });

  SubsetScore winner = best[0];
  std::size_t leakage_arg = 0;
  for (std::size_t s = 0; s < strata; ++s) {
    if (best[s].mask != 0 && better_witness(best[s], winner, alphabet)) winner = best[s];
    leakage_arg = std::max(leakage_arg, best_leakage[s]);
  }

  CapacityBound out;
  out.value = h0(winner.components);
  out.witness = subset_symbols(alphabet, winner.mask);
  out.max_leakage_over_subsets = LeakageValue::of_cardinality(leakage_arg);
  out.below_max_leakage = out.value <= out.max_leakage_over_subsets;
  out.subsets_searched = static_cast<std::size_t>(total);
  if (budget) {
    const Relation full = relation_from_channel(k, alphabet);
    CapacityBound::IdentifiabilityCheck check{
        is_identifiable(full, {k.source()}, {k.target()}, *budget),
        identifiability_bound(alphabet.size(), *budget), false};
    check.within_ceiling = check.ceiling.admits(out.value);
    out.identifiability = std::move(check);
  }
  return out;
}

}  // namespace nsleak
