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

// Independent brute-force checks of the closed forms, seeded instance
// generators, and property campaigns over generated instances.
//
// The brute-force searches enumerate attributes g as set partitions of [[X]]:
// L(g(X) -> Y) depends on g only through its fibers, since |[[U]]| is the
// number of fibers and |[[U|y]]| the number of fibers meeting [[X|y]].

#ifndef NSLEAK_ORACLE_HPP_
#define NSLEAK_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nsleak/maximin.hpp"
#include "nsleak/relation.hpp"
#include "nsleak/value.hpp"

namespace nsleak {

inline constexpr std::size_t kDefaultPartitionCap = 10;

// Set partitions of {0..n-1} as restricted growth strings, in lexicographic
// order of the strings, starting from the single-block partition.
class PartitionIterator {
 public:
  explicit PartitionIterator(std::size_t n);

  // labels()[i] is the block of element i; block ids are 0..block_count()-1.
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::size_t block_count() const { return blocks_; }
  // Advances to the next partition; false once all have been produced.
  bool next();

 private:
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint32_t> prefix_max_;  // max label over labels_[0..i]
  std::size_t blocks_ = 0;
};

std::uint64_t bell_number(std::size_t n);

struct BruteForceResult {
  LeakageValue value;
  Partition witness;
  std::uint64_t partitions_examined = 0;
};

// max over partitions P of [[X]] of log2(|P| / min_y #{blocks meeting [[X|y]]}).
BruteForceResult brute_force_max_leakage(const Relation& rel, const VarList& x,
                                         const VarList& y,
                                         std::size_t cap = kDefaultPartitionCap);
// max of log2 |P| over partitions in which every [[X|y]] lies in one block.
BruteForceResult brute_force_one_shot(const Relation& rel, const VarList& x,
                                      const VarList& y,
                                      std::size_t cap = kDefaultPartitionCap);

// Portable generator: std::mt19937_64 (output fixed by the standard) with
// bounded draws by rejection, so seeded instances match across platforms.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64-rejection-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform on [0, n), n > 0.
  std::uint64_t bounded(std::uint64_t n);
  // Uniform on [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  // True with probability p in [0, 1]; p's denominator must fit 64 bits.
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

// Independent per-trial seed (splitmix64 of seed and trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// X, Y, Z, W for up to four variables, V1..Vn beyond.
VarList default_variable_names(std::size_t count);

struct InstanceSpec {
  std::vector<std::size_t> sizes;
  Rational density{1};
  std::uint64_t seed = 0;
  // Optional; default_variable_names() when empty. Symbols are the lower-cased
  // variable name followed by 1..size.
  VarList names;
};

// Every declared symbol is realized: one tuple per index of the largest
// alphabet is seeded through random permutations, then every remaining cell
// of the product is included with probability `density`.
Relation random_relation(const InstanceSpec& spec);

// Relation over (U, X, Y, Z) forming the chain U - X - Y - Z. spec.sizes
// holds |U|, |X|, |Y|, |Z|; spec.density controls the channel image sizes.
// X, Y and Z realize their full alphabets; U does when |U| <= |X|.
Relation random_markov_chain(const InstanceSpec& spec);

// Joint range of unrelated factors: the Cartesian product of their tuple
// sets over the concatenated variables (names must be distinct).
Relation unrelated_product(const std::vector<Relation>& factors);

// Calls visit on every relation over (X, Y) with [[X]] = {x1..xnx} and
// [[Y]] = {y1..yny} (all marginals full).
void for_each_full_marginal_relation(std::size_t nx, std::size_t ny,
                                     const std::function<void(const Relation&)>& visit);

struct Counterexample {
  std::size_t trial = 0;
  std::string detail;
  Relation relation;
};

struct CampaignReport {
  std::string name;
  std::string property;  // the statement being checked
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool passed() const { return violations == 0; }
};

struct CampaignOptions {
  std::size_t partition_cap = kDefaultPartitionCap;
  std::size_t max_counterexamples = 10;
};

// dpi, bounding, properties, closed-form, one-shot, identifiability,
// prop6 (alias entropy-bound), additivity, maximin-symmetry.
const std::vector<std::string>& campaign_names();

// Throws InputError on an unknown name. Violations are reported, not thrown.
CampaignReport property_campaign(std::string_view name, std::size_t trials,
                                 std::uint64_t seed,
                                 const CampaignOptions& options = {});

}  // namespace nsleak

#endif  // NSLEAK_ORACLE_HPP_
