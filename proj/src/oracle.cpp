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

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <set>

#include "nsleak/errors.hpp"
#include "nsleak/oracle.hpp"

namespace nsleak {
namespace {

void require_within_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw SearchCapError("|[[X]]| = " + std::to_string(n) +
                         " exceeds the partition cap of " + std::to_string(cap) +
                         " (B(" + std::to_string(n) + ") partitions); raise " +
                         "--max-partition-cap explicitly");
  }
}

Partition to_partition(const BivariateView& view,
                       const std::vector<std::uint32_t>& labels, std::size_t blocks) {
  std::vector<std::vector<Symbol>> groups(blocks);
  std::vector<Symbol> ground;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ground.push_back(join_tuple(view.a_values[i]));
    groups[labels[i]].push_back(ground.back());
  }
  return Partition::create(std::move(ground), std::move(groups));
}

// Number of distinct labels over one conditional range.
std::size_t blocks_meeting(const std::vector<std::uint32_t>& range,
                           const std::vector<std::uint32_t>& labels,
                           std::vector<std::uint32_t>& stamp, std::uint32_t& epoch) {
  ++epoch;
  std::size_t count = 0;
  for (std::uint32_t i : range) {
    if (stamp[labels[i]] != epoch) {
      stamp[labels[i]] = epoch;
      ++count;
    }
  }
  return count;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<Symbol> symbols_for(const std::string& var, std::size_t n) {
  std::vector<Symbol> out;
  const std::string stem = lower(var);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

PartitionIterator::PartitionIterator(std::size_t n)
    : labels_(n, 0), prefix_max_(n, 0), blocks_(n == 0 ? 0 : 1) {}

bool PartitionIterator::next() {
  const std::size_t n = labels_.size();
  for (std::size_t i = n; i-- > 1;) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      blocks_ = prefix_max_[n - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle; B(25) is the last value below 2^64.
  if (n > 25) throw InputError("Bell number B(" + std::to_string(n) + ") overflows");
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

BruteForceResult brute_force_max_leakage(const Relation& rel, const VarList& x,
                                         const VarList& y, std::size_t cap) {
  const BivariateView view = bivariate_view(rel, x, y);
  const std::size_t n = view.a_values.size();
  require_within_cap(n, cap);

  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::size_t best_blocks = 0, best_min = 1;
  std::vector<std::uint32_t> best_labels;
  std::uint64_t examined = 0;
  PartitionIterator it(n);
  do {
    ++examined;
    std::size_t min_meeting = n + 1;
    for (const auto& range : view.a_given_b) {
      min_meeting = std::min(min_meeting, blocks_meeting(range, it.labels(), stamp, epoch));
    }
    // blocks / min_meeting > best_blocks / best_min
    if (best_labels.empty() || it.block_count() * best_min > best_blocks * min_meeting) {
      best_blocks = it.block_count();
      best_min = min_meeting;
      best_labels = it.labels();
    }
  } while (it.next());

  return {LeakageValue(best_blocks, best_min), to_partition(view, best_labels, best_blocks),
          examined};
}

BruteForceResult brute_force_one_shot(const Relation& rel, const VarList& x,
                                      const VarList& y, std::size_t cap) {
  const BivariateView view = bivariate_view(rel, x, y);
  const std::size_t n = view.a_values.size();
  require_within_cap(n, cap);

  std::size_t best_blocks = 0;
  std::vector<std::uint32_t> best_labels;
  std::uint64_t examined = 0;
  PartitionIterator it(n);
  do {
    ++examined;
    const auto& labels = it.labels();
    const bool feasible =
        std::all_of(view.a_given_b.begin(), view.a_given_b.end(), [&](const auto& range) {
          return std::all_of(range.begin(), range.end(),
                             [&](std::uint32_t i) { return labels[i] == labels[range[0]]; });
        });
    if (feasible && it.block_count() > best_blocks) {
      best_blocks = it.block_count();
      best_labels = labels;
    }
  } while (it.next());

  return {h0(best_blocks), to_partition(view, best_labels, best_blocks), examined};
}

std::uint64_t Rng::bounded(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::bounded needs n > 0");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;  // accept draws <= limit
  std::uint64_t v;
  do {
    v = engine_();
  } while (v > limit);
  return v % n;
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(bounded(hi - lo + 1));
}

bool Rng::bernoulli(const Rational& p) {
  const BigInt& num = boost::multiprecision::numerator(p);
  const BigInt& den = boost::multiprecision::denominator(p);
  if (p < 0 || p > 1 || den > std::numeric_limits<std::uint64_t>::max()) {
    throw InputError("probability " + rational_to_string(p) + " is not usable");
  }
  return bounded(den.convert_to<std::uint64_t>()) < num;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

VarList default_variable_names(std::size_t count) {
  static const VarList kFirst{"X", "Y", "Z", "W"};
  VarList out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(count <= kFirst.size() ? kFirst[i] : "V" + std::to_string(i + 1));
  }
  return out;
}

Relation random_relation(const InstanceSpec& spec) {
  const std::size_t arity = spec.sizes.size();
  if (arity == 0) throw InputError("instance needs at least one variable size");
  if (spec.density <= 0 || spec.density > 1) {
    throw InputError("density must lie in (0, 1], got " + rational_to_string(spec.density));
  }
  std::size_t cells = 1;
  for (std::size_t s : spec.sizes) {
    if (s == 0) throw InputError("variable sizes must be at least 1");
    if (cells > (std::size_t{1} << 22) / s) {
      throw InputError("instance product space exceeds 2^22 cells");
    }
    cells *= s;
  }
  VarList names = spec.names.empty() ? default_variable_names(arity) : spec.names;
  if (names.size() != arity) throw InputError("one name per variable size is required");

  Rng rng(spec.seed);
  std::vector<std::vector<Symbol>> alphabets;
  for (std::size_t v = 0; v < arity; ++v) {
    alphabets.push_back(symbols_for(names[v], spec.sizes[v]));
  }
  std::vector<std::vector<std::size_t>> perms(arity);
  for (std::size_t v = 0; v < arity; ++v) {
    perms[v].resize(spec.sizes[v]);
    for (std::size_t i = 0; i < spec.sizes[v]; ++i) perms[v][i] = i;
    for (std::size_t i = spec.sizes[v]; i-- > 1;) {
      std::swap(perms[v][i], perms[v][rng.bounded(i + 1)]);
    }
  }
  std::set<std::vector<std::size_t>> chosen;
  const std::size_t widest = *std::max_element(spec.sizes.begin(), spec.sizes.end());
  for (std::size_t i = 0; i < widest; ++i) {
    std::vector<std::size_t> cell(arity);
    for (std::size_t v = 0; v < arity; ++v) cell[v] = perms[v][i % spec.sizes[v]];
    chosen.insert(std::move(cell));
  }
  std::vector<std::size_t> cell(arity, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    if (!chosen.count(cell) && rng.bernoulli(spec.density)) chosen.insert(cell);
    for (std::size_t v = arity; v-- > 0;) {  // odometer, last variable fastest
      if (++cell[v] < spec.sizes[v]) break;
      cell[v] = 0;
    }
  }
  std::vector<SymbolTuple> tuples;
  tuples.reserve(chosen.size());
  for (const auto& ch : chosen) {
    SymbolTuple t;
    for (std::size_t v = 0; v < arity; ++v) t.push_back(alphabets[v][ch[v]]);
    tuples.push_back(std::move(t));
  }
  return Relation::create(std::move(names), std::move(alphabets), tuples);
}

Relation random_markov_chain(const InstanceSpec& spec) {
  if (spec.sizes.size() != 4) {
    throw InputError("Markov chain instance needs sizes |U|, |X|, |Y|, |Z|");
  }
  for (std::size_t s : spec.sizes) {
    if (s == 0) throw InputError("variable sizes must be at least 1");
  }
  if (spec.density <= 0 || spec.density > 1) {
    throw InputError("density must lie in (0, 1]");
  }
  const VarList names = spec.names.empty() ? VarList{"U", "X", "Y", "Z"} : spec.names;
  if (names.size() != 4) throw InputError("Markov chain instance needs four names");
  Rng rng(spec.seed);

  auto random_channel = [&](const std::string& from, const std::vector<Symbol>& inputs,
                            const std::string& to, const std::vector<Symbol>& outputs) {
    std::map<Symbol, std::set<Symbol>> map;
    std::set<Symbol> uncovered(outputs.begin(), outputs.end());
    for (const Symbol& in : inputs) {
      auto& image = map[in];
      for (const Symbol& out : outputs) {
        if (rng.bernoulli(spec.density)) image.insert(out);
      }
      // An empty image takes a single output, preferring unreached ones.
      if (image.empty()) {
        const std::vector<Symbol> pool =
            uncovered.empty() ? outputs : std::vector<Symbol>(uncovered.begin(), uncovered.end());
        image.insert(pool[rng.bounded(pool.size())]);
      }
      for (const Symbol& out : image) uncovered.erase(out);
    }
    // Whatever is still unreached is attached to a random input, so the
    // declared alphabets are realized.
    for (const Symbol& out : uncovered) map[inputs[rng.bounded(inputs.size())]].insert(out);
    return Channel::create(from, to, std::move(map));
  };

  const auto us = symbols_for(names[0], spec.sizes[0]);
  const auto xs = symbols_for(names[1], spec.sizes[1]);
  const auto ys = symbols_for(names[2], spec.sizes[2]);
  const auto zs = symbols_for(names[3], spec.sizes[3]);
  const Channel k1 = random_channel(names[1], xs, names[2], ys);
  const Channel k2 = random_channel(names[2], ys, names[3], zs);
  const Relation base = Relation::create({names[1]}, {xs}, [&] {
    std::vector<SymbolTuple> t;
    for (const auto& x : xs) t.push_back({x});
    return t;
  }());
  // g is onto [[U]] whenever |U| <= |X|: a random set of |U| inputs takes
  // distinct values, the rest are free.
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = order.size(); i-- > 1;) std::swap(order[i], order[rng.bounded(i + 1)]);
  std::map<Symbol, Symbol> g;
  for (std::size_t i = 0; i < order.size(); ++i) {
    g.emplace(xs[order[i]], i < us.size() ? us[i] : us[rng.bounded(us.size())]);
  }
  return apply_attribute(compose_markov(base, k1, k2),
                         AttributeMap::create({names[1]}, std::move(g)), names[0]);
}

Relation unrelated_product(const std::vector<Relation>& factors) {
  if (factors.empty()) throw InputError("product needs at least one factor");
  VarList vars;
  std::vector<std::vector<Symbol>> alphabets;
  for (const Relation& f : factors) {
    for (std::size_t v = 0; v < f.arity(); ++v) {
      vars.push_back(f.variables()[v]);
      alphabets.push_back(f.alphabet(v));
    }
  }
  std::vector<SymbolTuple> tuples{SymbolTuple{}};
  for (const Relation& f : factors) {
    std::vector<SymbolTuple> grown;
    for (const auto& prefix : tuples) {
      for (const auto& t : f.tuples()) {
        SymbolTuple joined = prefix;
        joined.insert(joined.end(), t.begin(), t.end());
        grown.push_back(std::move(joined));
      }
    }
    tuples = std::move(grown);
  }
  return Relation::create(std::move(vars), std::move(alphabets), tuples);
}

void for_each_full_marginal_relation(std::size_t nx, std::size_t ny,
                                     const std::function<void(const Relation&)>& visit) {
  const std::size_t cells = nx * ny;
  if (nx == 0 || ny == 0 || cells > 24) {
    throw InputError("exhaustive enumeration supports 1 <= |X|*|Y| <= 24");
  }
  const auto xs = symbols_for("X", nx);
  const auto ys = symbols_for("Y", ny);
  const std::uint32_t full_rows = (1U << nx) - 1;
  const std::uint32_t full_cols = (1U << ny) - 1;
  for (std::uint32_t mask = 1; mask < (1U << cells); ++mask) {
    std::uint32_t rows = 0, cols = 0;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask >> c & 1U) {
        rows |= 1U << (c / ny);
        cols |= 1U << (c % ny);
      }
    }
    if (rows != full_rows || cols != full_cols) continue;
    std::vector<SymbolTuple> tuples;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask >> c & 1U) tuples.push_back({xs[c / ny], ys[c % ny]});
    }
    visit(Relation::create({"X", "Y"}, {xs, ys}, tuples));
  }
}

}  // namespace nsleak
