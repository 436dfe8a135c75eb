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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nsleak/maximin.hpp"
#include "nsleak/measures.hpp"
#include "nsleak/oracle.hpp"
#include "nsleak/stochastic.hpp"

using namespace nsleak;

namespace {

constexpr std::uint64_t kSeed = 20261018;
const VarList X{"X"}, Y{"Y"};

struct Outcome {
  bool pass = true;
  std::string detail;
  double limit_seconds = 0;  // 0: no runtime bound
};

// Tracks violations and keeps the first one for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (ok) return;
    if (violations_++ == 0) first_ = describe();
  }
  std::size_t checks() const { return checks_; }
  std::size_t violations() const { return violations_; }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = violations_ == 0;
    o.detail = summary + ", " + std::to_string(checks_) + " checks, " +
               std::to_string(violations_) + " violations";
    if (!o.pass) o.detail += "; first: " + first_;
    return o;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t violations_ = 0;
  std::string first_;
};

std::string show(const Relation& rel) {
  std::string s = "{";
  for (const auto& t : rel.tuples()) {
    s += "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i];
    s += ")";
  }
  return s + "}";
}

Relation cor1() {
  return Relation::from_tuples({"X", "Y"}, {{"x1", "y1"}, {"x2", "y1"}, {"x3", "y2"}});
}

Relation identity(std::size_t n) {
  std::vector<SymbolTuple> t;
  for (std::size_t i = 1; i <= n; ++i) t.push_back({"x" + std::to_string(i), "x" + std::to_string(i)});
  return Relation::from_tuples({"X", "Y"}, t);
}

// The shared instance family: every full-marginal relation with |X| <= 4 and
// |Y| <= 3, followed by 1000 seeded random relations with |X| <= 8.
const std::vector<Relation>& instances() {
  static const std::vector<Relation> all = [] {
    std::vector<Relation> out;
    for (std::size_t nx = 1; nx <= 4; ++nx) {
      for (std::size_t ny = 1; ny <= 3; ++ny) {
        for_each_full_marginal_relation(nx, ny, [&](const Relation& r) { out.push_back(r); });
      }
    }
    const Rational densities[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    for (std::uint64_t t = 0; t < 1000; ++t) {
      Rng rng(trial_seed(kSeed, t));
      InstanceSpec spec;
      spec.sizes = {rng.between(1, 8), rng.between(1, 6)};
      spec.density = densities[rng.bounded(3)];
      spec.seed = rng.next();
      out.push_back(random_relation(spec));
    }
    return out;
  }();
  return all;
}

Outcome two_block_instance() {
  const auto start = std::chrono::steady_clock::now();
  const Relation rel = cor1();
  const LeakageValue xy = maximal_leakage(rel, X, Y);
  const LeakageValue yx = maximal_leakage(rel, Y, X);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.limit_seconds = 1e-3;
  o.pass = xy.argument() == 3 && yx.argument() == 2;
  char took[48];
  std::snprintf(took, sizeof took, "%.1f us", elapsed * 1e6);
  o.detail = "L*(X->Y) = " + xy.exact() + ", L*(Y->X) = " + yx.exact() + ", computed in " + took;
  if (elapsed >= o.limit_seconds) o.pass = false;
  return o;
}

Outcome closed_form_vs_oracle() {
  Tally tally;
  for (const Relation& rel : instances()) {
    const LeakageValue oracle = brute_force_max_leakage(rel, X, Y).value;
    const LeakageValue closed = maximal_leakage(rel, X, Y);
    tally.check(oracle == closed, [&] {
      return show(rel) + ": oracle " + oracle.exact() + " vs closed form " + closed.exact();
    });
  }
  Outcome o = tally.outcome(std::to_string(instances().size()) + " instances");
  o.limit_seconds = 60;
  return o;
}

Outcome maximin_vs_oracle() {
  Tally tally;
  for (const Relation& rel : instances()) {
    const LeakageValue oracle = brute_force_one_shot(rel, X, Y).value;
    const LeakageValue info = maximin_info(rel, X, Y);
    tally.check(oracle == info, [&] {
      return show(rel) + ": oracle " + oracle.exact() + " vs maximin " + info.exact();
    });
    tally.check(info <= maximal_leakage(rel, X, Y),
                [&] { return show(rel) + ": maximin above maximal leakage"; });
  }
  Outcome o = tally.outcome(std::to_string(instances().size()) + " instances");
  o.limit_seconds = 60;
  return o;
}

Outcome data_processing() {
  Tally tally;
  const Rational densities[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng(trial_seed(kSeed + 4, t));
    InstanceSpec spec;
    spec.sizes = {rng.between(1, 4), rng.between(1, 6), rng.between(1, 6), rng.between(1, 6)};
    spec.density = densities[rng.bounded(3)];
    spec.seed = rng.next();
    const Relation chain = random_markov_chain(spec);
    const LeakageValue uz = leakage(chain, {"U"}, {"Z"}).value;
    const LeakageValue uy = leakage(chain, {"U"}, {"Y"}).value;
    tally.check(uz <= uy, [&] { return show(chain) + ": L(U->Z) " + uz.exact() + " > " + uy.exact(); });
    const LeakageValue xz = maximal_leakage(chain, {"X"}, {"Z"});
    const LeakageValue xy = maximal_leakage(chain, {"X"}, {"Y"});
    tally.check(xz <= xy, [&] { return show(chain) + ": L*(X->Z) " + xz.exact() + " > " + xy.exact(); });
  }
  return tally.outcome("1000 chains U-X-Y-Z");
}

Outcome basic_properties() {
  Tally tally;
  for (const Relation& rel : instances()) {
    const LeakageValue l = leakage(rel, X, Y).value;
    const LeakageValue star = maximal_leakage(rel, X, Y);
    tally.check(l.is_nonnegative() && star.is_nonnegative(),
                [&] { return show(rel) + ": negative leakage"; });
  }
  std::size_t small = 0;
  for (std::size_t nx = 1; nx <= 4; ++nx) {
    for (std::size_t ny = 1; ny <= 3; ++ny) {
      for_each_full_marginal_relation(nx, ny, [&](const Relation& rel) {
        ++small;
        const bool unrelated = is_unrelated(rel, X, Y);
        const bool zero = maximal_leakage(rel, X, Y).is_zero();
        tally.check(unrelated == zero, [&] {
          return show(rel) + ": unrelated=" + std::to_string(unrelated) +
                 " but L* zero=" + std::to_string(zero);
        });
      });
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    tally.check(maximal_leakage(identity(n), X, Y) == h0(n),
                [&] { return "identity on " + std::to_string(n) + " symbols"; });
  }
  return tally.outcome("non-negativity on the shared family, zero iff unrelated on " +
                       std::to_string(small) + " small relations, Y = X for n = 1..8");
}

Outcome additivity() {
  Tally tally;
  std::size_t superadditive = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(trial_seed(kSeed + 6, t));
    const std::size_t n = rng.between(2, 3);
    std::vector<Relation> parts;
    VarList xs, ys;
    for (std::size_t i = 1; i <= n; ++i) {
      InstanceSpec spec;
      spec.sizes = {rng.between(1, 3), rng.between(1, 3)};
      spec.density = Rational(1, 2);
      spec.seed = rng.next();
      spec.names = {"X" + std::to_string(i), "Y" + std::to_string(i)};
      parts.push_back(random_relation(spec));
      xs.push_back(spec.names[0]);
      ys.push_back(spec.names[1]);
    }
    const Relation product = unrelated_product(parts);
    LeakageValue sum, sum_star;
    for (std::size_t i = 0; i < n; ++i) {
      sum = sum + leakage(parts[i], {xs[i]}, {ys[i]}).value;
      sum_star = sum_star + maximal_leakage(parts[i], {xs[i]}, {ys[i]});
    }
    const LeakageValue joint = maximal_leakage(product, xs, ys);
    if (sum_star <= joint) ++superadditive;
    tally.check(joint == sum, [&] {
      std::string factors;
      for (const auto& f : parts) factors += (factors.empty() ? "" : " x ") + show(f);
      return factors + ": L*(product) = " + joint.exact() + ", sum of factor L = " +
             sum.exact() + ", sum of factor L* = " + sum_star.exact();
    });
  }
  Outcome o = tally.outcome("200 products of 2 or 3 factors");
  o.detail += "; L*(product) >= sum of factor L* in " + std::to_string(superadditive) + "/200";
  return o;
}

Outcome ceiling_and_entropy_bound() {
  Tally tally;
  for (const Relation& rel : instances()) {
    const LeakageValue star = maximal_leakage(rel, X, Y);
    const MinEpsilon eps = min_epsilon(rel, X, Y);
    const std::size_t nx = marginal(rel, X).size();
    if (eps.open_bound) {
      tally.check(star.is_zero(), [&] { return show(rel) + ": unrelated yet leaks"; });
    } else {
      const PrivacyBudget budget = PrivacyBudget::log2_ratio(eps.value.num(), eps.value.den());
      tally.check(is_identifiable(rel, X, Y, budget),
                  [&] { return show(rel) + ": not identifiable at its minimal budget"; });
      const IdentifiabilityBound bound = identifiability_bound(nx, budget);
      const auto exact = bound.exact();
      tally.check(bound.admits(star) && exact && *exact == star, [&] {
        return show(rel) + ": L* " + star.exact() + " vs ceiling " +
               (exact ? exact->exact() : std::to_string(bound.approx()));
      });
      // A looser budget keeps the bound valid.
      const PrivacyBudget wider =
          PrivacyBudget::log2_ratio(eps.value.num() * 3, eps.value.den() * 2);
      tally.check(identifiability_bound(nx, wider).admits(star),
                  [&] { return show(rel) + ": bound fails at a wider budget"; });
    }
    const EntropyBoundReport e = entropy_bound_check(rel, X, Y);
    tally.check(e.holds, [&] {
      return show(rel) + ": L* " + e.lhs.exact() + " > H0(Y) + H0(X|Y) " + e.rhs.exact();
    });
  }
  return tally.outcome(std::to_string(instances().size()) + " instances");
}

Outcome maximin_machinery() {
  Tally tally;
  for (const Relation& rel : instances()) {
    const Partition p = overlap_partition(rel, X, Y);
    // Valid: re-validating through the constructor, and every conditional
    // range inside one block.
    tally.check(Partition::create(p.ground(), p.blocks()) == p,
                [&] { return show(rel) + ": overlap partition not canonical"; });
    for (const auto& y : marginal(rel, Y)) {
      std::set<std::size_t> blocks;
      for (const auto& x : conditional(rel, X, {{"Y", y[0]}})) blocks.insert(p.block_of(x[0]));
      tally.check(blocks.size() == 1, [&] { return show(rel) + ": range split across blocks"; });
    }
    // Unique: it is the finest feasible partition found by exhaustive search.
    tally.check(brute_force_one_shot(rel, X, Y).witness == p,
                [&] { return show(rel) + ": exhaustive witness differs from overlap partition"; });
    tally.check(overlap_partition(rel, Y, X).size() == p.size(),
                [&] { return show(rel) + ": |[[X|Y]]*| != |[[Y|X]]*|"; });
    const Relation with_u = apply_attribute(rel, common_variable(rel, X, Y), "U");
    for (const auto& y : marginal(rel, Y)) {
      tally.check(conditional(with_u, {"U"}, {{"Y", y[0]}}).size() == 1,
                  [&] { return show(rel) + ": common variable not fixed by y = " + y[0]; });
    }
  }
  return tally.outcome(std::to_string(instances().size()) + " instances");
}

Outcome stochastic_suite() {
  Tally tally;
  for (std::size_t n = 1; n <= 16; ++n) {
    const Rational g = guessing_entropy(RationalDist::uniform(identity(n)), X);
    tally.check(g == Rational(n + 1, 2), [&] {
      return "uniform on " + std::to_string(n) + ": " + rational_to_string(g);
    });
  }
  const Rational bf = stochastic_bf_leakage(RationalDist::uniform(cor1()), X, Y);
  tally.check(bf == Rational(2, 3), [&] { return "uniform two-block instance: " + rational_to_string(bf); });

  const StochasticChannel bsc = StochasticChannel::create(
      "X", "Y",
      {{"x1", {{"y1", Rational(3, 4)}, {"y2", Rational(1, 4)}}},
       {"x2", {{"y1", Rational(1, 4)}, {"y2", Rational(3, 4)}}}});
  const LeakageValue sibson = maximal_stochastic_leakage(bsc, {"x1", "x2"});
  tally.check(sibson == LeakageValue(3, 2), [&] { return "symmetric rows: " + sibson.exact(); });

  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng(trial_seed(kSeed + 9, t));
    InstanceSpec spec;
    spec.sizes = {rng.between(1, 5), rng.between(1, 4)};
    spec.density = Rational(1, 2);
    spec.seed = rng.next();
    const Relation rel = random_relation(spec);
    std::map<SymbolTuple, Rational> w;
    Rational total = 0;
    for (const auto& tuple : rel.tuples()) {
      const Rational v(static_cast<long long>(rng.between(0, 6)));
      w[tuple] = v;
      total += v;
    }
    if (total == 0) w.begin()->second = total = 1;
    for (auto& [tuple, v] : w) v /= total;
    const Rational l = stochastic_bf_leakage(RationalDist::create(rel, w), X, Y);
    tally.check(l >= 0, [&] { return show(rel) + ": " + rational_to_string(l); });
  }
  return tally.outcome("guessing entropy n = 1..16, fixed instances, 1000 random distributions");
}

Outcome capacity() {
  Tally tally;
  const Channel k = channel_from_relation(cor1(), "X", "Y");
  const CapacityBound c = zero_error_capacity_bound(k.source_alphabet(), k);
  tally.check(c.value == LeakageValue(2, 1) && c.witness == std::vector<Symbol>{"x1", "x3"}, [&] {
    std::string w;
    for (const auto& s : c.witness) w += s + " ";
    return "two-block channel: " + c.value.exact() + " witness " + w;
  });

  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(trial_seed(kSeed + 10, t));
    InstanceSpec spec;
    spec.sizes = {rng.between(1, 8), rng.between(1, 6)};
    spec.density = Rational(1, 3);
    spec.seed = rng.next();
    const Relation rel = random_relation(spec);
    const Channel ch = channel_from_relation(rel, "X", "Y");
    const MinEpsilon eps = min_epsilon(rel, X, Y);
    // Smallest budget that makes the channel identifiable; any budget for
    // unrelated channels.
    const PrivacyBudget budget = eps.open_bound
                                     ? PrivacyBudget::rational(Rational(1, 8))
                                     : PrivacyBudget::log2_ratio(eps.value.num(), eps.value.den());
    const CapacityBound b = zero_error_capacity_bound(ch.source_alphabet(), ch, 16, budget);
    tally.check(b.below_max_leakage, [&] { return show(rel) + ": above sup-subset L*"; });
    tally.check(b.identifiability && b.identifiability->identifiable &&
                    b.identifiability->within_ceiling,
                [&] { return show(rel) + ": above the identifiability ceiling"; });
  }

  for (std::size_t n = 1; n <= 12; ++n) {
    std::map<Symbol, std::set<Symbol>> m;
    for (std::size_t i = 1; i <= n; ++i) m["x" + std::to_string(i)] = {"y" + std::to_string(i)};
    const Channel ch = Channel::create("X", "Y", m);
    tally.check(zero_error_capacity_bound(ch.source_alphabet(), ch).value == h0(n),
                [&] { return "noiseless channel on " + std::to_string(n) + " symbols"; });
  }
  return tally.outcome("two-block channel, 300 random channels, noiseless n = 1..12");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "two-block instance: L*(X->Y) = log2 3, L*(Y->X) = 1", two_block_instance},
      {2, "maximal leakage closed form equals exhaustive search", closed_form_vs_oracle},
      {3, "maximin information equals exhaustive one-shot search", maximin_vs_oracle},
      {4, "data processing on Markov chains", data_processing},
      {5, "non-negativity, zero iff unrelated, Y = X gives H0(X)", basic_properties},
      {6, "additivity over unrelated products", additivity},
      {7, "identifiability ceiling and entropy bound", ceiling_and_entropy_bound},
      {8, "overlap partition, symmetry and common variable", maximin_machinery},
      {9, "guessing entropy, stochastic leakage, Sibson order infinity", stochastic_suite},
      {10, "zero-error capacity bound", capacity},
  };

  // Build the shared family once so its cost is not charged to criterion 2.
  instances();

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("raised: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.limit_seconds > 0 && elapsed >= o.limit_seconds && c.id != 1) o.pass = false;
    failed += o.pass ? 0 : 1;
    char limit[48] = "";
    if (o.limit_seconds > 0) std::snprintf(limit, sizeof limit, ", limit %g s", o.limit_seconds);
    std::printf("%s criterion %d: %s [%.3f s%s] %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                elapsed, limit, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
