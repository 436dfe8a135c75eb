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
#include <exception>
#include <map>
#include <numeric>

#include "nsleak/errors.hpp"
#include "nsleak/measures.hpp"
#include "nsleak/oracle.hpp"
#include "nsleak/stochastic.hpp"
#include "parallel.hpp"

namespace nsleak {
namespace {

const VarList kX{"X"};
const VarList kY{"Y"};

struct TrialOutcome {
  std::size_t checks = 0;
  std::vector<Counterexample> failures;
  std::vector<std::string> notes;
};

// Collects the results of one trial (or of one exhaustive segment).
class Checker {
 public:
  explicit Checker(std::size_t trial) : trial_(trial) {}

  void expect(bool ok, const Relation& rel, std::string detail) {
    ++out_.checks;
    if (!ok) out_.failures.push_back({trial_, std::move(detail), rel});
  }
  void note(std::string text) { out_.notes.push_back(std::move(text)); }
  TrialOutcome take() { return std::move(out_); }

 private:
  std::size_t trial_;
  TrialOutcome out_;
};

Rational pick_density(Rng& rng) {
  static const Rational kDensities[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                        Rational(1)};
  return kDensities[rng.bounded(4)];
}

Relation random_pair(Rng& rng, std::size_t max_x, std::size_t max_y) {
  InstanceSpec spec;
  spec.sizes = {rng.between(1, max_x), rng.between(1, max_y)};
  spec.density = pick_density(rng);
  spec.seed = rng.next();
  return random_relation(spec);
}

AttributeMap random_attribute(Rng& rng, const Relation& rel, const VarList& x) {
  const TupleSet range = marginal(rel, x);
  const std::size_t width = rng.between(1, range.size());
  std::map<Symbol, Symbol> g;
  for (const auto& t : range) {
    g.emplace(join_tuple(t), "u" + std::to_string(rng.bounded(width) + 1));
  }
  return AttributeMap::create(x, std::move(g));
}

Relation identity_relation(std::size_t n) {
  std::vector<SymbolTuple> tuples;
  for (std::size_t i = 1; i <= n; ++i) {
    tuples.push_back({"x" + std::to_string(i), "x" + std::to_string(i)});
  }
  return Relation::from_tuples({"X", "Y"}, tuples);
}

// Exhaustive family shared by the closed-form, one-shot and properties
// campaigns: every full-marginal relation with |X| <= 4 and |Y| <= 3.
void for_each_small_relation(const std::function<void(const Relation&)>& visit) {
  for (std::size_t nx = 1; nx <= 4; ++nx) {
    for (std::size_t ny = 1; ny <= 3; ++ny) for_each_full_marginal_relation(nx, ny, visit);
  }
}

std::string show(const LeakageValue& v) { return v.exact(); }

// ---- per-instance checks -------------------------------------------------

void check_closed_form(Checker& c, const Relation& rel, std::size_t cap) {
  const LeakageValue closed = maximal_leakage(rel, kX, kY);
  const BruteForceResult brute = brute_force_max_leakage(rel, kX, kY, cap);
  c.expect(brute.value == closed, rel,
           "brute force " + show(brute.value) + " != closed form " + show(closed));
  const WorstAttribute worst = worst_attribute(rel, kX, kY);
  const LeakageValue achieved = attribute_leakage(rel, worst.map, kY).value;
  c.expect(achieved == closed, rel,
           "worst attribute reaches " + show(achieved) + ", closed form " + show(closed));
}

void check_one_shot(Checker& c, const Relation& rel, std::size_t cap) {
  const LeakageValue info = maximin_info(rel, kX, kY);
  const BruteForceResult brute = brute_force_one_shot(rel, kX, kY, cap);
  c.expect(brute.value == info, rel,
           "one-shot supremum " + show(brute.value) + " != maximin " + show(info));
  c.expect(brute.witness == overlap_partition(rel, kX, kY), rel,
           "finest admissible partition differs from the overlap partition");
  const LeakageValue closed = maximal_leakage(rel, kX, kY);
  c.expect(brute.value <= closed, rel,
           "one-shot " + show(brute.value) + " exceeds maximal leakage " + show(closed));
  const BruteForceResult brute_max = brute_force_max_leakage(rel, kX, kY, cap);
  c.expect(brute.value <= brute_max.value, rel,
           "one-shot supremum exceeds brute-force maximal leakage");
}

void check_properties(Checker& c, const Relation& rel) {
  const LeakageValue l = maximal_leakage(rel, kX, kY);
  const bool unrelated = is_unrelated(rel, kX, kY);
  c.expect(l.is_nonnegative(), rel, "maximal leakage " + show(l) + " is negative");
  c.expect(l.is_zero() == unrelated, rel,
           std::string("maximal leakage ") + show(l) + (unrelated ? " != 0" : " == 0") +
               " for " + (unrelated ? "unrelated" : "related") + " variables");
  c.expect(l <= h0(rel, kX), rel, "maximal leakage exceeds H0(X)");
}

// ---- campaigns -----------------------------------------------------------

TrialOutcome dpi_trial(std::size_t trial, std::uint64_t seed, const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  InstanceSpec spec;
  spec.sizes = {rng.between(1, 4), rng.between(1, 6), rng.between(1, 5), rng.between(1, 5)};
  spec.density = pick_density(rng);
  spec.seed = rng.next();
  const Relation rel = random_markov_chain(spec);
  c.expect(is_markov(rel, {"U"}, kX, kY) && is_markov(rel, kX, kY, {"Z"}) &&
               is_markov(rel, {"U"}, kY, {"Z"}),
           rel, "generated instance is not a Markov chain U-X-Y-Z");
  const LeakageValue uz = leakage(rel, {"U"}, {"Z"}).value;
  const LeakageValue uy = leakage(rel, {"U"}, kY).value;
  c.expect(uz <= uy, rel, "L(U->Z) = " + show(uz) + " > L(U->Y) = " + show(uy));
  const LeakageValue xz = maximal_leakage(rel, kX, {"Z"});
  const LeakageValue xy = maximal_leakage(rel, kX, kY);
  c.expect(xz <= xy, rel, "L*(X->Z) = " + show(xz) + " > L*(X->Y) = " + show(xy));
  return c.take();
}

TrialOutcome bounding_trial(std::size_t trial, std::uint64_t seed, const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  InstanceSpec spec;
  spec.sizes = {rng.between(1, 6), rng.between(1, 5)};
  spec.density = trial % 4 == 0 ? Rational(1) : pick_density(rng);
  spec.seed = rng.next();
  const Relation rel = random_relation(spec);
  const AttributeMap g = random_attribute(rng, rel, kX);
  const LeakageValue l = attribute_leakage(rel, g, kY).value;
  c.expect(l.is_nonnegative(), rel, "L(U->Y) = " + show(l) + " is negative");
  if (is_unrelated(rel, kX, kY)) {
    c.expect(l.is_zero(), rel, "L(U->Y) = " + show(l) + " for unrelated X, Y");
  }
  return c.take();
}

TrialOutcome properties_trial(std::size_t trial, std::uint64_t seed, const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  check_properties(c, random_pair(rng, 8, 5));
  return c.take();
}

TrialOutcome properties_fixed(const CampaignOptions&) {
  Checker c(0);
  for_each_small_relation([&](const Relation& rel) { check_properties(c, rel); });
  for (std::size_t n = 1; n <= 8; ++n) {
    const Relation rel = identity_relation(n);
    c.expect(maximal_leakage(rel, kX, kY) == h0(rel, kX), rel,
             "L*(X->X) != H0(X) for |[[X]]| = " + std::to_string(n));
  }
  return c.take();
}

TrialOutcome closed_form_trial(std::size_t trial, std::uint64_t seed,
                               const CampaignOptions& o) {
  Checker c(trial);
  Rng rng(seed);
  check_closed_form(c, random_pair(rng, std::min<std::size_t>(8, o.partition_cap), 5),
                    o.partition_cap);
  return c.take();
}

TrialOutcome closed_form_fixed(const CampaignOptions& o) {
  Checker c(0);
  for_each_small_relation([&](const Relation& rel) { check_closed_form(c, rel, o.partition_cap); });
  return c.take();
}

TrialOutcome one_shot_trial(std::size_t trial, std::uint64_t seed, const CampaignOptions& o) {
  Checker c(trial);
  Rng rng(seed);
  check_one_shot(c, random_pair(rng, std::min<std::size_t>(8, o.partition_cap), 5),
                 o.partition_cap);
  return c.take();
}

TrialOutcome one_shot_fixed(const CampaignOptions& o) {
  Checker c(0);
  for_each_small_relation([&](const Relation& rel) { check_one_shot(c, rel, o.partition_cap); });
  return c.take();
}

TrialOutcome identifiability_trial(std::size_t trial, std::uint64_t seed,
                                   const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  const Relation rel = random_pair(rng, 8, 5);
  const LeakageValue closed = maximal_leakage(rel, kX, kY);
  const MinEpsilon eps = min_epsilon(rel, kX, kY);
  const std::size_t n = marginal(rel, kX).size();
  if (eps.open_bound) {
    c.expect(closed.is_zero(), rel, "zero minimal budget but L* = " + show(closed));
  } else {
    const auto tight = PrivacyBudget::log2_ratio(eps.value.num(), eps.value.den());
    c.expect(is_identifiable(rel, kX, kY, tight), rel,
             "not identifiable at its own minimal budget " + show(eps.value));
    const auto ceiling = identifiability_bound(n, tight).exact();
    c.expect(ceiling && *ceiling == closed, rel,
             "ceiling at the minimal budget differs from L* = " + show(closed));
    // Halfway between 1 and 2^min_epsilon: strictly below the threshold.
    const Rational below = (eps.value.argument() + 1) / 2;
    const auto loose = PrivacyBudget::log2_ratio(boost::multiprecision::numerator(below),
                                                 boost::multiprecision::denominator(below));
    c.expect(!is_identifiable(rel, kX, kY, loose), rel,
             "identifiable below the minimal budget");
  }
  const Rational eps_q(static_cast<long long>(rng.between(1, 64)), 16);
  const auto budget = PrivacyBudget::rational(eps_q);
  if (is_identifiable(rel, kX, kY, budget)) {
    c.expect(identifiability_bound(n, budget).admits(closed), rel,
             "L* = " + show(closed) + " above the ceiling for epsilon = " +
                 rational_to_string(eps_q));
  }
  return c.take();
}

TrialOutcome entropy_bound_trial(std::size_t trial, std::uint64_t seed,
                                 const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  const Relation rel = random_pair(rng, 8, 6);
  const EntropyBoundReport r = entropy_bound_check(rel, kX, kY);
  c.expect(r.holds, rel, "L* = " + show(r.lhs) + " > H0(Y) + H0(X|Y) = " + show(r.rhs));
  const EntropyBoundReport back = entropy_bound_check(rel, kY, kX);
  c.expect(back.holds, rel, "reverse direction: L*(Y->X) above H0(X) + H0(Y|X)");
  return c.take();
}

TrialOutcome additivity_trial(std::size_t trial, std::uint64_t seed, const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  const std::size_t factors = rng.between(2, 3);
  std::vector<Relation> parts;
  VarList xs, ys;
  for (std::size_t i = 1; i <= factors; ++i) {
    InstanceSpec spec;
    spec.sizes = {rng.between(1, 3), rng.between(1, 3)};
    spec.density = pick_density(rng);
    spec.seed = rng.next();
    spec.names = {"X" + std::to_string(i), "Y" + std::to_string(i)};
    parts.push_back(random_relation(spec));
    xs.push_back(spec.names[0]);
    ys.push_back(spec.names[1]);
  }
  const Relation product = unrelated_product(parts);
  LeakageValue sum_l, sum_star;
  for (std::size_t i = 0; i < factors; ++i) {
    sum_l = sum_l + leakage(parts[i], {xs[i]}, {ys[i]}).value;
    sum_star = sum_star + maximal_leakage(parts[i], {xs[i]}, {ys[i]});
  }
  const LeakageValue joint = maximal_leakage(product, xs, ys);
  c.expect(joint == sum_l, product,
           "L*(product) = " + show(joint) + " != sum of factor L(X_i->Y_i) = " + show(sum_l));
  // The literal sum above is the criterion; the comparison with the sum of
  // factor L* is kept as an aggregated observation.
  if (joint == sum_l) c.note("L*(product) equals the sum of factor L(X_i->Y_i)");
  if (sum_star < joint) {
    c.note("L*(product) strictly above the sum of factor L*");
  } else if (joint == sum_star) {
    c.note("L*(product) equals the sum of factor L*");
  } else {
    c.note("L*(product) below the sum of factor L*");
  }
  return c.take();
}

TrialOutcome maximin_trial(std::size_t trial, std::uint64_t seed, const CampaignOptions&) {
  Checker c(trial);
  Rng rng(seed);
  const Relation rel = random_pair(rng, 8, 6);
  c.expect(maximin_symmetry_check(rel, kX, kY), rel, "|[[X|Y]]*| != |[[Y|X]]*|");

  const Partition p = overlap_partition(rel, kX, kY);
  bool contained = true;
  for (const auto& y : marginal(rel, kY)) {
    std::set<std::size_t> blocks;
    for (const auto& x : conditional(rel, kX, {{"Y", y[0]}})) blocks.insert(p.block_of(x[0]));
    contained = contained && blocks.size() == 1;
  }
  c.expect(contained, rel, "a conditional range meets more than one overlap block");

  const AttributeMap common = common_variable(rel, kX, kY);
  const Relation with_u = apply_attribute(rel, common, "U");
  bool one_shot = true;
  for (const auto& y : marginal(rel, kY)) {
    one_shot = one_shot && conditional(with_u, {"U"}, {{"Y", y[0]}}).size() == 1;
  }
  c.expect(one_shot, rel, "common variable is not determined by Y");
  c.expect(h0(with_u, {"U"}) == maximin_info(rel, kX, kY), rel, "H0(common) != I*");

  // Uniqueness: renaming the symbols of X permutes the blocks and nothing else.
  const std::vector<Symbol>& alpha = rel.alphabet("X");
  std::vector<std::size_t> perm(alpha.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = perm.size(); i-- > 1;) std::swap(perm[i], perm[rng.bounded(i + 1)]);
  std::map<Symbol, Symbol> rename, back;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    rename[alpha[i]] = "r" + std::to_string(perm[i]);
    back[rename[alpha[i]]] = alpha[i];
  }
  std::vector<SymbolTuple> renamed;
  for (auto t : rel.tuples()) {
    t[0] = rename.at(t[0]);
    renamed.push_back(std::move(t));
  }
  const Partition q = overlap_partition(Relation::from_tuples({"X", "Y"}, renamed), kX, kY);
  std::vector<std::vector<Symbol>> mapped;
  for (const auto& block : q.blocks()) {
    std::vector<Symbol> b;
    for (const auto& s : block) b.push_back(back.at(s));
    mapped.push_back(std::move(b));
  }
  c.expect(Partition::create(p.ground(), mapped) == p, rel,
           "overlap partition changes under symbol renaming");
  return c.take();
}

using TrialFn = TrialOutcome (*)(std::size_t, std::uint64_t, const CampaignOptions&);
using FixedFn = TrialOutcome (*)(const CampaignOptions&);

struct CampaignDef {
  std::string_view name;
  std::string_view property;
  TrialFn trial;
  FixedFn fixed;  // optional exhaustive segment, run once
};

const CampaignDef kCampaigns[] = {
    {"dpi", "L(U->Z) <= L(U->Y) and L*(X->Z) <= L*(X->Y) on Markov chains U-X-Y-Z",
     dpi_trial, nullptr},
    {"bounding", "L(U->Y) >= 0, with equality when X and Y are unrelated", bounding_trial,
     nullptr},
    {"properties",
     "L*(X->Y) >= 0; L*(X->Y) = 0 iff X, Y unrelated; L*(X->Y) <= H0(X) with equality for Y = X",
     properties_trial, properties_fixed},
    {"closed-form",
     "sup over attributes of L(U->Y) = log2(|[[X]]| - min_y |[[X|y]]| + 1), attained by the "
     "worst-case attribute",
     closed_form_trial, closed_form_fixed},
    {"one-shot",
     "sup of L(U->Y) over attributes with |[[U|y]]| = 1 equals I*(X;Y) and is <= L*(X->Y)",
     one_shot_trial, one_shot_fixed},
    {"identifiability",
     "eps-identifiable => L*(X->Y) <= log2(|[[X]]|(1 - 2^-eps) + 1), tight at the minimal eps",
     identifiability_trial, nullptr},
    {"prop6", "L*(X->Y) <= H0(Y) + H0(X|Y)", entropy_bound_trial, nullptr},
    {"additivity",
     "unrelated products: L*((X_i)->(Y_i)) = sum_i L(X_i->Y_i)", additivity_trial, nullptr},
    {"maximin-symmetry",
     "|[[X|Y]]*| = |[[Y|X]]*|; overlap partitions are valid and unique; the common variable is "
     "determined by Y",
     maximin_trial, nullptr},
};

const CampaignDef& find_campaign(std::string_view name) {
  if (name == "entropy-bound") name = "prop6";
  for (const auto& def : kCampaigns) {
    if (def.name == name) return def;
  }
  std::string known;
  for (const auto& def : kCampaigns) known += (known.empty() ? "" : ", ") + std::string(def.name);
  throw InputError("unknown campaign '" + std::string(name) + "' (known: " + known + ")");
}

TrialOutcome guarded(const std::function<TrialOutcome()>& run, std::size_t trial) {
  try {
    return run();
  } catch (const std::exception& e) {
    TrialOutcome out;
    out.notes.push_back("trial " + std::to_string(trial) + " raised: " + e.what());
    out.checks = 1;
    out.failures.push_back(
        {trial, std::string("error: ") + e.what(), Relation::from_tuples({"X"}, {{"none"}})});
    return out;
  }
}

}  // namespace

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : kCampaigns) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

CampaignReport property_campaign(std::string_view name, std::size_t trials,
                                 std::uint64_t seed, const CampaignOptions& options) {
  const CampaignDef& def = find_campaign(name);
  std::vector<TrialOutcome> outcomes(trials);
  detail::parallel_for(trials, [&](std::size_t t) {
    outcomes[t] = guarded([&] { return def.trial(t, trial_seed(seed, t), options); }, t);
  });
  if (def.fixed) {
    outcomes.insert(outcomes.begin(), guarded([&] { return def.fixed(options); }, 0));
  }

  CampaignReport report;
  report.name = std::string(def.name);
  report.property = std::string(def.property);
  report.seed = seed;
  report.trials = trials;
  // Identical notes from different trials are reported once with a count.
  std::map<std::string, std::size_t> note_counts;
  std::vector<std::string> note_order;
  for (auto& o : outcomes) {
    report.checks += o.checks;
    report.violations += o.failures.size();
    for (auto& f : o.failures) {
      if (report.counterexamples.size() < options.max_counterexamples) {
        report.counterexamples.push_back(std::move(f));
      }
    }
    for (auto& n : o.notes) {
      auto [it, fresh] = note_counts.emplace(n, 0);
      if (fresh) note_order.push_back(n);
      ++it->second;
    }
  }
  for (const auto& n : note_order) {
    const std::size_t k = note_counts.at(n);
    report.notes.push_back(k == 1 ? n : n + " (" + std::to_string(k) + " trials)");
  }
  if (def.fixed) report.notes.insert(report.notes.begin(), "includes exhaustive segment");
  return report;
}

}  // namespace nsleak
