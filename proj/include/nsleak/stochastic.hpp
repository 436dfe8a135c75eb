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

// Exact stochastic counterparts: guessing entropy, brute-force guessing
// leakage under a probability measure, maximal stochastic leakage (Sibson
// mutual information of order infinity), and the comparison between maximal
// non-stochastic leakage and range-based entropies.

#ifndef NSLEAK_STOCHASTIC_HPP_
#define NSLEAK_STOCHASTIC_HPP_

#include <map>
#include <vector>

#include "nsleak/relation.hpp"
#include "nsleak/value.hpp"

namespace nsleak {

// Probability over composite symbols (join_tuple keys).
using ProbabilityMap = std::map<Symbol, Rational>;

// Exact probability measure on the tuples of a relation.
class RationalDist {
 public:
  // Weights keyed by tuple; missing tuples have weight 0. Throws InputError
  // if a weight is negative, a key is not a tuple of rel, or the total is not
  // exactly 1.
  static RationalDist create(Relation rel, const std::map<SymbolTuple, Rational>& weights);
  static RationalDist uniform(Relation rel);

  const Relation& relation() const { return rel_; }
  // Weight of each relation row, aligned with relation().rows().
  const std::vector<Rational>& weights() const { return weights_; }

  // Every realizable symbol appears, zero-weight ones with probability 0.
  ProbabilityMap marginal(const VarList& vars) const;
  // P{target | given = value}; throws InputError if P{given = value} = 0.
  ProbabilityMap conditional(const VarList& target, const VarList& given,
                             const SymbolTuple& value) const;

 private:
  RationalDist(Relation rel, std::vector<Rational> weights)
      : rel_(std::move(rel)), weights_(std::move(weights)) {}
  Relation rel_;
  std::vector<Rational> weights_;
};

// Row x -> distribution over target symbols, each row summing to exactly 1.
class StochasticChannel {
 public:
  static StochasticChannel create(std::string source, std::string target,
                                  std::map<Symbol, std::map<Symbol, Rational>> rows);

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  const std::map<Symbol, std::map<Symbol, Rational>>& rows() const { return rows_; }
  std::vector<Symbol> source_alphabet() const;

 private:
  StochasticChannel() = default;
  std::string source_;
  std::string target_;
  std::map<Symbol, std::map<Symbol, Rational>> rows_;
};

// sum_i i * p_(i) with probabilities sorted in decreasing order.
Rational guessing_entropy(const ProbabilityMap& probabilities);
Rational guessing_entropy(const RationalDist& dist, const VarList& u);
Rational cond_guessing_entropy(const RationalDist& dist, const VarList& u,
                               const VarList& y, const SymbolTuple& value);
// H_G(U) - sum_y P{Y=y} H_G(U | Y=y).
Rational stochastic_bf_leakage(const RationalDist& dist, const VarList& u,
                               const VarList& y);

// log2 sum_y max_{x in support} P{Y=y | X=x}. Only the support of the prior
// enters. Throws InputError on an empty support or a symbol without a row.
LeakageValue maximal_stochastic_leakage(const StochasticChannel& ch,
                                        const std::vector<Symbol>& support);

// P{Y | X} restricted to the x with P{X=x} > 0.
StochasticChannel induced_channel(const RationalDist& dist, const std::string& x,
                                  const std::string& y);

struct EntropyBoundReport {
  LeakageValue lhs;  // L*(X -> Y)
  LeakageValue rhs;  // H0(Y) + H0(X|Y)
  bool holds = false;
};

// L*(X -> Y) <= H0(Y) + H0(X | Y), where H0(Y) is the supremum of maximal
// stochastic leakage over all channels with output range [[Y]].
EntropyBoundReport entropy_bound_check(const Relation& rel, const VarList& x, const VarList& y);

}  // namespace nsleak

#endif  // NSLEAK_STOCHASTIC_HPP_
