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

// Finite uncertain variables, represented by their joint range.
//
// A Relation is the set of jointly realizable symbol tuples over a list of
// named variables. Marginal and conditional ranges are projections of that
// set; the uncertainty set itself is never materialized. Every measure in the
// library works from ranges computed out of the tuples, never from the
// declared alphabets, which may be strictly larger.

#ifndef NSLEAK_RELATION_HPP_
#define NSLEAK_RELATION_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nsleak {

using Symbol = std::string;
using SymbolTuple = std::vector<Symbol>;
using TupleSet = std::set<SymbolTuple>;
// Ordered variable names. A multi-variable list denotes the composite
// variable whose symbols are the projected tuples.
using VarList = std::vector<std::string>;
// Evidence: variable name -> observed symbol.
using Assignment = std::vector<std::pair<std::string, Symbol>>;

// Separator used when a composite symbol is written as a single string
// (distribution keys, attribute domains). Symbols may not contain it.
inline constexpr char kTupleSeparator = '|';

std::string join_tuple(const SymbolTuple& tuple);
SymbolTuple split_tuple(std::string_view text);
void validate_symbol(std::string_view symbol);

class Relation {
 public:
  using Row = std::vector<std::uint32_t>;

  // Alphabets are deduplicated and sorted; tuples are validated against them
  // and deduplicated. Throws InputError on any violated invariant.
  static Relation create(VarList variables,
                         std::vector<std::vector<Symbol>> alphabets,
                         const std::vector<SymbolTuple>& tuples);
  // Alphabets taken to be the marginal ranges of the tuples.
  static Relation from_tuples(VarList variables,
                              const std::vector<SymbolTuple>& tuples);

  const VarList& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  std::size_t size() const { return rows_.size(); }
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  bool has_variable(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  std::vector<std::size_t> indices_of(const VarList& names) const;

  const std::vector<Symbol>& alphabet(std::size_t var) const {
    return alphabets_[var];
  }
  const std::vector<Symbol>& alphabet(std::string_view name) const {
    return alphabets_[index_of(name)];
  }
  const Symbol& symbol(std::size_t var, std::uint32_t code) const {
    return alphabets_[var][code];
  }
  // Code of a symbol in a variable's sorted alphabet; throws InputError.
  std::uint32_t code_of(std::size_t var, std::string_view symbol) const;

  // Tuples as alphabet codes, sorted lexicographically. Because alphabets are
  // sorted, this is also the lexicographic order of the symbol tuples.
  const std::vector<Row>& rows() const { return rows_; }
  std::vector<SymbolTuple> tuples() const;

  // Same variables, alphabets and tuple set; the duplicate counter of the
  // source file is not part of the value.
  friend bool operator==(const Relation& a, const Relation& b) {
    return a.variables_ == b.variables_ && a.alphabets_ == b.alphabets_ &&
           a.rows_ == b.rows_;
  }

 private:
  Relation() = default;

  VarList variables_;
  std::vector<std::vector<Symbol>> alphabets_;
  std::vector<Row> rows_;
  std::size_t duplicates_dropped_ = 0;
};

// Non-stochastic channel [[Y|X]]: source symbol -> non-empty target set.
class Channel {
 public:
  static Channel create(std::string source, std::string target,
                        std::map<Symbol, std::set<Symbol>> map);

  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  const std::map<Symbol, std::set<Symbol>>& map() const { return map_; }
  std::vector<Symbol> source_alphabet() const;
  std::vector<Symbol> target_alphabet() const;
  // Throws InputError when x has no image.
  const std::set<Symbol>& image(const Symbol& x) const;

  friend bool operator==(const Channel& a, const Channel& b) = default;

 private:
  Channel() = default;
  std::string source_;
  std::string target_;
  std::map<Symbol, std::set<Symbol>> map_;
};

// Total function g on a range of the source variable(s). Composite source
// symbols are keyed by join_tuple().
class AttributeMap {
 public:
  static AttributeMap create(VarList source, std::map<Symbol, Symbol> image);

  const VarList& source() const { return source_; }
  const std::map<Symbol, Symbol>& image() const { return image_; }
  std::vector<Symbol> domain() const;
  // Throws InputError outside the domain.
  const Symbol& operator()(const Symbol& x) const;
  // Preimages of each attribute value, keyed by that value.
  std::map<Symbol, std::vector<Symbol>> fibers() const;

  friend bool operator==(const AttributeMap& a, const AttributeMap& b) = default;

 private:
  AttributeMap() = default;
  VarList source_;
  std::map<Symbol, Symbol> image_;
};

// Two variable groups of one relation, re-indexed densely. Index i of
// a_values is the i-th smallest projected tuple.
struct BivariateView {
  std::vector<SymbolTuple> a_values;
  std::vector<SymbolTuple> b_values;
  // a_given_b[j]: sorted indices of [[A | B = b_values[j]]].
  std::vector<std::vector<std::uint32_t>> a_given_b;
  // b_given_a[i]: sorted indices of [[B | A = a_values[i]]].
  std::vector<std::vector<std::uint32_t>> b_given_a;
  std::size_t pair_count = 0;
};

BivariateView bivariate_view(const Relation& rel, const VarList& a,
                             const VarList& b);

TupleSet marginal(const Relation& rel, const VarList& vars);
// Throws IncompatibleEvidence when no tuple agrees with the evidence.
TupleSet conditional(const Relation& rel, const VarList& target,
                     const Assignment& given);

// map[x] = [[target | source = x]] for every x in the source's marginal range.
Channel channel_from_relation(const Relation& rel, const std::string& source,
                              const std::string& target);

// Relation over (k.source, k.target) with X restricted to `inputs`
// ({(x, y): x in inputs, y in k(x)}).
Relation relation_from_channel(const Channel& k, const std::vector<Symbol>& inputs);

// Relation over (X, Y, Z) with tuples {(x, y, z): y in k1(x), z in k2(y)}.
Relation compose_markov(const Relation& base, const Channel& k1,
                        const Channel& k2);
// Generalization to any number of cascaded channels; each channel's source
// must be the previous stage's variable.
Relation compose_chain(const Relation& base, const std::vector<Channel>& channels);

bool is_unrelated(const Relation& rel, const VarList& a, const VarList& b);
// A - B - C: [[A | B=b, C=c]] = [[A | B=b]] for every realizable (b, c).
bool is_markov(const Relation& rel, const VarList& a, const VarList& b,
               const VarList& c);

// Prepends a coordinate named `name` holding g(x) to every tuple.
Relation apply_attribute(const Relation& rel, const AttributeMap& g,
                         const std::string& name = "U");

// Keeps only the listed variables (in the given order), deduplicating.
Relation project(const Relation& rel, const VarList& vars);

}  // namespace nsleak

#endif  // NSLEAK_RELATION_HPP_
