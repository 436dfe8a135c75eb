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

#include <doctest.h>

#include "fixtures.hpp"
#include "nsleak/errors.hpp"
#include "nsleak/oracle.hpp"
#include "nsleak/relation.hpp"

using namespace nsleak;
using fixtures::cor1;
using fixtures::rel2;

namespace {

TupleSet singles(std::initializer_list<const char*> symbols) {
  TupleSet out;
  for (const char* s : symbols) out.insert({s});
  return out;
}

}  // namespace

TEST_CASE("relation construction validates and canonicalizes") {
  const Relation r = cor1();
  CHECK(r.arity() == 2);
  CHECK(r.size() == 3);
  CHECK(r.alphabet("X") == std::vector<Symbol>{"x1", "x2", "x3"});
  CHECK(r.alphabet("Y") == std::vector<Symbol>{"y1", "y2"});

  const Relation shuffled =
      Relation::from_tuples({"X", "Y"}, {{"x3", "y2"}, {"x1", "y1"}, {"x2", "y1"}});
  CHECK(shuffled == r);

  const Relation dup =
      Relation::from_tuples({"X", "Y"}, {{"x1", "y1"}, {"x1", "y1"}, {"x2", "y2"}});
  CHECK(dup.size() == 2);
  CHECK(dup.duplicates_dropped() == 1);
}

TEST_CASE("relation construction rejects malformed input") {
  CHECK_THROWS_AS(Relation::from_tuples({"X"}, {}), InputError);
  CHECK_THROWS_AS(Relation::from_tuples({"X", "X"}, {{"a", "b"}}), InputError);
  CHECK_THROWS_AS(Relation::from_tuples({"X", "Y"}, {{"a"}}), InputError);
  CHECK_THROWS_AS(Relation::from_tuples({"X"}, {{""}}), InputError);
  CHECK_THROWS_AS(Relation::from_tuples({"X"}, {{"a|b"}}), InputError);
  CHECK_THROWS_AS(Relation::from_tuples({"X,Y"}, {{"a"}}), InputError);
  CHECK_THROWS_AS(Relation::create({"X"}, {{"a", "a"}}, {{"a"}}), InputError);
  CHECK_THROWS_AS(Relation::create({"X"}, {{"a"}}, {{"b"}}), InputError);
}

TEST_CASE("marginal ranges") {
  CHECK(marginal(cor1(), {"X"}) == singles({"x1", "x2", "x3"}));
  CHECK(marginal(cor1(), {"Y"}) == singles({"y1", "y2"}));
  const Relation one = Relation::from_tuples({"X", "Y"}, {{"a", "b"}});
  CHECK(marginal(one, {"X"}).size() == 1);
  CHECK(marginal(one, {"Y", "X"}) == TupleSet{{"b", "a"}});
  CHECK_THROWS_AS(marginal(cor1(), {"Q"}), InputError);
}

TEST_CASE("conditional ranges") {
  CHECK(conditional(cor1(), {"X"}, {{"Y", "y1"}}) == singles({"x1", "x2"}));
  CHECK(conditional(cor1(), {"X"}, {{"Y", "y2"}}) == singles({"x3"}));
  for (const char* x : {"x1", "x2", "x3"}) {
    CHECK(conditional(cor1(), {"X"}, {{"X", x}}) == singles({x}));
  }
  CHECK_THROWS_AS(conditional(cor1(), {"X"}, {{"Y", "y9"}}), IncompatibleEvidence);
  CHECK_THROWS_AS(conditional(cor1(), {"X"}, {{"X", "x3"}, {"Y", "y1"}}),
                  IncompatibleEvidence);
}

TEST_CASE("channel_from_relation") {
  const Channel k = channel_from_relation(cor1(), "X", "Y");
  CHECK(k.image("x1") == std::set<Symbol>{"y1"});
  CHECK(k.image("x2") == std::set<Symbol>{"y1"});
  CHECK(k.image("x3") == std::set<Symbol>{"y2"});

  const Channel full = channel_from_relation(fixtures::product(2, 2), "X", "Y");
  CHECK(full.image("x1") == std::set<Symbol>{"y1", "y2"});
  CHECK(full.image("x2") == std::set<Symbol>{"y1", "y2"});

  const Channel k2 = channel_from_relation(rel2(), "X", "Y");
  CHECK(k2.image("x1") == std::set<Symbol>{"y1"});
  CHECK(k2.image("x2") == std::set<Symbol>{"y1", "y2"});
  CHECK(k2.image("x3") == std::set<Symbol>{"y2"});

  CHECK_THROWS_AS(Channel::create("X", "Y", {{"x1", {}}}), InputError);
}

TEST_CASE("compose_markov enumerates every path") {
  const Relation base1 = Relation::from_tuples({"X"}, {{"x1"}});
  const Channel a = Channel::create("X", "Y", {{"x1", {"y1"}}});
  const Channel b = Channel::create("Y", "Z", {{"y1", {"z1"}}});
  const Relation single = compose_markov(base1, a, b);
  CHECK(single.tuples() == std::vector<SymbolTuple>{{"x1", "y1", "z1"}});

  const Relation base2 = Relation::from_tuples({"X"}, {{"x1"}, {"x2"}});
  const Channel k1 = Channel::create("X", "Y", {{"x1", {"y1"}}, {"x2", {"y1", "y2"}}});
  const Channel k2 = Channel::create("Y", "Z", {{"y1", {"z1"}}, {"y2", {"z1", "z2"}}});
  const Relation r = compose_markov(base2, k1, k2);
  CHECK(r.tuples() == std::vector<SymbolTuple>{{"x1", "y1", "z1"},
                                               {"x2", "y1", "z1"},
                                               {"x2", "y2", "z1"},
                                               {"x2", "y2", "z2"}});
  CHECK(is_markov(r, {"X"}, {"Y"}, {"Z"}));
  CHECK(is_markov(single, {"X"}, {"Y"}, {"Z"}));

  // A channel that does not continue the chain, or misses a symbol.
  CHECK_THROWS_AS(compose_chain(base2, {k2}), InputError);
  const Channel partial = Channel::create("X", "Y", {{"x1", {"y1"}}});
  CHECK_THROWS_AS(compose_chain(base2, {partial}), InputError);
}

TEST_CASE("is_unrelated") {
  CHECK(is_unrelated(fixtures::product(2, 2), {"X"}, {"Y"}));
  CHECK_FALSE(is_unrelated(cor1(), {"X"}, {"Y"}));
  CHECK_FALSE(is_unrelated(rel2(), {"X"}, {"Y"}));
  CHECK(is_unrelated(Relation::from_tuples({"X", "Y"}, {{"a", "b"}}), {"X"}, {"Y"}));
}

TEST_CASE("is_markov") {
  const Relation r = Relation::from_tuples({"X", "Y", "Z"}, {{"x1", "y1", "z1"}, {"x2", "y1", "z2"}});
  CHECK_FALSE(is_markov(r, {"X"}, {"Y"}, {"Z"}));

  // Symmetry in the outer variables over seeded random relations.
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng(trial_seed(7, t));
    InstanceSpec spec;
    spec.sizes = {rng.between(1, 3), rng.between(1, 3), rng.between(1, 3)};
    spec.density = Rational(1, 2);
    spec.seed = rng.next();
    const Relation rel = random_relation(spec);
    REQUIRE(is_markov(rel, {"X"}, {"Y"}, {"Z"}) == is_markov(rel, {"Z"}, {"Y"}, {"X"}));
  }
}

TEST_CASE("apply_attribute") {
  std::map<Symbol, Symbol> id{{"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"}};
  const Relation with_id = apply_attribute(cor1(), AttributeMap::create({"X"}, id));
  CHECK(with_id.variables() == VarList{"U", "X", "Y"});
  for (const auto& t : with_id.tuples()) CHECK(t[0] == t[1]);

  std::map<Symbol, Symbol> constant{{"x1", "u0"}, {"x2", "u0"}, {"x3", "u0"}};
  const Relation with_c = apply_attribute(cor1(), AttributeMap::create({"X"}, constant));
  CHECK(marginal(with_c, {"U"}) == singles({"u0"}));
  for (const char* y : {"y1", "y2"}) {
    CHECK(conditional(with_c, {"U"}, {{"Y", y}}) == singles({"u0"}));
  }

  std::map<Symbol, Symbol> worst{{"x1", "x1"}, {"x2", "x2"}, {"x3", "u*"}};
  const Relation with_w = apply_attribute(cor1(), AttributeMap::create({"X"}, worst));
  CHECK(marginal(with_w, {"U"}).size() == 3);
  CHECK(conditional(with_w, {"U"}, {{"Y", "y2"}}) == singles({"u*"}));

  // The attribute must cover the range, and the new name must be fresh.
  CHECK_THROWS_AS(apply_attribute(cor1(), AttributeMap::create({"X"}, {{"x1", "a"}})),
                  InputError);
  CHECK_THROWS_AS(apply_attribute(cor1(), AttributeMap::create({"X"}, id), "Y"), InputError);
}

TEST_CASE("composite variables act as one variable") {
  const Relation r = Relation::from_tuples(
      {"A", "B", "C"}, {{"a1", "b1", "c1"}, {"a1", "b2", "c1"}, {"a2", "b1", "c2"}});
  CHECK(marginal(r, {"A", "B"}).size() == 3);
  CHECK(conditional(r, {"A", "B"}, {{"C", "c1"}}) == TupleSet{{"a1", "b1"}, {"a1", "b2"}});
  CHECK_THROWS_AS(bivariate_view(r, {"A", "B"}, {"B", "C"}), InputError);
  CHECK(project(r, {"C", "A"}).tuples() == std::vector<SymbolTuple>{{"c1", "a1"}, {"c2", "a2"}});
}

TEST_CASE("tuple joining round-trips") {
  CHECK(join_tuple({"x1", "y1"}) == "x1|y1");
  CHECK(split_tuple("x1|y1") == SymbolTuple{"x1", "y1"});
  CHECK(split_tuple("solo") == SymbolTuple{"solo"});
}
