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

// Shared instances for the unit tests.

#ifndef NSLEAK_TESTS_FIXTURES_HPP_
#define NSLEAK_TESTS_FIXTURES_HPP_

#include <set>
#include <string>
#include <vector>

#include "nsleak/relation.hpp"
#include "nsleak/value.hpp"

namespace fixtures {

using nsleak::Relation;

// {(x1,y1),(x2,y1),(x3,y2)}
inline Relation cor1() {
  return Relation::from_tuples({"X", "Y"}, {{"x1", "y1"}, {"x2", "y1"}, {"x3", "y2"}});
}

// {(x1,y1),(x2,y1),(x2,y2),(x3,y2)}
inline Relation rel2() {
  return Relation::from_tuples({"X", "Y"},
                               {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x3", "y2"}});
}

inline Relation product(std::size_t nx, std::size_t ny) {
  std::vector<nsleak::SymbolTuple> t;
  for (std::size_t i = 1; i <= nx; ++i)
    for (std::size_t j = 1; j <= ny; ++j)
      t.push_back({"x" + std::to_string(i), "y" + std::to_string(j)});
  return Relation::from_tuples({"X", "Y"}, t);
}

// Y = X on n symbols.
inline Relation identity(std::size_t n) {
  std::vector<nsleak::SymbolTuple> t;
  for (std::size_t i = 1; i <= n; ++i) {
    t.push_back({"x" + std::to_string(i), "x" + std::to_string(i)});
  }
  return Relation::from_tuples({"X", "Y"}, t);
}

inline nsleak::LeakageValue log2_of(long long p, long long q = 1) { return {p, q}; }

}  // namespace fixtures

#endif  // NSLEAK_TESTS_FIXTURES_HPP_
