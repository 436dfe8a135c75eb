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

#ifndef NSLEAK_ERRORS_HPP_
#define NSLEAK_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nsleak {

// Malformed or inconsistent input: unknown variables, schema violations,
// symbols outside an alphabet, non-positive budgets.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Conditioning on evidence that no tuple of the relation realizes.
class IncompatibleEvidence : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An exhaustive search was asked to exceed its configured cap.
class SearchCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace nsleak

#endif  // NSLEAK_ERRORS_HPP_
