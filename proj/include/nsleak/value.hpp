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

// Exact numeric types shared by every measure. All leakage quantities in
// this library are logarithms of positive rationals, so they are carried as
// integer pairs and compared by cross-multiplication; floating point is only
// used for display.

#ifndef NSLEAK_VALUE_HPP_
#define NSLEAK_VALUE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsleak {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", "p" or a finite decimal such as "0.25" into an exact rational.
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& value);
double to_double(const Rational& value);

// log2(num/den) with num, den > 0. The pair is kept as given (cardinalities
// are informative, e.g. log2(3/2) reads as "3 candidates down to 2"); two
// values are equal when their ratios are equal.
class LeakageValue {
 public:
  LeakageValue() : num_(1), den_(1) {}
  LeakageValue(BigInt num, BigInt den);
  static LeakageValue of_cardinality(std::uint64_t n) { return {n, 1}; }
  static LeakageValue of_ratio(const Rational& ratio);
  // Accepts the "log2(p/q)" / "log2(p)" rendering produced by exact().
  static LeakageValue parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  Rational argument() const { return Rational(num_, den_); }

  bool is_zero() const { return num_ == den_; }
  bool is_nonnegative() const { return num_ >= den_; }

  double approx() const;
  std::string exact() const;
  // Six decimals, the display precision of every report.
  std::string decimal() const;

  // log2(a) + log2(b) = log2(a*b).
  LeakageValue operator+(const LeakageValue& other) const;
  LeakageValue operator-(const LeakageValue& other) const;

  friend std::strong_ordering operator<=>(const LeakageValue& a,
                                          const LeakageValue& b);
  friend bool operator==(const LeakageValue& a, const LeakageValue& b);

 private:
  BigInt num_;
  BigInt den_;
};

// Privacy budget epsilon > 0. Either a rational number, or an exact
// log2(p/q) with p > q. Comparisons against 2^epsilon are exact in both
// forms.
class PrivacyBudget {
 public:
  static PrivacyBudget rational(Rational epsilon);
  static PrivacyBudget log2_ratio(BigInt p, BigInt q);
  // "log2(3)", "log2(3/2)", "3/2", "1", "1.585".
  static PrivacyBudget parse(std::string_view text);

  bool is_log2_ratio() const { return log_ratio_.has_value(); }
  // 2^epsilon when it is rational.
  std::optional<Rational> two_pow() const;
  // Exact test of 2^epsilon >= r.
  bool two_pow_at_least(const Rational& r) const;

  double approx() const;
  std::string text() const;

 private:
  PrivacyBudget() = default;
  std::optional<Rational> epsilon_;    // rational form
  std::optional<Rational> log_ratio_;  // p/q in log2(p/q)
};

}  // namespace nsleak

#endif  // NSLEAK_VALUE_HPP_
