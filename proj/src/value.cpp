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

#include "nsleak/value.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>

#include "nsleak/errors.hpp"

namespace nsleak {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw InputError("malformed number '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') {
      throw InputError("malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

// log2 of a positive big integer without overflowing a double.
long double log2_big(const BigInt& x) {
  const unsigned msb = boost::multiprecision::msb(x);
  if (msb < 60) {
    return std::log2(static_cast<long double>(x.convert_to<std::uint64_t>()));
  }
  const BigInt top = x >> (msb - 60);
  return static_cast<long double>(msb - 60) +
         std::log2(static_cast<long double>(top.convert_to<std::uint64_t>()));
}

long double log2_rational(const Rational& r) {
  return log2_big(boost::multiprecision::numerator(r)) -
         log2_big(boost::multiprecision::denominator(r));
}

// Above this exponent denominator the exact power test is only run when the
// floating-point bracket cannot separate the two sides.
constexpr unsigned kDirectPowerLimit = 4096;

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty number");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_integer(trim(s.substr(0, slash)), s);
    const BigInt q = parse_integer(trim(s.substr(slash + 1)), s);
    if (q == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string digits(s.substr(0, dot));
    const std::string_view frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InputError("malformed number '" + std::string(s) + "'");
    }
    digits += frac;
    if (digits == "-" || digits == "+" || digits.empty()) {
      throw InputError("malformed number '" + std::string(s) + "'");
    }
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(parse_integer(digits, s), scale);
  }
  return Rational(parse_integer(s, s));
}

std::string rational_to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

LeakageValue::LeakageValue(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_ <= 0 || den_ <= 0) {
    throw InputError("log2 argument must be a ratio of positive integers");
  }
}

LeakageValue LeakageValue::of_ratio(const Rational& ratio) {
  return {boost::multiprecision::numerator(ratio),
          boost::multiprecision::denominator(ratio)};
}

LeakageValue LeakageValue::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 7 || s.substr(0, 5) != "log2(" || s.back() != ')') {
    throw InputError("expected log2(p/q), got '" + std::string(s) + "'");
  }
  s = s.substr(5, s.size() - 6);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    return {parse_integer(trim(s.substr(0, slash)), text),
            parse_integer(trim(s.substr(slash + 1)), text)};
  }
  return {parse_integer(trim(s), text), 1};
}

double LeakageValue::approx() const {
  return static_cast<double>(log2_big(num_) - log2_big(den_));
}

std::string LeakageValue::exact() const {
  return "log2(" + num_.str() + "/" + den_.str() + ")";
}

std::string LeakageValue::decimal() const {
  double v = approx();
  if (is_zero() || std::fabs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

LeakageValue LeakageValue::operator+(const LeakageValue& other) const {
  return {num_ * other.num_, den_ * other.den_};
}

LeakageValue LeakageValue::operator-(const LeakageValue& other) const {
  return {num_ * other.den_, den_ * other.num_};
}

std::strong_ordering operator<=>(const LeakageValue& a, const LeakageValue& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const LeakageValue& a, const LeakageValue& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

PrivacyBudget PrivacyBudget::rational(Rational epsilon) {
  if (epsilon <= 0) {
    throw InputError("privacy budget must be positive, got " +
                     rational_to_string(epsilon));
  }
  PrivacyBudget b;
  b.epsilon_ = std::move(epsilon);
  return b;
}

PrivacyBudget PrivacyBudget::log2_ratio(BigInt p, BigInt q) {
  if (q <= 0 || p <= q) {
    throw InputError("privacy budget log2(" + p.str() + "/" + q.str() +
                     ") must be positive");
  }
  PrivacyBudget b;
  b.log_ratio_ = Rational(std::move(p), std::move(q));
  return b;
}

PrivacyBudget PrivacyBudget::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.substr(0, 5) == "log2(") {
    const LeakageValue v = LeakageValue::parse(s);
    return log2_ratio(v.num(), v.den());
  }
  return rational(parse_rational(s));
}

std::optional<Rational> PrivacyBudget::two_pow() const {
  if (log_ratio_) return *log_ratio_;
  if (boost::multiprecision::denominator(*epsilon_) == 1 &&
      *epsilon_ <= kDirectPowerLimit) {
    const auto k = boost::multiprecision::numerator(*epsilon_).convert_to<unsigned>();
    return Rational(BigInt(1) << k);
  }
  return std::nullopt;
}

bool PrivacyBudget::two_pow_at_least(const Rational& r) const {
  if (r <= 0) return true;
  if (log_ratio_) return *log_ratio_ >= r;

  const BigInt& a = boost::multiprecision::numerator(*epsilon_);
  const BigInt& b = boost::multiprecision::denominator(*epsilon_);
  const BigInt& c = boost::multiprecision::numerator(r);
  const BigInt& d = boost::multiprecision::denominator(r);

  // 2^(a/b) >= c/d  <=>  2^a * d^b >= c^b.
  const long double gap = static_cast<long double>(to_double(*epsilon_)) - log2_rational(r);
  if (b > kDirectPowerLimit || a > BigInt(1) << 20) {
    if (gap > 1e-9L) return true;
    if (gap < -1e-9L) return false;
  }
  const auto bb = b.convert_to<unsigned>();
  const auto aa = a.convert_to<unsigned>();
  return (BigInt(1) << aa) * boost::multiprecision::pow(d, bb) >=
         boost::multiprecision::pow(c, bb);
}

double PrivacyBudget::approx() const {
  if (log_ratio_) return static_cast<double>(log2_rational(*log_ratio_));
  return to_double(*epsilon_);
}

std::string PrivacyBudget::text() const {
  if (log_ratio_) return LeakageValue::of_ratio(*log_ratio_).exact();
  return rational_to_string(*epsilon_);
}

}  // namespace nsleak
