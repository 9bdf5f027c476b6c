// Copyright 2026 The gvdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GVDT_RATIONAL_HPP
#define GVDT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace gvdt {

/// Arbitrary-precision integer used for all exact arithmetic.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored reduced with a positive denominator;
/// no operation ever rounds.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
  Rational(T n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Numerator of an integral rational; throws otherwise.
  const Integer& to_integer() const {
    if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
    return num_;
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Canonical text form "num/den", denominator always explicit.
  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Parses "p/q" or a bare integer "p".
  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(Integer(std::string(s)));
      Integer n{std::string(s.substr(0, slash))};
      Integer d{std::string(s.substr(slash + 1))};
      return Rational(std::move(n), std::move(d));
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;  // > 0
};

/// Exact binomial coefficient C(n, k) for integer n (possibly negative) and
/// k >= 0, via the falling factorial n(n-1)...(n-k+1)/k!.
inline Integer binomial(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer num = 1, den = 1;
  for (long j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return num / den;  // falling factorials of integers divide exactly
}

}  // namespace gvdt

#endif  // GVDT_RATIONAL_HPP
