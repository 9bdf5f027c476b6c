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

#ifndef GVDT_QLAURENT_HPP
#define GVDT_QLAURENT_HPP

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvdt/rational.hpp"

namespace gvdt {

/// Exponent value meaning "known to all orders".
inline constexpr int kUnboundedExp = std::numeric_limits<int>::max() / 4;

namespace detail {
inline int sat_add_exp(long a, long b) {
  long s = a + b;
  if (a >= kUnboundedExp || b >= kUnboundedExp || s >= kUnboundedExp) return kUnboundedExp;
  return static_cast<int>(s);
}
}  // namespace detail

/// Truncated Laurent series in q with exact rational coefficients.
///
/// A value represents a series whose coefficients at q^k are:
///   - exactly the stored value (absent key = exactly zero) for k <= known_to(),
///   - unknown for k > known_to().
/// known_to() == kUnboundedExp means the series is an exact Laurent
/// polynomial. The guaranteed support floor is derived: below the smallest
/// stored exponent (or below known_to()+1 when nothing is stored) every
/// coefficient is exactly zero. Operations shrink the known range
/// conservatively, so a reported coefficient is never contaminated by
/// truncated terms.
class QLaurent {
 public:
  /// Exact zero, known to all orders.
  QLaurent() : hi_(kUnboundedExp) {}

  QLaurent(std::map<int, Rational> coeffs, int known_to) : hi_(known_to), c_(std::move(coeffs)) {
    normalize();
  }

  static QLaurent monomial(int k, Rational coeff) {
    std::map<int, Rational> m;
    m.emplace(k, std::move(coeff));
    return QLaurent(std::move(m), kUnboundedExp);
  }
  static QLaurent one() { return monomial(0, 1); }

  /// Last exponent whose coefficient is known.
  int known_to() const { return hi_; }
  bool knows(int k) const { return k <= hi_; }
  bool is_exact() const { return hi_ == kUnboundedExp; }

  /// True when every known coefficient is zero and the series is exact.
  bool is_exactly_zero() const { return c_.empty() && is_exact(); }
  bool empty() const { return c_.empty(); }

  /// Exponents below this bound carry exactly zero.
  int support_floor() const {
    if (!c_.empty()) return c_.begin()->first;
    return detail::sat_add_exp(hi_, 1);
  }

  const std::map<int, Rational>& coeffs() const { return c_; }

  /// Coefficient of q^k; throws if k lies beyond the known range.
  const Rational& at(int k) const {
    if (!knows(k))
      throw std::domain_error("QLaurent: coefficient of q^" + std::to_string(k) +
                              " is outside the known window");
    auto it = c_.find(k);
    static const Rational kZero{};
    return it == c_.end() ? kZero : it->second;
  }

  /// Restricts knowledge to exponents <= k.
  QLaurent truncated(int k) const {
    QLaurent r(*this);
    r.hi_ = std::min(r.hi_, k);
    r.normalize();
    return r;
  }

  QLaurent operator-() const {
    QLaurent r(*this);
    for (auto& [k, v] : r.c_) v = -v;
    return r;
  }

  QLaurent& operator+=(const QLaurent& o) {
    hi_ = std::min(hi_, o.hi_);
    for (const auto& [k, v] : o.c_) {
      auto [it, inserted] = c_.emplace(k, v);
      if (!inserted) it->second += v;
    }
    normalize();
    return *this;
  }
  QLaurent& operator-=(const QLaurent& o) { return *this += -o; }

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }

  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    if (a.is_exactly_zero() || b.is_exactly_zero()) return QLaurent();
    // Unknown coefficients of one factor first contaminate the product at
    // (known_to+1) + support_floor of the other factor.
    int hi = std::min(detail::sat_add_exp(a.hi_, b.support_floor()),
                      detail::sat_add_exp(b.hi_, a.support_floor()));
    QLaurent r;
    r.hi_ = hi;
    for (const auto& [i, x] : a.c_) {
      for (const auto& [j, y] : b.c_) {
        long k = static_cast<long>(i) + j;
        if (k > hi) continue;
        auto [it, inserted] = r.c_.emplace(static_cast<int>(k), x * y);
        if (!inserted) it->second += x * y;
      }
    }
    r.normalize();
    return r;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }

  QLaurent scaled(const Rational& s) const {
    if (s.is_zero()) return QLaurent();
    QLaurent r(*this);
    for (auto& [k, v] : r.c_) v = v * s;
    return r;
  }

  /// Multiplies by q^s.
  QLaurent shifted(int s) const {
    QLaurent r;
    r.hi_ = detail::sat_add_exp(hi_, s);
    for (const auto& [k, v] : c_) r.c_.emplace(k + s, v);
    return r;
  }

  QLaurent pow(long e) const {
    if (e < 0) throw std::domain_error("QLaurent: negative power");
    QLaurent r = one();
    for (long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.hi_ == b.hi_ && a.c_ == b.c_;
  }

  /// True when the two series agree wherever both are known.
  bool agrees_with(const QLaurent& o) const {
    int hi = std::min(hi_, o.hi_);
    for (const auto& [k, v] : c_) {
      if (k > hi) continue;
      if (o.at(k) != v) return false;
    }
    for (const auto& [k, v] : o.c_) {
      if (k > hi) continue;
      if (at(k) != v) return false;
    }
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
      os << (first ? "" : " + ") << v.str() << "*q^" << k;
      first = false;
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(q^" << hi_ + 1 << ")";
    return os.str();
  }

 private:
  void normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
      if (it->second.is_zero() || it->first > hi_)
        it = c_.erase(it);
      else
        ++it;
    }
  }

  int hi_;
  std::map<int, Rational> c_;
};

/// Dense power-series helpers over q^0..q^order, used for the MacMahon-style
/// expansions. Input/output vectors hold coefficients of q^0, q^1, ...

/// exp(f) for f with zero constant term, via e' = f'e.
inline std::vector<Rational> ps_exp(const std::vector<Rational>& f) {
  if (!f.empty() && !f[0].is_zero())
    throw std::domain_error("ps_exp: nonzero constant term");
  std::vector<Rational> e(f.size(), Rational(0));
  if (e.empty()) return e;
  e[0] = 1;
  for (size_t n = 1; n < f.size(); ++n) {
    Rational acc;
    for (size_t k = 1; k <= n; ++k) acc += Rational(static_cast<long long>(k)) * f[k] * e[n - k];
    e[n] = acc / Rational(static_cast<long long>(n));
  }
  return e;
}

/// log(f) for f with constant term 1, via f' = f * (log f)'.
inline std::vector<Rational> ps_log(const std::vector<Rational>& f) {
  if (f.empty() || f[0] != Rational(1))
    throw std::domain_error("ps_log: constant term must be 1");
  std::vector<Rational> g(f.size(), Rational(0));
  for (size_t n = 1; n < f.size(); ++n) {
    Rational acc;
    for (size_t k = 1; k < n; ++k) acc += Rational(static_cast<long long>(k)) * g[k] * f[n - k];
    g[n] = f[n] - acc / Rational(static_cast<long long>(n));
  }
  return g;
}

}  // namespace gvdt

#endif  // GVDT_QLAURENT_HPP
