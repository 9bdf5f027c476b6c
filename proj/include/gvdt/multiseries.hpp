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

#ifndef GVDT_MULTISERIES_HPP
#define GVDT_MULTISERIES_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gvdt/curve_class.hpp"
#include "gvdt/qlaurent.hpp"
#include "gvdt/rational.hpp"

namespace gvdt {

/// Requested Laurent window in q. qmax bounds how far infinite q-expansions
/// are materialized; qmin is the reporting floor for serialization. The
/// actually reliable range of every coefficient is tracked per class by
/// QLaurent, so no reported value is ever contaminated by truncation.
struct QWindow {
  int qmin;
  int qmax;

  QWindow intersect(const QWindow& o) const {
    return {std::max(qmin, o.qmin), std::min(qmax, o.qmax)};
  }
  bool operator==(const QWindow& o) const = default;
};

/// Truncated series over class monomials t^beta with QLaurent coefficients.
/// Classes of degree <= tmax are represented exactly (an absent class is
/// exactly zero); higher degrees are unknown. Values are immutable in spirit:
/// every operation returns a fresh series.
class MultiSeries {
 public:
  MultiSeries(ClassBasis basis, long tmax, QWindow window)
      : basis_(std::move(basis)), tmax_(tmax), win_(window) {
    if (tmax_ < 0) throw std::domain_error("MultiSeries: negative tmax");
  }

  static MultiSeries one(const ClassBasis& basis, long tmax, QWindow window) {
    MultiSeries s(basis, tmax, window);
    s.set_term(basis.zero_class(), QLaurent::one());
    return s;
  }

  static MultiSeries monomial(const ClassBasis& basis, long tmax, QWindow window,
                              const CurveClass& beta, int qexp, Rational coeff) {
    MultiSeries s(basis, tmax, window);
    s.set_term(beta, QLaurent::monomial(qexp, std::move(coeff)));
    return s;
  }

  const ClassBasis& basis() const { return basis_; }
  int rank() const { return basis_.rank(); }
  long tmax() const { return tmax_; }
  const QWindow& window() const { return win_; }
  const std::map<CurveClass, QLaurent>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Coefficient series of t^beta; exact zero when the class is absent.
  const QLaurent& term(const CurveClass& beta) const {
    static const QLaurent kZero;
    auto it = terms_.find(beta);
    return it == terms_.end() ? kZero : it->second;
  }
  const QLaurent& beta0() const { return term(basis_.zero_class()); }
  bool has_beta0() const { return terms_.count(basis_.zero_class()) != 0; }

  void set_term(const CurveClass& beta, QLaurent q) {
    if (beta.rank() != rank()) throw std::invalid_argument("MultiSeries: rank mismatch");
    if (basis_.degree(beta) > tmax_)
      throw std::domain_error("MultiSeries: class degree exceeds tmax");
    if (q.is_exactly_zero())
      terms_.erase(beta);
    else
      terms_[beta] = std::move(q);
  }

  void add_term(const CurveClass& beta, const QLaurent& q) {
    set_term(beta, term(beta) + q);
  }

  MultiSeries operator-() const {
    MultiSeries r(basis_, tmax_, win_);
    for (const auto& [b, q] : terms_) r.terms_.emplace(b, -q);
    return r;
  }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.check_compatible(b);
    MultiSeries r(a.basis_, std::min(a.tmax_, b.tmax_), a.win_.intersect(b.win_));
    for (const auto& [beta, q] : a.terms_)
      if (a.basis_.degree(beta) <= r.tmax_) r.terms_.emplace(beta, q);
    for (const auto& [beta, q] : b.terms_)
      if (a.basis_.degree(beta) <= r.tmax_) r.add_term(beta, q);
    r.prune();
    return r;
  }
  friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
    return a + (-b);
  }

  MultiSeries scaled(const Rational& s) const {
    MultiSeries r(basis_, tmax_, win_);
    for (const auto& [b, q] : terms_) r.set_term(b, q.scaled(s));
    return r;
  }

  /// Classes present in this series, sorted by (degree, lex).
  std::vector<CurveClass> classes_by_degree() const {
    std::vector<CurveClass> out;
    out.reserve(terms_.size());
    for (const auto& [b, q] : terms_) out.push_back(b);
    std::sort(out.begin(), out.end(), [this](const CurveClass& x, const CurveClass& y) {
      long dx = basis_.degree(x), dy = basis_.degree(y);
      return dx != dy ? dx < dy : x < y;
    });
    return out;
  }

  /// True when the two series agree wherever both are known.
  bool agrees_with(const MultiSeries& o) const {
    check_compatible(o);
    long tm = std::min(tmax_, o.tmax_);
    for (const auto& [b, q] : terms_) {
      if (basis_.degree(b) > tm) continue;
      if (!q.agrees_with(o.term(b))) return false;
    }
    for (const auto& [b, q] : o.terms_) {
      if (basis_.degree(b) > tm) continue;
      if (!q.agrees_with(term(b))) return false;
    }
    return true;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.basis_ == b.basis_ && a.tmax_ == b.tmax_ && a.win_ == b.win_ &&
           a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiSeries& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("MultiSeries: rank mismatch");
    if (!(basis_ == o.basis_))
      throw std::invalid_argument("MultiSeries: class basis weights differ");
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_exactly_zero())
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  ClassBasis basis_;
  long tmax_;
  QWindow win_;
  std::map<CurveClass, QLaurent> terms_;

  friend MultiSeries series_mul(const MultiSeries&, const MultiSeries&);
};

/// Exact coefficient-wise convolution within the surviving truncations.
inline MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) {
  a.check_compatible(b);
  MultiSeries r(a.basis_, std::min(a.tmax_, b.tmax_), a.win_.intersect(b.win_));
  for (const auto& [ba, qa] : a.terms_) {
    long da = a.basis_.degree(ba);
    if (da > r.tmax_) continue;
    for (const auto& [bb, qb] : b.terms_) {
      if (da + a.basis_.degree(bb) > r.tmax_) continue;
      r.add_term(ba + bb, qa * qb);
    }
  }
  r.prune();
  return r;
}

inline MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  return series_mul(a, b);
}

/// exp(f) for f whose beta=0 part vanishes (a vanishing part that is only
/// known to finite q-order is allowed; it caps the knowledge of the result).
/// A finite sum in every t-degree.
inline MultiSeries series_exp(const MultiSeries& f) {
  if (!f.beta0().coeffs().empty())
    throw std::domain_error("series_exp: input must have no beta=0 part");
  MultiSeries result = MultiSeries::one(f.basis(), f.tmax(), f.window());
  MultiSeries power = result;
  for (long k = 1; k <= f.tmax() && !power.empty(); ++k) {
    power = series_mul(power, f).scaled(Rational(1, k));
    result = result + power;
  }
  return result;
}

/// log(z) for z whose beta=0 part is the constant 1 (within its known
/// q-range); inverse of series_exp.
inline MultiSeries series_log(const MultiSeries& z) {
  const QLaurent& b0 = z.beta0();
  if (!b0.knows(0) || b0.at(0) != Rational(1) || b0.coeffs().size() != 1)
    throw std::domain_error("series_log: beta=0 part must be the constant 1");
  MultiSeries u = z;
  u.set_term(z.basis().zero_class(), b0 - QLaurent::one());
  MultiSeries result(z.basis(), z.tmax(), z.window());
  MultiSeries power = MultiSeries::one(z.basis(), z.tmax(), z.window());
  for (long k = 1; k <= z.tmax(); ++k) {
    power = series_mul(power, u);
    if (power.empty()) break;
    result = result + power.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return result;
}

/// (1 + u)^k for integer k (possibly negative) and u without beta=0 part,
/// by the generalized binomial expansion.
inline MultiSeries binom_power(const MultiSeries& u, long k) {
  if (!u.beta0().coeffs().empty())
    throw std::domain_error("binom_power: input must have no beta=0 part");
  MultiSeries result = MultiSeries::one(u.basis(), u.tmax(), u.window());
  MultiSeries power = result;
  for (long j = 1; j <= u.tmax() && !power.empty(); ++j) {
    if (k >= 0 && j > k) break;
    power = series_mul(power, u);
    result = result + power.scaled(Rational(binomial(Integer(k), j)));
  }
  return result;
}

/// The m-fold cover substitution q^a t^beta -> q^{m a} t^{m beta}.
/// A ring homomorphism on the surviving truncations.
inline MultiSeries cover_substitute(const MultiSeries& f, long m) {
  if (m < 1) throw std::domain_error("cover_substitute: m must be >= 1");
  MultiSeries r(f.basis(), f.tmax(), f.window());
  for (const auto& [beta, q] : f.terms()) {
    CurveClass image = beta * m;
    if (f.basis().degree(image) > f.tmax()) continue;
    std::map<int, Rational> coeffs;
    for (const auto& [a, c] : q.coeffs()) coeffs.emplace(static_cast<int>(a * m), c);
    long stretched = m * (static_cast<long>(q.known_to()) + 1) - 1;
    int hi = (q.is_exact() || stretched >= kUnboundedExp) ? kUnboundedExp
                                                          : static_cast<int>(stretched);
    r.add_term(image, QLaurent(std::move(coeffs), hi));
  }
  return r;
}

}  // namespace gvdt

#endif  // GVDT_MULTISERIES_HPP
