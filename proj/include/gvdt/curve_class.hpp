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

#ifndef GVDT_CURVE_CLASS_HPP
#define GVDT_CURVE_CLASS_HPP

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gvdt {

/// An effective curve class: a vector of non-negative integers over a fixed
/// basis of rank r. Acts as the exponent of the formal monomial t^beta, so
/// addition of classes is multiplication of monomials.
class CurveClass {
 public:
  CurveClass() = default;
  explicit CurveClass(std::vector<long> coords) : coords_(std::move(coords)) {
    for (long c : coords_) {
      if (c < 0) throw std::domain_error("CurveClass: negative coordinate");
    }
  }

  /// Rank-1 convenience: the class d*[generator].
  static CurveClass of_degree(long d) { return CurveClass({d}); }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<long>& coords() const { return coords_; }
  long operator[](int i) const { return coords_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](long c) { return c == 0; });
  }

  CurveClass operator+(const CurveClass& o) const {
    check_rank(o);
    std::vector<long> c(coords_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return CurveClass(std::move(c));
  }

  CurveClass operator*(long m) const {
    std::vector<long> c(coords_);
    for (auto& x : c) x *= m;
    return CurveClass(std::move(c));
  }

  /// beta / m when every coordinate is divisible by m; throws otherwise.
  CurveClass divided_by(long m) const {
    if (!divisible_by(m)) throw std::domain_error("CurveClass: not divisible");
    std::vector<long> c(coords_);
    for (auto& x : c) x /= m;
    return CurveClass(std::move(c));
  }

  bool divisible_by(long m) const {
    return m >= 1 &&
           std::all_of(coords_.begin(), coords_.end(), [m](long c) { return c % m == 0; });
  }

  auto operator<=>(const CurveClass& o) const = default;

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i) os << ',';
      os << coords_[i];
    }
    os << ']';
    return os.str();
  }

 private:
  void check_rank(const CurveClass& o) const {
    if (coords_.size() != o.coords_.size())
      throw std::invalid_argument("CurveClass: rank mismatch");
  }

  std::vector<long> coords_;
};

/// Declares the class lattice: a rank and positive integer weights defining
/// the degree functional deg(beta) = sum_i w_i * beta_i.
class ClassBasis {
 public:
  ClassBasis() : weights_(1, 1) {}  // rank 1, weight 1
  explicit ClassBasis(int rank) : weights_(static_cast<size_t>(rank), 1) {
    if (rank < 1) throw std::domain_error("ClassBasis: rank must be positive");
  }
  explicit ClassBasis(std::vector<long> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::domain_error("ClassBasis: rank must be positive");
    for (long w : weights_) {
      if (w < 1) throw std::domain_error("ClassBasis: weights must be positive");
    }
  }

  int rank() const { return static_cast<int>(weights_.size()); }
  const std::vector<long>& weights() const { return weights_; }

  long degree(const CurveClass& beta) const {
    if (beta.rank() != rank()) throw std::invalid_argument("ClassBasis: rank mismatch");
    long d = 0;
    for (size_t i = 0; i < weights_.size(); ++i) d += weights_[i] * beta.coords()[i];
    return d;
  }

  CurveClass zero_class() const {
    return CurveClass(std::vector<long>(static_cast<size_t>(rank()), 0));
  }

  /// All effective classes with 1 <= degree <= dmax, sorted by (degree, lex).
  std::vector<CurveClass> classes_up_to(long dmax) const {
    std::vector<CurveClass> out;
    std::vector<long> cur(static_cast<size_t>(rank()), 0);
    enumerate(0, dmax, cur, out);
    std::sort(out.begin(), out.end(), [this](const CurveClass& a, const CurveClass& b) {
      long da = degree(a), db = degree(b);
      return da != db ? da < db : a < b;
    });
    return out;
  }

  bool operator==(const ClassBasis& o) const = default;

 private:
  void enumerate(int i, long dmax, std::vector<long>& cur, std::vector<CurveClass>& out) const {
    if (i == rank()) {
      CurveClass c(cur);
      if (!c.is_zero()) out.push_back(std::move(c));
      return;
    }
    long w = weights_[static_cast<size_t>(i)];
    long used = 0;
    for (int j = 0; j < i; ++j) used += weights_[static_cast<size_t>(j)] * cur[static_cast<size_t>(j)];
    for (long v = 0; used + v * w <= dmax; ++v) {
      cur[static_cast<size_t>(i)] = v;
      enumerate(i + 1, dmax, cur, out);
    }
    cur[static_cast<size_t>(i)] = 0;
  }

  std::vector<long> weights_;
};

}  // namespace gvdt

#endif  // GVDT_CURVE_CLASS_HPP
