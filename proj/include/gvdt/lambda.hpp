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

#ifndef GVDT_LAMBDA_HPP
#define GVDT_LAMBDA_HPP

#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gvdt/curve_class.hpp"
#include "gvdt/rational.hpp"
#include "gvdt/tables.hpp"

namespace gvdt {

namespace detail {

/// Coefficients of (2 sin(x/2) / x)^2 as a series in x^2, up to (x^2)^jmax.
inline std::vector<Rational> sin_ratio_squared(int jmax) {
  // 2 sin(x/2)/x = sum_j (-1)^j x^{2j} / (4^j (2j+1)!)
  std::vector<Rational> u(static_cast<size_t>(jmax) + 1);
  Integer denom = 1;  // 4^j (2j+1)!
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) denom *= Integer(4) * (2 * j) * (2 * j + 1);
    u[static_cast<size_t>(j)] = Rational(j % 2 == 0 ? 1 : -1, denom);
  }
  std::vector<Rational> t(u.size());
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; i + j < u.size(); ++j) t[i + j] += u[i] * u[j];
  return t;
}

}  // namespace detail

/// [x^{2g-2+2j}] (2 sin(x/2))^{2g-2} for j = 0..jmax; the exact Laurent
/// expansion data behind the genus-g term of the Gromov-Witten free energy.
inline std::vector<Rational> sin_power_coefficients(int g, int jmax) {
  if (g < 0) throw std::domain_error("sin_power_coefficients: negative genus");
  if (jmax < 0) return {};
  std::vector<Rational> t = detail::sin_ratio_squared(jmax);
  std::vector<Rational> acc(static_cast<size_t>(jmax) + 1);
  if (g == 0) {
    // Invert t (constant term 1).
    acc[0] = 1;
    for (int n = 1; n <= jmax; ++n) {
      Rational s;
      for (int k = 1; k <= n; ++k) s += t[static_cast<size_t>(k)] * acc[static_cast<size_t>(n - k)];
      acc[static_cast<size_t>(n)] = -s;
    }
    return acc;
  }
  acc[0] = 1;
  for (int e = 0; e < g - 1; ++e) {
    std::vector<Rational> next(acc.size());
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = 0; i + j < acc.size(); ++j) next[i + j] += acc[i] * t[j];
    acc = std::move(next);
  }
  return acc;
}

inline Rational rational_int_pow(long base, long exp) {
  Integer b(base);
  if (exp >= 0) return Rational(boost::multiprecision::pow(b, static_cast<unsigned>(exp)));
  return Rational(1, boost::multiprecision::pow(b, static_cast<unsigned>(-exp)));
}

/// The Gromov-Witten free energy as a truncated Laurent series in lambda:
/// coefficient of lambda^{2j-2} t^beta is stored at (beta, j). Only even
/// shifted powers occur; j = 0 is the genus-0 (lambda^{-2}) layer.
class LambdaSeries {
 public:
  LambdaSeries(ClassBasis basis, int jmax, long dmax)
      : basis_(std::move(basis)), jmax_(jmax), dmax_(dmax) {}

  const ClassBasis& basis() const { return basis_; }
  int jmax() const { return jmax_; }
  long dmax() const { return dmax_; }

  Rational coefficient(const CurveClass& beta, int j) const {
    auto it = c_.find(beta);
    if (it == c_.end()) return Rational(0);
    auto jt = it->second.find(j);
    return jt == it->second.end() ? Rational(0) : jt->second;
  }

  void add(const CurveClass& beta, int j, const Rational& v) {
    if (v.is_zero()) return;
    Rational& slot = c_[beta][j];
    slot += v;
    if (slot.is_zero()) {
      c_[beta].erase(j);
      if (c_[beta].empty()) c_.erase(beta);
    }
  }

  /// Expands every GV entry through its multiple covers:
  /// n^g_beta contributes n (1/m) m^{2g'-2} a^{(g)}_{g'-g} to (m beta, g').
  static LambdaSeries from_gv(const GVTable& gv, int jmax, long dmax) {
    LambdaSeries f(gv.basis(), jmax, dmax);
    for (const auto& [beta, by_genus] : gv.entries()) {
      long dbeta = gv.basis().degree(beta);
      for (const auto& [g, n] : by_genus) {
        if (g > jmax) continue;
        std::vector<Rational> a = sin_power_coefficients(g, jmax - g);
        for (long m = 1; m * dbeta <= dmax; ++m) {
          CurveClass target = beta * m;
          for (int gp = g; gp <= jmax; ++gp) {
            Rational contrib = Rational(n) * Rational(1, m) * rational_int_pow(m, 2 * gp - 2) *
                               a[static_cast<size_t>(gp - g)];
            f.add(target, gp, contrib);
          }
        }
      }
    }
    return f;
  }

  GWTable to_gw() const {
    GWTable gw(basis_);
    for (const auto& [beta, by_j] : c_)
      for (const auto& [j, v] : by_j) gw.set(beta, j, v);
    gw.declare_known(jmax_, dmax_);
    return gw;
  }

 private:
  ClassBasis basis_;
  int jmax_;
  long dmax_;
  std::map<CurveClass, std::map<int, Rational>> c_;
};

/// GV -> GW: expand each (2 sin(m lambda / 2))^{2g-2} exactly and collect
/// lambda^{2g'-2} t^beta coefficients. dmax < 0 means "max degree in gv".
inline GWTable gv_to_gw(const GVTable& gv, int jmax, long dmax = -1) {
  if (jmax < 0) throw std::domain_error("gv_to_gw: jmax must be >= 0");
  if (dmax < 0) dmax = gv.max_degree();
  return LambdaSeries::from_gv(gv, jmax, dmax).to_gw();
}

/// Result of inverting the free-energy expansion: solved values are rational
/// in general; integrality is reported per entry rather than assumed.
struct GvFromGwResult {
  ClassBasis basis;
  std::map<CurveClass, std::map<int, Rational>> values;  // nonzero entries only
  std::vector<std::tuple<CurveClass, int, Rational>> non_integral;

  bool integral() const { return non_integral.empty(); }

  GVTable table() const {
    if (!integral()) {
      const auto& [beta, g, v] = non_integral.front();
      throw std::domain_error("gw_to_gv: non-integer invariant at beta=" + beta.str() +
                              " g=" + std::to_string(g) + ": " + v.str());
    }
    GVTable t(basis);
    for (const auto& [beta, by_g] : values)
      for (const auto& [g, v] : by_g) t.set(beta, g, v.num());
    return t;
  }
};

/// Triangular inversion of gv_to_gw: classes in increasing degree, genus
/// ascending; at each step the unknown enters with coefficient 1.
inline GvFromGwResult gw_to_gv(const GWTable& gw, int gmax) {
  if (gmax < 0) throw std::domain_error("gw_to_gv: gmax must be >= 0");
  if (gw.empty()) return GvFromGwResult{gw.basis(), {}, {}};
  if (gmax > gw.known_genus())
    throw std::domain_error("gw_to_gv: missing prerequisite GW entries: table populated only "
                            "up to genus " +
                            std::to_string(gw.known_genus()));
  GvFromGwResult res{gw.basis(), {}, {}};
  std::vector<std::vector<Rational>> a(static_cast<size_t>(gmax) + 1);
  for (int h = 0; h <= gmax; ++h) a[static_cast<size_t>(h)] = sin_power_coefficients(h, gmax - h);

  auto solved = [&res](const CurveClass& beta, int g) -> Rational {
    auto it = res.values.find(beta);
    if (it == res.values.end()) return Rational(0);
    auto jt = it->second.find(g);
    return jt == it->second.end() ? Rational(0) : jt->second;
  };

  for (const CurveClass& beta : gw.basis().classes_up_to(gw.known_degree())) {
    long dbeta = gw.basis().degree(beta);
    for (int g = 0; g <= gmax; ++g) {
      Rational rhs = gw.N(beta, g);
      // Multiple covers of strictly smaller classes.
      for (long m = 2; m <= dbeta; ++m) {
        if (!beta.divisible_by(m)) continue;
        CurveClass gamma = beta.divided_by(m);
        for (int h = 0; h <= g; ++h) {
          Rational nh = solved(gamma, h);
          if (nh.is_zero()) continue;
          rhs -= nh * Rational(1, m) * rational_int_pow(m, 2 * g - 2) *
                 a[static_cast<size_t>(h)][static_cast<size_t>(g - h)];
        }
      }
      // Lower-genus contributions of beta itself (m = 1).
      for (int h = 0; h < g; ++h) {
        Rational nh = solved(beta, h);
        if (nh.is_zero()) continue;
        rhs -= nh * a[static_cast<size_t>(h)][static_cast<size_t>(g - h)];
      }
      if (!rhs.is_zero()) {
        res.values[beta][g] = rhs;
        if (!rhs.is_integer()) res.non_integral.emplace_back(beta, g, rhs);
      }
    }
  }
  return res;
}

}  // namespace gvdt

#endif  // GVDT_LAMBDA_HPP
