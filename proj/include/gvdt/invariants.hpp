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

#ifndef GVDT_INVARIANTS_HPP
#define GVDT_INVARIANTS_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "gvdt/lambda.hpp"
#include "gvdt/multiseries.hpp"
#include "gvdt/partitions.hpp"
#include "gvdt/tables.hpp"

namespace gvdt {

/// Topological input of a threefold. For a Calabi-Yau the exponent of the
/// dimension-zero partition function equals the Euler characteristic.
struct ThreefoldData {
  long long euler = 0;
  long long chern_degree = 0;  // integral of c3 - c1 c2

  static ThreefoldData calabi_yau(long long e) { return {e, e}; }
  bool is_calabi_yau_consistent() const { return euler == chern_degree; }
};

/// M(-q)^{chern_degree} truncated at q^order, via exp(chern * log M(-q)).
inline QLaurent z0_partition_function(const ThreefoldData& x, int order) {
  if (order < 1) throw std::domain_error("z0_partition_function: order must be >= 1");
  if (x.chern_degree == 0) return QLaurent::one();  // exactly 1, all orders
  std::vector<Rational> logm(static_cast<size_t>(order) + 1);
  for (long n = 1; n <= order; ++n)
    for (long m = 1; n * m <= order; ++m) {
      Rational term(n, m);
      if ((n * m) % 2 == 1) term = -term;  // log M(-q)
      logm[static_cast<size_t>(n * m)] += term;
    }
  for (auto& v : logm) v = v * Rational(x.chern_degree);
  std::vector<Rational> coeff = ps_exp(logm);
  std::map<int, Rational> c;
  for (int k = 0; k <= order; ++k) c.emplace(k, coeff[static_cast<size_t>(k)]);
  return QLaurent(std::move(c), order);
}

/// Reduced or full Donaldson-Thomas partition function.
enum class DTKind { reduced, full };

struct DTSeries {
  MultiSeries series;
  DTKind kind = DTKind::reduced;
};

namespace detail {

/// Per-cover contribution basis in q for one GV entry, at cover degree m.
/// The change of variables q = -exp(i lambda) sends exp(i m lambda) to
/// (-q)^m, so the natural cover variable is Q = -(-q)^m:
///   genus 0:    Q (1+Q)^{-2}  (materialized through q^qmax)
///   genus g>=1: (2 + Q + 1/Q)^{g-1}  (an exact Laurent polynomial)
/// For odd m this is the familiar q^m (1+q^m)^{-2} and (2+q^m+q^{-m})^{g-1};
/// for even m the substitution flips the sign of Q.
inline QLaurent cover_basis_q(int genus, long m, int qmax) {
  if (genus >= 1) {
    if (genus == 1) return QLaurent::one();
    int s = (m % 2 == 1) ? 1 : -1;
    std::map<int, Rational> base;
    base.emplace(static_cast<int>(-m), Rational(s));
    base.emplace(0, Rational(2));
    base.emplace(static_cast<int>(m), Rational(s));
    return QLaurent(std::move(base), kUnboundedExp).pow(genus - 1);
  }
  // genus 0: sum_{k>=1} (+/-) k q^{km}
  std::map<int, Rational> c;
  long kmax = qmax >= static_cast<int>(m) ? qmax / m : 0;
  for (long k = 1; k <= kmax; ++k) {
    long long sign = (m % 2 == 1) ? (k % 2 == 1 ? 1 : -1) : -1;
    c.emplace(static_cast<int>(k * m), Rational(sign * k));
  }
  int hi = static_cast<int>((kmax + 1) * m - 1);
  return QLaurent(std::move(c), hi);
}

}  // namespace detail

/// The single (beta, g) factor of the GV product form of the reduced DT
/// partition function:
///   g = 0:    prod_{j>=1} (1 + (-1)^{j+1} q^j t^beta)^{j n}
///   g >= 1:   prod_{k=0}^{2g-2} (1 + (-1)^{g-k} q^{g-1-k} t^beta)^{(-1)^{k+g} n C(2g-2,k)}
/// The genus-0 product is cut at j = qmax; dropped factors cannot touch
/// coefficients at or below q^qmax.
inline MultiSeries genus_factor(const ClassBasis& basis, long tmax, QWindow window,
                                const CurveClass& beta, int genus, const Integer& n) {
  if (genus < 0) throw std::domain_error("genus_factor: negative genus");
  if (beta.is_zero()) throw std::domain_error("genus_factor: beta must be nonzero");
  MultiSeries result = MultiSeries::one(basis, tmax, window);
  if (n == 0) return result;
  if (basis.degree(beta) > tmax) return result;  // factor is 1 + O(t^beta)

  if (genus == 0) {
    if (window.qmax < 1)
      throw std::domain_error("genus_factor: q-window too narrow for a genus-0 factor");
    for (int j = 1; j <= window.qmax; ++j) {
      MultiSeries u = MultiSeries::monomial(basis, tmax, window, beta, j,
                                            Rational(j % 2 == 1 ? 1 : -1));
      long e = static_cast<long>(j) * static_cast<long>(n.convert_to<long long>());
      result = series_mul(result, binom_power(u, e));
    }
    // Cut product: coefficients above the window are no longer known.
    MultiSeries capped(basis, tmax, window);
    for (const auto& [b, q] : result.terms())
      capped.set_term(b, b.is_zero() ? q : q.truncated(window.qmax));
    return capped;
  }

  if (window.qmin > 1 - genus)
    throw std::domain_error("genus_factor: q-window too narrow for a genus-" +
                            std::to_string(genus) + " factor");
  for (int k = 0; k <= 2 * genus - 2; ++k) {
    int sign = ((genus - k) % 2 == 0) ? 1 : -1;
    MultiSeries u =
        MultiSeries::monomial(basis, tmax, window, beta, genus - 1 - k, Rational(sign));
    Integer e = binomial(Integer(2 * genus - 2), k) * n;
    if ((k + genus) % 2 == 1) e = -e;
    result = series_mul(result, binom_power(u, e.convert_to<long long>()));
  }
  return result;
}

/// Reduced DT partition function as the product of genus factors over all
/// table entries.
inline DTSeries gv_to_dt_reduced(const GVTable& gv, QWindow window, long tmax) {
  MultiSeries z = MultiSeries::one(gv.basis(), tmax, window);
  for (const auto& [beta, by_genus] : gv.entries())
    for (const auto& [g, n] : by_genus)
      z = series_mul(z, genus_factor(gv.basis(), tmax, window, beta, g, n));
  return {std::move(z), DTKind::reduced};
}

/// log of a reduced DT partition function (the DT-side free energy).
inline MultiSeries dt_free_energy(const DTSeries& z) {
  if (z.kind != DTKind::reduced)
    throw std::domain_error("dt_free_energy: series must be reduced");
  return series_log(z.series);
}

/// The free energy assembled directly from a GV table, class by class:
/// F'_{m beta} += (n/m) * basis(g, m). Equals dt_free_energy of
/// gv_to_dt_reduced wherever both are known.
inline MultiSeries free_energy_from_gv(const GVTable& gv, QWindow window, long tmax) {
  MultiSeries f(gv.basis(), tmax, window);
  for (const auto& [beta, by_genus] : gv.entries()) {
    long dbeta = gv.basis().degree(beta);
    for (const auto& [g, n] : by_genus) {
      for (long m = 1; m * dbeta <= tmax; ++m) {
        QLaurent contrib =
            detail::cover_basis_q(g, m, window.qmax).scaled(Rational(n, Integer(m)));
        f.add_term(beta * m, contrib);
      }
    }
  }
  return f;
}

/// Solves the GV table back out of a reduced DT partition function.
///
/// Per class in increasing degree: subtract the multiple-cover contributions
/// of already-solved classes from the free energy, then peel the residual
/// against the basis {(2+q+1/q)^{g-1}}_{g>=1} + {q(1+q)^{-2}}, top genus
/// first (most negative q-power). n^0 is fixed by the q^1 coefficient and
/// validated against q^2.
inline GVTable dt_reduced_to_gv(const DTSeries& z) {
  if (z.kind != DTKind::reduced)
    throw std::domain_error("dt_reduced_to_gv: series must be reduced");
  const MultiSeries& zs = z.series;
  const QWindow& window = zs.window();
  if (window.qmax < 2)
    throw std::domain_error("dt_reduced_to_gv: q-window too narrow: need q^2 for validation");

  MultiSeries f = series_log(zs);
  GVTable out(zs.basis());

  for (const CurveClass& beta : zs.basis().classes_up_to(zs.tmax())) {
    QLaurent r = f.term(beta);
    long dbeta = zs.basis().degree(beta);
    // Remove covers of smaller solved classes.
    for (long m = 2; m <= dbeta; ++m) {
      if (!beta.divisible_by(m)) continue;
      CurveClass gamma = beta.divided_by(m);
      auto it = out.entries().find(gamma);
      if (it == out.entries().end()) continue;
      for (const auto& [h, n] : it->second)
        r -= detail::cover_basis_q(h, m, window.qmax).scaled(Rational(n, Integer(m)));
    }
    if (r.is_exactly_zero()) continue;
    if (!r.knows(2))
      throw std::domain_error("dt_reduced_to_gv: q-window too narrow at beta=" + beta.str() +
                              ": coefficients known only up to q^" +
                              std::to_string(r.known_to()));

    auto require_integer = [&beta](const Rational& v, int g) -> Integer {
      if (!v.is_integer())
        throw std::domain_error("dt_reduced_to_gv: integrality violation at beta=" +
                                beta.str() + " g=" + std::to_string(g) + ": value " + v.str());
      return v.num();
    };

    // Peel genus >= 2 from the most negative remaining power.
    while (!r.coeffs().empty() && r.coeffs().begin()->first < 0) {
      int lo = r.coeffs().begin()->first;
      int g = 1 - lo;
      Integer ng = require_integer(r.at(lo), g);
      out.set(beta, g, ng);
      r -= detail::cover_basis_q(g, 1, window.qmax).scaled(Rational(ng));
    }
    Rational n1 = r.at(0);
    Rational n0 = r.at(1);
    if (r.at(2) != Rational(-2) * n0)
      throw std::domain_error(
          "dt_reduced_to_gv: inconsistent DT input at beta=" + beta.str() +
          ": residual is not in the span of the genus basis (q^2 coefficient " +
          r.at(2).str() + " vs expected " + (Rational(-2) * n0).str() + ")");
    if (!n1.is_zero()) out.set(beta, 1, require_integer(n1, 1));
    if (!n0.is_zero()) out.set(beta, 0, require_integer(n0, 0));
  }
  return out;
}

/// Full DT partition function: reduced series times the dimension-zero
/// factor M(-q)^{chern_degree}.
inline DTSeries dt_full(const DTSeries& z, const ThreefoldData& x) {
  if (z.kind != DTKind::reduced) throw std::domain_error("dt_full: series must be reduced");
  const MultiSeries& zs = z.series;
  MultiSeries z0(zs.basis(), zs.tmax(), zs.window());
  z0.set_term(zs.basis().zero_class(),
              z0_partition_function(x, std::max(1, zs.window().qmax)));
  return {series_mul(zs, z0), DTKind::full};
}

}  // namespace gvdt

#endif  // GVDT_INVARIANTS_HPP
