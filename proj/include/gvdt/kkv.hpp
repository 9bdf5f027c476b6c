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

#ifndef GVDT_KKV_HPP
#define GVDT_KKV_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "gvdt/invariants.hpp"
#include "gvdt/multiseries.hpp"
#include "gvdt/rational.hpp"

namespace gvdt {

/// Input of the KKV evaluation: the moduli space M = I_{1-g}(X, beta) of the
/// curve family and the Euler characteristics of the relative Hilbert
/// schemes C^[0..delta] of points on the universal curve. Dimensions of
/// C^[n] default to dim M + n. Geometric validity of the inputs (smoothness
/// of the C^[n], the support hypotheses) is the caller's responsibility.
struct KKVInput {
  int genus = 0;
  int delta = 0;
  long long dim_m = 0;
  std::vector<Integer> eulers;   // e(C^[0]), ..., e(C^[delta])
  std::vector<long long> dims;   // optional; empty = default dim_m + n

  long long dim_c(int n) const {
    if (!dims.empty()) return dims[static_cast<size_t>(n)];
    return dim_m + n;
  }

  void validate() const {
    if (genus < 0) throw std::domain_error("kkv: negative genus");
    if (delta < 0 || delta > genus)
      throw std::domain_error("kkv: delta must satisfy 0 <= delta <= genus");
    if (eulers.size() != static_cast<size_t>(delta) + 1)
      throw std::domain_error("kkv: expected " + std::to_string(delta + 1) +
                              " Euler characteristics e(C^[0..delta])");
    if (!dims.empty() && dims.size() != eulers.size())
      throw std::domain_error("kkv: dims list must match eulers list");
  }
};

/// The KKV Euler-characteristic formula for n^{g-delta}_beta:
///   (-1)^{dim M + delta} n^{g-delta} = e(C^[delta]) + (2g-2delta) e(C^[delta-1])
///     + sum_{i=2}^{delta} (1/i!) (2g-2delta+2i-2)
///       (2g-2delta+i-3)(2g-2delta+i-4)...(2g-2delta-1) e(C^[delta-i]),
/// the falling product carrying i-1 consecutive factors. The rational
/// prefactors must clear to an integer; inputs for which they do not are
/// rejected.
inline Integer kkv_invariant(const KKVInput& in) {
  in.validate();
  const long g = in.genus, d = in.delta;
  Rational sum(in.eulers[static_cast<size_t>(d)]);
  if (d >= 1) sum += Rational(2 * g - 2 * d) * Rational(in.eulers[static_cast<size_t>(d - 1)]);
  Integer factorial = 1;
  for (long i = 2; i <= d; ++i) {
    factorial *= i;
    Integer prod = 2 * g - 2 * d + 2 * i - 2;
    for (long f = 2 * g - 2 * d + i - 3; f >= 2 * g - 2 * d - 1; --f) prod *= f;
    sum += Rational(prod, factorial) * Rational(in.eulers[static_cast<size_t>(d - i)]);
  }
  if ((in.dim_m + d) % 2 != 0) sum = -sum;
  if (!sum.is_integer())
    throw std::domain_error("kkv_invariant: rational prefactors do not clear: " + sum.str());
  return sum.num();
}

/// Contribution of the family to the reduced DT partition function, valid
/// for delta <= 1:
///   sum_{n=0}^{delta} (-1)^{dim C^[n]} e(C^[n]) q^{n+1-g} t^beta,
/// with coefficients beyond q^{delta+1-g} unknown.
inline MultiSeries kkv_dt_contribution(const KKVInput& in) {
  in.validate();
  if (in.delta > 1)
    throw std::domain_error("kkv_dt_contribution: only delta <= 1 is covered");
  int qlo = 1 - in.genus;
  int qhi = in.delta + 1 - in.genus;
  ClassBasis basis;  // rank 1, weight 1
  MultiSeries s(basis, 1, QWindow{qlo, qhi});
  std::map<int, Rational> c;
  for (int n = 0; n <= in.delta; ++n) {
    Integer v = in.eulers[static_cast<size_t>(n)];
    if (in.dim_c(n) % 2 != 0) v = -v;
    if (v != 0) c.emplace(n + 1 - in.genus, Rational(v));
  }
  s.set_term(CurveClass::of_degree(1), QLaurent(std::move(c), qhi));
  return s;
}

/// Euler characteristic of the blowup of M x X along a curve family C:
/// the exceptional divisor is a P^1 bundle over C, so
/// e = e(M) e(X) - e(C) + 2 e(C).
inline Integer euler_blowup(const Integer& e_m, const Integer& e_x, const Integer& e_c) {
  return e_m * e_x + e_c;
}

/// Euler characteristic of the Hilbert scheme of n points on a threefold
/// with Euler characteristic eX, for the smooth range n <= 3:
///   n=2: stratify Sym^2 X by the diagonal; the punctual fiber is P^2.
///   n=3: strata of Sym^3 X with P^2- and P^5-bundle corrections.
inline Integer euler_hilb_points(int n, const Integer& e) {
  switch (n) {
    case 1:
      return e;
    case 2:
      return (e * e - e) / 2 + 3 * e;
    case 3:
      return (e * e * e - 3 * e * e + 2 * e) / 6 + 3 * (e * e - e) + 6 * e;
    default:
      throw std::domain_error(
          "euler_hilb_points: no closed form for n >= 4 (the punctual locus is singular)");
  }
}

/// Verifies (-1)^n e(Hilb^n) = [q^n] M(-q)^e, the dimension-zero
/// Donaldson-Thomas coefficient check.
inline bool check_dim_zero_coeff(int n, long long euler, int order) {
  if (n < 1 || n > 3) throw std::domain_error("check_dim_zero_coeff: n must be in {1,2,3}");
  if (order < n) throw std::domain_error("check_dim_zero_coeff: order too small");
  QLaurent z0 = z0_partition_function(ThreefoldData::calabi_yau(euler), order);
  Integer lhs = euler_hilb_points(n, Integer(euler));
  if (n % 2 == 1) lhs = -lhs;
  return z0.at(n) == Rational(lhs);
}

}  // namespace gvdt

#endif  // GVDT_KKV_HPP
