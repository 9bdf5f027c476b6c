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

#ifndef GVDT_ACCEPTANCE_HPP
#define GVDT_ACCEPTANCE_HPP

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gvdt/datasets.hpp"
#include "gvdt/invariants.hpp"
#include "gvdt/kkv.hpp"
#include "gvdt/lambda.hpp"
#include "gvdt/partitions.hpp"

namespace gvdt::acceptance {

/// Random rank-1 GV table: degrees 1..dmax, genera 0..gmax, entries in
/// [-nmax, nmax], at least one entry. Deterministic for a given generator
/// state.
inline GVTable random_gv_table(std::mt19937& rng, long dmax, int gmax, long nmax) {
  std::uniform_int_distribution<long> value(-nmax, nmax);
  std::uniform_int_distribution<int> coin(0, 1);
  GVTable t{ClassBasis()};
  bool any = false;
  for (long d = 1; d <= dmax; ++d) {
    for (int g = 0; g <= gmax; ++g) {
      if (!coin(rng)) continue;
      long n = value(rng);
      if (n == 0) continue;
      t.set(CurveClass::of_degree(d), g, n);
      any = true;
    }
  }
  if (!any) t.set(CurveClass::of_degree(1), 0, 1);
  return t;
}

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

inline void criterion_mcmahon_oracle(Check& c) {
  QLaurent m = mcmahon_series(12, +1);
  for (int n = 0; n <= 12; ++n) {
    Integer pp = plane_partition_oracle(n);
    c.expect(m.at(n) == Rational(pp), "[q^" + std::to_string(n) + "] M(q) = " + m.at(n).str() +
                                          " but enumeration gives " + pp.str());
  }
}

inline void criterion_dimension_zero(Check& c) {
  for (int n = 1; n <= 3; ++n)
    for (long long e = -50; e <= 50; ++e)
      c.expect(check_dim_zero_coeff(n, e, 4),
               "mismatch at n=" + std::to_string(n) + " e=" + std::to_string(e));
}

inline void criterion_local_elliptic(Check& c) {
  DTSeries z = gv_to_dt_reduced(local_elliptic_table(10), QWindow{-3, 8}, 10);
  for (long k = 0; k <= 10; ++k) {
    const QLaurent& term = z.series.term(CurveClass::of_degree(k));
    Integer pk = partition_count_oracle(k);
    c.expect(term.at(0) == Rational(pk), "t^" + std::to_string(k) + " constant term " +
                                             term.at(0).str() + " != p(k) = " + pk.str());
    c.expect(term.coeffs().size() == 1, "t^" + std::to_string(k) + " has q-dependence");
  }
}

inline void criterion_local_p1(Check& c) {
  GVTable t{ClassBasis()};
  t.set(CurveClass::of_degree(1), 0, 1);
  DTSeries z = gv_to_dt_reduced(t, QWindow{0, 4}, 2);
  const QLaurent& term = z.series.term(CurveClass::of_degree(1));
  for (int k = 1; k <= 4; ++k) {
    Rational expected(k % 2 == 1 ? k : -k);
    c.expect(term.at(k) == expected, "[q^" + std::to_string(k) + " t] = " + term.at(k).str() +
                                         " != " + expected.str());
  }
  c.expect(term.at(0).is_zero(), "unexpected q^0 coefficient at t^1");
}

inline void criterion_local_p2(Check& c) {
  ExampleModel p2 = load_example("local_p2_low_degree");
  DTSeries z = gv_to_dt_reduced(p2.gv, QWindow{-3, 8}, 4);
  Rational qt4 = z.series.term(CurveClass::of_degree(4)).at(1);
  c.expect(qt4 == Rational(-30), "[q t^4] of the d<=3 product is " + qt4.str() + ", not -30");
  Integer naive = p2.reference_values.at("n0_4_naive");
  Integer expected = p2.reference_values.at("n0_4");
  Integer solved = naive - qt4.to_integer();
  c.expect(solved == expected,
           "solved n^0_4 = " + solved.str() + " but reference is " + expected.str());
}

inline void criterion_roundtrips(Check& c) {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    GVTable t = random_gv_table(rng, 4, 3, 20);
    GVTable via_dt = dt_reduced_to_gv(gv_to_dt_reduced(t, QWindow{-8, 8}, 4));
    c.expect(via_dt == t, "gv2dt/dt2gv roundtrip failed at trial " + std::to_string(trial) +
                              "\ninput:\n" + t.str() + "output:\n" + via_dt.str());
    GvFromGwResult back = gw_to_gv(gv_to_gw(t, 3, 4), 3);
    c.expect(back.integral(), "gw2gv produced non-integers at trial " + std::to_string(trial));
    if (back.integral())
      c.expect(back.table() == t, "gv2gw/gw2gv roundtrip failed at trial " +
                                      std::to_string(trial) + "\ninput:\n" + t.str() +
                                      "output:\n" + back.table().str());
  }
}

inline void criterion_multiple_cover(Check& c) {
  for (long long n : {1LL, 2LL, -7LL}) {
    GVTable t{ClassBasis()};
    t.set(CurveClass::of_degree(1), 0, n);
    GWTable gw = gv_to_gw(t, 1, 6);
    for (long d = 1; d <= 6; ++d) {
      Rational expected(n, d * d * d);
      Rational got = gw.N(CurveClass::of_degree(d), 0);
      c.expect(got == expected, "N^0_" + std::to_string(d) + " = " + got.str() + " != " +
                                    expected.str() + " for n=" + std::to_string(n));
    }
    Rational g1 = gw.N(CurveClass::of_degree(1), 1);
    c.expect(g1 == Rational(n, 12),
             "N^1_1 = " + g1.str() + " != " + Rational(n, 12).str());
  }
}

inline void criterion_kkv_spots(Check& c) {
  auto run = [](int g, int d, long long dim, std::vector<Integer> e) {
    return kkv_invariant(KKVInput{g, d, dim, std::move(e), {}});
  };
  c.expect(run(0, 0, 2, {3}) == 3, "lines in the plane: expected 3");
  c.expect(run(0, 0, 5, {6}) == -6, "conics: expected -6");
  c.expect(run(1, 0, 9, {10}) == -10, "cubics: expected -10");

  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> euler(-30, 30);
  std::uniform_int_distribution<int> genus(1, 6);
  std::uniform_int_distribution<long long> halfdim(0, 10);
  for (int trial = 0; trial < 50 && c.ok; ++trial) {
    long long dim = 2 * halfdim(rng);  // even-dimensional moduli
    int g = genus(rng);
    Integer em(euler(rng)), ec(euler(rng));
    Integer d0 = kkv_invariant(KKVInput{g, 0, dim, {em}, {}});
    c.expect(d0 == em, "delta=0 disagrees with (-1)^dim e(M) at trial " +
                           std::to_string(trial));
    Integer d1 = kkv_invariant(KKVInput{g, 1, dim, {em, ec}, {}});
    c.expect(-d1 == ec + Integer(2 * g - 2) * em,
             "delta=1 disagrees with e(C) + (2g-2)e(M) at trial " + std::to_string(trial));
    MultiSeries contrib = kkv_dt_contribution(KKVInput{g, 1, dim, {em, ec}, {}});
    Rational second = contrib.term(CurveClass::of_degree(1)).at(2 - g);
    c.expect(second == Rational(-ec),
             "q^{2-g} DT coefficient disagrees with (-1)^{dim C} e(C) at trial " +
                 std::to_string(trial));
  }
}

inline void criterion_derivation_chains(Check& c) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25 && c.ok; ++trial) {
    GVTable t = random_gv_table(rng, 4, 3, 20);
    QWindow win{-8, 8};
    MultiSeries product = gv_to_dt_reduced(t, win, 4).series;
    MultiSeries exponential = series_exp(free_energy_from_gv(t, win, 4));
    c.expect(product.agrees_with(exponential),
             "product and exp(F') disagree at trial " + std::to_string(trial));
    for (const auto& [beta, q] : product.terms()) {
      int common = std::min(q.known_to(), exponential.term(beta).known_to());
      c.expect(common >= 2, "window overlap too small at trial " + std::to_string(trial));
    }
  }
}

inline CriterionResult timed(int id, const std::string& name, double budget_seconds,
                             const std::function<void(Check&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && r.seconds >= budget_seconds) {
    c.ok = false;
    c.detail << "; exceeded time budget of " << budget_seconds << "s";
  }
  r.passed = c.ok;
  r.detail = c.detail.str();
  return r;
}

}  // namespace detail

/// Runs every acceptance criterion; results come back in order.
inline std::vector<CriterionResult> run_all() {
  using detail::timed;
  std::vector<CriterionResult> out;
  out.push_back(timed(1, "mcmahon-plane-partition-oracle", 10, detail::criterion_mcmahon_oracle));
  out.push_back(timed(2, "dimension-zero-coefficients", 5, detail::criterion_dimension_zero));
  out.push_back(timed(3, "local-elliptic-partition-series", 0, detail::criterion_local_elliptic));
  out.push_back(timed(4, "local-p1-degree-one-factor", 0, detail::criterion_local_p1));
  out.push_back(timed(5, "local-p2-degree-four-correction", 0, detail::criterion_local_p2));
  out.push_back(timed(6, "random-table-roundtrips", 60, detail::criterion_roundtrips));
  out.push_back(timed(7, "genus-zero-multiple-cover-law", 0, detail::criterion_multiple_cover));
  out.push_back(timed(8, "kkv-spot-checks", 0, detail::criterion_kkv_spots));
  out.push_back(timed(9, "derivation-chain-equivalence", 0, detail::criterion_derivation_chains));
  return out;
}

/// Prints one PASS/FAIL line per criterion; returns true when all passed.
inline bool report(std::ostream& os, const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
    os << buf;
    if (!r.passed && !r.detail.empty()) os << ": " << r.detail;
    os << "\n";
    all = all && r.passed;
  }
  return all;
}

}  // namespace gvdt::acceptance

#endif  // GVDT_ACCEPTANCE_HPP
