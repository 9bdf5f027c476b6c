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

#ifndef GVDT_PARTITIONS_HPP
#define GVDT_PARTITIONS_HPP

#include <stdexcept>
#include <vector>

#include "gvdt/qlaurent.hpp"
#include "gvdt/rational.hpp"

namespace gvdt {

/// Number of integer partitions of k, by Euler's pentagonal-number
/// recurrence. Pure function; builds its table locally, so it is safe to
/// call concurrently.
inline Integer partition_count(long k) {
  if (k < 0) throw std::domain_error("partition_count: negative argument");
  std::vector<Integer> p(static_cast<size_t>(k) + 1);
  p[0] = 1;
  for (long n = 1; n <= k; ++n) {
    Integer acc = 0;
    for (long j = 1;; ++j) {
      long g1 = j * (3 * j - 1) / 2;
      long g2 = j * (3 * j + 1) / 2;
      if (g1 > n) break;
      Integer term = p[static_cast<size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p[static_cast<size_t>(k)];
}

namespace detail {

inline Integer count_partitions_rec(long remaining, long max_part) {
  if (remaining == 0) return 1;
  Integer total = 0;
  for (long part = std::min(max_part, remaining); part >= 1; --part)
    total += count_partitions_rec(remaining - part, part);
  return total;
}

// Rows are weakly decreasing and bounded componentwise by the previous row;
// rows are enumerated in row-major lexicographic order.
inline Integer count_plane_partitions_rows(long remaining, const std::vector<long>& prev_row);

inline Integer extend_row(long remaining, const std::vector<long>& prev_row, size_t col,
                          long last_value, std::vector<long>& row) {
  // Option 1: close the current row here and start the next one.
  Integer total = count_plane_partitions_rows(remaining, row);
  if (remaining == 0) return total;
  // Option 2: append one more entry, bounded by the row above and the left
  // neighbour. Rows may not outgrow the row above them (the column above a
  // fresh cell would be zero, breaking column monotonicity).
  if (col >= prev_row.size()) return total;
  long bound = std::min({last_value, remaining, prev_row[col]});
  for (long v = 1; v <= bound; ++v) {
    row.push_back(v);
    total += extend_row(remaining - v, prev_row, col + 1, v, row);
    row.pop_back();
  }
  return total;
}

inline Integer count_plane_partitions_rows(long remaining, const std::vector<long>& prev_row) {
  if (remaining == 0) return 1;
  if (prev_row.empty()) return 0;  // rows below an empty row must be empty
  Integer total = 0;
  long first_max = std::min(prev_row[0], remaining);
  std::vector<long> row;
  for (long v = 1; v <= first_max; ++v) {
    row.assign(1, v);
    total += extend_row(remaining - v, prev_row, 1, v, row);
  }
  return total;
}

}  // namespace detail

/// Independent oracle for partition_count: exhaustive recursion over
/// non-increasing summand lists. Desk scale only.
inline Integer partition_count_oracle(long k) {
  if (k < 0) throw std::domain_error("partition_count_oracle: negative argument");
  if (k > 40) throw std::domain_error("partition_count_oracle: k > 40 exceeds desk scale");
  return detail::count_partitions_rec(k, k);
}

/// Number of plane partitions of n (arrays with weakly decreasing rows and
/// columns summing to n), by exhaustive enumeration of the arrays.
/// Independent of any series expansion.
inline Integer plane_partition_oracle(long n) {
  if (n < 0) throw std::domain_error("plane_partition_oracle: negative argument");
  if (n > 12) throw std::domain_error("plane_partition_oracle: n > 12 exceeds desk scale");
  if (n == 0) return 1;
  // The first row is bounded only by the total.
  std::vector<long> top(static_cast<size_t>(n), n);
  return detail::count_plane_partitions_rows(n, top);
}

/// MacMahon series M(sign*q) = prod_{n>=1} (1 - (sign*q)^n)^{-n} truncated
/// at q^order. Computed as exp(sum_{n,m} (n/m) q^{nm}) rather than by the
/// naive product.
inline QLaurent mcmahon_series(int order, int sign = +1) {
  if (order < 1) throw std::domain_error("mcmahon_series: order must be >= 1");
  if (sign != 1 && sign != -1) throw std::domain_error("mcmahon_series: sign must be +1 or -1");
  std::vector<Rational> logm(static_cast<size_t>(order) + 1, Rational(0));
  for (long n = 1; n <= order; ++n)
    for (long m = 1; n * m <= order; ++m)
      logm[static_cast<size_t>(n * m)] += Rational(n, m);
  std::vector<Rational> coeff = ps_exp(logm);
  std::map<int, Rational> c;
  for (long k = 0; k <= order; ++k) {
    Rational v = coeff[static_cast<size_t>(k)];
    if (sign == -1 && k % 2 == 1) v = -v;
    c.emplace(static_cast<int>(k), std::move(v));
  }
  return QLaurent(std::move(c), order);
}

}  // namespace gvdt

#endif  // GVDT_PARTITIONS_HPP
