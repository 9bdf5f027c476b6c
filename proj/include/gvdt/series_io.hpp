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

#ifndef GVDT_SERIES_IO_HPP
#define GVDT_SERIES_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvdt/multiseries.hpp"

namespace gvdt {

namespace detail {

inline std::vector<long> parse_bracket_vector(const std::string& text, int line_no) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": expected [a1,...,ar], got '" + text + "'");
  std::vector<long> coords;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream is(body);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    try {
      coords.push_back(std::stol(piece));
    } catch (const std::exception&) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": bad integer '" + piece + "'");
    }
  }
  if (coords.empty())
    throw std::runtime_error("line " + std::to_string(line_no) + ": empty class vector");
  return coords;
}

inline std::string expect_prefix(const std::string& token, const std::string& prefix,
                                 int line_no) {
  if (token.rfind(prefix, 0) != 0)
    throw std::runtime_error("line " + std::to_string(line_no) + ": expected '" + prefix +
                             "...', got '" + token + "'");
  return token.substr(prefix.size());
}

}  // namespace detail

/// Canonical line-oriented text form, one monomial per line:
///   beta=[a1,...,ar] q^k coeff=p/q
/// sorted by (degree, lexicographic beta, q-exponent). Only coefficients
/// inside both the requested window and the known range are emitted.
inline void write_series(std::ostream& os, const MultiSeries& s) {
  for (const CurveClass& beta : s.classes_by_degree()) {
    const QLaurent& q = s.term(beta);
    int hi = std::min(q.known_to(), s.window().qmax);
    for (const auto& [k, c] : q.coeffs()) {
      if (k < s.window().qmin || k > hi) continue;
      os << "beta=" << beta.str() << " q^" << k << " coeff=" << c.str() << "\n";
    }
  }
}

inline std::string series_to_string(const MultiSeries& s) {
  std::ostringstream os;
  write_series(os, s);
  return os.str();
}

/// Parses the line format back into a series over the given basis. The
/// declared window bounds how far each class is taken as known.
inline MultiSeries read_series(std::istream& is, const ClassBasis& basis, long tmax,
                               QWindow window) {
  MultiSeries s(basis, tmax, window);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string beta_tok, q_tok, coeff_tok;
    if (!(ls >> beta_tok >> q_tok >> coeff_tok))
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 'beta=[...] q^k coeff=p/q'");
    auto coords =
        detail::parse_bracket_vector(detail::expect_prefix(beta_tok, "beta=", line_no), line_no);
    CurveClass beta{coords};
    if (beta.rank() != basis.rank())
      throw std::runtime_error("line " + std::to_string(line_no) + ": rank " +
                               std::to_string(beta.rank()) + " does not match basis rank " +
                               std::to_string(basis.rank()));
    int k = 0;
    try {
      k = std::stoi(detail::expect_prefix(q_tok, "q^", line_no));
    } catch (const std::exception&) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": bad exponent in '" +
                               q_tok + "'");
    }
    Rational c;
    try {
      c = Rational::parse(detail::expect_prefix(coeff_tok, "coeff=", line_no));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (basis.degree(beta) > tmax)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": class degree exceeds tmax");
    if (!s.term(beta).coeffs().count(k)) {
      QLaurent ql = s.term(beta);
      std::map<int, Rational> coeffs = ql.coeffs();
      coeffs[k] = c;
      s.set_term(beta, QLaurent(std::move(coeffs), window.qmax));
    } else {
      throw std::runtime_error("line " + std::to_string(line_no) + ": duplicate monomial");
    }
  }
  return s;
}

}  // namespace gvdt

#endif  // GVDT_SERIES_IO_HPP
