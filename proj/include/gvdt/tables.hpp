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

#ifndef GVDT_TABLES_HPP
#define GVDT_TABLES_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvdt/curve_class.hpp"
#include "gvdt/rational.hpp"
#include "gvdt/series_io.hpp"

namespace gvdt {

namespace detail {

template <typename Value>
class InvariantTable {
 public:
  explicit InvariantTable(ClassBasis basis) : basis_(std::move(basis)) {}

  const ClassBasis& basis() const { return basis_; }
  int rank() const { return basis_.rank(); }
  bool empty() const { return entries_.empty(); }

  void set(const CurveClass& beta, int genus, Value v) {
    if (beta.rank() != rank()) throw std::invalid_argument("table: rank mismatch");
    if (beta.is_zero()) throw std::domain_error("table: beta=0 entries are not allowed");
    if (genus < 0) throw std::domain_error("table: negative genus");
    if (v == Value(0)) {
      auto it = entries_.find(beta);
      if (it != entries_.end()) {
        it->second.erase(genus);
        if (it->second.empty()) entries_.erase(it);
      }
      return;
    }
    entries_[beta][genus] = std::move(v);
  }

  Value value(const CurveClass& beta, int genus) const {
    auto it = entries_.find(beta);
    if (it == entries_.end()) return Value(0);
    auto jt = it->second.find(genus);
    return jt == it->second.end() ? Value(0) : jt->second;
  }

  /// Largest genus with a nonzero entry at beta, or -1 when none.
  int gmax(const CurveClass& beta) const {
    auto it = entries_.find(beta);
    if (it == entries_.end() || it->second.empty()) return -1;
    return it->second.rbegin()->first;
  }

  int max_genus() const {
    int g = -1;
    for (const auto& [b, m] : entries_)
      if (!m.empty()) g = std::max(g, m.rbegin()->first);
    return g;
  }

  long max_degree() const {
    long d = 0;
    for (const auto& [b, m] : entries_) d = std::max(d, basis_.degree(b));
    return d;
  }

  std::vector<CurveClass> classes_by_degree() const {
    std::vector<CurveClass> out;
    out.reserve(entries_.size());
    for (const auto& [b, m] : entries_) out.push_back(b);
    std::sort(out.begin(), out.end(), [this](const CurveClass& x, const CurveClass& y) {
      long dx = basis_.degree(x), dy = basis_.degree(y);
      return dx != dy ? dx < dy : x < y;
    });
    return out;
  }

  const std::map<CurveClass, std::map<int, Value>>& entries() const { return entries_; }

  friend bool operator==(const InvariantTable& a, const InvariantTable& b) {
    return a.basis_ == b.basis_ && a.entries_ == b.entries_;
  }

 protected:
  ClassBasis basis_;
  std::map<CurveClass, std::map<int, Value>> entries_;
};

inline void write_table_header(std::ostream& os, const ClassBasis& basis) {
  os << "rank " << basis.rank() << "\n";
  os << "weights ";
  for (int i = 0; i < basis.rank(); ++i) {
    if (i) os << ',';
    os << basis.weights()[static_cast<size_t>(i)];
  }
  os << "\n";
}

/// Reads the `rank r` / `weights w1,...,wr` header, skipping comments.
/// Returns the basis and leaves `is` positioned at the first entry line.
inline ClassBasis read_table_header(std::istream& is, int& line_no,
                                    std::vector<std::string>* comments = nullptr) {
  std::string line;
  int rank = -1;
  std::vector<long> weights;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (comments) comments->push_back(line);
      continue;
    }
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "rank") {
      if (!(ls >> rank) || rank < 1)
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad rank");
    } else if (key == "weights") {
      if (rank < 1)
        throw std::runtime_error("line " + std::to_string(line_no) + ": weights before rank");
      std::string rest;
      ls >> rest;
      std::istringstream ws(rest);
      std::string piece;
      while (std::getline(ws, piece, ',')) {
        try {
          weights.push_back(std::stol(piece));
        } catch (const std::exception&) {
          throw std::runtime_error("line " + std::to_string(line_no) + ": bad weight '" +
                                   piece + "'");
        }
      }
      if (static_cast<int>(weights.size()) != rank)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": weight count does not match rank");
      return ClassBasis(weights);
    } else {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 'rank' or 'weights', got '" + key + "'");
    }
  }
  throw std::runtime_error("table header missing 'rank'/'weights' lines");
}

struct TableEntryLine {
  CurveClass beta;
  int genus;
  std::string value_text;
};

/// Parses one `beta=[...] g=<int> <tag>=<value>` line.
inline TableEntryLine parse_table_entry(const std::string& line, const std::string& tag,
                                        int line_no, int rank) {
  std::istringstream ls(line);
  std::string beta_tok, g_tok, v_tok;
  if (!(ls >> beta_tok >> g_tok >> v_tok))
    throw std::runtime_error("line " + std::to_string(line_no) + ": expected 'beta=[...] g=" +
                             std::string("<int> ") + tag + "=<value>'");
  auto coords = parse_bracket_vector(expect_prefix(beta_tok, "beta=", line_no), line_no);
  CurveClass beta{coords};
  if (beta.rank() != rank)
    throw std::runtime_error("line " + std::to_string(line_no) + ": rank mismatch");
  int genus = 0;
  try {
    genus = std::stoi(expect_prefix(g_tok, "g=", line_no));
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad genus in '" + g_tok +
                             "'");
  }
  return {std::move(beta), genus, expect_prefix(v_tok, tag + "=", line_no)};
}

}  // namespace detail

/// Table of (conjecturally integral) BPS invariants n^g_beta. Entries are
/// integers by definition; zero entries are pruned so equality is
/// canonical-form comparison.
class GVTable : public detail::InvariantTable<Integer> {
 public:
  explicit GVTable(ClassBasis basis = ClassBasis()) : InvariantTable(std::move(basis)) {}

  Integer n(const CurveClass& beta, int genus) const { return value(beta, genus); }

  void write(std::ostream& os) const {
    detail::write_table_header(os, basis_);
    for (const CurveClass& beta : classes_by_degree())
      for (const auto& [g, v] : entries_.at(beta))
        os << "beta=" << beta.str() << " g=" << g << " n=" << v.str() << "\n";
  }

  std::string str() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

  static GVTable read(std::istream& is) {
    int line_no = 0;
    GVTable t{detail::read_table_header(is, line_no)};
    std::string line;
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      auto e = detail::parse_table_entry(line, "n", line_no, t.rank());
      try {
        t.set(e.beta, e.genus, Integer(e.value_text));
      } catch (const std::runtime_error&) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": bad integer '" +
                                 e.value_text + "'");
      }
    }
    return t;
  }
};

/// Table of rational Gromov-Witten invariants N^g_beta, together with the
/// range of (degree, genus) over which the table is actually populated --
/// conversions need to know the difference between "zero" and "never
/// computed".
class GWTable : public detail::InvariantTable<Rational> {
 public:
  explicit GWTable(ClassBasis basis = ClassBasis()) : InvariantTable(std::move(basis)) {}

  Rational N(const CurveClass& beta, int genus) const { return value(beta, genus); }

  int known_genus() const { return known_genus_ < 0 ? max_genus() : known_genus_; }
  long known_degree() const { return known_degree_ < 0 ? max_degree() : known_degree_; }
  void declare_known(int gmax, long dmax) {
    known_genus_ = gmax;
    known_degree_ = dmax;
  }

  void write(std::ostream& os) const {
    detail::write_table_header(os, basis_);
    for (const CurveClass& beta : classes_by_degree())
      for (const auto& [g, v] : entries_.at(beta))
        os << "beta=" << beta.str() << " g=" << g << " N=" << v.str() << "\n";
  }

  std::string str() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

  static GWTable read(std::istream& is) {
    int line_no = 0;
    GWTable t{detail::read_table_header(is, line_no)};
    std::string line;
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      auto e = detail::parse_table_entry(line, "N", line_no, t.rank());
      try {
        t.set(e.beta, e.genus, Rational::parse(e.value_text));
      } catch (const std::invalid_argument& err) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + err.what());
      }
    }
    return t;
  }

 private:
  int known_genus_ = -1;
  long known_degree_ = -1;
};

}  // namespace gvdt

#endif  // GVDT_TABLES_HPP
