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

#ifndef GVDT_DATASETS_HPP
#define GVDT_DATASETS_HPP

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gvdt/tables.hpp"

namespace gvdt {

/// A bundled example geometry: its GV table plus topological data and
/// reference values quoted for it but deliberately kept out of the table.
struct ExampleModel {
  std::string name;
  GVTable gv{ClassBasis()};
  long long euler = 0;
  std::string notes;
  /// e.g. "n0_4" -> -192 for the local plane: stated answers used as
  /// expected outputs, never as inputs.
  std::map<std::string, Integer> reference_values;
};

/// Directory holding the bundled .gv files: $GVDT_DATA_DIR when set,
/// otherwise the compiled-in default.
inline std::string data_dir() {
  if (const char* env = std::getenv("GVDT_DATA_DIR")) return env;
#ifdef GVDT_DATA_DIR_DEFAULT
  return GVDT_DATA_DIR_DEFAULT;
#else
  return "data";
#endif
}

/// The local elliptic curve table n^1_k = 1 for k = 1..kmax.
inline GVTable local_elliptic_table(int kmax) {
  if (kmax < 1) throw std::domain_error("local_elliptic_table: kmax must be >= 1");
  GVTable t{ClassBasis()};
  for (int k = 1; k <= kmax; ++k) t.set(CurveClass::of_degree(k), 1, 1);
  return t;
}

inline std::string example_file_path(const std::string& name) {
  if (name != "local_p1" && name != "local_elliptic" && name != "local_p2_low_degree")
    throw std::domain_error("load_example: unknown example '" + name + "'");
  return data_dir() + "/" + name + ".gv";
}

/// Loads a bundled example by name from its data file. Metadata lives in
/// structured comments: `# euler: <int>`, `# ref <key>: <int>`; remaining
/// comment lines become the notes.
inline ExampleModel load_example(const std::string& name) {
  std::string path = example_file_path(name);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("load_example: cannot open " + path);
  std::ostringstream table_text;
  ExampleModel model;
  model.name = name;
  std::string line;
  while (std::getline(file, line)) {
    if (!line.empty() && line[0] == '#') {
      std::istringstream ls(line);
      std::string hash, key;
      ls >> hash >> key;
      if (key == "euler:") {
        ls >> model.euler;
      } else if (key == "ref") {
        std::string ref_key, value;
        ls >> ref_key >> value;
        if (!ref_key.empty() && ref_key.back() == ':') ref_key.pop_back();
        model.reference_values[ref_key] = Integer(value);
      } else {
        model.notes += line.substr(1).empty() ? "" : line.substr(2) + "\n";
      }
      continue;
    }
    table_text << line << "\n";
  }
  std::istringstream ts(table_text.str());
  model.gv = GVTable::read(ts);
  return model;
}

/// Raw bytes of the bundled file, for verbatim CLI output and golden tests.
inline std::string example_file_contents(const std::string& name) {
  std::ifstream file(example_file_path(name));
  if (!file) throw std::runtime_error("load_example: cannot open file for " + name);
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

}  // namespace gvdt

#endif  // GVDT_DATASETS_HPP
