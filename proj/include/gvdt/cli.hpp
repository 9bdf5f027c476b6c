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

#ifndef GVDT_CLI_HPP
#define GVDT_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gvdt/acceptance.hpp"
#include "gvdt/datasets.hpp"
#include "gvdt/invariants.hpp"
#include "gvdt/kkv.hpp"
#include "gvdt/lambda.hpp"
#include "gvdt/partitions.hpp"
#include "gvdt/series_io.hpp"

namespace gvdt::cli {

namespace detail {

/// Reads the named file, or the provided stream for "-".
inline std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream os;
  if (path == "-") {
    os << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    os << file.rdbuf();
  }
  return os.str();
}

inline void print_qlaurent_integers(std::ostream& out, const QLaurent& q, int order) {
  for (int k = 0; k <= order; ++k) {
    if (k) out << ' ';
    out << q.at(k).to_integer().str();
  }
  out << "\n";
}

/// Destination selected by --output; stdout when unset.
struct OutputFlag {
  std::string path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--output,-o", path, "write to this file instead of stdout");
  }

  template <typename Fn>
  void with_stream(std::ostream& out, Fn&& fn) const {
    if (path.empty() || path == "-") {
      fn(out);
      return;
    }
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    fn(file);
  }
};

struct WindowFlags {
  int qmin = -3;
  int qmax = 8;
  long tmax = 6;
  std::vector<long> weights{1};

  void attach(CLI::App* cmd) {
    cmd->add_option("--qmin", qmin, "lower edge of the q-window");
    cmd->add_option("--qmax", qmax, "upper edge of the q-window");
    cmd->add_option("--tmax", tmax, "total-degree truncation in t");
    cmd->add_option("--weights", weights, "degree weights of the class basis")
        ->delimiter(',');
  }
  ClassBasis basis() const { return ClassBasis(weights); }
  QWindow window() const {
    if (qmin > qmax) throw std::domain_error("empty q-window: qmin > qmax");
    return {qmin, qmax};
  }
};

}  // namespace detail

/// Runs one CLI invocation. Exit status 0 on success, 1 on a domain or
/// input error, 2 on a usage error.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact generating-function calculus for GW / GV / DT curve counts"};
  app.require_subcommand(1);

  // mcmahon
  struct McCfg {
    int order = 1;
    int sign = +1;
    detail::OutputFlag output;
  };
  auto mc = std::make_shared<McCfg>();
  CLI::App* mcmahon = app.add_subcommand("mcmahon", "MacMahon series coefficients");
  mcmahon->add_option("--order", mc->order, "truncation order")->required();
  mcmahon->add_option("--sign", mc->sign, "+1 for M(q), -1 for M(-q)");
  mc->output.attach(mcmahon);
  mcmahon->callback([&out, mc] {
    mc->output.with_stream(out, [mc](std::ostream& os) {
      detail::print_qlaurent_integers(os, mcmahon_series(mc->order, mc->sign), mc->order);
    });
  });

  // z0
  struct Z0Cfg {
    long long euler = 0;
    long long chern = 0;
    bool chern_set = false;
    int order = 6;
    detail::OutputFlag output;
  };
  auto z0cfg = std::make_shared<Z0Cfg>();
  CLI::App* z0 = app.add_subcommand("z0", "dimension-zero DT partition function M(-q)^E");
  z0->add_option("--euler", z0cfg->euler, "Euler characteristic e(X)")->required();
  z0->add_option("--chern-degree", z0cfg->chern, "integral of c3 - c1 c2 (defaults to e(X))")
      ->each([z0cfg](const std::string&) { z0cfg->chern_set = true; });
  z0->add_option("--order", z0cfg->order, "truncation order");
  z0cfg->output.attach(z0);
  z0->callback([&out, z0cfg] {
    ThreefoldData x{z0cfg->euler, z0cfg->chern_set ? z0cfg->chern : z0cfg->euler};
    z0cfg->output.with_stream(out, [&x, z0cfg](std::ostream& os) {
      detail::print_qlaurent_integers(os, z0_partition_function(x, z0cfg->order),
                                      z0cfg->order);
    });
  });

  // example
  struct ExampleCfg {
    std::string name;
    int kmax = 10;
    detail::OutputFlag output;
  };
  auto excfg = std::make_shared<ExampleCfg>();
  CLI::App* example = app.add_subcommand("example", "print a bundled GV table");
  example->add_option("name", excfg->name, "local_p1 | local_elliptic | local_p2_low_degree")
      ->required();
  example->add_option("--k", excfg->kmax, "class cutoff for local_elliptic");
  excfg->output.attach(example);
  example->callback([&out, excfg] {
    excfg->output.with_stream(out, [excfg](std::ostream& os) {
      if (excfg->name == "local_elliptic" && excfg->kmax != 10) {
        local_elliptic_table(excfg->kmax).write(os);
        return;
      }
      os << example_file_contents(excfg->name);
    });
  });

  // gv2dt
  struct Gv2DtCfg {
    std::string input = "-";
    detail::WindowFlags win;
    bool full = false;
    long long euler = 0;
    detail::OutputFlag output;
  };
  auto gv2dtcfg = std::make_shared<Gv2DtCfg>();
  CLI::App* gv2dt = app.add_subcommand("gv2dt", "reduced DT partition function of a GV table");
  gv2dt->add_option("--input,-i", gv2dtcfg->input, "GV table file, - for stdin");
  gv2dtcfg->win.attach(gv2dt);
  gv2dt->add_flag("--full", gv2dtcfg->full, "multiply by the dimension-zero factor");
  gv2dt->add_option("--euler", gv2dtcfg->euler, "e(X), used with --full");
  gv2dtcfg->output.attach(gv2dt);
  gv2dt->callback([&out, &in, gv2dtcfg] {
    std::istringstream is(detail::slurp(gv2dtcfg->input, in));
    GVTable gv = GVTable::read(is);
    DTSeries z = gv_to_dt_reduced(gv, gv2dtcfg->win.window(), gv2dtcfg->win.tmax);
    if (gv2dtcfg->full) z = dt_full(z, ThreefoldData::calabi_yau(gv2dtcfg->euler));
    gv2dtcfg->output.with_stream(out, [&z](std::ostream& os) { write_series(os, z.series); });
  });

  // dt2gv
  struct Dt2GvCfg {
    std::string input = "-";
    detail::WindowFlags win;
    detail::OutputFlag output;
  };
  auto dt2gvcfg = std::make_shared<Dt2GvCfg>();
  CLI::App* dt2gv = app.add_subcommand("dt2gv", "solve a reduced DT series for its GV table");
  dt2gv->add_option("--input,-i", dt2gvcfg->input, "series file, - for stdin");
  dt2gvcfg->win.attach(dt2gv);
  dt2gvcfg->output.attach(dt2gv);
  dt2gv->callback([&out, &in, dt2gvcfg] {
    std::istringstream is(detail::slurp(dt2gvcfg->input, in));
    MultiSeries s = read_series(is, dt2gvcfg->win.basis(), dt2gvcfg->win.tmax,
                                dt2gvcfg->win.window());
    GVTable gv = dt_reduced_to_gv(DTSeries{std::move(s), DTKind::reduced});
    dt2gvcfg->output.with_stream(out, [&gv](std::ostream& os) { gv.write(os); });
  });

  // gv2gw
  struct Gv2GwCfg {
    std::string input = "-";
    int jmax = 2;
    long dmax = -1;
    detail::OutputFlag output;
  };
  auto gv2gwcfg = std::make_shared<Gv2GwCfg>();
  CLI::App* gv2gw = app.add_subcommand("gv2gw", "Gromov-Witten invariants of a GV table");
  gv2gw->add_option("--input,-i", gv2gwcfg->input, "GV table file, - for stdin");
  gv2gw->add_option("--jmax", gv2gwcfg->jmax, "largest genus to expand in lambda");
  gv2gw->add_option("--dmax", gv2gwcfg->dmax, "largest class degree (default: table maximum)");
  gv2gwcfg->output.attach(gv2gw);
  gv2gw->callback([&out, &in, gv2gwcfg] {
    std::istringstream is(detail::slurp(gv2gwcfg->input, in));
    GWTable gw = gv_to_gw(GVTable::read(is), gv2gwcfg->jmax, gv2gwcfg->dmax);
    gv2gwcfg->output.with_stream(out, [&gw](std::ostream& os) { gw.write(os); });
  });

  // gw2gv
  struct Gw2GvCfg {
    std::string input = "-";
    int gmax = -1;
    detail::OutputFlag output;
  };
  auto gw2gvcfg = std::make_shared<Gw2GvCfg>();
  CLI::App* gw2gv = app.add_subcommand("gw2gv", "solve GW invariants for the GV table");
  gw2gv->add_option("--input,-i", gw2gvcfg->input, "GW table file, - for stdin");
  gw2gv->add_option("--gmax", gw2gvcfg->gmax, "largest genus to solve (default: populated range)");
  gw2gvcfg->output.attach(gw2gv);
  gw2gv->callback([&out, &in, gw2gvcfg] {
    std::istringstream is(detail::slurp(gw2gvcfg->input, in));
    GWTable gw = GWTable::read(is);
    int gmax = gw2gvcfg->gmax < 0 ? gw.known_genus() : gw2gvcfg->gmax;
    if (gmax < 0) gmax = 0;
    GvFromGwResult res = gw_to_gv(gw, gmax);
    gw2gvcfg->output.with_stream(out, [&gw, &res](std::ostream& os) {
      gvdt::detail::write_table_header(os, gw.basis());
      std::vector<CurveClass> classes;
      classes.reserve(res.values.size());
      for (const auto& [beta, by_g] : res.values) classes.push_back(beta);
      std::sort(classes.begin(), classes.end(),
                [&gw](const CurveClass& a, const CurveClass& b) {
                  long da = gw.basis().degree(a), db = gw.basis().degree(b);
                  return da != db ? da < db : a < b;
                });
      for (const CurveClass& beta : classes)
        for (const auto& [g, v] : res.values.at(beta))
          os << "beta=" << beta.str() << " g=" << g
             << " n=" << (v.is_integer() ? v.num().str() : v.str()) << "\n";
      for (const auto& [beta, g, v] : res.non_integral)
        os << "# non-integral: beta=" << beta.str() << " g=" << g << " n=" << v.str() << "\n";
    });
  });

  // kkv
  struct KkvCfg {
    int genus = 0;
    int delta = 0;
    long long dim_m = 0;
    std::vector<std::string> eulers;
    std::vector<long long> dims;
    detail::OutputFlag output;
  };
  auto kkvcfg = std::make_shared<KkvCfg>();
  CLI::App* kkv = app.add_subcommand("kkv", "KKV Euler-characteristic formula");
  kkv->add_option("--genus", kkvcfg->genus, "arithmetic genus g")->required();
  kkv->add_option("--delta", kkvcfg->delta, "genus drop delta")->required();
  kkv->add_option("--dim-m", kkvcfg->dim_m, "dimension of the moduli space M")->required();
  kkv->add_option("--eulers", kkvcfg->eulers, "e(C^[0]),...,e(C^[delta])")
      ->required()
      ->delimiter(',');
  kkv->add_option("--dims", kkvcfg->dims, "dim C^[0],...,dim C^[delta] (default dim M + n)")
      ->delimiter(',');
  kkvcfg->output.attach(kkv);
  kkv->callback([&out, kkvcfg] {
    KKVInput input{kkvcfg->genus, kkvcfg->delta, kkvcfg->dim_m, {}, kkvcfg->dims};
    for (const auto& e : kkvcfg->eulers) input.eulers.emplace_back(e);
    Integer value = kkv_invariant(input);
    kkvcfg->output.with_stream(out, [&input, &value](std::ostream& os) {
      os << value.str() << "\n";
      if (input.delta <= 1) write_series(os, kkv_dt_contribution(input));
    });
  });

  // hilb-euler
  struct HilbCfg {
    int n = 1;
    long long euler = 0;
    detail::OutputFlag output;
  };
  auto hilbcfg = std::make_shared<HilbCfg>();
  CLI::App* hilb = app.add_subcommand("hilb-euler", "Euler characteristic of Hilb^n (n <= 3)");
  hilb->add_option("--n", hilbcfg->n, "number of points (1, 2 or 3)")->required();
  hilb->add_option("--euler", hilbcfg->euler, "Euler characteristic of the threefold")
      ->required();
  hilbcfg->output.attach(hilb);
  hilb->callback([&out, hilbcfg] {
    Integer value = euler_hilb_points(hilbcfg->n, Integer(hilbcfg->euler));
    hilbcfg->output.with_stream(out,
                                [&value](std::ostream& os) { os << value.str() << "\n"; });
  });

  // check
  auto check_failed = std::make_shared<bool>(false);
  CLI::App* check = app.add_subcommand("check", "run the acceptance criteria");
  check->callback([&out, check_failed] {
    *check_failed = !acceptance::report(out, acceptance::run_all());
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return *check_failed ? 1 : 0;
}

}  // namespace gvdt::cli

#endif  // GVDT_CLI_HPP
