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

#include "gvdt/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <sstream>

#include "test_support.hpp"

namespace gvdt {
namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int status = cli::run(std::move(args), in, out, err);
  return {status, out.str(), err.str()};
}

TEST(CliTest, McmahonGolden) {
  CliRun r = run_cli({"mcmahon", "--order", "4"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 1 3 6 13\n");
}

TEST(CliTest, McmahonSigned) {
  CliRun r = run_cli({"mcmahon", "--order", "3", "--sign", "-1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 -1 3 -6\n");
}

TEST(CliTest, Z0Subcommand) {
  CliRun r = run_cli({"z0", "--euler", "2", "--order", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 -2 7 -18\n");
}

TEST(CliTest, KkvSubcommand) {
  CliRun r = run_cli({"kkv", "--genus", "1", "--delta", "0", "--dim-m", "9", "--eulers", "10"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-10\nbeta=[1] q^0 coeff=-10/1\n");
}

TEST(CliTest, KkvDimsOverride) {
  CliRun r = run_cli({"kkv", "--genus", "2", "--delta", "1", "--dim-m", "4", "--eulers", "7,9",
                      "--dims", "3,8"});
  EXPECT_EQ(r.status, 0);
  // Invariant uses dim M; the contribution uses the overridden dims.
  EXPECT_EQ(r.out, "-23\nbeta=[1] q^-1 coeff=-7/1\nbeta=[1] q^0 coeff=9/1\n");
}

TEST(CliTest, Z0ChernDegreeOverride) {
  CliRun r = run_cli({"z0", "--euler", "5", "--chern-degree", "0", "--order", "3"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 0 0 0\n");
}

TEST(CliTest, HilbEulerSubcommand) {
  CliRun r = run_cli({"hilb-euler", "--n", "3", "--euler", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "18\n");
  CliRun bad = run_cli({"hilb-euler", "--n", "4", "--euler", "2"});
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
}

TEST(CliTest, LocalP1DefaultWindowMatchesGolden) {
  // Frozen after validating anchor coefficients against the direct expansion
  // of prod_k (1 + (-1)^{k+1} q^k t)^k and both inversion routes.
  CliRun table = run_cli({"example", "local_p1"});
  CliRun series = run_cli({"gv2dt"}, table.out);
  ASSERT_EQ(series.status, 0);
  EXPECT_EQ(series.out,
            testing::read_file(testing::golden_path("local_p1_gv2dt_default.txt")));
}

TEST(CliTest, EllipticPipeMatchesGolden) {
  CliRun table = run_cli({"example", "local_elliptic"});
  ASSERT_EQ(table.status, 0);
  CliRun series = run_cli({"gv2dt", "--tmax", "5"}, table.out);
  ASSERT_EQ(series.status, 0);
  EXPECT_EQ(series.out, testing::read_file(testing::golden_path(
                            "local_elliptic_gv2dt_tmax5.txt")));
}

TEST(CliTest, EllipticCutoffFlag) {
  CliRun r = run_cli({"example", "local_elliptic", "--k", "2"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "rank 1\nweights 1\nbeta=[1] g=1 n=1\nbeta=[2] g=1 n=1\n");
}

TEST(CliTest, PipeRoundtripsReproduceBundledTables) {
  for (const char* name : {"local_p1", "local_elliptic", "local_p2_low_degree"}) {
    CliRun table = run_cli({"example", name});
    ASSERT_EQ(table.status, 0) << name;
    // Canonical form of the bundled table (comments stripped, sorted).
    std::istringstream ts(table.out);
    std::string canonical = GVTable::read(ts).str();
    std::vector<std::string> flags = {"--tmax", "10"};
    std::vector<std::string> gv2dt_args = {"gv2dt", "--tmax", "10"};
    CliRun series = run_cli(gv2dt_args, table.out);
    ASSERT_EQ(series.status, 0) << name;
    CliRun back = run_cli({"dt2gv", "--tmax", "10"}, series.out);
    ASSERT_EQ(back.status, 0) << name << ": " << back.err;
    EXPECT_EQ(back.out, canonical) << name;
  }
}

TEST(CliTest, GwPipeRoundtrip) {
  CliRun table = run_cli({"example", "local_p1"});
  CliRun gw = run_cli({"gv2gw", "--jmax", "1", "--dmax", "3"}, table.out);
  ASSERT_EQ(gw.status, 0);
  EXPECT_NE(gw.out.find("beta=[2] g=0 N=1/8"), std::string::npos) << gw.out;
  CliRun back = run_cli({"gw2gv", "--gmax", "1"}, gw.out);
  ASSERT_EQ(back.status, 0) << back.err;
  std::istringstream ts(table.out);
  EXPECT_EQ(back.out, GVTable::read(ts).str());
}

TEST(CliTest, Rank2WeightedPipeRoundtrip) {
  std::string table =
      "rank 2\nweights 1,1\nbeta=[0,1] g=1 n=3\nbeta=[1,0] g=0 n=2\n";
  CliRun series = run_cli({"gv2dt", "--tmax", "3"}, table);
  ASSERT_EQ(series.status, 0) << series.err;
  CliRun back = run_cli({"dt2gv", "--tmax", "3", "--weights", "1,1"}, series.out);
  ASSERT_EQ(back.status, 0) << back.err;
  std::istringstream ts(table);
  EXPECT_EQ(back.out, GVTable::read(ts).str());
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({"no-such-command"}).status, 2);
  EXPECT_EQ(run_cli({"mcmahon"}).status, 2);  // missing required --order
  EXPECT_EQ(run_cli({}).status, 2);           // subcommand required
}

TEST(CliTest, DomainErrorsExitOne) {
  CliRun missing = run_cli({"gv2dt", "--input", "/nonexistent/table.gv"});
  EXPECT_EQ(missing.status, 1);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  CliRun inconsistent = run_cli({"dt2gv"}, "beta=[0] q^0 coeff=1/1\nbeta=[1] q^1 coeff=1/1\n");
  EXPECT_EQ(inconsistent.status, 1);
  EXPECT_NE(inconsistent.err.find("error:"), std::string::npos);

  CliRun unknown_example = run_cli({"example", "quintic"});
  EXPECT_EQ(unknown_example.status, 1);
}

TEST(CliTest, HelpExitsZero) {
  EXPECT_EQ(run_cli({"--help"}).status, 0);
  EXPECT_EQ(run_cli({"mcmahon", "--help"}).status, 0);
}

TEST(CliTest, Gv2DtFullFlag) {
  CliRun table = run_cli({"example", "local_p1"});
  CliRun reduced = run_cli({"gv2dt", "--tmax", "2"}, table.out);
  CliRun full = run_cli({"gv2dt", "--tmax", "2", "--full", "--euler", "1"}, table.out);
  ASSERT_EQ(full.status, 0);
  EXPECT_NE(reduced.out, full.out);
  EXPECT_NE(full.out.find("beta=[0] q^1 coeff=-1/1"), std::string::npos) << full.out;
}

TEST(CliTest, OutputFlagWritesFile) {
  std::string path = ::testing::TempDir() + "gvdt_mcmahon_out.txt";
  CliRun r = run_cli({"mcmahon", "--order", "4", "--output", path});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(gvdt::testing::read_file(path), "1 1 3 6 13\n");
  std::remove(path.c_str());
  CliRun bad = run_cli({"mcmahon", "--order", "4", "--output", "/nonexistent/dir/x.txt"});
  EXPECT_EQ(bad.status, 1);
}

TEST(CliTest, MalformedInputReportsLineNumber) {
  CliRun r = run_cli({"dt2gv"}, "beta=[0] q^0 coeff=1/1\nbeta=[1] oops\n");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(CliTest, RationalGwOutputIsReported) {
  std::string gw_text = "rank 1\nweights 1\nbeta=[1] g=0 N=1/2\n";
  CliRun r = run_cli({"gw2gv", "--gmax", "0"}, gw_text);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("n=1/2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("# non-integral"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace gvdt
