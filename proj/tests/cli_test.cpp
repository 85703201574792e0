// Copyright 2026 The mapsched Authors
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

#include "mapsched/cli.hpp"

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mapsched/json_io.hpp"

namespace mapsched::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mapsched_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& contents) const {
    write_file_atomic(path(name), contents);
    return path(name);
  }

  int call(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ValidateTriangleSucceeds) {
  const auto inst = write("i.json", R"({"kind":"a2a","q":2,"sizes":[1,1,1]})");
  const auto schema = write("s.json", R"({"reducers":[[0,1],[0,2],[1,2]]})");
  EXPECT_EQ(call({"validate", "--instance", inst, "--schema", schema}), kSuccess);
}

TEST_F(CliTest, ValidateMissingPairExitsFourAndListsIt) {
  const auto inst = write("i.json", R"({"kind":"a2a","q":2,"sizes":[1,1,1]})");
  const auto schema = write("s.json", R"({"reducers":[[0,1],[0,2]]})");
  EXPECT_EQ(call({"--json", "validate", "--instance", inst, "--schema", schema, "--report",
                  path("r.json")}),
            kInvalidSchema);
  const json doc = json::parse(out_.str());
  EXPECT_EQ(doc.at("uncovered_pairs"), json::parse("[[1,2]]"));
  EXPECT_FALSE(doc.at("valid").get<bool>());
  EXPECT_EQ(read_json_file(path("r.json")), doc);
}

TEST_F(CliTest, ValidateOutOfRangeSchemaExitsFour) {
  const auto inst = write("i.json", R"({"kind":"x2y","q":2,"x_sizes":[1],"y_sizes":[1]})");
  const auto schema = write("s.json", R"({"reducers":[{"x":[0],"y":[1]}]})");
  EXPECT_EQ(call({"validate", "--instance", inst, "--schema", schema}), kInvalidSchema);
}

TEST_F(CliTest, EmptyReducerIsLintedNotRejected) {
  const auto inst = write("i.json", R"({"kind":"a2a","q":2,"sizes":[1,1]})");
  const auto schema = write("s.json", R"({"reducers":[[0,1],[]]})");
  EXPECT_EQ(call({"validate", "--instance", inst, "--schema", schema}), kSuccess);
  EXPECT_NE(err_.str().find("reducer 1 is empty"), std::string::npos);
}

TEST_F(CliTest, SolveExitCodes) {
  const auto bad = write("bad.json", R"({"kind":"a2a","q":4,"sizes":[3,2]})");
  EXPECT_EQ(call({"solve", "--instance", bad, "--out", path("s.json")}), kInfeasible);
  EXPECT_FALSE(fs::exists(path("s.json")));

  const auto four = write("four.json", R"({"kind":"a2a","q":3,"sizes":[1,1,1,1]})");
  EXPECT_EQ(call({"solve", "--instance", four, "--out", path("s.json")}), kSuccess);
  EXPECT_EQ(call({"validate", "--instance", four, "--schema", path("s.json")}), kSuccess);
  EXPECT_EQ(call({"solve", "--method", "heuristic", "--instance", four}), kNotProvenOptimal);
  EXPECT_EQ(call({"solve", "--oracle", "--instance", four, "--json"}), kSuccess);
  EXPECT_EQ(json::parse(out_.str()).at("z"), 3);

  const auto nine = write("nine.json", R"({"kind":"a2a","q":4,"sizes":[1,1,1,1,1,1,1,1,1]})");
  EXPECT_EQ(call({"solve", "--instance", nine, "--budget-nodes", "3"}), kNotProvenOptimal);
}

TEST_F(CliTest, OracleGuardsSize) {
  const auto big = write("big.json", R"({"kind":"a2a","q":2,"sizes":[1,1,1,1,1,1,1,1]})");
  EXPECT_EQ(call({"oracle", "--instance", big}), kUsageOrIo);
  EXPECT_EQ(call({"oracle", "--instance", big, "--max-inputs", "8", "--json"}), kSuccess);
  EXPECT_EQ(json::parse(out_.str()).at("min_z"), 28);
}

TEST_F(CliTest, SimulateWritesReport) {
  const auto inst = write("i.json", R"({"kind":"x2y","q":2,"x_sizes":[1,1],"y_sizes":[1,1]})");
  const auto schema = write(
      "s.json",
      R"({"reducers":[{"x":[0],"y":[0]},{"x":[0],"y":[1]},{"x":[1],"y":[0]},{"x":[1],"y":[1]}]})");
  EXPECT_EQ(call({"simulate", "--instance", inst, "--schema", schema, "--report", path("r.json")}),
            kSuccess);
  const json report = read_json_file(path("r.json"));
  EXPECT_EQ(report.at("bytes_shipped"), 8);
  EXPECT_EQ(report.at("outputs_produced"), 4);

  const auto uncovered = write("u.json", R"({"reducers":[{"x":[0],"y":[0]}]})");
  EXPECT_EQ(call({"simulate", "--instance", inst, "--schema", uncovered}), kInvalidSchema);
}

TEST_F(CliTest, SweepWritesCsv) {
  const auto inst = write("i.json", R"({"kind":"a2a","q":2,"sizes":[1,1,1,1]})");
  EXPECT_EQ(call({"sweep", "--instance", inst, "--q", "2,3,4", "--method", "exact", "--csv",
                  path("c.csv")}),
            kSuccess);
  EXPECT_EQ(read_file(path("c.csv")),
            "q,z,cost,method,status\n2,6,12,exact,optimal\n3,3,8,exact,optimal\n"
            "4,1,4,exact,optimal\n");
}

TEST_F(CliTest, GenRequiresSeedForRandomDistributions) {
  EXPECT_EQ(call({"gen", "--kind", "a2a", "--m", "5", "--dist", "uniform:1,3", "--q", "6"}),
            kUsageOrIo);
  EXPECT_EQ(call({"gen", "--kind", "a2a", "--m", "5", "--q", "6"}), kSuccess);
  EXPECT_EQ(json::parse(out_.str()), json::parse(R"({"kind":"a2a","q":6,"sizes":[1,1,1,1,1]})"));
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
  EXPECT_EQ(call({"solve", "--instance", "x.json", "--frobnicate"}), kUsageOrIo);
  EXPECT_NE(err_.str().find("Usage"), std::string::npos);
  EXPECT_TRUE(out_.str().empty());
  EXPECT_EQ(call({}), kUsageOrIo);
}

TEST_F(CliTest, MissingFileIsIoError) {
  EXPECT_EQ(call({"solve", "--instance", path("nope.json")}), kUsageOrIo);
}

TEST_F(CliTest, JsonModeEmitsOnlyOneDocument) {
  const auto inst = write("i.json", R"({"kind":"a2a","q":4,"sizes":[1,2,1,1,2]})");
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "solve", "--instance", inst},
        std::vector<std::string>{"--json", "sweep", "--instance", inst, "--q", "3,4,5"},
        std::vector<std::string>{"oracle", "--instance", inst, "--json"},
        std::vector<std::string>{"--json", "--seed", "3", "gen", "--kind", "x2y", "--m", "2",
                                 "--n", "3", "--dist", "skewed:1,1,3", "--q", "9"}}) {
    call(args);
    EXPECT_TRUE(json::accept(out_.str())) << out_.str();
  }
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  auto run_all = [&](const std::string& tag) {
    std::string transcript;
    const std::string inst = path("inst_" + tag + ".json");
    call({"--seed", "17", "gen", "--kind", "a2a", "--m", "7", "--dist", "skewed:1,2,3", "--q",
          "8", "--out", inst});
    transcript += read_file(inst);
    call({"--json", "solve", "--instance", inst, "--out", path("s_" + tag + ".json")});
    transcript += out_.str() + read_file(path("s_" + tag + ".json"));
    call({"--json", "validate", "--instance", inst, "--schema", path("s_" + tag + ".json")});
    transcript += out_.str();
    call({"--json", "simulate", "--instance", inst, "--schema", path("s_" + tag + ".json")});
    transcript += out_.str();
    call({"sweep", "--instance", inst, "--q", "6,7,8,9", "--csv", path("c_" + tag + ".csv")});
    transcript += read_file(path("c_" + tag + ".csv"));
    call({"--threads", "2", "sweep", "--instance", inst, "--q", "6,7,8,9"});
    transcript += out_.str();
    call({"--json", "oracle", "--instance", inst});
    transcript += out_.str();
    return transcript;
  };
  EXPECT_EQ(run_all("a"), run_all("b"));
}

}  // namespace
}  // namespace mapsched::cli
