#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace umbra::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args, const Environment& env = {}) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = dispatch(args, out, err, env);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("umbra_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

// Splits CSV into rows of cells, dropping the header.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST(Cli, SolveExample) {
  const Invocation r = run({"solve", "--a", "-2/1", "--b", "2/1", "--n-max", "6"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["dimension"], 2);
  EXPECT_EQ(j["free_indices"], json::parse("[1, 2]"));
  EXPECT_EQ(j["basis"][1]["values"][6], "30/1");
}

TEST(Cli, IdentitiesExample) {
  const Invocation r = run({"identities", "--n-max", "50"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(json::parse(line)["passed"], true) << line;
    ++count;
  }
  EXPECT_EQ(count, 15);
}

TEST(Cli, VerifyZeroFunction) {
  TempDir dir;
  const auto file = dir.write("zero.json", R"({"h": "1/1", "values": ["0/1", "0/1", "0/1", "0/1", "0/1"]})");
  const Invocation r = run({"verify", "--a", "0", "--b", "1", "--values", file.string()});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["passed"], true);
  ASSERT_EQ(j["residuals"].size(), 3u);
  for (const auto& row : j["residuals"]) EXPECT_EQ(row["residual"], "0/1");
}

TEST(Cli, VerifyFailureExitsOne) {
  TempDir dir;
  const auto file = dir.write("sq.json", R"({"h": "1/1", "values": [0, 1, 4, 10]})");
  const Invocation r = run({"verify", "--a", "-2", "--b", "2", "--values", file.string()});
  EXPECT_EQ(r.status, kExitCheckFailed);
  EXPECT_EQ(json::parse(r.out)["passed"], false);
}

TEST(Cli, UsageErrorsNameTheFlag) {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  const std::vector<Case> cases{
      {{"solve", "--a", "x/2", "--b", "1", "--n-max", "3"}, "--a"},
      {{"solve", "--a", "1", "--b", "1/0", "--n-max", "3"}, "--b"},
      {{"solve", "--a", "1", "--n-max", "3"}, "--b"},
      {{"limit-study", "--r", "2", "--x", "1", "--h-list", "2/7"}, "--h-list"},
      {{"limit-study", "--r", "2", "--x", "1", "--h-list", "1/2,abc"}, "--h-list"},
      {{"basic-polys", "--op", "sideways", "--degree", "2"}, "--op"},
      {{"basic-polys", "--op", "forward", "--h", "0", "--degree", "2"}, "--h"},
      {{"verify", "--a", "0", "--b", "0", "--values", "/nonexistent/umbra.json"}, "--values"},
      {{"identities", "--n-max", "3", "--samples", "1;2"}, "--samples"},
  };
  for (const auto& c : cases) {
    const Invocation r = run(c.args);
    EXPECT_EQ(r.status, kExitUsage) << c.args[0];
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, UnknownSubcommandIsUsageError) {
  EXPECT_EQ(run({"integrate"}).status, kExitUsage);
  EXPECT_EQ(run({}).status, kExitUsage);
}

TEST(Cli, HelpDocumentsCsvColumns) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("n,c_nm2,c_nm1,c_nn"), std::string::npos);
  EXPECT_NE(r.out.find("h,error,ratio"), std::string::npos);
}

TEST(Cli, CsvMatchesJsonSolve) {
  const std::vector<std::string> base{"solve", "--a", "-6", "--b", "0", "--n-max", "9", "--h", "1/3"};
  const Invocation j = run(base);
  auto csv_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const Invocation c = run(csv_args);
  ASSERT_EQ(j.status, kExitOk);
  ASSERT_EQ(c.status, kExitOk);
  const json doc = json::parse(j.out);
  std::size_t count = 0;
  for (const auto& row : csv_rows(c.out)) {
    const std::size_t basis = std::stoul(row[0]);
    EXPECT_EQ(doc["free_indices"][basis], std::stoul(row[1]));
    EXPECT_EQ(doc["basis"][basis]["values"][std::stoul(row[2])], row[3]);
    ++count;
  }
  EXPECT_EQ(count, 2u * 10u);
}

TEST(Cli, CsvMatchesJsonDiscretizeAndLimit) {
  const Invocation dj = run({"discretize", "--a", "3/2", "--b", "-7/4", "--n-max", "8"});
  const Invocation dc = run({"discretize", "--a", "3/2", "--b", "-7/4", "--n-max", "8", "--format", "csv"});
  const json rows = json::parse(dj.out)["rows"];
  const auto cells = csv_rows(dc.out);
  ASSERT_EQ(cells.size(), rows.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    EXPECT_EQ(rows[i]["n"], std::stoul(cells[i][0]));
    EXPECT_EQ(rows[i]["c_nm2"], cells[i][1]);
    EXPECT_EQ(rows[i]["c_nm1"], cells[i][2]);
    EXPECT_EQ(rows[i]["c_nn"], cells[i][3]);
  }

  const Invocation lj = run({"limit-study", "--r", "3", "--x", "1", "--h-list", "1/10,1/20,1/40"});
  const Invocation lc = run({"limit-study", "--r", "3", "--x", "1", "--h-list", "1/10,1/20,1/40", "--format", "csv"});
  const json lrows = json::parse(lj.out)["rows"];
  const auto lcells = csv_rows(lc.out);
  ASSERT_EQ(lcells.size(), 3u);
  EXPECT_EQ(lrows[0]["error"], "7/25");
  EXPECT_TRUE(lrows[0]["ratio"].is_null());
  EXPECT_EQ(lcells[0][2], "");
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(lrows[i]["h"], lcells[i][0]);
    EXPECT_EQ(lrows[i]["error"], lcells[i][1]);
    if (i > 0) EXPECT_EQ(lrows[i]["ratio"], lcells[i][2]);
  }
}

TEST(Cli, BasicPolysRows) {
  const Invocation r = run({"basic-polys", "--op", "forward", "--h", "1", "--degree", "3"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["axioms_hold"], true);
  // x(x-1)(x-2) = x^3 - 3x^2 + 2x
  EXPECT_EQ(j["polys"][3], json::parse(R"(["0/1", "2/1", "-3/1", "1/1"])"));

  const Invocation c = run({"basic-polys", "--op", "forward", "--h", "1", "--degree", "3", "--format", "csv"});
  std::map<std::pair<std::size_t, std::size_t>, std::string> table;
  for (const auto& row : csv_rows(c.out)) table[{std::stoul(row[0]), std::stoul(row[1])}] = row[2];
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t k = 0; k < j["polys"][n].size(); ++k) EXPECT_EQ((table[{n, k}]), j["polys"][n][k]);
  }
}

TEST(Cli, TruncationBoundFromEnvironment) {
  Environment small;
  small.truncation_bound = "4";
  EXPECT_EQ(run({"basic-polys", "--op", "backward", "--degree", "4"}, small).status, kExitOk);
  const Invocation over = run({"basic-polys", "--op", "backward", "--degree", "5"}, small);
  EXPECT_EQ(over.status, kExitUsage);
  EXPECT_NE(over.err.find("--degree"), std::string::npos);

  Environment bad;
  bad.truncation_bound = "many";
  const Invocation r = run({"basic-polys", "--degree", "2"}, bad);
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_NE(r.err.find("UMBRA_TRUNCATION_BOUND"), std::string::npos);

  EXPECT_EQ(run({"basic-polys", "--degree", "65"}).status, kExitUsage);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"solve", "--a", "-9", "--b", "25", "--n-max", "12"},
      {"discretize", "--a", "1/3", "--b", "2", "--n-max", "10"},
      {"identities", "--n-max", "12", "--format", "csv"},
      {"basic-polys", "--op", "symmetric", "--h", "2/3", "--degree", "6"},
  };
  for (const auto& args : commands) EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OutputFile) {
  TempDir dir;
  const fs::path target = dir.path() / "solve.json";
  const Invocation r = run({"--output", target.string(), "solve", "--a", "-2", "--b", "2", "--n-max", "4"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(target);
  EXPECT_EQ(json::parse(in)["dimension"], 2);

  const Invocation bad = run({"--output", (dir.path() / "missing" / "x.json").string(), "solve", "--a", "-2",
                       "--b", "2", "--n-max", "4"});
  EXPECT_EQ(bad.status, kExitUsage);
}

TEST(Cli, IdentitiesCustomSamples) {
  const Invocation r = run({"identities", "--n-max", "20", "--samples", "1/2:3,-4:0", "--format", "csv"});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  for (const auto& row : csv_rows(r.out)) {
    EXPECT_EQ(row[4], "true") << row[0];
    EXPECT_EQ(row[1], "20");
  }
}

}  // namespace
}  // namespace umbra::cli
