#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"

#include "lefschetz/cli.hpp"
#include "lefschetz/report.hpp"

using namespace lefschetz;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(LEFSCHETZ_TEST_DATA_DIR) + "/" + name; }

json run_json(std::vector<std::string> args, int expected_code) {
  const Outcome o = run(std::move(args));
  EXPECT_EQ(o.code, expected_code) << o.err;
  json j = json::parse(o.out);
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_EQ(j.at("exit_code"), expected_code);
  return j;
}

}  // namespace

TEST(Cli, HilbertFunction) {
  const json j = run_json({"hf", "--ideal", data("bk3.ideal"), "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(j.at("hilbert_function"), json({1, 3, 6, 6, 3, 0}));
  EXPECT_EQ(j.at("command"), "hf");
  EXPECT_FALSE(j.contains("timestamp"));
}

TEST(Cli, TimestampPresentByDefault) {
  const json j = run_json({"socle", "--ideal", data("bk3.ideal")}, cli::kHolds);
  EXPECT_TRUE(j.contains("timestamp"));
  EXPECT_TRUE(j.contains("elapsed_seconds"));
  EXPECT_EQ(j.at("socle_degree"), 4);
}

TEST(Cli, WlpExitCodes) {
  const json fails = run_json({"wlp", "--ideal", data("bk3.ideal"), "--no-timestamp"}, cli::kFails);
  EXPECT_EQ(fails.at("report").at("verdict"), false);
  EXPECT_EQ(fails.at("report").at("witness").at("j"), 2);
  const json holds = run_json({"wlp", "--ideal", data("ci3.ideal"), "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(holds.at("report").at("verdict"), true);
  run_json({"slp", "--gens", "x1^2,x2^2,x3^2", "--no-timestamp"}, cli::kHolds);
  run_json({"power", "--gens", "x1^3,x2^3,x3^3,x1*x2*x3", "--i", "1", "--no-timestamp"}, cli::kFails);
}

TEST(Cli, RandomizedModeRecordsSeeds) {
  const json j = run_json(
      {"wlp", "--gens", "x1^2,x2^2,x3^2", "--mode", "randomized", "--trials", "3", "--seed", "11", "--no-timestamp"},
      cli::kHolds);
  EXPECT_EQ(j.at("report").at("seeds").size(), 3u);
  EXPECT_EQ(j.at("report").at("seeds").at(0), 11);
}

TEST(Cli, OutputIsDeterministicWithoutTimestamps) {
  const std::vector<std::vector<std::string>> commands{
      {"slp", "--ideal", data("bk3.ideal"), "--no-timestamp"},
      {"wlp", "--gens", "x1^2+x2*x3,x2^2,x3^2", "--no-timestamp"},
      {"verify-thm1", "--n", "3", "--d", "3", "--no-timestamp"},
      {"extremal", "--n", "3", "--d", "4", "--i", "2", "--no-timestamp"},
      {"named", "--no-timestamp"}};
  for (const auto& args : commands) {
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, CsvOutput) {
  const Outcome o = run({"wlp", "--ideal", data("bk3.ideal"), "--format", "csv"});
  EXPECT_EQ(o.code, cli::kFails);
  const auto pairs = parse_pairs_csv(o.out);
  ASSERT_EQ(pairs.size(), 4u);
  EXPECT_FALSE(pairs[2].maximal);
  const Outcome hf = run({"hf", "--ideal", data("bk3.ideal"), "--format", "csv"});
  EXPECT_EQ(hf.code, cli::kHolds);
  EXPECT_NE(hf.out.find("6"), std::string::npos);
  EXPECT_EQ(run({"classify", "--sequence", "1,2,1", "--format", "csv"}).code, cli::kUsage);
  const Outcome v = run({"verify-thm1", "--n", "3", "--d", "3", "--format", "csv"});
  EXPECT_EQ(v.code, cli::kHolds);
  EXPECT_FALSE(v.out.empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"hf"}).code, cli::kUsage);
  EXPECT_EQ(run({"hf", "--ideal", data("missing.ideal")}).code, cli::kUsage);
  const Outcome parse = run({"hf", "--gens", "x1^2,,x2^2"});
  EXPECT_EQ(parse.code, cli::kUsage);
  EXPECT_NE(parse.err.find("error:"), std::string::npos);
  EXPECT_NE(parse.err.find("column"), std::string::npos);
  EXPECT_EQ(run({"power", "--gens", "x1^2,x2^2"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify-thm1", "--n", "2", "--d", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"wlp", "--gens", "x1^2,x2^2", "--mode", "psychic"}).code, cli::kUsage);
  EXPECT_EQ(run({"classify", "--sequence", "1,3,7"}).code, cli::kUsage);
}

TEST(Cli, Classify) {
  const json j = run_json({"classify", "--sequence", "1,2,2,1", "--property", "slp", "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(j.at("forces"), true);
  run_json({"classify", "--sequence", "[1,3,6,6,3]", "--property", "wlp", "--no-timestamp"}, cli::kFails);
  const json o = run_json({"osequence", "--sequence", "1,3,6,10,16", "--no-timestamp"}, cli::kFails);
  EXPECT_EQ(o.at("first_violation"), 4);
}

TEST(Cli, DualAndExtremal) {
  const json e = run_json({"extremal", "--n", "3", "--d", "5", "--i", "3", "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(e.at("hf_d"), 4);
  EXPECT_EQ(e.at("annihilated"), true);
  EXPECT_EQ(e.at("map").at("maximal"), false);
  const json d = run_json({"dual", "--element", "y1^2*y2 - y2*y3^2", "--i", "1", "--no-timestamp"}, cli::kHolds);
  EXPECT_TRUE(d.contains("dual_ideal"));
  const json m = run_json({"minsupport", "--n", "3", "--d", "4", "--i", "2", "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(m.at("min_support"), 4);
}

TEST(Cli, Campaigns) {
  const json t1 = run_json({"verify-thm1", "--config", data("thm1_3_3.conf"), "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(t1.at("verification").at("confirmed"), true);
  EXPECT_EQ(t1.at("verification").at("expected_bound"), 6);
  const json t2 = run_json({"verify-thm2", "--n", "3", "--d", "4", "--i", "2", "--no-timestamp"}, cli::kHolds);
  EXPECT_EQ(t2.at("verification").at("min_failing_hf"), 4);
  run_json({"verify-thm37", "--n", "3", "--d", "4", "--i", "2", "--no-timestamp"}, cli::kHolds);
  run_json({"crosscheck", "--n", "3", "--d", "2", "--no-timestamp"}, cli::kHolds);
  const json partial = run_json({"verify-thm1", "--n", "3", "--d", "4", "--budget", "20", "--no-timestamp"}, cli::kBudget);
  EXPECT_EQ(partial.at("verification").at("partial"), true);
}
