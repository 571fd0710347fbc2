#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "activol/cli.hpp"
#include "json.hpp"

using namespace activol;

namespace {

std::string fixture(const std::string &name) {
  const char *dir = std::getenv("ACTIVOL_FIXTURES");
  return std::string(dir ? dir : "fixtures") + "/" + name;
}

std::string data(const std::string &name) { return fixture("../tests/data/" + name); }

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "activol");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HumanDuration) {
  EXPECT_EQ(human_duration(3230), "53.8 min");
  EXPECT_EQ(human_duration(8.75 * 3600), "8.75 h");
  EXPECT_EQ(human_duration(35.4 * 86400), "35.4 days");
  EXPECT_EQ(human_duration(12.5), "12.5 s");
  EXPECT_EQ(human_duration(5.41 * 365.25 * 86400), "5.41 years");
}

TEST(Cli, FactoringCost) { EXPECT_EQ(factoring_cost().volume, Rational(int64_t{869577000000})); }

TEST(Cli, Usage) {
  EXPECT_EQ(run({}).code, exit_usage);
  EXPECT_EQ(run({"frobnicate"}).code, exit_usage);
  EXPECT_EQ(run({"estimate"}).code, exit_usage);
  EXPECT_EQ(run({"--format", "xml", "devices"}).code, exit_usage);
  EXPECT_EQ(run({"--help"}).code, exit_ok);
}

TEST(Cli, EstimateFactoring) {
  CliResult r = run({"--format", "json", "estimate", fixture("factoring.json"), "--preset", "av_matter_1us"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["memory_requirement"], 6200);
  EXPECT_EQ(j["active_volume"]["exact"], "869577000000");
  EXPECT_NEAR(j["device"]["wall_time_s"].get<double>(), 3230, 10);
  CliResult text = run({"estimate", fixture("factoring.json")});
  EXPECT_EQ(text.code, exit_ok) << text.err;
  EXPECT_NE(text.out.find("869577000000"), std::string::npos) << text.out;
}

TEST(Cli, ErrorExitCodes) {
  EXPECT_EQ(run({"estimate", data("unknown_op.json")}).code, exit_unknown_op);
  EXPECT_EQ(run({"estimate", data("bad_params.json")}).code, exit_invalid_params);
  EXPECT_EQ(run({"estimate", data("malformed.json")}).code, exit_io);
  EXPECT_EQ(run({"estimate", data("missing.json")}).code, exit_io);
  EXPECT_EQ(run({"estimate", data("too_big.json"), "--preset", "device1"}).code, exit_infeasible);
  EXPECT_EQ(run({"schedule", data("too_big.json"), "--machine", fixture("packing_machine.json")}).code, exit_infeasible);
  EXPECT_EQ(run({"estimate", fixture("factoring.json"), "--preset", "nope"}).code, exit_invalid_params);
  EXPECT_EQ(run({"--constants", "c_q=3", "estimate", fixture("factoring.json")}).code, exit_invalid_params);
}

TEST(Cli, Schedule) {
  CliResult r = run({"--format", "json", "schedule", fixture("packing_example.json"), "--machine", fixture("packing_machine.json"), "--trace"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["work_cycles"], 3);
  EXPECT_EQ(j["trace"].size(), 3u);
  CliResult csv = run({"--format", "csv", "schedule", fixture("packing_example.json"), "--machine", fixture("packing_machine.json")});
  EXPECT_EQ(csv.code, exit_ok) << csv.err;
}

TEST(Cli, Quickswap) {
  auto path = std::filesystem::temp_directory_path() / "activol_qs_test.csv";
  CliResult r = run({"--seed", "3", "quickswap", "--nq", "256", "--sep", "8", "--trials", "3", "--csv", path.string()});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n_q,s,trials,mean,std,max,failures,seed");
  std::filesystem::remove(path);
  CliResult again = run({"--seed", "3", "quickswap", "--nq", "256", "--sep", "8", "--trials", "3"});
  CliResult third = run({"--seed", "3", "quickswap", "--nq", "256", "--sep", "8", "--trials", "3"});
  EXPECT_EQ(again.out, third.out);
  EXPECT_EQ(run({"quickswap", "--nq", "0"}).code, exit_usage);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "--builder", "cnot"}).code, exit_ok);
  EXPECT_EQ(run({"verify", "--builder", "toffoli"}).code, exit_ok);
  EXPECT_EQ(run({"verify", "--builder", "warp"}).code, exit_invalid_params);
  EXPECT_EQ(run({"verify", "--network", fixture("networks/broken.json")}).code, exit_verify_failed);
  EXPECT_EQ(run({"verify"}).code, exit_usage);
}

TEST(Cli, Devices) {
  CliResult r = run({"devices"});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  EXPECT_NE(r.out.find("device1"), std::string::npos);
  CliResult c = run({"devices", "--compare"});
  ASSERT_EQ(c.code, exit_ok) << c.err;
  EXPECT_NE(c.out.find("35.4 days"), std::string::npos) << c.out;
  EXPECT_EQ(run({"devices", "--preset", "device2"}).code, exit_invalid_params);
}
