#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wreath/cli.hpp"

namespace wreath {
namespace {

namespace fs = std::filesystem;

struct Output {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Output run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ring_file(const char* name) {
  return (fs::path(WREATH_DATA_DIR) / "rings" / name).string();
}

TEST(Cli, DecomposeTrivial) {
  const Output r = run({"--ring", "builtin:trivial", "decompose", "--x", "(1)", "--y", "(1)"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto terms = r.json()["terms"];
  ASSERT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms[0]["word"], "()");
  EXPECT_EQ(terms[1]["word"], "(1)");
  EXPECT_EQ(terms[2]["word"], "(1,1)");
  for (const auto& t : terms) EXPECT_EQ(t["mult"], 1);
}

TEST(Cli, DecomposeFileRingTable) {
  const Output r = run({"--ring", ring_file("dual_z2.json"), "--format", "table", "decompose",
                        "--x", "(g)", "--y", "(g)"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "     1  ()\n     1  (1)\n     1  (g,g)\n");
}

TEST(Cli, Dim) {
  Output r = run({"--ring", "builtin:trivial", "dim", "--x", "(1,1)", "--poly"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "[1,-3,1]\n");
  r = run({"--ring", "builtin:trivial", "dim", "--x", "(1,1)", "--at", "8"});
  EXPECT_EQ(r.out, "41\n");
  EXPECT_TRUE(r.err.empty());
  r = run({"--ring", "builtin:trivial", "--format", "table", "dim", "--x", "(1,1)"});
  EXPECT_EQ(r.out, "n^2 - 3n + 1\n");
  r = run({"--ring", "builtin:trivial", "dim", "--x", "(1)", "--at", "3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "2\n");
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  r = run({"--ring", "builtin:trivial", "dim", "--x", "(1)", "--at", "0"});
  EXPECT_EQ(r.code, cli::kExitUsage);
}

TEST(Cli, Classify) {
  const Output r = run({"--ring", ring_file("dual_z2.json"), "classify", "--x", "(g,1,g)"});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.json()["classes"], nlohmann::json({"S", "G_1", "G_2"}));
  const Output e = run({"--ring", ring_file("dual_z2.json"), "classify-enum", "--class", "G_2",
                        "--maxlen", "2", "--labels", "2"});
  ASSERT_EQ(e.code, cli::kExitOk) << e.err;
  EXPECT_EQ(e.json()["words"], nlohmann::json({"(g)", "(g,g)"}));
  EXPECT_EQ(e.json()["count"], 2);
}

TEST(Cli, Circ) {
  const Output r =
      run({"--ring", ring_file("dual_z2.json"), "circ", "--a", "(g,1)", "--b", "(g);()"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.json()["words"], nlohmann::json({"(g,1)", "(g,g)", "(g,1,g)"}));
}

TEST(Cli, VerifyPassesAndFails) {
  Output r = run({"--ring", ring_file("dual_z2.json"), "verify", "stability", "--alpha", "g",
                  "--maxlen", "3"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.json()["passed"].get<bool>());
  EXPECT_EQ(r.json()["items"].size(), 4u);

  r = run({"--ring", ring_file("dual_z2.json"), "--format", "table", "verify", "fullness",
           "--alpha", "g", "--maxlen", "3"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("PASSED"), std::string::npos);

  r = run({"--ring", "builtin:trivial", "verify", "stability", "--alpha", "1"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("at least two labels"), std::string::npos);

  r = run({"--ring", "builtin:dual-group", "--cayley", ring_file("z3_cayley.json"), "verify",
           "sweep", "--maxlen", "2", "--labels", "all", "--assoc-len", "2"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
}

TEST(Cli, ValidateRing) {
  const Output ok = run({"--ring", ring_file("rep_a4.json"), "validate-ring"});
  EXPECT_EQ(ok.code, cli::kExitOk);
  EXPECT_TRUE(ok.json()["passed"].get<bool>());

  const fs::path bad = fs::temp_directory_path() / "wreath_cli_bad_ring.json";
  {
    std::ofstream f(bad);
    f << R"({"labels": ["e", "g"], "unit": "e", "dual": {"e": "e", "g": "g"},
             "dims": {"e": 1, "g": 2},
             "fusion": {"e*e": {"e": 1}, "e*g": {"g": 1}, "g*e": {"g": 1}, "g*g": {"e": 1}}})";
  }
  const Output report = run({"--ring", bad.string(), "validate-ring"});
  EXPECT_EQ(report.code, cli::kExitFailed);
  EXPECT_FALSE(report.json()["passed"].get<bool>());
  const Output use = run({"--ring", bad.string(), "decompose", "--x", "(g)", "--y", "(g)"});
  EXPECT_EQ(use.code, cli::kExitFailed);
  EXPECT_NE(use.err.find("dimension identity violated at (g,g): 4 != 1"), std::string::npos)
      << use.err;
  fs::remove(bad);
}

TEST(Cli, PowersCert) {
  Output r = run({"--ring", ring_file("dual_z2.json"), "powers-cert", "--support", "(g)",
                  "--alpha", "g", "--max-support", "5000"});
  EXPECT_EQ(r.code, cli::kExitFailed);  // support growth hits the cap
  auto j = r.json();
  EXPECT_EQ(j["conjugator"], "(g,1,1)");
  EXPECT_EQ(j["iterations"], 28);
  EXPECT_TRUE(j["truncated"].get<bool>());
  EXPECT_EQ(j["support_sizes"][0], 4);

  r = run({"--ring", ring_file("dual_z2.json"), "--format", "table", "powers-cert", "--support",
           "(g)", "--alpha", "g", "--max-support", "5000"});
  EXPECT_EQ(r.code, cli::kExitFailed);
  EXPECT_NE(r.out.find("certificate FAILED (support cap reached)"), std::string::npos) << r.out;

  r = run({"--ring", ring_file("dual_z2.json"), "powers-cert", "--support", "(g)", "--alpha",
           "g", "--c0", "1/5"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out;
  EXPECT_EQ(r.json()["iterations"], 0);

  r = run({"--ring", ring_file("dual_z2.json"), "powers-cert", "--support", "(1,1,1)",
           "--alpha", "g"});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("support not contained in S"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"decompose", "--x", "(1)", "--y", "(1)"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--ring", "builtin:nope", "classify", "--x", "()"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--ring", "builtin:interval-step1", "classify", "--x", "()"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"--ring", "builtin:trivial", "classify", "--x", "(q)"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--ring", "builtin:trivial", "--format", "xml", "classify", "--x", "()"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"--ring", "/nonexistent.json", "classify", "--x", "()"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"--ring", "builtin:interval-step1", "--param", "8",
                                         "verify", "sweep", "--maxlen", "3", "--labels", "3",
                                         "--assoc-len", "2"};
  const Output a = run(args);
  const Output b = run(args);
  EXPECT_EQ(a.code, cli::kExitOk) << a.out;
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
}  // namespace wreath
