#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string tmp(std::string const& name) { return ::testing::TempDir() + "fusionkit_cli_" + name; }

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(std::string const& args, std::string const& env = {}) {
  auto const out = tmp("stdout.txt");
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string("'") + FUSIONKIT_BIN + "' " + args + " > '" + out + "' 2> /dev/null";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

nlohmann::json parse(Run const& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, AnalyzePair) {
  auto r = run("analyze --pair 'pair:(sym:4,alt:4,2)'");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = parse(r);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["exit_code"], 0);
  ASSERT_EQ(j["items"].size(), 1u);
  EXPECT_EQ(j["items"][0]["status"], "pass");
  EXPECT_TRUE(j["violations"].empty());
}

TEST(Cli, AnalyzeSpecNeedsPrime) {
  EXPECT_EQ(run("analyze --spec sym:4").code, 2);
  EXPECT_EQ(run("analyze --spec sym:4 --prime 2").code, 0);
}

TEST(Cli, AnalyzeExample) {
  auto r = run("analyze --spec example:weakly-normal");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["items"][0]["status"], "pass");
}

TEST(Cli, VerifySuites) {
  for (auto const& suite : {"theorem-b", "local", "op-containment", "example"}) {
    auto r = run(std::string("verify --suite ") + suite);
    EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
  }
  auto r = run("verify --suite hyperfocal --spec sym:4 --spec alt:5 --prime 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["items"].size(), 2u);
}

TEST(Cli, VerifyTheoremAOnOnePair) {
  auto r = run("verify --suite theorem-a --pair 'pair:(sym:4,alt:4,2)'");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, Conjectures) {
  auto r = run("conjecture --which 5.2 --n-range 6..6");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = parse(r);
  ASSERT_EQ(j["items"].size(), 1u);
  auto r3 = run("conjecture --which 5.3 --pair 'pair:(sym:4,alt:4,2)'");
  EXPECT_EQ(r3.code, 0) << r3.out;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("verify --suite nonsense").code, 2);
  EXPECT_EQ(run("conjecture --which 9.9").code, 2);
  EXPECT_EQ(run("analyze --format xml --pair 'pair:(sym:4,alt:4,2)'").code, 2);
  EXPECT_EQ(run("analyze --workers 0 --pair 'pair:(sym:4,alt:4,2)'").code, 2);
}

TEST(Cli, ItemErrorsExitTwo) {
  auto r = run("analyze --pair 'pair:(sym:4,sym:3,2)'");
  EXPECT_EQ(r.code, 2);
  auto j = parse(r);
  EXPECT_EQ(j["items"][0]["status"], "error");
  EXPECT_EQ(run("analyze --pair 'pair:(sym:5,alt:5,2)' --max-order 50").code, 2);
}

TEST(Cli, OutputIsByteStable) {
  auto a = tmp("a.json"), b = tmp("b.json");
  std::string const args = "verify --suite theorem-b --pair 'pair:(sym:4,alt:4,2)' "
                           "--pair 'pair:(sym:3,cyclic:3,3)' --pair 'pair:(sym:4,klein4,2)'";
  ASSERT_EQ(run(args + " --workers 1 --out '" + a + "'").code, 0);
  ASSERT_EQ(run(args + " --workers 3 --out '" + b + "'").code, 0);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, ItemsAreSortedAndDeduplicated) {
  auto r = run("verify --suite theorem-b --pair 'pair:(sym:4,klein4,2)' "
               "--pair 'pair:(sym:4,alt:4,2)' --pair 'pair:(sym:4,klein4,2)'");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  ASSERT_EQ(j["items"].size(), 2u);
  EXPECT_LT(j["items"][0]["item"].get<std::string>(), j["items"][1]["item"].get<std::string>());
}

TEST(Cli, MarkdownFormat) {
  auto r = run("analyze --pair 'pair:(sym:4,alt:4,2)' --format md");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| "), std::string::npos);
  EXPECT_NE(r.out.find("pair:(sym:4,alt:4,2)"), std::string::npos);
  EXPECT_THROW(nlohmann::json::parse(r.out), nlohmann::json::exception);
}

TEST(Cli, CapsFromEnvironment) {
  std::string const args = "analyze --pair 'pair:(sym:5,alt:5,2)'";
  EXPECT_EQ(run(args, "FUSIONKIT_CAPS='{\"max_group_order\": 50}'").code, 2);
  // flags override the environment
  EXPECT_EQ(run(args + " --max-order 1000", "FUSIONKIT_CAPS='{\"max_group_order\": 50}'").code, 0);
  EXPECT_EQ(run(args, "FUSIONKIT_CAPS='{\"no_such_cap\": 1}'").code, 2);
  EXPECT_EQ(run(args, "FUSIONKIT_CAPS='not json'").code, 2);
}

}  // namespace
