#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the tool with stderr folded into stdout only when requested.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(HODGE_CLI_PATH) + " --no-cache " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Run run_cached(const std::string& cache, const std::string& args) {
  const std::string cmd = std::string(HODGE_CLI_PATH) + " --cache " + cache + " --stats " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, Constants) {
  EXPECT_EQ(run("lambda --class c --genus 3").out, "41/580608\n");
  EXPECT_EQ(run("lambda --class b --genus 4").out, "127/154828800\n");
  EXPECT_EQ(run("lambda --class cube --genus 2").out, "1/2880\n");
  EXPECT_EQ(run("bseq --max-genus 1").out, "[1, 1/24]\n");
}

TEST(Cli, Integrals) {
  EXPECT_EQ(run("psi --genus 0 --exponents 0,0,0").out, "1\n");
  EXPECT_EQ(run("psi -g 2 -k 2,3").out, "29/5760\n");
  EXPECT_EQ(run("lambda --class g -g 2 -k 1,2").out, "7/1920\n");
  EXPECT_EQ(run("lambda --class g -g 2 -k 1,2 --method recursion").out, "7/1920\n");
  EXPECT_EQ(run("lambda --class gg -g 2 -k 1,1").out, "1/960\n");
  EXPECT_EQ(run("lambda --class gm1 -g 2 -k 3").out, "1/480\n");
  EXPECT_EQ(run("kappa -g 2 -i 0").out, "1/2880\n");
  EXPECT_EQ(run("gw0 --target P1 -g 2 --insertions 1:2").out, "7/5760\n");
  EXPECT_EQ(run("gw0 --target P1 -g 2 --insertions 0:3").out, "-1/240\n");
}

TEST(Cli, EulerExpressions) {
  EXPECT_EQ(run("euler -r 2 -g 4").out, "-c_1 lambda_g lambda_{g-1} + c_1^2 lambda_g lambda_{g-2}\n");
  EXPECT_EQ(run("euler -r 1 -g 3 --absolute").out, "-lambda_3 + c_1 lambda_2\n");
}

TEST(Cli, JsonValuesAreStrings) {
  const auto r = run("--format json lambda --class gg -g 2 -k 1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("value"));
  EXPECT_TRUE(j["value"].is_string());
  EXPECT_EQ(j["value"], "1/2880");
  const auto t = nlohmann::json::parse(run("--format json table --max-genus 2").out);
  EXPECT_EQ(t["rows"][1]["c"], "1/480");
}

TEST(Cli, CsvTable) {
  const auto r = run("--format csv table --max-genus 2");
  EXPECT_EQ(r.out, "genus,b,c\n1,1/24,1/24\n2,7/5760,1/480\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("psi --genus 0 --exponents 0,0,0").status, 0);
  EXPECT_EQ(run("psi --bogus").status, 2);
  EXPECT_EQ(run("lambda --class zz -g 2 -k 1").status, 2);
  EXPECT_EQ(run("lambda --class g -g 2").status, 2);
  EXPECT_EQ(run("psi --genus 0 --exponents 0,0").status, 3);
  EXPECT_EQ(run("lambda --class cube --genus 1").status, 3);
  EXPECT_EQ(run("euler -r 5 -g 3").status, 3);
  EXPECT_EQ(run("gw0 --target quintic -g 2 --insertions 0:1").status, 3);
}

TEST(Cli, VerifyTable) {
  const auto first = run("verify --suite table");
  EXPECT_EQ(first.status, 0) << first.out;
  EXPECT_EQ(run("verify --suite table").out, first.out);
  EXPECT_EQ(run("verify --suite euler").status, 0);
}

TEST(Cli, CacheRoundTrip) {
  std::random_device rd;
  const auto path = std::filesystem::temp_directory_path() / ("hodge_cli_cache_" + std::to_string(rd()) + ".txt");
  const auto first = run_cached(path.string(), "lambda --class gg -g 3 -k 2,1");
  EXPECT_EQ(first.status, 0);
  EXPECT_EQ(first.out.find("computed 0"), std::string::npos) << first.out;
  const auto second = run_cached(path.string(), "lambda --class gg -g 3 -k 2,1");
  EXPECT_EQ(second.status, 0);
  EXPECT_NE(second.out.find("computed 0"), std::string::npos) << second.out;
  EXPECT_EQ(first.out.substr(0, first.out.find('\n')), "1/24192");
  EXPECT_EQ(second.out.substr(0, second.out.find('\n')), first.out.substr(0, first.out.find('\n')));
  std::filesystem::remove(path);
}

TEST(Cli, EverySuitePassesInAFreshProcess) {
  for (const char* suite : {"table", "closed-vs-recursion", "commutators", "annihilation", "mumford", "euler",
                            "string-dilaton"}) {
    const auto r = run(std::string("verify --suite ") + suite);
    EXPECT_EQ(r.status, 0) << suite << "\n" << r.out;
  }
}
