#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(STACKLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t k = fread(buf, 1, sizeof buf, pipe)) out.append(buf, k);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, Count) {
  EXPECT_EQ(run("count --class zigzag --n 12").out, "955999\n");
  EXPECT_EQ(run("count --class regular-linear --m 3 --n 9").out, "491\n");
  EXPECT_EQ(run("count --class rna --n 13 --k 4").out, "1764\n");
  const auto j = nlohmann::json::parse(run("count --class reduced-zigzag --m 3 --n 7 --json").out);
  EXPECT_EQ(j["count"], "491");
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["n"], 7);
}

TEST(Cli, WorkersDoNotChangeOutput) {
  EXPECT_EQ(run("--workers 3 count --class stack --n 10 --json").out, run("count --class stack --n 10 --json").out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("count --class nonsense --n 3").code, 2);
  EXPECT_EQ(run("count --class zigzag --m 3 --n 3").code, 2);
  EXPECT_EQ(run("count --class regular-linear --n 3").code, 2);
  EXPECT_EQ(run("--limits count=5 count --class zigzag --n 6").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ReduceReportsBadLines) {
  const std::string in = temp_file("reduce_in.txt", "n=6; 1-3 3-6 1-6\nn=4; 1-3 2-4\n");
  const std::string out = ::testing::TempDir() + "reduce_out.txt";
  EXPECT_EQ(run("reduce --m 2 --in " + in + " --out " + out).code, 1);
  const std::string good = temp_file("reduce_ok.txt", "n=6; 1-3 3-6 1-6\nn=3;\n");
  EXPECT_EQ(run("reduce --m 2 --in " + good + " --out " + out).code, 0);
  std::ifstream f(out);
  std::string a, b;
  std::getline(f, a);
  std::getline(f, b);
  EXPECT_EQ(a, "n=5; 1-2 1-5 3-5");
  EXPECT_EQ(b, "n=2;");
}

TEST(Cli, Table) {
  const std::string csv = run("table --which regular-linear --source series --nmax 12 --format csv").out;
  EXPECT_NE(csv.find("\n6,1,1,1,1,1,1,2,6,18,52,148,420\n"), std::string::npos) << csv;
  const auto j = nlohmann::json::parse(run("table --which zigzag --source count --nmax 12 --format json").out);
  ASSERT_EQ(j.size(), 12U);
  EXPECT_EQ(j[11]["count"], "955999");
}

TEST(Cli, AsymptoticsJson) {
  const Outcome r = run("asympt --gf rm --m 4 --json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* k : {"rho", "omega", "gamma", "omega_extrap", "gamma_extrap"}) EXPECT_TRUE(j[k].is_string()) << k;
  EXPECT_EQ(j["omega"].get<std::string>().substr(0, 9), "3.2431591");
}

TEST(Cli, VerifySingleCheck) {
  const Outcome r = run("verify --suite paper --check 12");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, SeriesReadings) {
  const auto j = nlohmann::json::parse(run("series --gf z --order 5 --json").out);
  EXPECT_EQ(j["coefficients"], nlohmann::json({"1", "1", "2", "6", "20", "70"}));
  EXPECT_EQ(run("series --gf h --m 3 --order 2").out, "0\t1\n1\t1\n2\t2\n");
  EXPECT_EQ(run("series --gf h --m 3 --order 2 --as-printed").out, "0\t1\n1\t3\n2\t2\n");
}

TEST(Cli, DecomposeAndContactMap) {
  const std::string in = temp_file("decompose.txt", "n=17; 1-7 1-13 9-13 2-3 5-6 10-11 10-12 16-17\n");
  const auto d = nlohmann::json::parse(run("decompose --m 3 --in " + in).out);
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(d[0]["component"]["vertices"], nlohmann::json({1, 7, 9, 13}));
  EXPECT_EQ(d[0]["intervals"].size(), 4U);
  const std::string walks = temp_file("walks.txt", "RUL\nRRRR\n");
  const auto c = nlohmann::json::parse(run("contactmap --walks " + walks + " --json").out);
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c[0]["diagram"], "n=4; 1-4");
  EXPECT_EQ(c[1]["diagram"], "n=5;");
  EXPECT_EQ(run("contactmap --walks " + temp_file("bad.txt", "RULD\n")).code, 1);
}
