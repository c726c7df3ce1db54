#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = lpq::cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("lpq_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, SturmText) {
  const Result r = run({"sturm", "--poly", "2,3,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("real roots 2"), std::string::npos);
  EXPECT_NE(r.out.find("Z_c 0"), std::string::npos);
}

TEST(Cli, SturmJsonCountsComplexPair) {
  const Result r = run({"sturm", "--poly", "1,0,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("z_c").get<int>(), 2);
}

TEST(Cli, QuotientsCsvHasHeaderAndRows) {
  const Result r = run({"quotients", "--rule", R"({"type":"constant","q":4})", "--n-max", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n,p_n,q_n\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, QuotientsFromCoefficientFile) {
  const auto path = temp_path("coeffs.txt");
  std::ofstream(path) << "0 1\n1 1\n2 1/4\n3 1/64\n";
  const Result r = run({"quotients", "--file", path.string(), "--n-max", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("q_n=4"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, InputErrorsExit64) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"nonsense"}).code, 64);
  EXPECT_EQ(run({"sturm"}).code, 64);
  EXPECT_EQ(run({"sturm", "--poly", "1,zz"}).code, 64);
  EXPECT_EQ(run({"sturm", "--poly", "1,1", "--format", "csv"}).code, 64);
  EXPECT_EQ(run({"theta", "eval", "--x", "1"}).code, 64);
  EXPECT_EQ(run({"theta", "cn", "--n", "1"}).code, 64);
  EXPECT_EQ(run({"quotients", "--rule", "{not json"}).code, 64);
  EXPECT_EQ(run({"sturm", "--poly", "1,1", "--tol", "-1"}).code, 64);
  EXPECT_EQ(run({"verify", "--file", "/nonexistent/cert.json"}).code, 64);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ThetaCn) {
  const Result r = run({"theta", "cn", "--n", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("n").get<int>(), 4);
}

TEST(Cli, ClassifyExitCodes) {
  EXPECT_EQ(run({"classify", "--rule", R"({"type":"constant","q":4})"}).code, 0);
  const Result r = run({"classify", "--rule", R"({"type":"constant","q":3})", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("verdict"), "NOT_IN_LP");
  // Limit inside the q_inf bracket.
  EXPECT_EQ(run({"classify", "--rule", R"({"type":"constant","q":3.2336366660})"}).code, 2);
}

TEST(Cli, CertifyVerifyRoundTripAndTamper) {
  const auto cert = temp_path("cert.json");
  const Result c = run({"certify", "--rule", R"({"type":"constant","q":3.1})", "--out", cert.string()});
  ASSERT_EQ(c.code, 0) << c.err;
  ASSERT_TRUE(std::filesystem::exists(cert));
  const auto meta = nlohmann::json::parse(slurp(cert.string() + ".meta.json"));
  EXPECT_EQ(meta.at("command"), "certify");
  EXPECT_TRUE(meta.contains("started_utc"));
  // Timestamps live only in the sidecar.
  EXPECT_EQ(slurp(cert).find("utc"), std::string::npos);

  EXPECT_EQ(run({"verify", "--file", cert.string()}).code, 0);

  auto j = nlohmann::json::parse(slurp(cert));
  j["grace_witness"]["inside_count"] = 0;
  const auto bad = temp_path("bad.json");
  std::ofstream(bad) << j.dump();
  const Result v = run({"verify", "--file", bad.string()});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("INVALID"), std::string::npos);
  for (const auto& p : {cert, bad, std::filesystem::path(cert.string() + ".meta.json")}) {
    std::filesystem::remove(p);
  }
}

TEST(Cli, CertifyAboveQinfIsInconclusive) {
  const Result r = run({"certify", "--rule", R"({"type":"limit-increasing","c":3.5,"d":0.1})"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("conclusion"), "INCONCLUSIVE");
}

TEST(Cli, ArtifactsAreDeterministic) {
  const std::vector<std::string> args = {"theta", "qinf", "--n-max", "8", "--format", "csv"};
  const Result a = run(args);
  const Result b = run(args);
  auto jobs = args;
  jobs.insert(jobs.end(), {"--jobs", "2"});
  const Result c = run(jobs);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}
