#include <jdefect/cli.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace jdefect;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "jdefect");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Analyze, Conic) {
  auto r = run({"analyze", "x^2+y^2+z^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("defect nu:      1"), std::string::npos);
  EXPECT_NE(r.out.find("nearly_free"), std::string::npos);
}

TEST(Analyze, JsonOutputParses) {
  auto r = run({"analyze", "x^2+y^2+z^2", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["nu"], "1");
  EXPECT_EQ(j["classification"], "nearly_free");
}

TEST(Analyze, Families) {
  auto r = run({"analyze", "--family", "ivinskis", "--k", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["nu"], "1");
  auto p = run({"analyze", "--family", "persson", "--m", "4", "--json"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(Json::parse(p.out)["tau"], "36");
  auto l = run({"analyze", "--family", "lines", "--n", "3", "--concurrent", "--json"});
  ASSERT_EQ(l.code, 0) << l.err;
  EXPECT_EQ(Json::parse(l.out)["tau"], "4");
  auto n = run({"analyze", "--family", "nodal", "--d", "4", "--seed", "3", "--json"});
  ASSERT_EQ(n.code, 0) << n.err;
  auto nj = Json::parse(n.out);
  EXPECT_EQ(nj["tau"], "3");
  EXPECT_EQ(nj["input"]["seed"], "3");
}

TEST(Analyze, NonReducedExitsTwo) {
  for (const char* bad : {"x^2*y", "(x+y+z)^2*z"}) {
    auto r = run({"analyze", bad});
    EXPECT_EQ(r.code, 2) << bad;
    EXPECT_NE(r.err.find("non-reduced or non-isolated singularities"), std::string::npos);
    EXPECT_NE(r.err.find(bad), std::string::npos) << "error must echo the input";
  }
  EXPECT_EQ(run({"analyze", "0"}).code, 2);
}

TEST(Analyze, UsageErrorsExitOne) {
  EXPECT_EQ(run({"analyze", "x^2+y^3"}).code, 1);
  EXPECT_EQ(run({"analyze", "2x"}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"analyze", "--family", "persson"}).code, 1);
  EXPECT_EQ(run({"analyze", "--family", "persson", "--m", "3"}).code, 1);
  EXPECT_EQ(run({"analyze", "--family", "nosuch"}).code, 1);
  EXPECT_EQ(run({"analyze", "x^2+y^2+z^2", "--family", "braid"}).code, 1);
  EXPECT_EQ(run({"analyze", "x^2+y^2+z^2", "--arithmetic", "float"}).code, 1);
  auto r = run({"analyze", "x^2+y^3"});
  EXPECT_NE(r.err.find("x^2+y^3"), std::string::npos);
}

TEST(Analyze, DegreeCapRefuses) {
  auto r = run({"analyze", "--family", "fermat", "--d", "20"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("exceeds --max-degree 14"), std::string::npos);
  EXPECT_EQ(run({"analyze", "x^15+y^15+z^15"}).code, 1);
  EXPECT_EQ(run({"analyze", "x^3+y^3+z^3", "--max-degree", "2"}).code, 1);
  EXPECT_EQ(run({"analyze", "--family", "ivinskis", "--k", "3"}).code, 1);
}

TEST(Analyze, ArithmeticFlagDoesNotChangeResult) {
  auto a = Json::parse(run({"analyze", "x*y*z*(x-y)*(x-z)*(y-z)", "--json", "--arithmetic", "exact"}).out);
  auto b = Json::parse(run({"analyze", "x*y*z*(x-y)*(x-z)*(y-z)", "--json", "--arithmetic", "modular"}).out);
  for (const char* key : {"d", "mdr", "tau", "n_seq", "nu", "classification"}) EXPECT_EQ(a[key], b[key]) << key;
}

TEST(Bounds, Examples) {
  auto a = run({"bounds", "A", "--d", "10"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "ν ≥ 99/4 ⇒ ν ≥ 25\n");
  EXPECT_EQ(run({"bounds", "C", "--k", "3"}).out, "ν = 55, genus = 55\n");
  EXPECT_EQ(run({"bounds", "dpw", "--d", "8", "--r", "4"}).out, "36\n");
  EXPECT_EQ(run({"bounds", "lct", "--type", "cusp"}).out, "lct(A2) = 5/6, tau = 2\n");
  EXPECT_EQ(run({"bounds", "genus", "--d", "6", "--census", "cusp:9"}).out, "genus = 1\n");
  EXPECT_EQ(run({"bounds", "A", "--d", "4"}).out, "ν ≥ 15/4 ⇒ ν ≥ 4\n");
  EXPECT_EQ(run({"bounds", "A", "--d", "5"}).out, "ν ≥ 6\n");
}

TEST(Bounds, NotApplicableIsReported) {
  auto b = run({"bounds", "B", "--k", "2"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("not applicable"), std::string::npos);
  auto d = run({"bounds", "D", "--d", "6", "--census", "triple:4,node:3"});
  EXPECT_NE(d.out.find("not applicable"), std::string::npos);
  auto ok = run({"bounds", "D", "--d", "12", "--census", "node:66"});
  EXPECT_EQ(ok.out.rfind("ν ≥ 1", 0), 0u);
}

TEST(Bounds, JsonAndErrors) {
  auto j = Json::parse(run({"bounds", "C", "--k", "2", "--json"}).out);
  EXPECT_EQ(j["verdict"]["integer_bound"], "19");
  EXPECT_EQ(j["verdict"]["genus"], "19");
  EXPECT_EQ(Json::parse(run({"bounds", "dpw", "--d", "8", "--r", "3", "--json"}).out)["tau_max"], "37");
  EXPECT_EQ(run({"bounds", "A"}).code, 1);
  EXPECT_EQ(run({"bounds", "Z", "--d", "3"}).code, 1);
  EXPECT_EQ(run({"bounds", "dpw", "--d", "8", "--r", "9"}).code, 1);
  EXPECT_EQ(run({"bounds", "genus", "--d", "4", "--census", "node:4"}).code, 1);
}

TEST(VerifyPaper, SubsetAndSkip) {
  auto r = run({"verify-paper", "--only", "theoremC", "--max-degree", "6"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("SKIPPED"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL "), std::string::npos);
  EXPECT_EQ(r.out.find("persson"), std::string::npos);

  auto j = Json::parse(run({"verify-paper", "--only", "identities", "--json"}).out);
  ASSERT_EQ(j["items"].size(), 1u);
  EXPECT_EQ(j["items"][0]["status"], "PASS");
  EXPECT_TRUE(j["all_passed"].get<bool>());
}
