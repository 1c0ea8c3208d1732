#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "schubert");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = schubert::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, RestrictAllAgree) {
  const auto r = run({"restrict", "--type", "A", "--rank", "3", "--u", "2143", "--v", "3421", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: AGREE"), std::string::npos);
  EXPECT_NE(r.out.find("typea: a1^2 + 2*a1*a2 + a1*a3 + a2^2 + a2*a3"), std::string::npos);
}

TEST(Cli, RestrictSimple) {
  EXPECT_EQ(run({"restrict", "--type", "A", "--rank", "2", "--u", "1", "--v", "1,2,1"}).out, "a1 + a2\n");
  const auto b = run({"restrict", "--type", "B", "--rank", "2", "--u", "2", "--v", "1,2,1", "--method", "chain"});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "a1 + a2\n");
  EXPECT_EQ(run({"restrict", "--type", "A", "--rank", "2", "--u", "1", "--v", "1,2,1", "--basis", "x"}).out,
            "x1 - x3\n");
}

TEST(Cli, RestrictJsonRoundTrips) {
  const auto r = run({"restrict", "--type", "C", "--rank", "3", "--u", "3", "--v", "3,2,3,1", "--method", "all",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "v1");
  EXPECT_EQ(j["verdict"], "AGREE");
  const auto rs = schubert::build_root_system({schubert::Family::C, 3});
  const auto want = schubert::tau_chain(schubert::element_from_word(rs, {3}), schubert::element_from_word(rs, {3, 2, 3, 1}));
  for (const auto &res : j["results"])
    EXPECT_EQ(schubert::polynomial_from_json(res["value"], 3), want);
}

TEST(Cli, Chains) {
  const auto r = run({"chains", "--type", "C", "--rank", "2", "--u", "1", "--v", "1,2,1,2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["chains"].size(), 4u);
  int c0 = 0;
  for (const auto &c : j["chains"])
    c0 += c["in_c0"].get<bool>();
  EXPECT_EQ(c0, 1);

  const auto m = run({"chains", "--type", "C", "--rank", "2", "--u", "1", "--v", "1,2,1,2", "--map-to-subwords",
                      "--word", "1,2,1,2"});
  EXPECT_NE(m.out.find("F_I = [0,0,1,0]"), std::string::npos);
  EXPECT_NE(m.out.find("F_I = [1,0,0,0]"), std::string::npos);

  const auto a = run({"chains", "--type", "A", "--rank", "2", "--u", "1", "--v", "1,2,1"});
  EXPECT_NE(a.out.find("2 maximal chains, 1 in C0"), std::string::npos);
  EXPECT_NE(a.out.find("E = (a1 + a2)"), std::string::npos);
  EXPECT_NE(a.out.find("E = 0"), std::string::npos);
}

TEST(Cli, Subwords) {
  const auto r = run({"subwords", "--type", "A", "--rank", "3", "--u", "2143", "--v", "3421", "--word", "2,1,3,2,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[0,1,3,0,0]"), std::string::npos);
  EXPECT_NE(r.out.find("[0,1,0,0,3]"), std::string::npos);
  EXPECT_NE(r.out.find("total = a1^2 + 2*a1*a2"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto gkm = run({"verify", "--suite", "gkm", "--type", "C", "--rank", "2"});
  EXPECT_EQ(gkm.code, 0);
  const auto j = nlohmann::json::parse(gkm.out);
  EXPECT_EQ(j["schema"], "v1");
  EXPECT_EQ(j["failures"].size(), 0u);
  EXPECT_EQ(run({"verify", "--suite", "oracle", "--type", "A", "--rank", "3"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "equivalence-typeA", "--rank", "3"}).code, 0);
  const auto all = run({"verify", "--suite", "all", "--type", "B", "--rank", "2", "--samples", "2", "--format", "text"});
  EXPECT_EQ(all.code, 0);
  EXPECT_NE(all.out.find("lemmas B2"), std::string::npos);
}

TEST(Cli, Table) {
  const auto r = run({"table", "--type", "A", "--rank", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["entries"].size(), 19u);
  const auto l = run({"table", "--type", "B", "--rank", "2", "--format", "latex", "--method", "billey"});
  EXPECT_NE(l.out.find("\\begin{tabular}"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"restrict", "--type", "B", "--rank", "2", "--u", "21"}).code, 2);
  EXPECT_EQ(run({"restrict", "--type", "B", "--rank", "2", "--method", "typea"}).code, 2);
  EXPECT_EQ(run({"restrict", "--type", "B", "--rank", "2", "--basis", "x"}).code, 2);
  EXPECT_EQ(run({"restrict", "--type", "D", "--rank", "4"}).code, 2);
  EXPECT_EQ(run({"restrict", "--type", "A", "--rank", "2", "--v", "1,2,1", "--word", "1,2"}).code, 2);
  EXPECT_EQ(run({"restrict", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "equivalence-typeA", "--type", "C", "--rank", "2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, GroupCapFromEnvironment) {
  ::setenv("SCHUBERT_MAX_GROUP_ORDER", "10", 1);
  EXPECT_EQ(run({"table", "--type", "A", "--rank", "3"}).code, 2);
  ::unsetenv("SCHUBERT_MAX_GROUP_ORDER");
  EXPECT_EQ(run({"table", "--type", "A", "--rank", "2"}).code, 0);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "schubert_cli_out.txt";
  const auto r = run({"restrict", "--type", "A", "--rank", "2", "--u", "1", "--v", "1,2,1", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "a1 + a2");
  std::remove(path.c_str());
}
