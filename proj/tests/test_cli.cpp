#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mutalg::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MUTALG_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, MutateSl3) {
  CliRun r = cli({"mutate", data("sl3.seed"), "--sequence", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x2_1 = c"), std::string::npos) << r.out;
}

TEST(Cli, EmptySequenceEchoes) {
  CliRun r = cli({"mutate", data("sl3.seed"), "--sequence", ""});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x1 (frozen) = a*c - b"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("x2 = a"), std::string::npos) << r.out;
}

TEST(Cli, FrozenVertexIsAnError) {
  CliRun r = cli({"mutate", data("sl3.seed"), "--sequence", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("frozen"), std::string::npos);
}

TEST(Cli, MutateMachineOutputIsJson) {
  CliRun r = cli({"mutate", data("cubic_ix.seed"), "--sequence", "6,7", "--format", "machine"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.front(), '{');
}

TEST(Cli, MemberExitCodes) {
  EXPECT_EQ(cli({"member", data("hirzebruch.charts"), "--expr", "z"}).code, 0);
  CliRun no = cli({"member", data("hirzebruch.charts"), "--expr", "1/y"});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("fails chart y3"), std::string::npos) << no.out;
  EXPECT_EQ(cli({"member", data("hirzebruch.charts"), "--expr", "1/("}).code, 2);
  EXPECT_EQ(cli({"member", data("hirzebruch.charts"), "--expr", "q"}).code, 2);
}

TEST(Cli, TextAndMachineVerdictsAgree) {
  for (const char* e : {"z", "1/y", "y*z"}) {
    CliRun t = cli({"member", data("hirzebruch.charts"), "--expr", e});
    CliRun m = cli({"member", data("hirzebruch.charts"), "--expr", e, "--format", "machine"});
    EXPECT_EQ(t.code, m.code) << e;
    EXPECT_NE(m.out.find(t.code == 0 ? "\"member\":true" : "\"member\":false"), std::string::npos) << m.out;
  }
}

TEST(Cli, UpperMembership) {
  EXPECT_EQ(cli({"upper-member", data("sl3.seed"), "--expr", "c"}).code, 0);
  EXPECT_EQ(cli({"upper-member", data("sl3.seed"), "--expr", "1/b"}).code, 1);
  EXPECT_EQ(cli({"upper-member", data("sl3.seed"), "--expr", "1/b", "--frozen-invertible", "3"}).code, 0);
  EXPECT_EQ(cli({"member", "--upper", data("sl3.seed"), "--expr", "1/(a*c - b)", "--frozen-invertible", "1"}).code, 0);
  EXPECT_EQ(cli({"upper-member", data("sl3.seed"), "--expr", "c", "--frozen-invertible", "2"}).code, 2);
}

TEST(Cli, Lift) {
  CliRun r = cli({"lift", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 1  2\n 0  0\n-1  0\n 0 -1\n-1  0\n"), std::string::npos) << r.out;
  CliRun five = cli({"lift", "--n", "5"});
  EXPECT_EQ(five.code, 0);
  EXPECT_NE(five.out.find("compatibility PASS"), std::string::npos);
  EXPECT_EQ(cli({"lift", "--n", "1"}).code, 2);
}

TEST(Cli, GradeCheck) {
  EXPECT_EQ(cli({"grade-check", data("cubic_ix.seed")}).code, 0);
  EXPECT_EQ(cli({"grade-check", data("sl4.seed")}).code, 2);
}

TEST(Cli, Validate) {
  CliRun r = cli({"validate", data("hirzebruch.charts")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("UNCHECKED"), std::string::npos);
  CliRun lit = cli({"validate", data("sl3.seed"), "--reading", "literal"});
  EXPECT_EQ(lit.code, 0);
  EXPECT_NE(lit.out.find("SURROGATE-FAIL"), std::string::npos);
  EXPECT_EQ(cli({"validate", data("rank2_23.seed")}).code, 1);
}

TEST(Cli, Verify) {
  EXPECT_EQ(cli({"verify", "cubic_ix"}).code, 0);
  EXPECT_EQ(cli({"verify", "all", "--jobs", "3"}).code, 0);
  EXPECT_EQ(cli({"verify", "nosuchcase"}).code, 2);
  CliRun m = cli({"verify", "sl3", "--format", "machine"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out.front(), '{');
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"verify", "--bogus"}).code, 2);
  EXPECT_EQ(cli({"lift"}).code, 2);
  EXPECT_EQ(cli({"mutate", "/nonexistent.seed"}).code, 2);
  EXPECT_EQ(cli({"verify", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}
