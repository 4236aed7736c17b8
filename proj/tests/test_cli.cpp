#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = itercon::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST(Cli, DecideValid) {
  CliRun r = run({"decide", "(Con(T) -> Con(~Con(T)))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "RESULT: VALID\n");
}

TEST(Cli, DecideInvalidPrintsCountermodel) {
  CliRun r = run({"decide", "Con(T)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "RESULT: INVALID\nWORLDS 1\nROOT 0\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"decide", "1Con(p)"}).code, 2);
  EXPECT_EQ(run({"decide", "~(Con(p) & (Con(q) & (Con(~p) & Con(~q))))", "--budget", "2"}).code, 3);
  EXPECT_EQ(run({"decide", "(p & q)", "--size-cap", "2"}).code, 3);
  EXPECT_EQ(run({"decide", "(p & q"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"ord", "pred", "w"}).code, 1);
  EXPECT_EQ(run({"truth", "Con(p)"}).code, 1);
  EXPECT_EQ(run({"op", "check-monotone", "--op", "conj_con"}).code, 1);
}

TEST(Cli, ErrorsGoToStderr) {
  CliRun r = run({"parse", "(p & q"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("position 6"), std::string::npos);
}

TEST(Cli, Ordinals) {
  EXPECT_EQ(run({"ord", "cmp", "w*2", "w^2"}).out, "LT\n");
  EXPECT_EQ(run({"ord", "classify", "w^w"}).out, "Limit\n");
  EXPECT_EQ(run({"ord", "pred", "w+3"}).out, "w+2\n");
  CliRun f = run({"ord", "fund", "w^2", "2"});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(starts_with(f.out, "w*2\n"));
}

TEST(Cli, SentenceCommands) {
  EXPECT_EQ(run({"proves", "Con[2](T)", "Con[1](T)"}).out, "RESULT: VALID\n");
  EXPECT_TRUE(starts_with(run({"strict", "Con[2](T)", "Con[1](T)"}).out, "RESULT: YES"));
  EXPECT_EQ(run({"nf", "(Con(T) & Con[2](T))"}).out, "Con[2](T)\n");
  EXPECT_EQ(run({"truth", "Con(~Con(T))"}).out, "TRUE\n");
  EXPECT_EQ(run({"parse", "( p&Con( q ))"}).out, "(p & Con(q))\n# size 4\n");
  EXPECT_TRUE(starts_with(run({"unfold", "Con[w](T)", "--limit-budget", "2"}).out, "(T & Con((T & T)))\n# inexact"));
}

TEST(Cli, Constructions) {
  CliRun bbb = run({"construct", "bbb", "T"});
  EXPECT_EQ(bbb.code, 0);
  EXPECT_NE(bbb.out.find("CLAIM bbb VERDICT Yes"), std::string::npos);
  EXPECT_EQ(run({"construct", "inversion", "p"}).code, 1);
  CliRun theta = run({"construct", "theta", "2"});
  EXPECT_NE(theta.out.find("SEQ 2 (@theta1_conj_con & @theta_succ_conj_con_2)"), std::string::npos);
  EXPECT_EQ(run({"construct", "star", "p", "--bound", "1"}).out, "(p & (ConI[0](p) -> ConI[0]((p & ConI[0](p)))))\n");
  EXPECT_NE(run({"construct", "onecon-check", "p", "--k", "3"}).out.find("VERDICT Yes"), std::string::npos);
  EXPECT_EQ(run({"construct", "ttt", "p", "--n", "9"}).code, 1);
}

TEST(Cli, CheckMonotone) {
  CliRun r = run({"op", "check-monotone", "--op", "negate", "--corpus-size", "3", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(starts_with(r.out, "# operator negate seed 7\n"));
  EXPECT_NE(r.out.find("WITNESS 0"), std::string::npos);
}

TEST(Cli, Enumerator) {
  CliRun r = run({"enum", "--stages", "2", "--closure-depth", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("STAGE 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("STAGE 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("# true_actives 1 incompatibility Yes"), std::string::npos);
  EXPECT_EQ(run({"enum", "--stages", "20"}).code, 3);
}
