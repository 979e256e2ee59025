#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "checks.hpp"

namespace ck = sjack::checks;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(SJACK_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Checks, ShortestRoundTripFormatting) {
  EXPECT_EQ(ck::fmt_double(0.1), "0.1");
  EXPECT_EQ(ck::fmt_double(1e-8), "1e-08");
  auto row = ck::make_row("x", 2.0, 2.0 + 1e-12, 1e-9);
  EXPECT_TRUE(row.pass);
  EXPECT_FALSE(row.exact);
  auto rel = ck::make_row("y", 1e6, 1e6 + 1, 1e-5, true);
  EXPECT_TRUE(rel.pass);
}

TEST(Checks, RegistryCoversEveryCriterion) {
  EXPECT_EQ(ck::criteria().size(), 11u);
  for (const char* name : {"selberg-constant", "kadell", "recurrence", "kaneko-criterion", "holonomic-residual",
                           "pfaff-euler", "kummer", "cauchy", "gamma-selberg", "hard-edge", "duality"}) {
    const auto& names = ck::identity_names();
    EXPECT_NE(std::find(names.begin(), names.end(), name), names.end()) << name;
  }
}

TEST(Checks, VerifyPassesAndFudgeFails) {
  ck::VerifyParams p;
  p.values = {{"N", "2"}};
  for (const auto& row : ck::verify_identity("selberg-constant", p)) EXPECT_TRUE(row.pass) << row.id;
  p.fudge = 1.01;
  bool any_fail = false;
  for (const auto& row : ck::verify_identity("selberg-constant", p)) any_fail = any_fail || !row.pass;
  EXPECT_TRUE(any_fail);

  ck::VerifyParams r;
  r.values = {{"alpha", "1"}, {"n", "1"}, {"m", "1"}, {"maxw", "5"}};
  auto rows = ck::verify_identity("recurrence", r);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) {
    EXPECT_TRUE(row.pass);
    EXPECT_TRUE(row.exact);
    EXPECT_EQ(row.tol, 0.0);
  }
}

TEST(Checks, EveryIdentityPassesWithDefaults) {
  for (const auto& name : ck::identity_names()) {
    ck::VerifyParams p;
    auto rows = ck::verify_identity(name, p);
    ASSERT_FALSE(rows.empty()) << name;
    for (const auto& row : rows) EXPECT_TRUE(row.pass) << name << " " << row.id;
  }
}

TEST(Checks, FilteredAcceptanceRun) {
  ck::SuiteOptions o;
  o.filter = "recurrence";
  auto reports = ck::run_acceptance(o);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_TRUE(reports[0].pass);
  o.filter = "no-such-criterion";
  EXPECT_TRUE(ck::run_acceptance(o).empty());
}

TEST(Cli, JackExamples) {
  auto r = run_cli("jack --kappa 2 --alpha 1 --basis monomial");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m[2] + 1·m[1,1]\n");
  EXPECT_EQ(run_cli("jack --kappa 1 --alpha 2/3 --basis monomial").out, "m[1]\n");
  EXPECT_EQ(run_cli("jack --kappa 2,1 --alpha 1 --eval 1,1,1").out, "8\n");
}

TEST(Cli, SeriesAtOriginIsOne) {
  auto r = run_cli("series --type 2SF1 --a 1/2 --b 1/3 --c 5/2 --alpha 2 --t 0 --s 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find(' ')), "1");
}

TEST(Cli, FloatsNeedOptIn) {
  EXPECT_EQ(run_cli("series --type 1SF0 --a 0.5 --t 0.2 --s 0.3 --alpha 2").code, 1);
  auto r = run_cli("series --float --type 1SF0 --a 0.5 --t 0.02 --s 0.03 --alpha 2 --check closed-form");
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, JsonSchemaAndReproducibility) {
  const std::string args = "--format json verify holonomic-residual";
  auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(a.out.find("\"version\""), std::string::npos);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CsvColumns) {
  auto r = run_cli("--format csv verify recurrence --alpha 1 --n 1 --m 1 --maxw 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,lhs,rhs,abs_err,tol,pass");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("verify selberg-constant --N 2").code, 0);
  EXPECT_EQ(run_cli("verify selberg-constant --N 2 --fudge 1.01").code, 2);
  EXPECT_EQ(run_cli("verify no-such-identity").code, 1);
  EXPECT_EQ(run_cli("").code, 1);
  EXPECT_EQ(run_cli("jack").code, 1);
  EXPECT_EQ(run_cli("jack --kappa 1,2").code, 1);
  EXPECT_EQ(run_cli("jack --kappa 2 --alpha 0").code, 1);
  EXPECT_EQ(run_cli("--help").code, 0);
}

TEST(Cli, SampleIsSeeded) {
  auto a = run_cli("--seed 5 sample --family jacobi --N 3 --beta 2 --count 3");
  auto b = run_cli("--seed 5 sample --family jacobi --N 3 --beta 2 --count 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 3);
}

TEST(Cli, AcceptanceFilter) {
  auto r = run_cli("acceptance fast --filter jacobi");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("super-jacobi-termination"), std::string::npos);
  EXPECT_NE(r.out.find("ALL PASS"), std::string::npos);
}
