#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "finspec/cli.hpp"

namespace finspec {
namespace {

const std::string kFixtures = FINSPEC_FIXTURE_DIR;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, CheckV3) {
  const CliResult r = run({"check", kFixtures + "/v3.poset"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "stone                   false\n"));
  EXPECT_TRUE(contains(r.out, "heyting                 true\n"));
  EXPECT_TRUE(contains(r.out, "non-coprime minimal primes"));
}

TEST(Cli, CheckJsonAgreesWithText) {
  for (const std::string name : {"v3", "l3", "d4", "a2", "m3", "n5"}) {
    const CliResult text = run({"check", name});
    const CliResult js = run({"check", name, "--json"});
    ASSERT_EQ(text.code, 0);
    ASSERT_EQ(js.code, 0);
    const auto j = io::json::parse(js.out);
    for (const auto& [key, value] : j["profile"].items()) {
      const std::string line = key + std::string(24 - key.size(), ' ') + (value.get<bool>() ? "true" : "false");
      EXPECT_TRUE(contains(text.out, line)) << name << " " << key;
    }
  }
}

TEST(Cli, Report) {
  const CliResult r = run({"report", "stone", "v3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "witness: points 0 and 1 lie below 2"));
  const CliResult j = run({"report", "collapse-max", "c2", "--json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(io::json::parse(j.out)["hypothesis_satisfied"], false);
  // a distributive lattice stands for its spectrum
  EXPECT_EQ(run({"report", "heyting", "bool3"}).code, 0);
  EXPECT_EQ(run({"report", "stone", "m3"}).code, 2);
  EXPECT_EQ(run({"report", "nonsense", "v3"}).code, 2);
}

TEST(Cli, Sweep) {
  const CliResult r = run({"sweep", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "n=3: 5 posets, 0 disagreements"));
  const CliResult j = run({"sweep", "3", "--json"});
  EXPECT_EQ(io::json::parse(j.out)["posets"], 8);
  EXPECT_EQ(run({"sweep", "3", "--mode", "labeled"}).code, 0);
}

TEST(Cli, SweepOutputIndependentOfJobs) {
  const CliResult one = run({"sweep", "5"});
  const CliResult four = run({"sweep", "5", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", kFixtures + "/empty.poset"}).code, 2);
  EXPECT_EQ(run({"check", kFixtures + "/cyclic.poset"}).code, 2);
  EXPECT_EQ(run({"check", kFixtures + "/nope.poset"}).code, 2);
  EXPECT_EQ(run({"sweep", "9"}).code, 3);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"sweep", "4", "--max", "3"}).code, 3);
}

TEST(Cli, PcTable) {
  const CliResult r = run({"pc-table", "v3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "  {0}      * = {1}\n"));
  const CliResult m = run({"pc-table", "m3", "--json"});
  EXPECT_EQ(io::json::parse(m.out)["pseudocomplement"][1], nullptr);
}

TEST(Cli, SpecDownsetsEnvelopeDot) {
  const CliResult s = run({"spec", "bool2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(contains(s.out, "poset 2\n"));
  EXPECT_TRUE(contains(run({"spec", "v3", "--dot"}).out, "digraph poset"));
  EXPECT_EQ(run({"spec", "v3", "--dot", "--json"}).code, 2);
  const CliResult d = run({"downsets", "v3", "--json"});
  EXPECT_EQ(io::json::parse(d.out)["size"], 5);
  EXPECT_TRUE(contains(run({"envelope", "v3"}).out, "lattice 8\n"));
  EXPECT_TRUE(contains(run({"dot", "n5"}).out, "digraph lattice"));
}

}  // namespace
}  // namespace finspec
