#include <gtest/gtest.h>

#include "cli_support.hpp"
#include "locmult/errors.hpp"

using namespace locmult;
using namespace locmult::testing;

namespace {

const char* kCusp = "ring x,y\nideal x^2, y^3   # cusp\n";
const char* kSquare = "ring x,y\nideal x^2, x*y, y^2\nsub x^2, y^2\n";
const char* kCube = "ring x,y\nideal x^2, x*y, y^2\nsub x^3, y^3\n";
const char* kElement = "ring x,y\nideal x^2, y^2\nelement x*y\n";
const char* kFamily = "ring x,y\nparam t\nmap x^2, y^2, t*x*y\nsamples 0, 1, -1, 1/2, 3\n";

class Cli : public ::testing::Test {
 protected:
  ScratchDir dir{"cli"};
};

}  // namespace

TEST(ProblemFile, ParsesAndCanonicalizes) {
  const auto p = cli::parse_problem("# header\nring  x, y\n\nideal x^2,   y^3 # note\n");
  EXPECT_EQ(p.ring, (std::vector<std::string>{"x", "y"}));
  ASSERT_TRUE(p.ideal);
  EXPECT_EQ(*p.ideal, "x^2, y^3");
  EXPECT_EQ(p.canonical, "ring x, y\nideal x^2, y^3\n");
  EXPECT_EQ(cli::parse_problem("ring x,y\nideal x^2,y^3").canonical,
            cli::parse_problem("ring x, y\n  ideal x^2, y^3  \n").canonical);
}

TEST(ProblemFile, ErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      cli::parse_problem(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(line_of("ring x,y\nbogus 1\n"), 2u);
  EXPECT_EQ(line_of("ideal x\n"), 1u);
  EXPECT_EQ(line_of("ring x,y\nring x\n"), 2u);
  EXPECT_EQ(line_of("ring x,y\nideal x\nideal y\n"), 3u);
  EXPECT_NE(line_of("ring x,y\nmap x, y\n"), 0u);  // map without param
  EXPECT_NE(line_of("ring x,y\nparam t\nideal x, y\n"), 0u);
}

TEST(Digest, KnownVector) {
  EXPECT_EQ(cli::sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(Cli, MultPrintsTheMultiplicity) {
  const auto r = run_cli({"mult", "-f", dir.write("cusp.txt", kCusp)});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("e = 6"), std::string::npos);
  for (const char* method : {"diff", "generic", "both"}) {
    const auto j = run_cli({"mult", "-f", dir.write("cusp.txt", kCusp), "--json", "--method", method});
    ASSERT_EQ(j.code, 0) << j.err;
    EXPECT_EQ(Json::parse(j.out)["result"]["e"], 6) << method;
  }
}

TEST_F(Cli, LojaPrintsTheBracket) {
  const auto r = run_cli({"loja", "-f", dir.write("cusp.txt", kCusp), "--qmax", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(8/3, 3]"), std::string::npos);
  EXPECT_NE(r.out.find("exact 3"), std::string::npos);
}

TEST_F(Cli, FamilyReport) {
  const auto r = run_cli({"family", "-f", dir.write("fam.txt", kFamily), "--seed", "42", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "family");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["result"]["multiplicity-constant"], true);
  EXPECT_EQ(j["result"]["semicontinuity"], "no violation");
  for (const auto& s : j["result"]["samples"]) EXPECT_EQ(s["e"], 4);
  EXPECT_TRUE(j["certificate"].contains("projection"));
}

TEST_F(Cli, ReduceMemberClosureNewton) {
  const auto yes = run_cli({"reduce", "-f", dir.write("sq.txt", kSquare), "--json"});
  ASSERT_EQ(yes.code, 0) << yes.err;
  EXPECT_EQ(Json::parse(yes.out)["result"]["verdict"], "yes-with-r");
  const auto no = run_cli({"reduce", "-f", dir.write("cube.txt", kCube), "--json"});
  ASSERT_EQ(no.code, 0) << no.err;
  EXPECT_EQ(Json::parse(no.out)["result"]["verdict"], "no-by-multiplicity");

  const auto member = run_cli({"member", "-f", dir.write("el.txt", kElement), "--json"});
  ASSERT_EQ(member.code, 0) << member.err;
  EXPECT_EQ(Json::parse(member.out)["result"]["member"], false);
  const auto closure = run_cli({"closure", "-f", dir.write("el.txt", kElement), "--json"});
  ASSERT_EQ(closure.code, 0) << closure.err;
  EXPECT_EQ(Json::parse(closure.out)["result"]["member"], true);

  const auto newton = run_cli({"newton", "-f", dir.write("cusp.txt", kCusp)});
  ASSERT_EQ(newton.code, 0) << newton.err;
  EXPECT_NE(newton.out.find("multiplicity 6"), std::string::npos);
}

TEST_F(Cli, JsonEnvelope) {
  const auto r = run_cli({"mult", "-f", dir.write("cusp.txt", kCusp), "--json"});
  const Json j = Json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "input-digest", "seed", "result",
                                            "certificate", "diagnostics", "timing-ms"}));
  EXPECT_EQ(j["input-digest"], "sha256:" + cli::sha256_hex(cli::parse_problem(kCusp).canonical));
}

TEST_F(Cli, ExitCodes) {
  const std::string cusp = dir.write("cusp.txt", kCusp);
  EXPECT_EQ(run_cli({"mult", "-f", cusp}).code, cli::kOk);
  EXPECT_EQ(run_cli({"mult", "-f", cusp + ".missing"}).code, cli::kParse);
  EXPECT_EQ(run_cli({"mult", "-f", dir.write("bad.txt", "ring x,y\nideal x^^2\n")}).code, cli::kParse);
  EXPECT_EQ(run_cli({"mult", "-f", dir.write("kw.txt", "ring x,y\nwhat x\n")}).code, cli::kParse);
  EXPECT_EQ(run_cli({"mult", "-f", dir.write("z.txt", "ring x,y\nideal x^2, z\n")}).code, cli::kParse);
  EXPECT_EQ(run_cli({"frobnicate", "-f", cusp}).code, cli::kParse);
  EXPECT_EQ(run_cli({"mult", "-f", cusp, "--method", "guess"}).code, cli::kParse);
  EXPECT_EQ(run_cli({"mult", "-f", dir.write("np.txt", "ring x,y\nideal x^2, x*y\n")}).code,
            cli::kHypothesis);
  EXPECT_EQ(run_cli({"reduce", "-f", dir.write("nc.txt", "ring x,y\nideal x^2, y^2\nsub x, y\n")}).code,
            cli::kHypothesis);
  // Differences cannot settle with two samples and generic search is off.
  EXPECT_EQ(run_cli({"mult", "-f", dir.write("sq.txt", kSquare), "--method", "diff", "--kmax", "2"}).code,
            cli::kResource);
}

TEST_F(Cli, DeterministicJson) {
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"mult", kCusp}, {"reduce", kSquare}, {"reduce", kCube}, {"member", kElement},
      {"closure", kElement}, {"loja", kCusp}, {"newton", kCusp}, {"family", kFamily}};
  for (const auto& [command, text] : runs) {
    const std::string file = dir.write(command + ".txt", text);
    const auto a = run_cli({command, "-f", file, "--json", "--seed", "5"});
    const auto b = run_cli({command, "-f", file, "--json", "--seed", "5"});
    ASSERT_EQ(a.code, 0) << command << a.err;
    EXPECT_EQ(without_timing(a.out), without_timing(b.out)) << command;
  }
}

TEST_F(Cli, VerifyAcceptsEveryReport) {
  const std::vector<std::pair<std::string, std::string>> runs = {
      {"mult", kCusp}, {"reduce", kSquare}, {"reduce", kCube}, {"member", kElement},
      {"closure", kElement}, {"loja", kCusp}, {"newton", kCusp}, {"family", kFamily}};
  for (const auto& [command, text] : runs) {
    const std::string file = dir.write(command + ".txt", text);
    const auto r = run_cli({command, "-f", file, "--json"});
    ASSERT_EQ(r.code, 0) << command << r.err;
    const std::string report = dir.write(command + ".json", r.out);
    const auto v = run_cli({"verify", report, "-f", file});
    EXPECT_EQ(v.code, 0) << command << v.out << v.err;
  }
}

TEST_F(Cli, VerifyRejectsTampering) {
  const std::string file = dir.write("sq.txt", kSquare);
  const Json good = Json::parse(run_cli({"reduce", "-f", file, "--json"}).out);

  Json wrong_r = good;
  wrong_r["certificate"]["r"] = 0;
  EXPECT_EQ(run_cli({"verify", dir.write("r.json", wrong_r.dump()), "-f", file}).code, cli::kHypothesis);

  Json wrong_verdict = good;
  wrong_verdict["result"]["verdict"] = "no-by-multiplicity";
  EXPECT_EQ(run_cli({"verify", dir.write("v.json", wrong_verdict.dump()), "-f", file}).code,
            cli::kHypothesis);

  // Same report against a different problem: the digest no longer matches.
  const std::string other = dir.write("cube.txt", kCube);
  EXPECT_EQ(run_cli({"verify", dir.write("g.json", good.dump()), "-f", other}).code, cli::kHypothesis);

  const std::string cusp = dir.write("cusp.txt", kCusp);
  Json mult = Json::parse(run_cli({"mult", "-f", cusp, "--json"}).out);
  mult["result"]["e"] = 7;
  mult["certificate"]["generic"]["e"] = 7;
  mult["certificate"]["differences"]["e"] = 7;
  EXPECT_EQ(run_cli({"verify", dir.write("m.json", mult.dump()), "-f", cusp}).code, cli::kHypothesis);

  EXPECT_EQ(run_cli({"verify", dir.write("junk.json", "{not json"), "-f", cusp}).code, cli::kParse);
}
