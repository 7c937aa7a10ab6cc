#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "smashlab/cli.hpp"

namespace smashlab {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args, int expect_code = 0) {
  args.push_back("--json");
  auto r = cli(args);
  EXPECT_EQ(r.code, expect_code) << r.out << r.err;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, SupportJson) {
  auto r = cli({"support", "ER(1)", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"classes\":[{\"subgroup\":\"e\",\"value\":{\"level\":1}},{\"subgroup\":\"C2\",\"value\":\"bot\"}]}\n");
}

TEST(Cli, SmashingExitCodes) {
  auto j = json_of({"smashing", "ind[C(2)](E(1))"}, 1);
  EXPECT_EQ(j["status"], "NotSmashing");
  auto cites = j["citations"].get<std::vector<std::string>>();
  EXPECT_NE(std::find(cites.begin(), cites.end(), "Thm 4.1"), cites.end());
  EXPECT_NE(std::find(cites.begin(), cites.end(), "Cor 3.23"), cites.end());
  EXPECT_EQ(json_of({"smashing", "ind[C(4)](E(0))"})["status"], "Smashing");
  EXPECT_EQ(json_of({"smashing", "ind[S(3)](tEF[triv]@C(2))"}, 1)["status"], "Unknown");
}

TEST(Cli, Relations) {
  EXPECT_EQ(cli({"equal", "ER(3)", "ind[C(2)](E(3))"}).code, 0);
  auto ne = json_of({"equal", "S0@C(2)", "pt@C(2)"}, 1);
  EXPECT_EQ(ne["witnesses"].size(), 2u);
  EXPECT_EQ(cli({"leq", "pt@C(2)", "S0@C(2)"}).code, 0);
  EXPECT_EQ(cli({"acyclic", "EF[triv]@C(2)", "tEF[triv]@C(2)"}).code, 0);
  EXPECT_EQ(cli({"acyclic", "S0@C(2)", "tEF[triv]@C(2)"}).code, 1);
}

TEST(Cli, FormulasLocalsFixedPoints) {
  EXPECT_EQ(cli({"localize", "ER(2)"}).out, "F(EC_2+, i_*L_{E(2)}(S^0) ∧ X)  [Thm 4.1]\n");
  EXPECT_EQ(json_of({"localize", "S0@C(2)"}, 2)["error"], "ShapeNotCovered");
  EXPECT_EQ(json_of({"locals", "ind[C(4)](S0@C(2))"})["citation"], "Cor 3.10");
  EXPECT_EQ(json_of({"fixclass", "ER(2)", "--ring"})["level"]["level"], 2);
}

TEST(Cli, Ideals) {
  auto r = cli({"ideals", "verify", "1,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true\n");
  auto list = json_of({"ideals", "enumerate", "--n", "2", "--max", "1"});
  EXPECT_EQ(list.size(), 8u);
  EXPECT_EQ(json_of({"ideals", "construct", "2,1,1"})["cases"][0], "C_4: case (iii), m_0 = m_1 + 1");
  EXPECT_EQ(cli({"ideals", "verify", "3,1"}).code, 2);
  EXPECT_EQ(cli({"--prime", "3", "ideals", "verify", "0,1,1"}).code, 0);
}

TEST(Cli, Ninfty) {
  auto co = json_of({"ninfty", "coinduce", "--group", "S(4)", "--sub", "e"});
  EXPECT_TRUE(co["complete"].get<bool>());
  auto cl = json_of({"ninfty", "closure", "--expr", "tEF[triv]@C(2)", "--admissible", "complete"}, 1);
  EXPECT_EQ(cl["status"], "NotClosed");
  EXPECT_EQ(cl["counterexample"]["Z"], "EF[triv]@C(2)");
  EXPECT_EQ(json_of({"ninfty", "closure", "--expr", "ER(1)", "--admissible", "complete"}, 1)["status"], "Unknown");
  EXPECT_EQ(json_of({"ninfty", "propagate", "--expr", "ind[C(4)](S0@C(2))"}, 2)["error"], "MissingPremise");

  std::string path = ::testing::TempDir() + "smashlab_pairs.json";
  std::ofstream(path) << R"js([{"H": ["(1,2,3,4)"], "K": []}])js";
  EXPECT_EQ(cli({"ninfty", "coinduce", "--group", "C(4)", "--sub", "(1,3)(2,4)", "--admissible", path}).code, 2);
  auto closed = json_of({"ninfty", "closure", "--expr", "EF[triv]@C(4)", "--admissible", path, "--close"});
  EXPECT_EQ(closed["status"], "Closed");
  auto bad = cli({"ninfty", "closure", "--expr", "EF[triv]@C(4)", "--admissible", path});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("ClosureViolation"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, StdinDefinitionsAndErrors) {
  EXPECT_EQ(cli({"support", "-"}, "ind[C(2)](E(1))").out, cli({"support", "ER(1)"}).out);
  std::string defs = ::testing::TempDir() + "smashlab_defs.txt";
  std::ofstream(defs) << "group G = D8;\nlet x = tEF[famsub(sub[G]{(1,2,3,4)})]@G;  # idempotent\n";
  EXPECT_EQ(cli({"--defs", defs, "smashing", "res[G](ind[S(4)](x))"}).code, 1);
  std::remove(defs.c_str());
  auto syn = cli({"support", "ind[C(4)](E(1)"});
  EXPECT_EQ(syn.code, 2);
  EXPECT_NE(syn.err.find("line 1, column 15"), std::string::npos);
  EXPECT_EQ(cli({"nonsense"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--prime", "4", "support", "S0"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, SelftestAndDeterminism) {
  auto a = cli({"selftest", "--json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(a.out)["ok"].get<bool>());
  for (std::vector<std::string> args :
       {std::vector<std::string>{"selftest"}, {"ideals", "enumerate", "--n", "3", "--max", "2", "--json"},
        {"locals", "norm[S(3)](tEF[triv]@C(2))"}, {"ninfty", "coinduce", "--group", "D8", "--sub", "(1,3)"}})
    EXPECT_EQ(cli(args).out, cli(args).out);
}

// The installed binary behaves like the in-process entry point.
TEST(Cli, BinaryMatchesInProcess) {
  std::string cmd = std::string(SMASHLAB_BINARY) + " support 'ER(1)' --json";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_EQ(out, cli({"support", "ER(1)", "--json"}).out);
}

}  // namespace
}  // namespace smashlab
