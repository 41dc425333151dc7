#include "hfseifert/cli/run.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace hfs;
using hfs::cli::Json;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Out o = run_cli(args);
  EXPECT_EQ(o.code, expected_code) << o.out << o.err;
  return Json::parse(o.out);
}

std::string source(const std::string& rel) { return std::string(HFS_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, LSpaceJson) {
  const Json j = run_json({"lspace", "-1;5/12,1/3,1/3"});
  EXPECT_EQ(j["schema_version"], "1.0");
  EXPECT_EQ(j["command"], "lspace");
  EXPECT_EQ(j["is_lspace"], false);
  EXPECT_EQ(j["reason"], "TransverseBothSides");
  EXPECT_EQ(j["normalized"]["text"], "-1;5/12,1/3,1/3");
  EXPECT_EQ(j["e"], "1/12");
  EXPECT_EQ(j["h1"], "9");
}

TEST(Cli, DinvOnSphere) {
  const Json j = run_json({"dinv", "-1;1/2"});
  ASSERT_EQ(j["table"]["values"].size(), 1u);
  EXPECT_EQ(j["table"]["values"][0]["d"], "0");
}

TEST(Cli, DinvCriticalFour) {
  const Json j = run_json({"dinv", "-1;3/4,1/5,1/9"});
  EXPECT_EQ(j["table"]["orientation"], "reversed");
  EXPECT_EQ(j["table"]["size"], 11);
  bool spin = false;
  for (const auto& r : j["table"]["values"])
    if (r["self_conjugate"].get<bool>()) {
      spin = true;
      EXPECT_EQ(r["d"], "-7/2");
    }
  EXPECT_TRUE(spin);
}

TEST(Cli, CriticalFour) {
  const Json j = run_json({"critical", "4"});
  EXPECT_EQ(j["multiset_match"], true);
  EXPECT_EQ(j["spin_d"], "-7/2");
  EXPECT_EQ(j["spin_label_excluded"], true);
  ASSERT_FALSE(j["nonzero_candidates"].empty());
  for (const auto& c : j["nonzero_candidates"]) {
    EXPECT_EQ(c["d3"], "-25/22");
    EXPECT_EQ(c["spin"], false);
  }
  EXPECT_EQ(j["classification"]["candidate_count"], 90);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"lspace", "-1;5/12,1/3,1/3"}).code, 0);
  EXPECT_EQ(run_cli({"lspace", "-1;1/x"}).code, 2);
  EXPECT_EQ(run_cli({"lspace", "0;1/2,-1/2"}).code, 2);  // e = 0
  EXPECT_EQ(run_cli({"tight", "-1;1/2,1/3,1/7"}).code, 3);
  EXPECT_EQ(run_cli({"tight", "-2;1/2,1/3,1/7"}).code, 4);
  EXPECT_EQ(run_cli({"classify", "-1;1/2,1/3"}).code, 4);
  EXPECT_EQ(run_cli({"critical", "13"}).code, 4);
  EXPECT_EQ(run_cli({"alexander", "4", "6"}).code, 2);
  EXPECT_EQ(run_cli({"nosuchcommand"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"d3", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"lspace", "--help"}).code, 0);
}

TEST(Cli, ErrorsAreReported) {
  const Json j = run_json({"lspace", "-1;1/0"}, 2);
  EXPECT_EQ(j["error"]["kind"], "parse");
  EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());
  const Out human = run_cli({"tight", "-2;1/2,1/3,1/7"});
  EXPECT_NE(human.err.find("e0 = -1"), std::string::npos) << human.err;
}

TEST(Cli, HumanOutput) {
  const Out o = run_cli({"dinv", "-1;3/4,1/5,1/9"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("-7/2"), std::string::npos);
  EXPECT_NE(o.out.find("(spin)"), std::string::npos);
  const Out t = run_cli({"torus", "2", "5", "7"});
  EXPECT_EQ(t.code, 0);
}

TEST(Cli, OtherCommands) {
  const Json a = run_json({"alexander", "3", "4"});
  EXPECT_EQ(a["coefficients"], Json::parse(R"([1, 0, -1, 1])"));
  EXPECT_EQ(a["delta_at_one"], 1);
  const Json t = run_json({"torus", "2", "5", "7"});
  EXPECT_EQ(t["multiset_match"], true);
  const Json c = run_json({"classify", "0;1/2,1/3,1/5"});
  EXPECT_EQ(c["candidates_enumerated"], false);
  EXPECT_EQ(c["planarity"]["all_planar_on_M"], true);
  const Json tt = run_json({"tight", "-1;1/2,1/2,1/2", "--list-all"});
  EXPECT_EQ(tt["candidate_count"], 8);
  EXPECT_EQ(tt["candidates"].size(), 8u);
}

TEST(Cli, DiagramSamples) {
  const Json j = run_json({"d3", source("samples/xi4.diagram")});
  EXPECT_EQ(j["d3"], "-25/22");
  EXPECT_EQ(j["signature"], -3);
  EXPECT_EQ(j["b2"], 7);
  const Json u = run_json({"d3", source("samples/unknot.diagram")});
  EXPECT_EQ(u["d3"], "1/4");
}

TEST(Cli, DeterministicAcrossRunsAndJobs) {
  const auto a = run_cli({"critical", "4", "--json", "--jobs", "1", "--list-all"});
  const auto b = run_cli({"critical", "4", "--json", "--jobs", "3", "--list-all"});
  const auto c = run_cli({"critical", "4", "--json", "--jobs", "1", "--list-all"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const auto d = run_cli({"classify", "-1;5/12,1/3,1/3", "--json", "--jobs", "2", "--list-all"});
  const auto e = run_cli({"classify", "-1;5/12,1/3,1/3", "--json", "--jobs", "1", "--list-all"});
  EXPECT_EQ(d.out, e.out);
}

TEST(Cli, BatchKeepsInputOrder) {
  const std::string path = testing::TempDir() + "hfs_batch.txt";
  {
    std::ofstream f(path);
    f << "# comment\n"
         "lspace -1;5/12,1/3,1/3\n"
         "\n"
         "dinv -1;1/2\n"
         "tight -1;1/2,1/3,1/7\n"
         "alexander 2 3\n";
  }
  const auto serial = run_cli({"--batch", path, "--jobs", "1"});
  const auto par = run_cli({"--batch", path, "--jobs", "4"});
  EXPECT_EQ(serial.out, par.out);
  EXPECT_EQ(serial.code, 3);
  std::istringstream lines(serial.out);
  std::vector<Json> rows;
  for (std::string l; std::getline(lines, l);) rows.push_back(Json::parse(l));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["command"], "lspace");
  EXPECT_EQ(rows[1]["command"], "dinv");
  EXPECT_EQ(rows[2]["command"], "tight");
  EXPECT_EQ(rows[2]["exit_code"], 3);
  EXPECT_EQ(rows[3]["command"], "alexander");
  EXPECT_EQ(rows[3]["exit_code"], 0);
  std::remove(path.c_str());
  EXPECT_EQ(run_cli({"--batch", "/nonexistent/batch"}).code, 2);
  EXPECT_EQ(run_cli({"--batch", source("samples/batch.txt")}).code, 0);
}

TEST(Cli, SchemaMatchesDocs) {
  const auto o = run_cli({"--schema"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, slurp(source("docs/report.schema.json")));
  EXPECT_NO_THROW(Json::parse(o.out));
}

TEST(Cli, ReportsCarryRequiredFields) {
  // The top-level "then" clauses of the schema, checked for one report of
  // every command.
  const Json schema = Json::parse(cli::report_schema);
  std::map<std::string, Json> required;
  for (const auto& clause : schema["allOf"]) {
    const std::string cmd = clause["if"]["properties"]["command"]["const"];
    if (clause["then"].contains("required")) required[cmd] = clause["then"]["required"];
  }
  required["classify"] = schema["$defs"]["classification"]["required"];
  const std::vector<std::vector<std::string>> calls = {
      {"lspace", "-1;1/2,1/3,1/5"}, {"dinv", "-1;1/2,1/3,1/5"}, {"tight", "-1;3/4,1/5,1/9"},
      {"d3", source("samples/xi4.diagram")}, {"alexander", "2", "7"}, {"torus", "3", "4", "11"},
      {"critical", "3"}, {"classify", "-1;3/4,1/5,1/9"}};
  for (const auto& call : calls) {
    const Json j = run_json(call);
    for (const auto& key : schema["required"]) EXPECT_TRUE(j.contains(key.get<std::string>())) << call[0];
    for (const auto& key : required.at(call[0])) EXPECT_TRUE(j.contains(key.get<std::string>())) << call[0] << " " << key;
  }
}

TEST(Cli, BinaryExitCodes) {
  const std::string bin = HFS_CLI_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status("lspace '-1;5/12,1/3,1/3'"), 0);
  EXPECT_EQ(status("lspace 'garbage'"), 2);
  EXPECT_EQ(status("tight '-1;1/2,1/3,1/7'"), 3);
  EXPECT_EQ(status("classify '-1;1/2'"), 4);
}
