#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "ndiag/cli.hpp"
#include "ndiag/crmap.hpp"
#include "ndiag/dump.hpp"
#include "ndiag/oracle.hpp"
#include "ndiag/whitney.hpp"

using namespace ndiag;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  Outcome o = run(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out);
}

std::string fixture(const std::string& name) { return std::string(NDIAG_FIXTURES) + "/" + name; }

// Exit status and stdout of the installed binary.
std::pair<int, std::string> run_binary(const std::string& args) {
  std::string cmd = std::string(NDIAG_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, CheckMatchesLibrary) {
  Json j = run_json({"check", "x^3 + 3*x*y + y^3", "--dim", "2"});
  Polynomial p = parse_polynomial("x^3 + 3*x*y + y^3", 2);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["data"]["quotient"], hyperplane_quotient(p).to_string());
  EXPECT_EQ(j["verdicts"]["in_H"], true);
  EXPECT_EQ(j["verdicts"]["tight"], true);
  EXPECT_EQ(j["verdicts"]["sharp_whitney"], false);
  EXPECT_EQ(j["data"]["bound"]["N"], 3);
  EXPECT_FALSE(j.contains("timings"));
}

TEST(Cli, CheckReportsWitness) {
  Outcome o = run({"--json", "check", "x^5", "--dim", "2"});
  EXPECT_EQ(o.code, cli::kInputError);
  Json j = Json::parse(o.out);
  EXPECT_EQ(j["verdicts"]["in_H"], false);
  EXPECT_TRUE(j["data"].contains("witness"));
  Outcome text = run({"check", "x^5", "--dim", "2"});
  EXPECT_NE(text.out.find("in H: false"), std::string::npos);
}

TEST(Cli, FileInputAndFixtures) {
  Json j = run_json({"check", "--file", fixture("cubic7.poly"), "--dim", "3"});
  EXPECT_EQ(j["data"]["bound"]["N"], 7);
  EXPECT_EQ(j["verdicts"]["tight"], true);
  EXPECT_EQ(j["fixtures"][0], fixture("cubic7.poly"));
  Json f = run_json({"check", "--file", fixture("f.poly"), "--dim", "2"});
  EXPECT_EQ(f["data"]["bound"]["bound"], 3);
}

TEST(Cli, DiagramMatchesLibrary) {
  Json j = run_json({"diagram", "x^3 + 3*x*y + y^3", "--dim", "2"});
  NewtonDiagram d = NewtonDiagram::from_quotient(hyperplane_quotient(parse_polynomial("x^3 + 3*x*y + y^3", 2)));
  EXPECT_EQ(j["data"]["diagram"], diagram_json(d));
  EXPECT_EQ(j["data"]["node_count"], 4);
  Json q = run_json({"diagram", "1", "--dim", "3", "--is-quotient"});
  EXPECT_EQ(q["data"]["node_count"], 4);
}

TEST(Cli, View) {
  Json j = run_json({"view", "x^3 + 3*x*y + y^3", "--dim", "2", "--from", "1", "--to", "2", "--size", "3"});
  EXPECT_EQ(j["data"]["hidden_nodes"], 2);
  Outcome bad = run({"view", "x^3 + 3*x*y + y^3", "--dim", "2", "--from", "1", "--to", "2", "--size", "4"});
  EXPECT_EQ(bad.code, cli::kInputError);
  Outcome same = run({"view", "x^3 + 3*x*y + y^3", "--dim", "2", "--from", "2", "--to", "2"});
  EXPECT_EQ(same.code, cli::kInputError);
}

TEST(Cli, Whitney) {
  Json j = run_json({"whitney", "--dim", "3", "--move", "z", "--move", "x*z"});
  EXPECT_EQ(j["data"]["polynomial"], generate_from_moves(3, {{0, 0, 1}, {1, 0, 1}}).result.to_string());
  EXPECT_EQ(j["verdicts"]["sharp_whitney"], true);
  Json s = run_json({"whitney", "--dim", "4", "--degree", "5", "--chooser", "seed:3"});
  EXPECT_EQ(s["data"]["polynomial"], generate(4, 5, WhitneyChooser::seeded(3)).result.to_string());
  EXPECT_EQ(s["data"]["node_count"], 3 * 5 + 2);
  EXPECT_EQ(run({"whitney", "--dim", "3", "--degree", "2", "--chooser", "bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({"whitney", "--dim", "3", "--move", "x^2"}).code, cli::kInputError);
  EXPECT_EQ(run({"whitney", "--dim", "3", "--move", "x", "--degree", "4"}).code, cli::kInputError);
}

TEST(Cli, CrMap) {
  Json j = run_json({"crmap", "--file", fixture("cubic7.map")});
  EXPECT_EQ(j["data"]["report"]["N"], 7);
  EXPECT_EQ(j["data"]["report"]["tight"], true);
  Json w = run_json({"crmap", "--file", fixture("whitney_deg2.map")});
  EXPECT_EQ(w["data"]["report"]["bound"], 3);
  EXPECT_EQ(run({"crmap", "--file", fixture("not_proper.map")}).code, cli::kInputError);
  EXPECT_EQ(run({"crmap", "--file", fixture("missing.map")}).code, cli::kInputError);
}

TEST(Cli, SearchMatchesLibrary) {
  Json j = run_json({"search", "--dim", "4", "--size", "2"});
  BoundReport r = verify_bound(4, 2);
  ASSERT_EQ(j["data"]["by_size"].size(), r.by_size.size());
  EXPECT_EQ(j["data"]["by_size"][1]["min_nodes"], r.by_size.at(2).min_nodes);
  EXPECT_EQ(j["data"]["assignments"], 243);
  EXPECT_EQ(j["verdicts"]["all_minimizers_one_point_per_degree"], true);
  Outcome refused = run({"search", "--dim", "5", "--size", "4"});
  EXPECT_EQ(refused.code, cli::kBudget);
  EXPECT_NE(refused.err.find("3^"), std::string::npos);
}

TEST(Cli, SearchModes) {
  Json s = run_json({"search", "--symmetric", "--size", "2"});
  EXPECT_EQ(s["data"]["symmetric"]["diagrams"], 2 + 26 + 728);
  Json a = run_json({"search", "--dim", "4", "--size", "1", "--audit"});
  EXPECT_EQ(a["data"]["audit"]["diagrams"], 1);
  Json l = run_json({"lemma42", "--height", "2", "--width", "2", "--random", "10"});
  EXPECT_EQ(l["data"]["random"], 10);
}

TEST(Cli, Faces) {
  Json j = run_json({"faces", "1", "--dim", "3", "--is-quotient"});
  EXPECT_EQ(j["verdicts"]["heights_sum_to_size"], true);
  EXPECT_EQ(j["data"]["complete_simple_sets"].size(), 3u);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run({"check", "x +", "--dim", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"check", "x", "--dim", "2", "--file", fixture("f.poly")}).code, cli::kInputError);
  EXPECT_EQ(run({"nonsense"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, TimingsOnlyOnRequest) {
  Outcome o = run({"--json", "--timings", "quotient", "x+y", "--dim", "2"});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(Json::parse(o.out).contains("timings"));
}

TEST(Cli, BinaryExitCodesAndStableJson) {
  auto [ok, first] = run_binary("--json search --dim 3 --size 3");
  EXPECT_EQ(ok, 0);
  auto [again, second] = run_binary("--json search --dim 3 --size 3 --workers 4");
  EXPECT_EQ(again, 0);
  Json a = Json::parse(first), b = Json::parse(second);
  b["inputs"] = a["inputs"];
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(run_binary("--json search --dim 3 --size 3").second, first);
  EXPECT_EQ(run_binary("check \"x^2\" --dim 2").first, 1);
  EXPECT_EQ(run_binary("search --dim 5 --size 4").first, 3);
  EXPECT_EQ(run_binary("diagram \"x+y\" --dim 2").first, 0);
}
