#include "ptg/catalog.hpp"
#include "ptg/cli.hpp"
#include "ptg/error.hpp"
#include "ptg/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ptg;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return io::parse_json(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("ptg_unit_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("decimals survive JSON exactly") {
  Json j = io::parse_json(R"({"kind":"cicd","items":[{"lo":2.4,"hi":"11.4"},{"lo":0,"hi":4}]})");
  Representation r = io::rep_from_json(j);
  CHECK(r.items[0].interval.lo() == Rat(12, 5));
  CHECK(*r.items[0].point == Rat(69, 10));
  Json back = io::to_json(r);
  CHECK(back["items"][0]["lo"] == "12/5");
  CHECK(io::rep_from_json(back) == r);
}

TEST_CASE("structure formats") {
  Graph c4 = cycle_graph(4);
  CHECK(std::get<Graph>(io::structure_from_json(io::to_json(Structure(c4)))) == c4);
  Digraph g1 = std::get<Digraph>(instance("maehara_g1").structure);
  CHECK(std::get<Digraph>(io::structure_from_json(io::to_json(Structure(g1)))) == g1);

  std::string text = io::to_edgelist(Structure(c4));
  CHECK(text.rfind("4 4\n", 0) == 0);
  CHECK(std::get<Graph>(io::parse_edgelist(text, false)) == c4);
  CHECK(std::get<Digraph>(io::parse_edgelist("# comment\n3 2\n0 1\n1 0\n", true)) == Digraph(3, {{0, 1}, {1, 0}}));

  CHECK_THROWS_WITH_AS(io::parse_edgelist("3 2\n0 1\n", false), doctest::Contains("line"), InvalidInput);
  CHECK_THROWS_WITH_AS(io::parse_edgelist("3 1\n0 9\n", false), doctest::Contains("line 2"), InvalidInput);
  CHECK_THROWS_AS(io::structure_from_json(io::parse_json(R"({"n":-1,"edges":[]})")), InvalidInput);
  CHECK_THROWS_WITH_AS(io::parse_json("{\"n\": 3,"), doctest::Contains("byte"), InvalidInput);
}

TEST_CASE("instances round trip through JSON") {
  for (const auto& e : catalog_entries()) {
    Instance a = instance(e.name);
    Instance b = io::instance_from_json(io::to_json(a));
    CHECK(b.structure == a.structure);
    CHECK(b.rep == a.rep);
    CHECK(b.labeling == a.labeling);
    CHECK(b.expected == a.expected);
    CHECK(b.rep_target() == a.rep_target());
  }
}

TEST_CASE("cli: classify exit codes and certificates") {
  std::string g1 = temp_file("g1.json", run({"catalog", "maehara_g1"}).out);
  auto no = run({"classify", g1, "--class", "cicd"});
  CHECK(no.code == cli::negative);
  Json j = no.json();
  CHECK(j["verdict"] == "no");
  CHECK(j["refutations"][0]["witness"] == Json::array({1, 2}));
  std::string cert = temp_file("g1_cert.json", no.out);
  CHECK(run({"check", g1, "--certificate", cert}).code == cli::ok);

  auto yes = run({"classify", g1, "--class", "icd"});
  CHECK(yes.code == cli::ok);
  CHECK(yes.json()["certificate"]["ordering"] == Json::array({0, 1, 2, 3}));

  std::string c6 = temp_file("c6.json", run({"catalog", "c6bar_50mtg"}).out);
  auto budget = run({"classify", c6, "--class", "cmptg", "--max-branches", "1"});
  CHECK(budget.code == cli::unknown);
  CHECK(budget.json()["verdict"] == "unknown");
}

TEST_CASE("cli: pipelines through stdin") {
  std::string c4 = temp_file("c4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]})");
  auto cat = run({"catalog", "cn_50mtg", "--n", "4"});
  REQUIRE(cat.code == 0);
  auto v = run({"verify", "-", c4}, cat.out);
  CHECK(v.code == cli::ok);
  CHECK(v.json()["ok"] == true);

  auto umtg = run({"catalog", "c4_umtg"});
  auto conv = run({"convert", "-", "--to", "cmptg"}, umtg.out);
  REQUIRE(conv.code == 0);
  auto edges = run({"realize", "-", "--format", "edgelist"}, conv.out);
  CHECK(edges.code == 0);
  CHECK(std::get<Graph>(io::parse_edgelist(edges.out, false)) == cycle_graph(4));

  auto mismatch = run({"verify", "-", c4}, run({"catalog", "cn_50mtg", "--n", "5"}).out);
  CHECK(mismatch.code == cli::input_error);  // sizes differ
  std::string p4 = temp_file("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
  auto diff = run({"verify", "-", p4}, cat.out);
  CHECK(diff.code == cli::negative);
  CHECK(diff.json()["missing"].size() + diff.json()["extra"].size() > 0);
}

TEST_CASE("cli: check, convert and matrix verbs") {
  std::string od = temp_file("od.json", run({"catalog", "od11"}).out);
  auto m = run({"matrix", od, "--labels", "2,3,6,6.9,8,8.1,12,14"});
  CHECK(m.code == cli::ok);
  CHECK(m.json()["rows"][3] == "01111100");

  auto opt = run({"check", od, "--labels", "2,3,6,6.9,8,8.1,12,14"});
  CHECK(opt.code == cli::ok);
  auto spaced = run({"check", od, "--labels", "1,2,3,4,5,6,7,8"});
  CHECK(spaced.code == cli::negative);

  auto cicd = run({"convert", od, "--to", "cicd", "--labels", "2,3,6,6.9,8,8.1,12,14"});
  CHECK(cicd.code == cli::ok);
  CHECK(cicd.json()["items"][3]["hi"] == "54/5");

  auto labels = run({"convert", od, "--to", "labeling"});
  CHECK(labels.json()["labeling"][3] == "69/10");

  std::string g1 = temp_file("g1b.json", run({"catalog", "maehara_g1"}).out);
  auto cond = run({"check", g1, "--condition", "cicd_necessary", "--ordering", "0,1,2,3"});
  CHECK(cond.code == cli::negative);
  CHECK(cond.json()["violation"] == Json::array({1, 2}));

  std::string p4 = temp_file("p4b.txt", "4 3\n0 1\n1 2\n2 3\n");
  auto unit = run({"convert", p4, "--to", "ucmptg"});
  CHECK(unit.json()["items"][0]["lo"] == "0");

  std::string claw = temp_file("claw.json", run({"catalog", "claw_plus_two"}).out);
  auto c4p4 = run({"check", claw, "--c4p4"});
  CHECK(c4p4.code == cli::ok);
}

TEST_CASE("cli: input errors exit 3 with a message") {
  CHECK(run({}).code == cli::input_error);
  CHECK(run({"classify", "-", "--class", "icd"}, "{\"n\":").code == cli::input_error);
  auto bad_class = run({"classify", "-", "--class", "nope"}, "2 0\n");
  CHECK(bad_class.code == cli::input_error);
  CHECK(bad_class.err.find("nope") != std::string::npos);
  auto bad_line = run({"classify", "-", "--class", "icd", "--directed"}, "3 2\n0 1\nx y\n");
  CHECK(bad_line.code == cli::input_error);
  CHECK(bad_line.err.find("line 3") != std::string::npos);
  CHECK(run({"realize", "/nonexistent/file.json"}).code == cli::input_error);
  CHECK(run({"catalog", "no_such"}).code == cli::input_error);
  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("cli: output is byte-stable") {
  std::string c6 = temp_file("c6b.json", run({"catalog", "c6bar_50mtg"}).out);
  auto a = run({"classify", c6, "--class", "cmptg"});
  auto b = run({"classify", c6, "--class", "cmptg"});
  CHECK(a.out == b.out);
}
