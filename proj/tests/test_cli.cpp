#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "topolab/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "topolab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = topolab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("topolab_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("ops and classify on a finite space", "[cli]") {
  const auto topo = temp_file("s.topo", "points 2\nopen 0\n");
  auto r = cli({"ops", "--space", topo, "--set", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closure {1}\n"));
  CHECK(contains(r.out, "preclosure {1}\n"));
  r = cli({"classify", "--space", topo, "--set", "0"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "open true\n"));
  CHECK(contains(r.out, "closed false\n"));
}

TEST_CASE("ops on a skeleton needs a symbolic set", "[cli]") {
  const auto skel = temp_file("e.skel", "node p card 1\nnode t card omega\nrel p.0 <= t.0\n");
  const auto sset = temp_file("e.sset", "part t 0 inf\n");
  auto r = cli({"ops", "--space", skel, "--sset", sset});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "closure p: {0}x1; t: {0}xinf\n"));
  r = cli({"ops", "--space", skel, "--set", "0"});
  CHECK(r.code == 3);
  const auto bad = temp_file("bad.sset", "part t 0 inf\npart q 0 1\n");
  r = cli({"ops", "--space", skel, "--sset", bad});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "line 2"));
}

TEST_CASE("check reports verdicts with certificates", "[cli]") {
  auto r = cli({"check", "--catalog", "e1iii", "--prop", "p-closed,alpha-compact"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p-closed: true\n"));
  CHECK(contains(r.out, "alpha-compact: false\n"));
  r = cli({"check", "--catalog", "sierpinski", "--prop", "all", "--describe"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "points 2"));
}

TEST_CASE("unknown names are rejected before any work", "[cli]") {
  auto r = cli({"check", "--space", "/nonexistent.topo", "--prop", "flat"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, "unknown property 'flat'"));
  r = cli({"verify", "--claims", "T1,NOPE"});
  CHECK(r.code == 3);
  CHECK(r.out.empty());
  r = cli({"relative", "--catalog", "sierpinski", "--set", "0", "--prop", "T0"});
  CHECK(r.code == 3);
  r = cli({"catalog", "--name", "nowhere"});
  CHECK(r.code == 3);
}

TEST_CASE("parse errors carry the file and line", "[cli]") {
  const auto topo = temp_file("bad.topo", "points 3\n\nopen 0 9\n");
  const auto r = cli({"check", "--space", topo, "--prop", "T0"});
  CHECK(r.code == 3);
  CHECK(contains(r.err, topo + ": line 3:"));
  CHECK(cli({"check", "--space", "/nonexistent.topo", "--prop", "T0"}).code == 3);
  CHECK(cli({"frobnicate"}).code == 3);
  CHECK(cli({"ops", "--catalog", "sierpinski", "--set", "4"}).code == 3);
}

TEST_CASE("relative cover properties", "[cli]") {
  const auto skel = temp_file("r.skel", "node p card 1\nnode t card omega\nrel p.0 <= t.0\n");
  const auto tail = temp_file("r.sset", "part t 0 inf\n");
  const auto r = cli({"relative", "--space", skel, "--sset", tail, "--prop", "p-closed"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p-closed relative: false"));
}

TEST_CASE("enumerate", "[cli]") {
  auto r = cli({"enumerate", "--n", "4", "--count", "--classes"});
  CHECK(r.code == 0);
  CHECK(r.out == "355\n33 classes\n");
  r = cli({"enumerate", "--n", "2"});
  CHECK(r.out == "n=2 opens {} {0} {1} {0,1}\nn=2 opens {} {0} {0,1}\nn=2 opens {} {1} {0,1}\nn=2 opens {} {0,1}\n");
  CHECK(cli({"enumerate", "--n", "3", "--count", "--method", "preorders"}).out == "29\n");
  CHECK(cli({"enumerate", "--n", "9"}).code == 3);
  CHECK(cli({"enumerate", "--n", "2", "--method", "magic"}).code == 3);
}

TEST_CASE("verify exit codes, JSON output and replay", "[cli]") {
  auto r = cli({"verify", "--claims", "T1,T2", "--universe", "exhaustive:1-3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "T1 pass checked=34"));
  const auto path = (fs::temp_directory_path() / "topolab_cli_l3.json").string();
  r = cli({"verify", "--claims", "L3", "--universe", "exhaustive:1-3", "--json", path});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "direction=neither"));
  const auto j = topolab::json::parse(topolab::cli::read_file(path));
  REQUIRE(j.is_array());
  CHECK(j[0]["claim"] == "L3");
  r = cli({"verify", "--replay", path});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "L3 replay reproduced"));
  CHECK_FALSE(contains(r.out, "differs"));
  CHECK(cli({"verify", "--claims", "T1", "--universe", "exhaustive:9"}).code == 3);
  CHECK(cli({"verify", "--replay", temp_file("junk.json", "{not json")}).code == 3);
}

TEST_CASE("the same seed gives the same report", "[cli]") {
  const std::vector<std::string> args{"verify", "--claims", "T6", "--universe", "sampled:5:3", "--seed", "11"};
  auto a = cli(args), b = cli(args);
  auto strip = [](std::string s) { return s.substr(0, s.find(" ms=")); };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(a.code == 0);
}

TEST_CASE("hunt", "[cli]") {
  auto r = cli({"hunt", "--reverse", "strongly-compact=>p-closed"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "witness e1iii"));
  r = cli({"hunt", "--diagram"});
  CHECK(contains(r.out, "none found"));
  CHECK(cli({"hunt"}).code == 3);
  CHECK(cli({"hunt", "--question", "TN9"}).code == 3);
}

TEST_CASE("catalog listing and checks", "[cli]") {
  auto r = cli({"catalog"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "sierpinski: "));
  r = cli({"catalog", "--name", "excluded-point-omega"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "p-closed expected true got true [literature]"));
  CHECK_FALSE(contains(r.out, "MISMATCH"));
}
