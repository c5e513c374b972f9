#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suig2/cli.hpp"
#include "suig2/geometry.hpp"
#include "suig2/json_io.hpp"

using namespace suig2;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "suig2_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string tmp_write(const std::string& name, const std::string& text) {
  auto path = tmp_dir() / name;
  std::ofstream f(path, std::ios::binary);
  f << text;
  return path.string();
}

const char* kPath5 = "0 1\n1 2\n2 3\n3 4\n";
const char* kStar5 = "0 1\n0 2\n0 3\n0 4\n0 5\n";
const char* kCycle5 = "0 1\n1 2\n2 3\n3 4\n0 4\n";
// 4-leg spider, two branch vertices after the legs fan out? no: single center
const char* kSpider = "0 1\n1 2\n0 3\n3 4\n0 5\n0 6\n";

}  // namespace

TEST_CASE("recognize accepts a path and prints its squares") {
  std::string in = tmp_write("p5.txt", kPath5);
  CliRun r = run({"recognize", in});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 10) == "ACCEPT n=5");
  // one line per vertex after the header
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("recognize rejects the 5-star with a degree certificate") {
  std::string in = tmp_write("k15.txt", kStar5);
  CliRun r = run({"recognize", in});
  CHECK(r.code == 1);
  CHECK(r.out.find("REJECT DegreeExceeded(v=0)") == 0);
}

TEST_CASE("recognize --json output verifies against the input tree") {
  std::string in = tmp_write("spider.txt", kSpider);
  CliRun r = run({"recognize", in, "--json"});
  REQUIRE(r.code == 0);
  std::string rep = tmp_write("spider.json", r.out);
  CliRun v = run({"verify", in, rep});
  CHECK(v.code == 0);
  CHECK(v.out == "PASS\n");
}

TEST_CASE("verify reports edge differences for a tampered representation") {
  std::string in = tmp_write("p5b.txt", kPath5);
  CliRun r = run({"recognize", in, "--json"});
  REQUIRE(r.code == 0);
  Representation rep = parse_representation_json(r.out);
  rep.squares[0].x += Rat(5);
  std::string bad = tmp_write("p5_tampered.json", emit_json(rep));
  CliRun v = run({"verify", in, bad});
  CHECK(v.code == 1);
  CHECK(v.out.find("MissingEdge(0,1)") != std::string::npos);
}

TEST_CASE("verify accepts hand-laid squares for the 5-cycle") {
  Representation rep;
  rep.epsilon = Rat(1, 2);
  rep.squares = {
      {Rat(4), Rat(1, 5), Stab::Lower},        // a
      {Rat(24, 5), Rat(0), Stab::Lower},       // b
      {Rat(26, 5), Rat(7, 10), Stab::Lower},   // c
      {Rat(22, 5), Rat(3, 2), Stab::Upper},    // d
      {Rat(7, 2), Rat(1), Stab::Lower},        // e
  };
  std::string rep_path = tmp_write("c5.json", emit_json(rep));
  std::string c5 = tmp_write("c5.txt", kCycle5);
  CliRun v = run({"verify", c5, rep_path});
  CHECK(v.code == 0);
}

TEST_CASE("recognize honours --epsilon and rejects malformed values") {
  std::string in = tmp_write("p5c.txt", kPath5);
  CHECK(run({"recognize", in, "--epsilon", "1/4"}).code == 0);
  CHECK(run({"recognize", in, "--epsilon", "3/2"}).code == 2);
  CHECK(run({"recognize", in, "--epsilon", "0/1"}).code == 2);
  CHECK(run({"recognize", in, "--epsilon", "half"}).code == 2);
}

TEST_CASE("recognize --svg writes a drawing") {
  std::string in = tmp_write("p5d.txt", kPath5);
  std::string svg = (tmp_dir() / "p5.svg").string();
  CliRun r = run({"recognize", in, "--svg", svg});
  CHECK(r.code == 0);
  std::ifstream f(svg, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str().substr(0, 5) == "<?xml");
  CHECK(buf.str().find("<svg") != std::string::npos);
}

TEST_CASE("recognize --explain dumps the decomposition to stderr") {
  // two branch vertices, so a real backbone decomposition exists
  std::string in = tmp_write("double_spider.txt",
                             "0 1\n0 2\n0 3\n3 4\n4 5\n5 6\n6 7\n6 8\n");
  CliRun r = run({"recognize", in, "--explain"});
  CHECK(r.code == 0);
  CHECK(r.err.find("\"agents\"") != std::string::npos);
  CliRun s = run({"recognize", tmp_write("p5e.txt", kPath5), "--explain"});
  CHECK(s.err == "{\"mode\":\"single-branch\"}\n");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({"recognize", (tmp_dir() / "missing.txt").string()}).code == 2);
  CHECK(run({"recognize", tmp_write("garbage.txt", "0 x\n")}).code == 2);
  CHECK(run({"recognize", tmp_write("cycle.txt", kCycle5)}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("--help succeeds and lists the subcommands") {
  CliRun r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("recognize") != std::string::npos);
  CHECK(r.out.find("crosscheck") != std::string::npos);
}

TEST_CASE("oracle decides small trees and respects its caps") {
  std::string k14 = tmp_write("k14.txt", "0 1\n0 2\n0 3\n0 4\n");
  CliRun a = run({"oracle", k14});
  CHECK(a.code == 0);
  CHECK(a.out == "ACCEPT\n");

  CliRun b = run({"oracle", tmp_write("k15b.txt", kStar5)});
  CHECK(b.code == 1);
  CHECK(b.out == "REJECT\n");

  // ten vertices: above the default cap, fine once the cap is raised
  std::string p10 = tmp_write("p10.txt",
                              "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n");
  CHECK(run({"oracle", p10}).code == 2);
  CHECK(run({"oracle", p10, "--max-n", "10"}).code == 0);
  CHECK(run({"oracle", p10, "--max-n", "13"}).code == 2);
}

TEST_CASE("oracle surfaces budget exhaustion as UNKNOWN") {
  // a zero budget is already spent at the first poll, on any input
  std::string in = tmp_write("k14b.txt", "0 1\n0 2\n0 3\n0 4\n");
  CliRun r = run({"oracle", in, "--time-budget", "0"});
  CHECK(r.code == 3);
  CHECK(r.out == "UNKNOWN\n");
}

TEST_CASE("crosscheck sweeps all small trees with full agreement") {
  CliRun r = run({"crosscheck", "--max-n", "5"});
  CHECK(r.code == 0);
  // 1+1+1+2+3 tree classes, one JSON line each, plus the summary line
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 9);
  CHECK(r.out.find("\"agree\":false") == std::string::npos);
  CHECK(r.out.find("checked=8 disagreements=0") != std::string::npos);
  CliRun again = run({"crosscheck", "--max-n", "5"});
  CHECK(again.out == r.out);
}

TEST_CASE("crosscheck fuzz mode is sound and deterministic") {
  CliRun r = run({"crosscheck", "--random", "60", "12", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("fuzz seed=7 count=60 size=12") == 0);
  CHECK(r.out.find("UNSOUND") == std::string::npos);
  CHECK(r.out.find("all sound") != std::string::npos);
  CliRun again = run({"crosscheck", "--random", "60", "12", "--seed", "7"});
  CHECK(again.out == r.out);
}
