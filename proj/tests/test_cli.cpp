#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kantorovich/cli.hpp"
#include "kantorovich/io.hpp"

using namespace kantorovich;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kantorovich");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(KANTOROVICH_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("distance on the two-point example") {
  auto r = cli({"distance", "p", "q", "-w", fixture("two_point.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "1/2\n");

  auto verbose = cli({"distance", "p", "q", "-v", "--json", "-w", fixture("two_point.json")});
  CHECK(verbose.code == 0);
  auto doc = json::parse(verbose.out);
  CHECK(doc.at("distance") == "1/2");
  CHECK(doc.at("plan").at("coupling").at("a").at("b") == "1/2");
  CHECK(doc.at("witness").at("values").at("b") == "-1/1");
}

TEST_CASE("validation errors exit with 2") {
  auto r = cli({"validate", "-w", fixture("broken_triangle.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("(a, b, c)") != std::string::npos);

  CHECK(cli({"validate", "-w", fixture("two_point.json"), fixture("two_point.json")}).code == 2);
  CHECK(cli({"validate", "-w", "/nonexistent.json"}).code == 2);
  CHECK(cli({"distance", "p", "-w", fixture("two_point.json")}).code == 2);
  CHECK(cli({"distance", "p", "zzz", "-w", fixture("two_point.json")}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"laws"}).code == 2);

  auto ok = cli({"validate", "--json", "-w", fixture("z3.json"), fixture("two_point.json")});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out).at("counts").at("monoids") == 1);
}

TEST_CASE("independence commands") {
  auto r = cli({"independent", "r", "-w", fixture("correlated.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "false\n");
  auto maps = cli({"independent-maps", "s", "id", "id", "--json", "-w", fixture("correlated.json")});
  CHECK(maps.code == 0);
  auto doc = json::parse(maps.out);
  CHECK(doc.at("independent") == false);
  CHECK(doc.at("tupling_short") == false);

  auto marg = cli({"marginals", "r", "--json", "-w", fixture("correlated.json")});
  CHECK(marg.code == 0);
  CHECK(json::parse(marg.out).at("first").at("weights").at("1") == "1/2");
}

TEST_CASE("emitted objects re-parse to equal objects") {
  const auto files = std::vector<std::string>{fixture("z3.json")};
  auto ws = Workspace::from_files(files);

  auto conv = cli({"convolve", "h", "u", "-m", "Z3", "--json", "-w", fixture("z3.json")});
  REQUIRE(conv.code == 0);
  auto back = Workspace::from_json(json{{"measures", {{"c", json::parse(conv.out)}}}});
  CHECK(back.measure("c") == convolve(ws.measure("h"), ws.measure("u"), ws.monoid("Z3")));

  auto prod = cli({"product", "h", "u", "--json", "-w", fixture("z3.json")});
  REQUIRE(prod.code == 0);
  auto pq = Workspace::from_json(json{{"measures", {{"pq", json::parse(prod.out)}}}});
  CHECK(pq.measure("pq") == product(ws.measure("h"), ws.measure("u")));

  auto ex = cli({"expect", "mix", "--json", "-w", fixture("z3.json")});
  REQUIRE(ex.code == 0);
  auto e = Workspace::from_json(json{{"measures", {{"e", json::parse(ex.out)}}}});
  CHECK(e.measure("e") == expectation(ws.nested("mix")));

  auto push = cli({"pushforward", "collapse", "u", "-w", fixture("z3.json")});
  CHECK(push.code == 0);
  CHECK(push.out == "*\t1/1\n");
}

TEST_CASE("commands leave workspace files untouched") {
  const auto before = slurp(fixture("z3.json"));
  const auto stamp = std::filesystem::last_write_time(fixture("z3.json"));
  cli({"convolve", "h", "h", "-m", "Z3", "-w", fixture("z3.json")});
  cli({"validate", "-w", fixture("z3.json")});
  CHECK(slurp(fixture("z3.json")) == before);
  CHECK(std::filesystem::last_write_time(fixture("z3.json")) == stamp);
}

TEST_CASE("laws subcommand") {
  auto r = cli({"laws", "--seed", "3", "--cases", "2", "--law", "strength", "--json"});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc.at("schema_version") == 1);
  CHECK(doc.at("laws").at(0).at("status") == "pass");

  CHECK(cli({"laws", "--seed", "3", "--cases", "2", "--law", "nope"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "kantorovich_instance.json";
  {
    std::ofstream out(path);
    out << slurp(fixture("correlated.json"));
  }
  auto replay = cli({"laws", "--seed", "0", "--law", "nabla_delta_not_inverse", "--instance", path.string()});
  // A counterexample is what this negative check expects.
  CHECK(replay.code == 0);
  CHECK(replay.out.find("fails") != std::string::npos);
  auto positive = cli({"laws", "--seed", "0", "--law", "delta_symmetric", "--instance", path.string()});
  CHECK(positive.code == 0);

  // A product joint is no counterexample, so the negative check fails.
  auto doc2 = json::parse(slurp(fixture("correlated.json")));
  doc2["measures"]["r"]["weights"] = {{"(0,0)", "1/4"}, {"(0,1)", "1/4"}, {"(1,0)", "1/4"}, {"(1,1)", "1/4"}};
  {
    std::ofstream out(path);
    out << doc2.dump();
  }
  auto failed = cli({"laws", "--seed", "0", "--law", "nabla_delta_not_inverse", "--instance", path.string()});
  CHECK(failed.code == 1);
  std::filesystem::remove(path);
}
