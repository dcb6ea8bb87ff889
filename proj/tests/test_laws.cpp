#include "doctest.h"

#include <set>

#include "kantorovich/errors.hpp"
#include "kantorovich/laws.hpp"

using namespace kantorovich;

TEST_CASE("catalog is sorted and unique") {
  const auto& catalog = law_catalog();
  REQUIRE(catalog.size() >= 30);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    ids.insert(catalog[i].id);
    if (i > 0) CHECK(catalog[i - 1].id < catalog[i].id);
    CHECK_FALSE(catalog[i].statement.empty());
  }
  CHECK(ids.size() == catalog.size());
  CHECK(find_law("delta_nabla_id") != nullptr);
  CHECK(find_law("no_such_law") == nullptr);
}

TEST_CASE("every law passes a short run") {
  auto report = run_suite(5, 8);
  for (const auto& law : report.laws) {
    INFO(law.id, ": ", law.first_counterexample ? law.first_counterexample->diagnostics : "");
    CHECK(law.ok());
  }
  CHECK(report.all_passed());
}

TEST_CASE("the correlated witness is found first") {
  const auto* law = find_law("nabla_delta_not_inverse");
  REQUIRE(law != nullptr);
  auto result = run_law(*law, 123, 1, SizeBudget{});
  CHECK(result.status() == "expected-counterexample found");
  REQUIRE(result.first_counterexample);
  CHECK(result.first_counterexample->case_index == 0);
  const auto& weights = result.first_counterexample->instance.at("measures").at("r").at("weights");
  CHECK(weights.at("(0,0)") == "1/2");
  CHECK(weights.at("(1,1)") == "1/2");
  CHECK(weights.at("(0,1)") == "0/1");
}

TEST_CASE("reports are deterministic") {
  auto a = to_json(run_suite(9, 3)).dump();
  auto b = to_json(run_suite(9, 3)).dump();
  CHECK(a == b);
  CHECK(a != to_json(run_suite(10, 3)).dump());
  auto report = to_json(run_suite(9, 2, SizeBudget{}, {"strength"}));
  CHECK(report.at("schema_version") == 1);
  CHECK(report.at("laws").size() == 1);
  CHECK_THROWS_AS(run_suite(9, 2, SizeBudget{}, {"nope"}), ParseError);
}

TEST_CASE("replayed instances are checked, and tampering is caught") {
  json instance = json::parse(R"({
    "spaces": {
      "X": {"points": ["a", "b"], "dist": [["0", "1"], ["1", "0"]]},
      "Y": {"points": ["u", "v"], "dist": [["0", "2"], ["1", "0"]]}
    }
  })");
  // Asymmetric metric: rejected while loading.
  CHECK_THROWS_AS(check_law("dirac_monoidal", instance), InvariantViolation);
  instance["spaces"]["Y"]["dist"][1][0] = "2";
  CHECK(check_law("dirac_monoidal", instance).holds);

  instance["measures"] = {{"p", {{"space", "X"}, {"weights", {{"a", "1/3"}, {"b", "2/3"}}}}},
                          {"q", {{"space", "Y"}, {"weights", {{"u", "1"}}}}}};
  CHECK(check_law("delta_nabla_id", instance).holds);
  CHECK(check_law("nabla_symmetric", instance).holds);

  // A joint that is not a product fails the independence-based checks.
  json joint = instance;
  joint["spaces"]["XY"] = {{"tensor", json::array({"X", "Y"})}};
  joint["measures"]["r"] = {{"space", "XY"}, {"weights", {{"(a,u)", "1/2"}, {"(b,v)", "1/2"}}}};
  auto outcome = check_law("nabla_delta_not_inverse", joint);
  CHECK_FALSE(outcome.holds);
  CHECK(outcome.diagnostics.find("∇Δr") != std::string::npos);

  // Missing objects are reported as failures of the check, not crashes.
  CHECK_FALSE(check_law("monad_associativity", instance).holds);
  CHECK_THROWS_AS(check_law("unknown", instance), ParseError);
}
