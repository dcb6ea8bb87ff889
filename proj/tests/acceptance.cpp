// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kantorovich/laws.hpp"
#include "kantorovich/structure.hpp"
#include "kantorovich/transport.hpp"

using namespace kantorovich;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kTimeLimitSeconds = 60.0;

struct Outcome {
  bool passed;
  std::string detail;
};

std::size_t g_suite_failures = 0;

// Runs the listed laws and summarizes them; the time limit applies per law.
Outcome laws(const std::vector<std::string>& ids, std::size_t cases) {
  bool passed = true;
  std::ostringstream detail;
  for (const auto& id : ids) {
    const auto* law = find_law(id);
    if (!law) return {false, "unknown law " + id};
    const auto start = std::chrono::steady_clock::now();
    auto result = run_law(*law, kSeed, cases, SizeBudget{});
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    g_suite_failures += result.failures;
    const bool ok = result.ok() && result.cases_run == cases && seconds < kTimeLimitSeconds;
    passed = passed && ok;
    if (detail.tellp() > 0) detail << "; ";
    detail << id << ": " << result.cases_run << " cases, " << result.failures << " failures, "
           << std::fixed;
    detail.precision(2);
    detail << seconds << "s";
    if (!result.ok() && result.first_counterexample) {
      detail << " [case " << result.first_counterexample->case_index << ": "
             << result.first_counterexample->diagnostics << "]";
    }
  }
  return {passed, detail.str()};
}

Outcome correlated_witness() {
  FinMetricSpace bit({"0", "1"}, std::vector<Rational>{0, 1, 1, 0});
  auto xy = tensor(bit, bit);
  const Rational half = make_rational(1, 2);
  const Rational quarter = make_rational(1, 4);
  Measure r(xy, {half, 0, 0, half});
  auto [rx, ry] = marginals(r);
  auto rebuilt = product(rx, ry);
  bool quarters = true;
  for (std::size_t k = 0; k < xy.size(); ++k) quarters = quarters && rebuilt(k) == quarter;
  const bool differs = !(rebuilt == r);
  const bool flagged = !is_independent(r);

  const auto* law = find_law("nabla_delta_not_inverse");
  auto found = run_law(*law, kSeed, 1, SizeBudget{});
  const bool catalog = found.status() == "expected-counterexample found";

  std::ostringstream detail;
  detail << "product of marginals is 1/4 everywhere: " << (quarters ? "yes" : "no")
         << ", differs from input: " << (differs ? "yes" : "no")
         << ", is_independent = " << (flagged ? "false" : "true")
         << ", catalog status: " << found.status();
  return {quarters && differs && flagged && catalog, detail.str()};
}

Outcome duality(std::uint64_t solves_before) {
  auto suite = laws({"kantorovich_duality"}, 200);
  const auto solves = verified_solve_count() - solves_before;
  std::ostringstream detail;
  detail << suite.detail << "; " << solves << " verified solves across all suites, "
         << g_suite_failures << " failures across all suites";
  return {suite.passed && solves > 0 && g_suite_failures == 0, detail.str()};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> reports;
  for (int run = 0; run < 2; ++run) {
    const auto path = dir / ("kantorovich_acceptance_" + std::to_string(run) + ".json");
    const std::string command = std::string("\"") + KANTOROVICH_CLI +
                                "\" laws --seed 42 --cases 200 --json > \"" + path.string() + "\"";
    const int code = std::system(command.c_str());
    if (code != 0) return {false, "CLI exited with status " + std::to_string(code)};
    reports.push_back(slurp(path));
    std::filesystem::remove(path);
  }
  const bool same = !reports[0].empty() && reports[0] == reports[1];
  return {same, std::to_string(reports[0].size()) + " bytes, " +
                    (same ? "byte-identical" : "reports differ")};
}

}  // namespace

int main() {
  const auto solves_before = verified_solve_count();
  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {1, "marginals of a product recover its factors", [] { return laws({"delta_nabla_id"}, 200); }},
      {2, "correlated uniform law is not the product of its marginals", correlated_witness},
      {3, "product of measures is an isometric embedding", [] { return laws({"nabla_isometric"}, 200); }},
      {4, "taking marginals is short", [] { return laws({"delta_short"}, 200); }},
      {5, "monad unit laws, associativity and naturality of E",
       [] {
         return laws({"monad_left_unit", "monad_right_unit", "monad_associativity", "expectation_natural"},
                     200);
       }},
      {6, "monoidal monad diagrams", [] { return laws({"dirac_monoidal", "expectation_monoidal"}, 100); }},
      {7, "opmonoidal monad diagrams",
       [] { return laws({"dirac_opmonoidal", "expectation_opmonoidal"}, 100); }},
      {8, "bimonoidality square", [] { return laws({"bimonoidality_square"}, 100); }},
      {9, "decomposition of independence", [] { return laws({"decomposition_independence"}, 100); }},
      {11, "network simplex agrees with brute-force enumeration",
       [] { return laws({"oracle_equivalence"}, 200); }},
      {12, "convolution monoid laws and Dirac convolution",
       [] { return laws({"convolution_monoid", "convolution_dirac"}, 100); }},
      // Runs after every other suite so that its solve count covers them all.
      {10, "Kantorovich duality certificate on every solve",
       [solves_before] { return duality(solves_before); }},
      {13, "laws --seed 42 --cases 200 is byte-identical across runs", determinism},
  };

  std::vector<std::pair<int, std::string>> lines;
  bool all = true;
  for (const auto& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    all = all && outcome.passed;
    lines.emplace_back(c.number, std::string(outcome.passed ? "PASS" : "FAIL") + " criterion " +
                                     std::to_string(c.number) + ": " + c.title + " (" +
                                     outcome.detail + ")");
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [number, line] : lines) std::cout << line << '\n';
  std::cout << (all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
