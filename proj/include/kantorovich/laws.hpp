#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kantorovich/generators.hpp"
#include "kantorovich/io.hpp"

namespace kantorovich {

/// Whether a law is asserted to hold, or is a negative check that must find
/// a counterexample.
enum class Expectation { Holds, Counterexample };

struct CheckOutcome {
  bool holds = true;
  std::string diagnostics;
};

/**
 * One entry of the law catalog. An instance is a workspace document (see
 * Workspace) plus optional "params"; generate() produces one, check()
 * replays one.
 */
struct LawCatalogEntry {
  std::string id;
  /// The equation or inequality being checked, in words or symbols.
  std::string statement;
  /// What generate() puts into an instance.
  std::string instance_shape;
  Expectation expectation = Expectation::Holds;
  std::function<json(Rng&, const SizeBudget&, std::size_t case_index)> generate;
  std::function<CheckOutcome(const Workspace&)> check;
};

/// Every law, sorted by id. Ids are unique.
const std::vector<LawCatalogEntry>& law_catalog();
/// nullptr when unknown.
const LawCatalogEntry* find_law(std::string_view id);

struct Counterexample {
  std::size_t case_index;
  json instance;
  std::string diagnostics;
};

struct LawResult {
  std::string id;
  std::string statement;
  Expectation expectation = Expectation::Holds;
  std::size_t cases_run = 0;
  /// Cases where the asserted law failed; for negative checks, 1 if no
  /// counterexample turned up and 0 otherwise.
  std::size_t failures = 0;
  /// Cases where the checked equation did not hold.
  std::size_t counterexamples = 0;
  std::optional<Counterexample> first_counterexample;

  bool ok() const { return failures == 0; }
  /// "pass", "fail" or "expected-counterexample found".
  std::string status() const;
};

struct LawReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  SizeBudget budget;
  std::vector<LawResult> laws;

  bool all_passed() const;
};

/// Runs one law on `cases` fresh instances. Case k is generated from
/// mix64(law_seed(seed, id) + k), so cases are independent of each other and
/// of every other law.
LawResult run_law(const LawCatalogEntry& law, std::uint64_t seed, std::size_t cases,
                  const SizeBudget& budget);

/// Runs the whole catalog, or only the listed ids (unknown ids throw
/// ParseError). Results are ordered by id. Deterministic in its arguments.
LawReport run_suite(std::uint64_t seed, std::size_t cases, const SizeBudget& budget = {},
                    const std::vector<std::string>& only = {});

/// Replays a single instance. Unknown ids and malformed instances throw
/// ParseError (or InvariantViolation for invalid objects).
CheckOutcome check_law(std::string_view id, const json& instance);

/// Versioned report: {"schema_version": 1, "seed", "cases", "budget",
/// "laws": [...], "all_passed"}.
json to_json(const LawReport& report);

}  // namespace kantorovich
