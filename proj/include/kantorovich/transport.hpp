#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kantorovich/measure.hpp"
#include "kantorovich/metric.hpp"
#include "kantorovich/rational.hpp"

namespace kantorovich {

/// A coupling of `source` and `target` on their common space, row-major
/// (source point outer). `cost` is Σ coupling[i][j]·d(i,j).
struct TransportPlan {
  Measure source;
  Measure target;
  std::vector<Rational> coupling;
  Rational cost;

  const Rational& at(std::size_t i, std::size_t j) const {
    return coupling[i * source.space().size() + j];
  }
};

/// A short functional f with ∫f dp − ∫f dq equal to the optimal cost.
struct DualWitness {
  ShortFunctional potential;
};

struct WassersteinResult {
  Rational value;
  TransportPlan plan;
  DualWitness witness;
};

/**
 * Exact Wasserstein-1 distance by the transportation simplex method (network
 * simplex on the complete bipartite graph) with Bland's pivoting rule.
 *
 * Every point of the space is a node, zero-weight points included. On return
 * the plan is feasible, the witness is short, and the primal cost equals the
 * dual value; any violation throws Error rather than returning.
 */
WassersteinResult wasserstein(const Measure& p, const Measure& q);

/// Value only.
Rational wasserstein_distance(const Measure& p, const Measure& q);

/// Largest combined support the brute-force oracle accepts.
inline constexpr std::size_t kOracleMaxSupport = 8;

/**
 * Independent W1 oracle: enumerates every spanning-tree basis of the
 * transportation polytope restricted to the two supports, keeps the feasible
 * ones and returns the minimum cost. Throws TooLargeError when the combined
 * support exceeds kOracleMaxSupport.
 */
Rational wasserstein_oracle(const Measure& p, const Measure& q);

/// Number of solves completed by wasserstein() in this process, each of
/// which passed its primal/dual certificate check.
std::uint64_t verified_solve_count();

}  // namespace kantorovich
