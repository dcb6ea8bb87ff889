#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "kantorovich/measure.hpp"
#include "kantorovich/metric.hpp"
#include "kantorovich/monad.hpp"
#include "kantorovich/structure.hpp"

namespace kantorovich {

/// Size limits for randomly generated instances.
struct SizeBudget {
  std::size_t min_points = 2;
  std::size_t max_points = 6;
  /// Upper bound on the denominators of generated measure weights.
  std::size_t max_denominator = 64;
  /// Inner measures per nested measure, and nested measures per doubly nested one.
  std::size_t nested_inner = 3;
  /// Factor size for laws that tensor three or four spaces together.
  std::size_t small_factor_points = 3;

  friend bool operator==(const SizeBudget&, const SizeBudget&) = default;
};

/// SplitMix64 finalizer; used for stable seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Seed for one law, derived from the suite seed and the law id (FNV-1a).
std::uint64_t law_seed(std::uint64_t suite_seed, std::string_view law_id);

/// Deterministic generator. Bounded draws use plain modular reduction so
/// that sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
  /// Inclusive range.
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  long between_signed(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }
  /// True with probability num/den.
  bool chance(std::size_t num, std::size_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// A random metric space on `points` points labelled prefix0, prefix1, ...
/// Drawn as a symmetric matrix of small rationals and repaired by
/// shortest-path closure; redrawn if two points end up at distance 0.
FinMetricSpace random_space(Rng& rng, std::size_t points, const std::string& prefix);
/// Size drawn from [budget.min_points, budget.max_points].
FinMetricSpace random_space(Rng& rng, const SizeBudget& budget, const std::string& prefix);

/// Random weights with denominator at most budget.max_denominator; Diracs and
/// zero weights appear with positive probability.
Measure random_measure(Rng& rng, const FinMetricSpace& space, const SizeBudget& budget);
/// As random_measure, with at most `max_support` points of positive mass.
Measure random_measure_with_support(Rng& rng, const FinMetricSpace& space, std::size_t max_support,
                                    const SizeBudget& budget);

/// Random values repaired by lipschitz_closure.
ShortFunctional random_functional(Rng& rng, const FinMetricSpace& space);

/**
 * A random short map out of `domain` into a fresh space of `codomain_points`
 * points. The codomain metric is a scaled quotient of the domain metric along
 * a random table, closed under shortest paths, so the table is short.
 */
ShortMap random_short_map_from(Rng& rng, const FinMetricSpace& domain,
                               std::size_t codomain_points, const std::string& prefix);

/// Up to budget.nested_inner random inner measures, occasionally repeated.
NestedMeasure random_nested(Rng& rng, const FinMetricSpace& base, const SizeBudget& budget);
DoublyNestedMeasure random_doubly_nested(Rng& rng, const FinMetricSpace& base,
                                         const SizeBudget& budget);

/// A random verified monoid: a cyclic group with an invariant metric, a
/// max/min chain, or truncated addition on a path.
InternalMonoid random_monoid(Rng& rng, const SizeBudget& budget);

/// Z/n with translation-invariant metric given by the closure of `weights`
/// (weights[k] for k = 1..n-1 is the raw distance of shift k).
InternalMonoid cyclic_group(std::size_t n, const std::vector<Rational>& shift_weights);

}  // namespace kantorovich
