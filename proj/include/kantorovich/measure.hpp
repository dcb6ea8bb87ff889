#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "kantorovich/metric.hpp"
#include "kantorovich/rational.hpp"

namespace kantorovich {

/**
 * A probability measure on a finite metric space, stored densely: one exact
 * weight per point of the space, zero weights included. Two measures are
 * equal iff they live on equal spaces and have identical weight tables.
 */
class Measure {
 public:
  /// Checks that every weight is nonnegative and that they sum to exactly 1.
  Measure(FinMetricSpace space, std::vector<Rational> weights);

  const FinMetricSpace& space() const { return space_; }
  std::span<const Rational> weights() const { return weights_; }
  const Rational& operator()(std::size_t i) const { return weights_[i]; }

  /// Indices of points with positive weight, in increasing order.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Measure& a, const Measure& b) = default;

 private:
  FinMetricSpace space_;
  std::vector<Rational> weights_;
};

/// δ_x.
Measure dirac(const FinMetricSpace& x, std::size_t point);
Measure dirac(const FinMetricSpace& x, std::string_view label);

/// Σ_x f(x)·p(x).
Rational integrate(const ShortFunctional& f, const Measure& p);
/// Same sum for an arbitrary value table (not required to be short).
Rational integrate(std::span<const Rational> values, const Measure& p);

/// f_*p.
Measure pushforward(const ShortMap& f, const Measure& p);

/// Pushforward along an arbitrary total table into `codomain`, with no
/// shortness requirement on the table.
Measure pushforward_table(std::span<const std::size_t> table, const FinMetricSpace& codomain,
                          const Measure& p);

/// y ↦ Σ_x f(x, y)·p(x) for f on X ⊗ Y and p on X. The result is validated
/// as a ShortFunctional on Y.
ShortFunctional partial_integral(const ShortFunctional& f, const Measure& p);

/// Throws MismatchError unless the two spaces are equal.
void require_same_space(const FinMetricSpace& a, const FinMetricSpace& b, std::string_view what);

}  // namespace kantorovich
