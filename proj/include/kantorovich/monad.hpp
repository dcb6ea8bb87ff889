#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kantorovich/measure.hpp"
#include "kantorovich/metric.hpp"
#include "kantorovich/rational.hpp"

namespace kantorovich {

/**
 * A finitely supported measure on PX, given extensionally by a list of inner
 * measures on a common base space and one weight per inner measure. The same
 * inner measure may appear more than once; merged() combines repeats.
 */
class NestedMeasure {
 public:
  NestedMeasure(FinMetricSpace base, std::vector<Measure> inner, std::vector<Rational> weights);

  const FinMetricSpace& base() const { return base_; }
  std::span<const Measure> inner() const { return inner_; }
  std::span<const Rational> weights() const { return weights_; }
  std::size_t size() const { return inner_.size(); }

  /// Repeated inner measures merged by summing their weights; first
  /// occurrence order is kept.
  NestedMeasure merged() const;

  /// Equality as measures on PX: merged supports with equal weights,
  /// independent of listing order.
  bool same_distribution(const NestedMeasure& other) const;

  friend bool operator==(const NestedMeasure& a, const NestedMeasure& b) = default;

 private:
  FinMetricSpace base_;
  std::vector<Measure> inner_;
  std::vector<Rational> weights_;
};

/// An element of PPPX: nested measures over a common base, with weights.
class DoublyNestedMeasure {
 public:
  DoublyNestedMeasure(FinMetricSpace base, std::vector<NestedMeasure> inner,
                      std::vector<Rational> weights);

  const FinMetricSpace& base() const { return base_; }
  std::span<const NestedMeasure> inner() const { return inner_; }
  std::span<const Rational> weights() const { return weights_; }

 private:
  FinMetricSpace base_;
  std::vector<NestedMeasure> inner_;
  std::vector<Rational> weights_;
};

/// E : PPX → PX, (Eμ)(x) = Σ_i μ_i · p_i(x).
Measure expectation(const NestedMeasure& mu);

/// δ_{PX}(p): the nested measure with p as its only inner measure.
NestedMeasure unit_nested(const Measure& p);

/// Pδ(p): inner measures δ_x weighted by p(x), for every x in the support.
NestedMeasure dirac_nested(const Measure& p);

/// PPf: pushes every inner measure forward along f.
NestedMeasure pushforward_nested(const ShortMap& f, const NestedMeasure& mu);

/// E_{PX} : PPPX → PPX, concatenating the inner lists with product weights.
NestedMeasure flatten(const DoublyNestedMeasure& mu);

/// PE : PPPX → PPX, replacing each nested inner measure by its expectation.
NestedMeasure map_expectation(const DoublyNestedMeasure& mu);

/**
 * The finite subspace of PX spanned by `measures`, with exact pairwise W1
 * distances. Points are labelled "m0", "m1", ... in input order. Throws
 * InvariantViolation on repeated measures and MismatchError on mixed bases.
 */
FinMetricSpace wasserstein_space(std::span<const Measure> measures);

/// W1 on PPX: both nested measures are viewed as measures on the
/// wasserstein_space of the union of their inner measures.
Rational nested_wasserstein(const NestedMeasure& mu, const NestedMeasure& nu);

/// Instances for the monad law check on a fixed base space.
struct MonadSample {
  std::vector<Measure> measures;
  std::vector<DoublyNestedMeasure> doubly_nested;
};

struct MonadLawFailure {
  std::string law;
  std::size_t index;
};

struct MonadLawReport {
  std::size_t checks = 0;
  std::vector<MonadLawFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Evaluates E∘δ_P = id and E∘Pδ = id on every measure and E∘PE = E∘E on
/// every doubly nested measure, exactly.
MonadLawReport monad_law_check(const FinMetricSpace& x, const MonadSample& sample);

}  // namespace kantorovich
