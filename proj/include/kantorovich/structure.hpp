#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "kantorovich/measure.hpp"
#include "kantorovich/metric.hpp"
#include "kantorovich/monad.hpp"

namespace kantorovich {

/// An object of the category of random elements: a space with a law on it.
struct Law {
  explicit Law(Measure m) : space(m.space()), measure(std::move(m)) {}

  FinMetricSpace space;
  Measure measure;

  friend bool operator==(const Law& a, const Law& b) = default;
};

/// A monoid internal to finite metric spaces: a short associative
/// multiplication carrier ⊗ carrier → carrier with a two-sided unit.
class InternalMonoid {
 public:
  /// Checks associativity and unitality exhaustively.
  InternalMonoid(FinMetricSpace carrier, ShortMap mult, std::size_t unit);

  const FinMetricSpace& carrier() const { return carrier_; }
  const ShortMap& mult() const { return mult_; }
  std::size_t unit() const { return unit_; }
  std::size_t operator()(std::size_t x, std::size_t y) const {
    return mult_(pair_index(carrier_, x, y));
  }

 private:
  FinMetricSpace carrier_;
  ShortMap mult_;
  std::size_t unit_;
};

/// ∇: the product joint p ⊗ q on X ⊗ Y.
Measure product(const Measure& p, const Measure& q);

/// Δ: the two marginals of a measure on a space built by tensor().
/// Throws MismatchError when the space carries no factorization.
std::pair<Measure, Measure> marginals(const Measure& r);

/// ∇∘Δ∘r == r.
bool is_independent(const Measure& r);

/// Left-nested n-ary product ((p1 ⊗ p2) ⊗ p3) ⊗ ...
Measure product_n(std::span<const Measure> measures);

/// Marginals of a measure on a left-nested n-fold tensor space.
std::vector<Measure> marginals_n(const Measure& r, std::size_t arity);

/// product_n(marginals_n(r)) == r.
bool is_independent_family(const Measure& r, std::size_t arity);

/// (x, q) ↦ δ_x ⊗ q.
Measure strength(const FinMetricSpace& x, std::size_t point, const Measure& q);

/// f_*(p ⊗ q) for f : X ⊗ Y → Z.
Measure pushforward_joint(const ShortMap& f, const Measure& p, const Measure& q);

/// (m.mult)_*(p ⊗ q).
Measure convolve(const Measure& p, const Measure& q, const InternalMonoid& m);

/// The monoidal product of laws.
Law law_product(const Law& r, const Law& s);

/// Outcome of the tupling-based independence test for two observables.
struct MapIndependence {
  bool independent;
  /// Whether (f1, f2) : A → B1 ⊗ B2 is short for the sum metric. Reported
  /// only; the test does not require it.
  bool tupling_short;
  /// P(f1, f2)(s) on B1 ⊗ B2.
  Measure joint;
};

/// Pushes s forward along the tupling (f1, f2) and tests independence of
/// the result.
MapIndependence independent_maps(const Measure& s, const ShortMap& f1, const ShortMap& f2);

/// ∇² : PPX ⊗ PPY → PP(X ⊗ Y), (μ, ν) ↦ (∇_{X,Y})_*(μ ⊗ ν). Inner products
/// are listed row-major over (inner of μ, inner of ν) after merging repeats.
NestedMeasure nabla2(const NestedMeasure& mu, const NestedMeasure& nu);

/// Δ² : PP(X ⊗ Y) → PPX ⊗ PPY, the marginals of (Δ_{X,Y})_* μ.
std::pair<NestedMeasure, NestedMeasure> delta2(const NestedMeasure& mu);

}  // namespace kantorovich
