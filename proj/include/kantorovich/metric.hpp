#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kantorovich/rational.hpp"

namespace kantorovich {

/**
 * A finite metric space: an ordered list of distinct labels together with an
 * exact rational distance matrix.
 *
 * Values are immutable handles; copies share the underlying storage. The
 * metric axioms (zero diagonal, strictly positive off-diagonal, symmetry and
 * the triangle inequality) are checked exhaustively by the public
 * constructor. Spaces produced by tensor() remember their two factors so that
 * marginals can be taken without guessing a factorization.
 */
class FinMetricSpace {
 public:
  /// Validating constructor. `dist` is row-major n×n.
  FinMetricSpace(std::vector<std::string> labels, std::vector<Rational> dist);
  FinMetricSpace(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& dist);

  std::size_t size() const { return data_->labels.size(); }
  const std::string& label(std::size_t i) const { return data_->labels.at(i); }
  const std::vector<std::string>& labels() const { return data_->labels; }

  const Rational& distance(std::size_t i, std::size_t j) const {
    return data_->dist[i * size() + j];
  }
  std::span<const Rational> distances() const { return data_->dist; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws ParseError when the label is absent.
  std::size_t index_of(std::string_view label) const;

  bool is_tensor() const { return data_->left != nullptr; }
  /// Only valid when is_tensor(); throws MismatchError otherwise.
  FinMetricSpace left_factor() const;
  FinMetricSpace right_factor() const;

  /// Structural equality: same labels in the same order, same distances.
  friend bool operator==(const FinMetricSpace& a, const FinMetricSpace& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<Rational> dist;
    std::map<std::string, std::size_t, std::less<>> index;
    std::shared_ptr<const Data> left;
    std::shared_ptr<const Data> right;
  };

  explicit FinMetricSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<Data> make_data(std::vector<std::string> labels,
                                         std::vector<Rational> dist);

  friend FinMetricSpace tensor(const FinMetricSpace& x, const FinMetricSpace& y);

  std::shared_ptr<const Data> data_;
};

/// The one-point space {*}.
FinMetricSpace terminal();

/// X ⊗ Y with the sum metric d((x,y),(x',y')) = d(x,x') + d(y,y'). Points are
/// ordered row-major with X outer; the label of (x,y) is "(x,y)".
FinMetricSpace tensor(const FinMetricSpace& x, const FinMetricSpace& y);

/// Index of (i, j) in tensor(x, y).
inline std::size_t pair_index(const FinMetricSpace& y, std::size_t i, std::size_t j) {
  return i * y.size() + j;
}

/// A 1-Lipschitz map between finite metric spaces, stored as a total lookup
/// table of codomain indices.
class ShortMap {
 public:
  /// Checks that the table is total, in range and short.
  ShortMap(FinMetricSpace domain, FinMetricSpace codomain, std::vector<std::size_t> table);

  /// Builds from a label → label assignment; every domain label must appear.
  static ShortMap from_labels(FinMetricSpace domain, FinMetricSpace codomain,
                              const std::map<std::string, std::string>& assignment);

  const FinMetricSpace& domain() const { return domain_; }
  const FinMetricSpace& codomain() const { return codomain_; }
  std::span<const std::size_t> table() const { return table_; }
  std::size_t operator()(std::size_t i) const { return table_[i]; }

  friend bool operator==(const ShortMap& a, const ShortMap& b) = default;

 private:
  FinMetricSpace domain_;
  FinMetricSpace codomain_;
  std::vector<std::size_t> table_;
};

ShortMap identity(const FinMetricSpace& x);
/// f then g. Throws MismatchError unless codomain(f) == domain(g).
ShortMap compose(const ShortMap& f, const ShortMap& g);
/// f ⊗ g : X ⊗ Y → X' ⊗ Y'.
ShortMap tensor_map(const ShortMap& f, const ShortMap& g);

/// The unique map X → 1.
ShortMap bang(const FinMetricSpace& x);
ShortMap proj1(const FinMetricSpace& x, const FinMetricSpace& y);
ShortMap proj2(const FinMetricSpace& x, const FinMetricSpace& y);
/// (x, y) ↦ (y, x).
ShortMap braiding(const FinMetricSpace& x, const FinMetricSpace& y);
/// 1 ⊗ X → X and X ⊗ 1 → X.
ShortMap left_unitor(const FinMetricSpace& x);
ShortMap right_unitor(const FinMetricSpace& x);
/// (X ⊗ Y) ⊗ Z → X ⊗ (Y ⊗ Z).
ShortMap associator(const FinMetricSpace& x, const FinMetricSpace& y, const FinMetricSpace& z);
/// (W ⊗ X) ⊗ (Y ⊗ Z) → (W ⊗ Y) ⊗ (X ⊗ Z), swapping the two middle factors.
ShortMap middle_swap(const FinMetricSpace& w, const FinMetricSpace& x, const FinMetricSpace& y,
                     const FinMetricSpace& z);

/// A rational-valued 1-Lipschitz functional X → ℚ.
class ShortFunctional {
 public:
  /// Checks |f(x) − f(x')| ≤ d(x, x') for every pair.
  ShortFunctional(FinMetricSpace domain, std::vector<Rational> values);

  const FinMetricSpace& domain() const { return domain_; }
  std::span<const Rational> values() const { return values_; }
  const Rational& operator()(std::size_t i) const { return values_[i]; }

  friend bool operator==(const ShortFunctional& a, const ShortFunctional& b) = default;

 private:
  FinMetricSpace domain_;
  std::vector<Rational> values_;
};

/// (x, y) ↦ f(x) + g(y) on X ⊗ Y. Short whenever f and g are.
ShortFunctional sum_functional(const ShortFunctional& f, const ShortFunctional& g);

/// y ↦ d(y, z) for a fixed point z.
ShortFunctional distance_functional(const FinMetricSpace& x, std::size_t z);

/// x ↦ min_y (values[y] + d(x, y)), the largest short functional below
/// `values`. Leaves an already-short assignment unchanged.
std::vector<Rational> lipschitz_closure(const FinMetricSpace& x, std::span<const Rational> values);

}  // namespace kantorovich
