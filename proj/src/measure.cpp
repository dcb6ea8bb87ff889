#include "kantorovich/measure.hpp"

#include <string>

#include "kantorovich/errors.hpp"

namespace kantorovich {

void require_same_space(const FinMetricSpace& a, const FinMetricSpace& b, std::string_view what) {
  if (!(a == b)) throw MismatchError(std::string(what) + ": spaces differ");
}

Measure::Measure(FinMetricSpace space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (weights_.size() != space_.size()) {
    throw InvariantViolation("measure has " + std::to_string(weights_.size()) +
                             " weights for a space of " + std::to_string(space_.size()) +
                             " points");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0) {
      throw InvariantViolation("negative weight " + to_string(weights_[i]) + " at " +
                               space_.label(i));
    }
    total += weights_[i];
  }
  if (total != 1) throw InvariantViolation("weights sum to " + to_string(total) + ", not 1");
}

std::vector<std::size_t> Measure::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] > 0) out.push_back(i);
  }
  return out;
}

Measure dirac(const FinMetricSpace& x, std::size_t point) {
  if (point >= x.size()) throw ParseError("dirac: point index out of range");
  std::vector<Rational> w(x.size());
  w[point] = 1;
  return Measure(x, std::move(w));
}

Measure dirac(const FinMetricSpace& x, std::string_view label) {
  return dirac(x, x.index_of(label));
}

Rational integrate(std::span<const Rational> values, const Measure& p) {
  if (values.size() != p.space().size()) throw MismatchError("integrate: size mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (p(i) != 0) sum += values[i] * p(i);
  }
  return sum;
}

Rational integrate(const ShortFunctional& f, const Measure& p) {
  require_same_space(f.domain(), p.space(), "integrate");
  return integrate(f.values(), p);
}

Measure pushforward_table(std::span<const std::size_t> table, const FinMetricSpace& codomain,
                          const Measure& p) {
  if (table.size() != p.space().size()) throw MismatchError("pushforward: table size mismatch");
  std::vector<Rational> w(codomain.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= codomain.size()) throw MismatchError("pushforward: table out of range");
    if (p(i) != 0) w[table[i]] += p(i);
  }
  return Measure(codomain, std::move(w));
}

Measure pushforward(const ShortMap& f, const Measure& p) {
  require_same_space(f.domain(), p.space(), "pushforward");
  return pushforward_table(f.table(), f.codomain(), p);
}

ShortFunctional partial_integral(const ShortFunctional& f, const Measure& p) {
  const auto& xy = f.domain();
  if (!xy.is_tensor()) throw MismatchError("partial_integral: functional is not on a tensor space");
  require_same_space(xy.left_factor(), p.space(), "partial_integral");
  auto y = xy.right_factor();
  std::vector<Rational> values(y.size());
  for (std::size_t i = 0; i < p.space().size(); ++i) {
    if (p(i) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) values[j] += f(pair_index(y, i, j)) * p(i);
  }
  return ShortFunctional(y, std::move(values));
}

}  // namespace kantorovich
