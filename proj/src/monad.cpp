#include "kantorovich/monad.hpp"

#include <algorithm>

#include "kantorovich/errors.hpp"
#include "kantorovich/transport.hpp"

namespace kantorovich {
namespace {

void check_weights(std::span<const Rational> weights, std::size_t expected, const char* what) {
  if (weights.size() != expected) {
    throw InvariantViolation(std::string(what) + ": " + std::to_string(weights.size()) +
                             " weights for " + std::to_string(expected) + " inner entries");
  }
  if (expected == 0) throw InvariantViolation(std::string(what) + ": no inner entries");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) throw InvariantViolation(std::string(what) + ": negative weight " + to_string(w));
    total += w;
  }
  if (total != 1) {
    throw InvariantViolation(std::string(what) + ": weights sum to " + to_string(total));
  }
}

}  // namespace

NestedMeasure::NestedMeasure(FinMetricSpace base, std::vector<Measure> inner,
                             std::vector<Rational> weights)
    : base_(std::move(base)), inner_(std::move(inner)), weights_(std::move(weights)) {
  check_weights(weights_, inner_.size(), "nested measure");
  for (const auto& p : inner_) require_same_space(base_, p.space(), "nested measure");
}

NestedMeasure NestedMeasure::merged() const {
  std::vector<Measure> inner;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < inner_.size(); ++i) {
    auto it = std::find(inner.begin(), inner.end(), inner_[i]);
    if (it == inner.end()) {
      inner.push_back(inner_[i]);
      weights.push_back(weights_[i]);
    } else {
      weights[static_cast<std::size_t>(it - inner.begin())] += weights_[i];
    }
  }
  return NestedMeasure(base_, std::move(inner), std::move(weights));
}

bool NestedMeasure::same_distribution(const NestedMeasure& other) const {
  if (!(base_ == other.base_)) return false;
  auto a = merged();
  auto b = other.merged();
  auto mass = [](const NestedMeasure& m, const Measure& p) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.inner_[i] == p) return m.weights_[i];
    }
    return Rational(0);
  };
  for (const auto& p : a.inner_) {
    if (mass(a, p) != mass(b, p)) return false;
  }
  for (const auto& p : b.inner_) {
    if (mass(a, p) != mass(b, p)) return false;
  }
  return true;
}

DoublyNestedMeasure::DoublyNestedMeasure(FinMetricSpace base, std::vector<NestedMeasure> inner,
                                         std::vector<Rational> weights)
    : base_(std::move(base)), inner_(std::move(inner)), weights_(std::move(weights)) {
  check_weights(weights_, inner_.size(), "doubly nested measure");
  for (const auto& mu : inner_) require_same_space(base_, mu.base(), "doubly nested measure");
}

Measure expectation(const NestedMeasure& mu) {
  std::vector<Rational> w(mu.base().size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Rational& outer = mu.weights()[i];
    if (outer == 0) continue;
    const auto& p = mu.inner()[i];
    for (std::size_t x = 0; x < w.size(); ++x) {
      if (p(x) != 0) w[x] += outer * p(x);
    }
  }
  return Measure(mu.base(), std::move(w));
}

NestedMeasure unit_nested(const Measure& p) {
  return NestedMeasure(p.space(), {p}, {Rational(1)});
}

NestedMeasure dirac_nested(const Measure& p) {
  std::vector<Measure> inner;
  std::vector<Rational> weights;
  for (std::size_t x : p.support()) {
    inner.push_back(dirac(p.space(), x));
    weights.push_back(p(x));
  }
  return NestedMeasure(p.space(), std::move(inner), std::move(weights));
}

NestedMeasure pushforward_nested(const ShortMap& f, const NestedMeasure& mu) {
  require_same_space(f.domain(), mu.base(), "pushforward_nested");
  std::vector<Measure> inner;
  inner.reserve(mu.size());
  for (const auto& p : mu.inner()) inner.push_back(pushforward(f, p));
  return NestedMeasure(f.codomain(), std::move(inner),
                       std::vector<Rational>(mu.weights().begin(), mu.weights().end()));
}

NestedMeasure flatten(const DoublyNestedMeasure& mu) {
  std::vector<Measure> inner;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < mu.inner().size(); ++i) {
    const auto& nested = mu.inner()[i];
    for (std::size_t j = 0; j < nested.size(); ++j) {
      inner.push_back(nested.inner()[j]);
      weights.push_back(mu.weights()[i] * nested.weights()[j]);
    }
  }
  return NestedMeasure(mu.base(), std::move(inner), std::move(weights));
}

NestedMeasure map_expectation(const DoublyNestedMeasure& mu) {
  std::vector<Measure> inner;
  inner.reserve(mu.inner().size());
  for (const auto& nested : mu.inner()) inner.push_back(expectation(nested));
  return NestedMeasure(mu.base(), std::move(inner),
                       std::vector<Rational>(mu.weights().begin(), mu.weights().end()));
}

FinMetricSpace wasserstein_space(std::span<const Measure> measures) {
  if (measures.empty()) throw InvariantViolation("wasserstein_space: no measures");
  const std::size_t n = measures.size();
  for (std::size_t i = 1; i < n; ++i) {
    require_same_space(measures[0].space(), measures[i].space(), "wasserstein_space");
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "m" + std::to_string(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (measures[i] == measures[j]) {
        throw InvariantViolation("wasserstein_space: measures " + labels[i] + " and " +
                                 labels[j] + " are equal");
      }
    }
  }
  std::vector<Rational> dist(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist[i * n + j] = wasserstein_distance(measures[i], measures[j]);
      dist[j * n + i] = dist[i * n + j];
    }
  }
  return FinMetricSpace(std::move(labels), std::move(dist));
}

Rational nested_wasserstein(const NestedMeasure& mu, const NestedMeasure& nu) {
  require_same_space(mu.base(), nu.base(), "nested_wasserstein");
  std::vector<Measure> points;
  auto index_of = [&points](const Measure& p) {
    auto it = std::find(points.begin(), points.end(), p);
    if (it != points.end()) return static_cast<std::size_t>(it - points.begin());
    points.push_back(p);
    return points.size() - 1;
  };
  std::vector<std::pair<std::size_t, Rational>> left;
  std::vector<std::pair<std::size_t, Rational>> right;
  for (std::size_t i = 0; i < mu.size(); ++i) left.emplace_back(index_of(mu.inner()[i]), mu.weights()[i]);
  for (std::size_t i = 0; i < nu.size(); ++i) right.emplace_back(index_of(nu.inner()[i]), nu.weights()[i]);
  auto space = wasserstein_space(points);
  std::vector<Rational> a(points.size());
  std::vector<Rational> b(points.size());
  for (const auto& [i, w] : left) a[i] += w;
  for (const auto& [i, w] : right) b[i] += w;
  return wasserstein_distance(Measure(space, std::move(a)), Measure(space, std::move(b)));
}

MonadLawReport monad_law_check(const FinMetricSpace& x, const MonadSample& sample) {
  MonadLawReport report;
  for (std::size_t i = 0; i < sample.measures.size(); ++i) {
    const auto& p = sample.measures[i];
    require_same_space(x, p.space(), "monad_law_check");
    ++report.checks;
    if (!(expectation(unit_nested(p)) == p)) report.failures.push_back({"left_unit", i});
    ++report.checks;
    if (!(expectation(dirac_nested(p)) == p)) report.failures.push_back({"right_unit", i});
  }
  for (std::size_t i = 0; i < sample.doubly_nested.size(); ++i) {
    const auto& mu = sample.doubly_nested[i];
    require_same_space(x, mu.base(), "monad_law_check");
    ++report.checks;
    if (!(expectation(map_expectation(mu)) == expectation(flatten(mu)))) {
      report.failures.push_back({"associativity", i});
    }
  }
  return report;
}

}  // namespace kantorovich
