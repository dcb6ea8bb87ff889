#include "kantorovich/generators.hpp"

#include <algorithm>

#include "kantorovich/errors.hpp"

namespace kantorovich {
namespace {

// Floyd–Warshall on a dense row-major matrix.
void shortest_path_closure(std::vector<Rational>& d, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational via = d[i * n + k] + d[k * n + j];
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
}

std::vector<std::string> make_labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = prefix + std::to_string(i);
  return labels;
}

Rational small_positive(Rng& rng) {
  std::size_t den = rng.between(1, 4);
  std::size_t num = rng.between(1, 4 * den);
  return make_rational(static_cast<long>(num), static_cast<long>(den));
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t law_seed(std::uint64_t suite_seed, std::string_view law_id) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : law_id) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return mix64(suite_seed ^ hash);
}

FinMetricSpace random_space(Rng& rng, std::size_t points, const std::string& prefix) {
  const std::size_t n = points;
  while (true) {
    std::vector<Rational> d(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::size_t den = rng.between(1, 4);
        std::size_t num = rng.between(0, 4 * den);
        d[i * n + j] = d[j * n + i] = make_rational(static_cast<long>(num), static_cast<long>(den));
      }
    }
    shortest_path_closure(d, n);
    bool degenerate = false;
    for (std::size_t i = 0; i < n && !degenerate; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (d[i * n + j] == 0) {
          degenerate = true;
          break;
        }
      }
    }
    if (!degenerate) return FinMetricSpace(make_labels(prefix, n), std::move(d));
  }
}

FinMetricSpace random_space(Rng& rng, const SizeBudget& budget, const std::string& prefix) {
  return random_space(rng, rng.between(budget.min_points, budget.max_points), prefix);
}

Measure random_measure_with_support(Rng& rng, const FinMetricSpace& space, std::size_t max_support,
                                    const SizeBudget& budget) {
  const std::size_t n = space.size();
  max_support = std::clamp<std::size_t>(max_support, 1, n);
  if (rng.chance(1, 6)) return dirac(space, rng.below(n));
  // Choose which points may carry mass, then integer masses summing to at
  // most max_denominator.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  const std::size_t slots = rng.between(1, max_support);
  const std::size_t cap = std::max<std::size_t>(1, budget.max_denominator / slots);
  std::vector<std::size_t> mass(n, 0);
  std::size_t total = 0;
  while (total == 0) {
    for (std::size_t k = 0; k < slots; ++k) {
      mass[order[k]] = rng.between(0, cap);
      total += mass[order[k]];
    }
  }
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = make_rational(static_cast<long>(mass[i]), static_cast<long>(total));
  }
  return Measure(space, std::move(w));
}

Measure random_measure(Rng& rng, const FinMetricSpace& space, const SizeBudget& budget) {
  return random_measure_with_support(rng, space, space.size(), budget);
}

ShortFunctional random_functional(Rng& rng, const FinMetricSpace& space) {
  std::vector<Rational> raw(space.size());
  for (auto& value : raw) {
    long den = static_cast<long>(rng.between(1, 4));
    value = make_rational(rng.between_signed(-8 * den, 8 * den), den);
  }
  return ShortFunctional(space, lipschitz_closure(space, raw));
}

ShortMap random_short_map_from(Rng& rng, const FinMetricSpace& domain,
                               std::size_t codomain_points, const std::string& prefix) {
  const std::size_t m = codomain_points;
  std::vector<std::size_t> table(domain.size());
  for (auto& t : table) t = rng.below(m);
  // Scale factor in (0, 1].
  std::size_t scale_den = rng.between(1, 4);
  Rational scale = make_rational(static_cast<long>(rng.between(1, scale_den)),
                                 static_cast<long>(scale_den));
  std::vector<std::optional<Rational>> pulled(m * m);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      std::size_t a = table[i];
      std::size_t b = table[j];
      if (a == b) continue;
      Rational d = domain.distance(i, j) * scale;
      auto& slot = pulled[a * m + b];
      if (!slot || d < *slot) slot = d;
    }
  }
  std::vector<Rational> d(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      Rational value = pulled[a * m + b] ? *pulled[a * m + b] : small_positive(rng);
      d[a * m + b] = d[b * m + a] = value;
    }
  }
  shortest_path_closure(d, m);
  return ShortMap(domain, FinMetricSpace(make_labels(prefix, m), std::move(d)), std::move(table));
}

NestedMeasure random_nested(Rng& rng, const FinMetricSpace& base, const SizeBudget& budget) {
  const std::size_t k = rng.between(1, budget.nested_inner);
  std::vector<Measure> inner;
  for (std::size_t i = 0; i < k; ++i) {
    if (!inner.empty() && rng.chance(1, 5)) {
      inner.push_back(inner[rng.below(inner.size())]);
    } else {
      inner.push_back(random_measure(rng, base, budget));
    }
  }
  // Outer weights: a random measure on k abstract points.
  std::vector<std::size_t> mass(k);
  std::size_t total = 0;
  while (total == 0) {
    for (auto& w : mass) {
      w = rng.between(0, std::max<std::size_t>(1, budget.max_denominator / k));
      total += w;
    }
  }
  std::vector<Rational> weights(k);
  for (std::size_t i = 0; i < k; ++i) {
    weights[i] = make_rational(static_cast<long>(mass[i]), static_cast<long>(total));
  }
  return NestedMeasure(base, std::move(inner), std::move(weights));
}

DoublyNestedMeasure random_doubly_nested(Rng& rng, const FinMetricSpace& base,
                                         const SizeBudget& budget) {
  auto outer = random_nested(rng, base, budget);
  std::vector<NestedMeasure> inner;
  for (std::size_t i = 0; i < outer.size(); ++i) inner.push_back(random_nested(rng, base, budget));
  return DoublyNestedMeasure(base, std::move(inner),
                             std::vector<Rational>(outer.weights().begin(), outer.weights().end()));
}

InternalMonoid cyclic_group(std::size_t n, const std::vector<Rational>& shift_weights) {
  if (shift_weights.size() + 1 < n) throw MismatchError("cyclic_group: not enough shift weights");
  std::vector<Rational> d(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      std::size_t k = (y + n - x) % n;
      std::size_t sym = std::min(k, n - k);
      d[x * n + y] = shift_weights[sym - 1];
    }
  }
  shortest_path_closure(d, n);
  auto carrier = FinMetricSpace(make_labels("g", n), std::move(d));
  std::vector<std::size_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = (x + y) % n;
  }
  ShortMap mult(tensor(carrier, carrier), carrier, std::move(table));
  return InternalMonoid(carrier, std::move(mult), 0);
}

InternalMonoid random_monoid(Rng& rng, const SizeBudget& budget) {
  const std::size_t n = rng.between(std::max<std::size_t>(1, budget.min_points), budget.max_points);
  switch (rng.below(4)) {
    case 0: {
      std::vector<Rational> w(n);
      for (auto& value : w) value = small_positive(rng);
      return cyclic_group(n, w);
    }
    case 1:
    case 2: {
      // A chain embedded in the line; max (unit = bottom) or min (unit = top).
      std::vector<Rational> position(n);
      Rational at = 0;
      for (auto& p : position) {
        p = at;
        at += small_positive(rng);
      }
      std::vector<Rational> d(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = abs(position[i] - position[j]);
      }
      auto carrier = FinMetricSpace(make_labels("c", n), std::move(d));
      const bool use_max = rng.chance(1, 2);
      std::vector<std::size_t> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = use_max ? std::max(i, j) : std::min(i, j);
      }
      ShortMap mult(tensor(carrier, carrier), carrier, std::move(table));
      return InternalMonoid(carrier, std::move(mult), use_max ? 0 : n - 1);
    }
    default: {
      // min(i + j, n − 1) on an evenly spaced path.
      Rational step = small_positive(rng);
      std::vector<Rational> d(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          d[i * n + j] = step * static_cast<long>(i > j ? i - j : j - i);
        }
      }
      auto carrier = FinMetricSpace(make_labels("t", n), std::move(d));
      std::vector<std::size_t> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = std::min(i + j, n - 1);
      }
      ShortMap mult(tensor(carrier, carrier), carrier, std::move(table));
      return InternalMonoid(carrier, std::move(mult), 0);
    }
  }
}

}  // namespace kantorovich
