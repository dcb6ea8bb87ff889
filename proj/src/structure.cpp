#include "kantorovich/structure.hpp"

#include <algorithm>

#include "kantorovich/errors.hpp"

namespace kantorovich {
namespace {

std::size_t register_measure(std::vector<Measure>& points, const Measure& p) {
  auto it = std::find(points.begin(), points.end(), p);
  if (it != points.end()) return static_cast<std::size_t>(it - points.begin());
  points.push_back(p);
  return points.size() - 1;
}

}  // namespace

InternalMonoid::InternalMonoid(FinMetricSpace carrier, ShortMap mult, std::size_t unit)
    : carrier_(std::move(carrier)), mult_(std::move(mult)), unit_(unit) {
  require_same_space(mult_.domain(), tensor(carrier_, carrier_), "monoid multiplication domain");
  require_same_space(mult_.codomain(), carrier_, "monoid multiplication codomain");
  const std::size_t n = carrier_.size();
  if (unit_ >= n) throw InvariantViolation("monoid unit is not a point of the carrier");
  auto m = [this](std::size_t x, std::size_t y) { return (*this)(x, y); };
  for (std::size_t x = 0; x < n; ++x) {
    if (m(unit_, x) != x || m(x, unit_) != x) {
      throw InvariantViolation("monoid unit " + carrier_.label(unit_) + " is not neutral for " +
                               carrier_.label(x));
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) {
          throw InvariantViolation("monoid multiplication is not associative on (" +
                                   carrier_.label(x) + ", " + carrier_.label(y) + ", " +
                                   carrier_.label(z) + ")");
        }
      }
    }
  }
}

Measure product(const Measure& p, const Measure& q) {
  const auto& x = p.space();
  const auto& y = q.space();
  std::vector<Rational> w(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (p(i) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (q(j) != 0) w[pair_index(y, i, j)] = p(i) * q(j);
    }
  }
  return Measure(tensor(x, y), std::move(w));
}

std::pair<Measure, Measure> marginals(const Measure& r) {
  const auto& xy = r.space();
  if (!xy.is_tensor()) throw MismatchError("marginals: space is not a registered tensor product");
  auto x = xy.left_factor();
  auto y = xy.right_factor();
  std::vector<Rational> wx(x.size());
  std::vector<Rational> wy(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      const Rational& w = r(pair_index(y, i, j));
      if (w == 0) continue;
      wx[i] += w;
      wy[j] += w;
    }
  }
  return {Measure(std::move(x), std::move(wx)), Measure(std::move(y), std::move(wy))};
}

bool is_independent(const Measure& r) {
  auto [rx, ry] = marginals(r);
  return product(rx, ry) == r;
}

Measure product_n(std::span<const Measure> measures) {
  if (measures.empty()) throw MismatchError("product_n: no factors");
  Measure joint = measures[0];
  for (std::size_t i = 1; i < measures.size(); ++i) joint = product(joint, measures[i]);
  return joint;
}

std::vector<Measure> marginals_n(const Measure& r, std::size_t arity) {
  if (arity == 0) throw MismatchError("marginals_n: arity must be positive");
  std::vector<Measure> out;
  Measure rest = r;
  for (std::size_t k = arity; k > 1; --k) {
    if (!rest.space().is_tensor()) {
      throw MismatchError("marginals_n: space is not a " + std::to_string(arity) +
                          "-fold tensor product");
    }
    auto [left, right] = marginals(rest);
    out.push_back(std::move(right));
    rest = std::move(left);
  }
  out.push_back(std::move(rest));
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_independent_family(const Measure& r, std::size_t arity) {
  return product_n(marginals_n(r, arity)) == r;
}

Measure strength(const FinMetricSpace& x, std::size_t point, const Measure& q) {
  return product(dirac(x, point), q);
}

Measure pushforward_joint(const ShortMap& f, const Measure& p, const Measure& q) {
  return pushforward(f, product(p, q));
}

Measure convolve(const Measure& p, const Measure& q, const InternalMonoid& m) {
  require_same_space(p.space(), m.carrier(), "convolve");
  require_same_space(q.space(), m.carrier(), "convolve");
  return pushforward(m.mult(), product(p, q));
}

Law law_product(const Law& r, const Law& s) {
  return Law(product(r.measure, s.measure));
}

MapIndependence independent_maps(const Measure& s, const ShortMap& f1, const ShortMap& f2) {
  require_same_space(f1.domain(), s.space(), "independent_maps");
  require_same_space(f2.domain(), s.space(), "independent_maps");
  const auto& a = s.space();
  const auto& b2 = f2.codomain();
  auto b = tensor(f1.codomain(), b2);
  std::vector<std::size_t> table(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) table[i] = pair_index(b2, f1(i), f2(i));
  bool tupling_short = true;
  for (std::size_t i = 0; i < a.size() && tupling_short; ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (b.distance(table[i], table[j]) > a.distance(i, j)) {
        tupling_short = false;
        break;
      }
    }
  }
  auto joint = pushforward_table(table, b, s);
  bool independent = is_independent(joint);
  return MapIndependence{independent, tupling_short, std::move(joint)};
}

NestedMeasure nabla2(const NestedMeasure& mu, const NestedMeasure& nu) {
  auto left = mu.merged();
  auto right = nu.merged();
  // μ ⊗ ν on PX ⊗ PY, pushed forward along (p, q) ↦ p ⊗ q.
  std::vector<Measure> inner;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      inner.push_back(product(left.inner()[i], right.inner()[j]));
      weights.push_back(left.weights()[i] * right.weights()[j]);
    }
  }
  return NestedMeasure(tensor(mu.base(), nu.base()), std::move(inner), std::move(weights)).merged();
}

std::pair<NestedMeasure, NestedMeasure> delta2(const NestedMeasure& mu) {
  const auto& xy = mu.base();
  if (!xy.is_tensor()) throw MismatchError("delta2: base is not a registered tensor product");
  // (Δ_{X,Y})_* μ as a weight table over distinct (r_X, r_Y) pairs.
  std::vector<Measure> firsts;
  std::vector<Measure> seconds;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (const auto& r : mu.inner()) {
    auto [rx, ry] = marginals(r);
    cells.emplace_back(register_measure(firsts, rx), register_measure(seconds, ry));
  }
  std::vector<Rational> joint(firsts.size() * seconds.size());
  for (std::size_t k = 0; k < cells.size(); ++k) {
    joint[cells[k].first * seconds.size() + cells[k].second] += mu.weights()[k];
  }
  std::vector<Rational> wx(firsts.size());
  std::vector<Rational> wy(seconds.size());
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    for (std::size_t j = 0; j < seconds.size(); ++j) {
      wx[i] += joint[i * seconds.size() + j];
      wy[j] += joint[i * seconds.size() + j];
    }
  }
  return {NestedMeasure(xy.left_factor(), std::move(firsts), std::move(wx)),
          NestedMeasure(xy.right_factor(), std::move(seconds), std::move(wy))};
}

}  // namespace kantorovich
