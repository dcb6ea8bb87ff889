#pragma once

#include <string>
#include <vector>

#include "kantorovich/measure.hpp"
#include "kantorovich/metric.hpp"
#include "kantorovich/rational.hpp"

namespace ktest {

using kantorovich::FinMetricSpace;
using kantorovich::Measure;
using kantorovich::Rational;

inline Rational R(long n, long d = 1) { return kantorovich::make_rational(n, d); }

/// Two points a, b at distance d.
inline FinMetricSpace pair_space(const Rational& d, std::string a = "a", std::string b = "b") {
  return FinMetricSpace({std::move(a), std::move(b)}, std::vector<Rational>{0, d, d, 0});
}

/// Points on the line at the given positions, labelled p0, p1, ...
inline FinMetricSpace line_space(const std::vector<Rational>& positions) {
  const std::size_t n = positions.size();
  std::vector<std::string> labels;
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      Rational diff = positions[i] - positions[j];
      d[i * n + j] = diff < 0 ? Rational(-diff) : diff;
    }
  }
  return FinMetricSpace(std::move(labels), std::move(d));
}

}  // namespace ktest
