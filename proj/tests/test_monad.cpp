#include "doctest.h"

#include "helpers.hpp"
#include "kantorovich/errors.hpp"
#include "kantorovich/generators.hpp"
#include "kantorovich/monad.hpp"
#include "kantorovich/transport.hpp"

using namespace kantorovich;
using ktest::R;

TEST_CASE("expectation") {
  auto x = ktest::pair_space(1);
  auto p = Measure(x, {R(1, 3), R(2, 3)});
  CHECK(expectation(unit_nested(p)) == p);
  CHECK(expectation(NestedMeasure(x, {p, p, p}, {R(1, 2), R(1, 4), R(1, 4)})) == p);
  auto mixture = NestedMeasure(x, {dirac(x, 0), dirac(x, 1)}, {R(1, 2), R(1, 2)});
  CHECK(expectation(mixture) == Measure(x, {R(1, 2), R(1, 2)}));
  CHECK(expectation(dirac_nested(p)) == p);

  CHECK_THROWS_AS(NestedMeasure(x, {p}, {R(1, 2)}), InvariantViolation);
  CHECK_THROWS_AS(NestedMeasure(x, {dirac(ktest::pair_space(2), 0)}, {1}), MismatchError);
}

TEST_CASE("merging repeated inner measures") {
  auto x = ktest::pair_space(1);
  auto a = dirac(x, 0);
  auto b = dirac(x, 1);
  auto mu = NestedMeasure(x, {a, b, a}, {R(1, 4), R(1, 2), R(1, 4)});
  auto merged = mu.merged();
  REQUIRE(merged.size() == 2);
  CHECK(merged.inner()[0] == a);
  CHECK(merged.weights()[0] == R(1, 2));
  auto swapped = NestedMeasure(x, {b, a}, {R(1, 2), R(1, 2)});
  CHECK(mu.same_distribution(swapped));
  CHECK_FALSE(mu == swapped);
}

TEST_CASE("wasserstein space") {
  auto x = FinMetricSpace({"a", "b", "c"}, std::vector<Rational>{0, 2, 3, 2, 0, 1, 3, 1, 0});
  std::vector<Measure> diracs{dirac(x, 0), dirac(x, 2)};
  auto w = wasserstein_space(diracs);
  REQUIRE(w.size() == 2);
  CHECK(w.label(1) == "m1");
  CHECK(w.distance(0, 1) == 3);

  std::vector<Measure> single{Measure(x, {R(1, 3), R(1, 3), R(1, 3)})};
  CHECK(wasserstein_space(single).size() == 1);

  std::vector<Measure> repeated{dirac(x, 0), dirac(x, 0)};
  CHECK_THROWS_AS(wasserstein_space(repeated), InvariantViolation);

  // The metric axioms are re-verified by the constructor; recompute here too.
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Measure> ms;
    while (ms.size() < 3) {
      auto m = random_measure(rng, x, SizeBudget{});
      if (std::find(ms.begin(), ms.end(), m) == ms.end()) ms.push_back(m);
    }
    auto space = wasserstein_space(ms);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(space.distance(i, j) == wasserstein_distance(ms[i], ms[j]));
        for (std::size_t k = 0; k < 3; ++k) {
          CHECK(space.distance(i, k) <= space.distance(i, j) + space.distance(j, k));
        }
      }
    }
  }
}

TEST_CASE("nested distance") {
  auto x = ktest::pair_space(1);
  auto a = unit_nested(dirac(x, 0));
  auto b = unit_nested(dirac(x, 1));
  CHECK(nested_wasserstein(a, b) == 1);
  CHECK(nested_wasserstein(a, a) == 0);
  // Both sides average to the uniform law, yet differ on PX.
  auto spread = NestedMeasure(x, {dirac(x, 0), dirac(x, 1)}, {R(1, 2), R(1, 2)});
  auto uniform = unit_nested(Measure(x, {R(1, 2), R(1, 2)}));
  CHECK(nested_wasserstein(spread, uniform) == R(1, 2));
  CHECK(wasserstein_distance(expectation(spread), expectation(uniform)) == 0);
}

TEST_CASE("monad laws on random doubly nested measures") {
  Rng rng(31);
  SizeBudget budget;
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_space(rng, budget, "x");
    auto mu = random_doubly_nested(rng, x, budget);
    auto p = random_measure(rng, x, budget);

    // Both composites written out by hand.
    std::vector<Rational> lhs(x.size());
    std::vector<Rational> rhs(x.size());
    for (std::size_t i = 0; i < mu.inner().size(); ++i) {
      const auto& nested = mu.inner()[i];
      for (std::size_t j = 0; j < nested.size(); ++j) {
        for (std::size_t k = 0; k < x.size(); ++k) {
          lhs[k] += mu.weights()[i] * nested.weights()[j] * nested.inner()[j](k);
        }
      }
      auto avg = expectation(nested);
      for (std::size_t k = 0; k < x.size(); ++k) rhs[k] += mu.weights()[i] * avg(k);
    }
    CHECK(lhs == rhs);
    CHECK(expectation(flatten(mu)) == Measure(x, lhs));
    CHECK(expectation(map_expectation(mu)) == Measure(x, rhs));

    auto report = monad_law_check(x, MonadSample{{p}, {mu}});
    CHECK(report.passed());
    CHECK(report.checks == 3);
  }
}

TEST_CASE("nested pushforward") {
  auto x = FinMetricSpace({"a", "b", "c"}, std::vector<Rational>{0, 1, 1, 1, 0, 1, 1, 1, 0});
  auto y = ktest::pair_space(1, "u", "v");
  auto f = ShortMap(x, y, {0, 0, 1});
  auto mu = NestedMeasure(x, {dirac(x, 0), dirac(x, 1), dirac(x, 2)}, {R(1, 3), R(1, 3), R(1, 3)});
  auto pushed = pushforward_nested(f, mu);
  CHECK(pushed.merged().size() == 2);
  CHECK(expectation(pushed) == pushforward(f, expectation(mu)));
}
