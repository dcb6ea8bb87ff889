#include "doctest.h"

#include "helpers.hpp"
#include "kantorovich/errors.hpp"
#include "kantorovich/generators.hpp"
#include "kantorovich/measure.hpp"

using namespace kantorovich;
using ktest::R;

TEST_CASE("measure invariants") {
  auto x = ktest::pair_space(1);
  CHECK_THROWS_AS(Measure(x, {R(1, 2), R(1, 3)}), InvariantViolation);
  CHECK_THROWS_AS(Measure(x, {R(3, 2), R(-1, 2)}), InvariantViolation);
  CHECK_THROWS_AS(Measure(x, {1}), Error);
  auto p = Measure(x, {R(1, 4), R(3, 4)});
  CHECK(p.support() == std::vector<std::size_t>{0, 1});
  CHECK(dirac(x, "b") == Measure(x, {0, 1}));
  CHECK_THROWS_AS(dirac(x, 2), Error);
}

TEST_CASE("integration") {
  auto x = ktest::pair_space(1);
  auto f = ShortFunctional(x, {0, 1});
  auto uniform = Measure(x, {R(1, 2), R(1, 2)});
  CHECK(integrate(f, uniform) == R(1, 2));
  CHECK(integrate(ShortFunctional(x, {0, 0}), uniform) == 0);

  Rng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    auto y = random_space(rng, 4, "y");
    auto g = random_functional(rng, y);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(integrate(g, dirac(y, i)) == g(i));
  }
}

TEST_CASE("pushforward") {
  auto x = ktest::pair_space(1);
  auto one_point = FinMetricSpace({"u"}, std::vector<Rational>{0});
  auto uniform = Measure(x, {R(1, 2), R(1, 2)});
  CHECK(pushforward(ShortMap(x, one_point, {0, 0}), uniform) == dirac(one_point, 0));
  CHECK(pushforward(identity(x), uniform) == uniform);
  CHECK(pushforward(bang(x), uniform) == dirac(terminal(), 0));

  auto y = FinMetricSpace({"a", "b", "c"}, std::vector<Rational>{0, 1, 1, 1, 0, 1, 1, 1, 0});
  auto p = Measure(y, {R(1, 6), R(1, 3), R(1, 2)});
  auto z = ktest::pair_space(1, "u", "v");
  auto f = ShortMap(y, z, {0, 1, 0});
  CHECK(pushforward(f, p) == Measure(z, {R(2, 3), R(1, 3)}));
  for (std::size_t i = 0; i < 3; ++i) CHECK(pushforward(f, dirac(y, i)) == dirac(z, f(i)));
}

TEST_CASE("partial integration") {
  auto x = ktest::pair_space(1);
  auto y = ktest::pair_space(2, "u", "v");
  auto xy = tensor(x, y);
  // f(x, y) = g(x) for g = (0, 1); integrating out x gives a constant.
  auto f = ShortFunctional(xy, {0, 0, 1, 1});
  auto p = Measure(x, {R(1, 3), R(2, 3)});
  auto slice = partial_integral(f, p);
  CHECK(slice(0) == R(2, 3));
  CHECK(slice(1) == R(2, 3));
  auto at_b = partial_integral(f, dirac(x, 1));
  CHECK(at_b(0) == 1);

  CHECK_THROWS_AS(partial_integral(f, Measure(y, {1, 0})), MismatchError);
  CHECK_THROWS_AS(partial_integral(ShortFunctional(x, {0, 1}), p), MismatchError);

  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_space(rng, 3, "a");
    auto b = random_space(rng, 3, "b");
    auto g = random_functional(rng, tensor(a, b));
    auto q = random_measure(rng, a, SizeBudget{});
    auto h = partial_integral(g, q);
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto gap = h(i) - h(j);
        CHECK((gap < 0 ? Rational(-gap) : gap) <= b.distance(i, j));
      }
    }
  }
}
