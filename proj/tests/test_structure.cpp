#include "doctest.h"

#include "helpers.hpp"
#include "kantorovich/errors.hpp"
#include "kantorovich/generators.hpp"
#include "kantorovich/structure.hpp"

using namespace kantorovich;
using ktest::R;

namespace {

FinMetricSpace bit() { return FinMetricSpace({"0", "1"}, std::vector<Rational>{0, 1, 1, 0}); }

Measure correlated() {
  auto b = bit();
  return Measure(tensor(b, b), {R(1, 2), 0, 0, R(1, 2)});
}

}  // namespace

TEST_CASE("product") {
  auto x = ktest::pair_space(1);
  auto y = ktest::pair_space(1, "u", "v");
  auto p = Measure(x, {R(1, 2), R(1, 2)});
  auto q = Measure(y, {R(1, 2), R(1, 2)});
  CHECK(product(p, q) == Measure(tensor(x, y), {R(1, 4), R(1, 4), R(1, 4), R(1, 4)}));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(product(dirac(x, i), dirac(y, j)) == dirac(tensor(x, y), pair_index(y, i, j)));
    }
  }
  auto one = dirac(terminal(), 0);
  CHECK(pushforward(right_unitor(x), product(p, one)) == p);
}

TEST_CASE("marginals") {
  auto [first, second] = marginals(correlated());
  CHECK(first == Measure(bit(), {R(1, 2), R(1, 2)}));
  CHECK(second == Measure(bit(), {R(1, 2), R(1, 2)}));
  CHECK_THROWS_AS(marginals(Measure(bit(), {1, 0})), MismatchError);

  auto x = ktest::pair_space(2);
  auto y = ktest::pair_space(3, "u", "v");
  auto [dx, dy] = marginals(dirac(tensor(x, y), pair_index(y, 1, 0)));
  CHECK(dx == dirac(x, 1));
  CHECK(dy == dirac(y, 0));
}

TEST_CASE("correlated uniform law is not independent") {
  auto r = correlated();
  auto [rx, ry] = marginals(r);
  auto rebuilt = product(rx, ry);
  for (std::size_t k = 0; k < 4; ++k) CHECK(rebuilt(k) == R(1, 4));
  CHECK_FALSE(rebuilt == r);
  CHECK_FALSE(is_independent(r));
}

TEST_CASE("independence") {
  Rng rng(41);
  SizeBudget budget;
  for (int trial = 0; trial < 40; ++trial) {
    auto x = random_space(rng, budget, "x");
    auto y = random_space(rng, budget, "y");
    auto p = random_measure(rng, x, budget);
    auto q = random_measure(rng, y, budget);
    CHECK(is_independent(product(p, q)));

    // A deterministic first coordinate forces product form.
    const std::size_t fixed = rng.below(x.size());
    std::vector<Rational> w(x.size() * y.size());
    for (std::size_t j = 0; j < y.size(); ++j) w[pair_index(y, fixed, j)] = q(j);
    CHECK(is_independent(Measure(tensor(x, y), w)));
  }
}

TEST_CASE("n-ary products") {
  auto x = ktest::pair_space(1);
  auto p = Measure(x, {R(1, 3), R(2, 3)});
  std::vector<Measure> one{p};
  CHECK(product_n(one) == p);

  auto y = ktest::pair_space(2, "u", "v");
  auto z = ktest::pair_space(3, "s", "t");
  std::vector<Measure> diracs{dirac(x, 1), dirac(y, 0), dirac(z, 1)};
  auto triple = product_n(diracs);
  CHECK(triple == dirac(tensor(tensor(x, y), z), triple.support().front()));
  CHECK(triple.space().label(triple.support().front()) == "((b,u),t)");

  Rng rng(43);
  SizeBudget budget;
  std::vector<Measure> ms{random_measure(rng, x, budget), random_measure(rng, y, budget),
                          random_measure(rng, z, budget)};
  auto left = product_n(ms);
  auto right = product(ms[0], product(ms[1], ms[2]));
  CHECK(std::ranges::equal(left.weights(), right.weights()));
  auto margs = marginals_n(left, 3);
  REQUIRE(margs.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(margs[k] == ms[k]);
  CHECK(is_independent_family(left, 3));
}

TEST_CASE("strength") {
  auto x = ktest::pair_space(1);
  auto y = ktest::pair_space(2, "u", "v");
  auto q = Measure(y, {R(1, 4), R(3, 4)});
  auto s = strength(x, 1, q);
  auto [sx, sy] = marginals(s);
  CHECK(sx == dirac(x, 1));
  CHECK(sy == q);
  CHECK(strength(x, 0, dirac(y, 1)) == dirac(tensor(x, y), pair_index(y, 0, 1)));
  CHECK(pushforward(braiding(x, y), s) == product(q, dirac(x, 1)));
}

TEST_CASE("pushforward along a joint map") {
  // Addition on {0,1,2} truncated to {0,...,4}: numeric labels, Diracs go to the sum.
  auto digits = ktest::line_space({0, 1, 2});
  auto sums = ktest::line_space({0, 1, 2, 3, 4});
  std::vector<std::size_t> table(9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) table[pair_index(digits, i, j)] = i + j;
  }
  auto add = ShortMap(tensor(digits, digits), sums, table);
  CHECK(pushforward_joint(add, dirac(digits, 2), dirac(digits, 1)) == dirac(sums, 3));

  auto p = Measure(digits, {R(1, 2), R(1, 2), 0});
  CHECK(pushforward_joint(proj1(digits, digits), p, dirac(digits, 2)) == p);
  auto constant = ShortMap(tensor(digits, digits), sums, std::vector<std::size_t>(9, 4));
  CHECK(pushforward_joint(constant, p, p) == dirac(sums, 4));
}

TEST_CASE("convolution") {
  auto z3 = cyclic_group(3, {1, 1});
  auto uniform = Measure(z3.carrier(), {R(1, 3), R(1, 3), R(1, 3)});
  auto p = Measure(z3.carrier(), {R(1, 2), R(1, 2), 0});
  CHECK(convolve(uniform, uniform, z3) == uniform);
  CHECK(convolve(p, uniform, z3) == uniform);
  // Brute force over all 9 pairs.
  std::vector<Rational> expected(3);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) expected[(x + y) % 3] += p(x) * p(y);
  }
  CHECK(convolve(p, p, z3) == Measure(z3.carrier(), expected));
  auto e = dirac(z3.carrier(), z3.unit());
  CHECK(convolve(e, p, z3) == p);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      CHECK(convolve(dirac(z3.carrier(), x), dirac(z3.carrier(), y), z3) ==
            dirac(z3.carrier(), (x + y) % 3));
    }
  }
}

TEST_CASE("convolution inverts nothing but Diracs on Z/2") {
  // Only the monoid structure lifts: a non-Dirac law has no convolution inverse.
  auto z2 = cyclic_group(2, {1});
  const auto& c = z2.carrier();
  auto e = dirac(c, z2.unit());
  for (long a = 0; a <= 8; ++a) {
    auto p = Measure(c, {R(a, 8), R(8 - a, 8)});
    bool invertible = false;
    for (long b = 0; b <= 8; ++b) {
      if (convolve(p, Measure(c, {R(b, 8), R(8 - b, 8)}), z2) == e) invertible = true;
    }
    CHECK(invertible == (a == 0 || a == 8));
  }
}

TEST_CASE("monoid verification") {
  auto x = ktest::line_space({0, 1});
  // Right projection is associative but has no unit.
  auto right = ShortMap(tensor(x, x), x, {0, 1, 0, 1});
  CHECK_THROWS_AS(InternalMonoid(x, right, 0), InvariantViolation);
  Rng rng(47);
  for (int trial = 0; trial < 20; ++trial) CHECK_NOTHROW(random_monoid(rng, SizeBudget{}));
}

TEST_CASE("law product") {
  auto x = ktest::pair_space(1);
  auto y = ktest::pair_space(2, "u", "v");
  auto z = ktest::pair_space(3, "s", "t");
  Law a(Measure(x, {R(1, 3), R(2, 3)}));
  Law b(Measure(y, {R(1, 5), R(4, 5)}));
  Law c(Measure(z, {R(1, 2), R(1, 2)}));
  auto ab = law_product(a, b);
  auto [ma, mb] = marginals(ab.measure);
  CHECK(ma == a.measure);
  CHECK(mb == b.measure);
  auto one = Law(dirac(terminal(), 0));
  CHECK(pushforward(right_unitor(x), law_product(a, one).measure) == a.measure);
  auto left = law_product(law_product(a, b), c);
  auto right = law_product(a, law_product(b, c));
  CHECK(std::ranges::equal(left.measure.weights(), right.measure.weights()));
}

TEST_CASE("independent observables") {
  auto b = bit();
  auto s = Measure(b, {R(1, 2), R(1, 2)});
  auto id = identity(b);
  auto diag = independent_maps(s, id, id);
  CHECK_FALSE(diag.independent);
  CHECK(diag.joint == correlated());
  // (id, id) doubles distances under the sum metric.
  CHECK_FALSE(diag.tupling_short);
  CHECK(independent_maps(s, id, bang(b)).independent);
  CHECK(independent_maps(dirac(b, 1), id, id).independent);
}

TEST_CASE("nabla2 and delta2") {
  auto x = ktest::pair_space(1);
  auto y = ktest::pair_space(1, "u", "v");
  auto p = Measure(x, {R(1, 4), R(3, 4)});
  auto q = Measure(y, {R(1, 2), R(1, 2)});
  auto mu = NestedMeasure(x, {dirac(x, 0), p, dirac(x, 0)}, {R(1, 4), R(1, 2), R(1, 4)});
  auto nu = NestedMeasure(y, {q, dirac(y, 1)}, {R(1, 3), R(2, 3)});
  auto joint = nabla2(mu, nu);
  REQUIRE(joint.size() == 4);
  CHECK(joint.inner()[1] == product(dirac(x, 0), dirac(y, 1)));
  CHECK(joint.weights()[1] == R(1, 3));
  CHECK(expectation(joint) == product(expectation(mu), expectation(nu)));
  CHECK(nabla2(unit_nested(p), unit_nested(q)).same_distribution(unit_nested(product(p, q))));

  auto xy = tensor(x, y);
  auto r = Measure(xy, {R(1, 2), 0, 0, R(1, 2)});
  auto lam = NestedMeasure(xy, {r, product(p, q)}, {R(1, 2), R(1, 2)});
  auto [lx, ly] = delta2(lam);
  auto [ex, ey] = marginals(expectation(lam));
  CHECK(expectation(lx) == ex);
  CHECK(expectation(ly) == ey);
  auto [ux, uy] = delta2(unit_nested(r));
  CHECK(ux.same_distribution(unit_nested(Measure(x, {R(1, 2), R(1, 2)}))));
  CHECK(uy.same_distribution(unit_nested(Measure(y, {R(1, 2), R(1, 2)}))));
}
