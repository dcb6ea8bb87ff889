#include "kantorovich/laws.hpp"

#include <algorithm>
#include <sstream>

#include "kantorovich/errors.hpp"
#include "kantorovich/measure.hpp"
#include "kantorovich/monad.hpp"
#include "kantorovich/structure.hpp"
#include "kantorovich/transport.hpp"

namespace kantorovich {
namespace {

std::string show(const Measure& p) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < p.space().size(); ++i) {
    if (p(i) == 0) continue;
    if (!first) out += ", ";
    out += p.space().label(i) + ": " + to_string(p(i));
    first = false;
  }
  return out + "}";
}

/// Accumulates sub-checks of one instance.
class Verdict {
 public:
  void require(bool condition, std::string_view what) {
    if (!condition) fail(std::string(what));
  }

  void equal(const Measure& lhs, const Measure& rhs, std::string_view what) {
    if (lhs == rhs) return;
    if (!(lhs.space() == rhs.space())) {
      fail(std::string(what) + ": sides live on different spaces");
      return;
    }
    fail(std::string(what) + ": lhs " + show(lhs) + " != rhs " + show(rhs));
  }

  void equal(const Rational& lhs, const Rational& rhs, std::string_view what) {
    if (lhs != rhs) fail(std::string(what) + ": " + to_string(lhs) + " != " + to_string(rhs));
  }

  void at_most(const Rational& lhs, const Rational& rhs, std::string_view what) {
    if (lhs > rhs) fail(std::string(what) + ": " + to_string(lhs) + " > " + to_string(rhs));
  }

  CheckOutcome outcome() const {
    std::string text = diagnostics_;
    if (failed_ > kShown) text += "; and " + std::to_string(failed_ - kShown) + " more";
    return CheckOutcome{failed_ == 0, text};
  }

 private:
  static constexpr std::size_t kShown = 5;

  void fail(std::string message) {
    if (failed_++ >= kShown) return;
    if (!diagnostics_.empty()) diagnostics_ += "; ";
    diagnostics_ += message;
  }

  std::size_t failed_ = 0;
  std::string diagnostics_;
};

std::size_t small_size(Rng& rng, const SizeBudget& budget) {
  return rng.between(1, std::max<std::size_t>(1, budget.small_factor_points));
}

FinMetricSpace small_space(Rng& rng, const SizeBudget& budget, const std::string& prefix) {
  return random_space(rng, small_size(rng, budget), prefix);
}

ShortMap map_from(Rng& rng, const FinMetricSpace& domain, const SizeBudget& budget,
                  const std::string& prefix) {
  return random_short_map_from(rng, domain, rng.between(1, budget.max_points), prefix);
}

using Entry = LawCatalogEntry;

// ---------------------------------------------------------------------------
// Metric-level laws

Entry braiding_involution() {
  return {
      "braiding_involution",
      "braiding is an isometric involution, and braiding on X⊗1 followed by the left unitor is "
      "the right unitor",
      "spaces X, Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        DocumentWriter w;
        w.add_space("X", random_space(rng, b, "x"));
        w.add_space("Y", random_space(rng, b, "y"));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& y = ws.space("Y");
        Verdict v;
        auto beta = braiding(x, y);
        v.require(compose(beta, braiding(y, x)) == identity(tensor(x, y)), "braiding twice is id");
        const auto& xy = beta.domain();
        for (std::size_t i = 0; i < xy.size(); ++i) {
          for (std::size_t j = 0; j < xy.size(); ++j) {
            if (beta.codomain().distance(beta(i), beta(j)) != xy.distance(i, j)) {
              v.require(false, "braiding preserves " + xy.label(i) + "," + xy.label(j));
            }
          }
        }
        v.require(compose(braiding(x, terminal()), left_unitor(x)) == right_unitor(x),
                  "braiding on X⊗1 matches the unitors");
        return v.outcome();
      },
  };
}

Entry projection_natural() {
  return {
      "projection_natural",
      "proj1∘(f⊗g) = f∘proj1, proj2∘(f⊗g) = g∘proj2, proj1 = unitor∘(id⊗!), and projections "
      "of p⊗q recover p and q",
      "maps f: X→X', g: Y→Y'; measures p on X, q on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_map("f", map_from(rng, x, b, "u"));
        w.add_map("g", map_from(rng, y, b, "v"));
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& g = ws.map("g");
        const auto& x = f.domain();
        const auto& y = g.domain();
        Verdict v;
        auto fg = tensor_map(f, g);
        v.require(compose(fg, proj1(f.codomain(), g.codomain())) == compose(proj1(x, y), f),
                  "proj1 natural");
        v.require(compose(fg, proj2(f.codomain(), g.codomain())) == compose(proj2(x, y), g),
                  "proj2 natural");
        v.require(compose(tensor_map(identity(x), bang(y)), right_unitor(x)) == proj1(x, y),
                  "proj1 = unitor after id⊗!");
        auto pq = product(ws.measure("p"), ws.measure("q"));
        v.equal(pushforward(proj1(x, y), pq), ws.measure("p"), "proj1_*(p⊗q) = p");
        v.equal(pushforward(proj2(x, y), pq), ws.measure("q"), "proj2_*(p⊗q) = q");
        return v.outcome();
      },
  };
}

Entry short_map_composition() {
  return {
      "short_map_composition",
      "composites of short maps are short; identities are neutral",
      "maps f: X→Y, g: Y→Z",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto f = map_from(rng, x, b, "y");
        auto g = map_from(rng, f.codomain(), b, "z");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", f.codomain());
        w.add_space("Z", g.codomain());
        w.add_map("f", f);
        w.add_map("g", g);
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& g = ws.map("g");
        Verdict v;
        auto gf = compose(f, g);
        v.require(gf.domain() == f.domain() && gf.codomain() == g.codomain(), "composite typing");
        v.require(compose(identity(f.domain()), f) == f, "id then f");
        v.require(compose(f, identity(f.codomain())) == f, "f then id");
        v.require(compose(f, bang(f.codomain())) == bang(f.domain()), "! is terminal");
        return v.outcome();
      },
  };
}

Entry sum_functional_short() {
  return {
      "sum_functional_short",
      "(x,y) ↦ f(x)+g(y) is short on X⊗Y and integrates to ∫f dp + ∫g dq against p⊗q",
      "short functionals f on X, g on Y; measures p on X, q on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_functional("f", random_functional(rng, x));
        w.add_functional("g", random_functional(rng, y));
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.functional("f");
        const auto& g = ws.functional("g");
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        auto h = sum_functional(f, g);
        v.equal(integrate(h, product(p, q)), integrate(f, p) + integrate(g, q), "∫(f+g) d(p⊗q)");
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// Measures, pushforward, integration

Entry affine_terminal() {
  return {
      "affine_terminal",
      "P(1) ≅ 1: the terminal space carries exactly one measure, and !_*p is it",
      "space X; measure p on X; map f out of X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", random_measure(rng, x, b));
        w.add_map("f", map_from(rng, x, b, "y"));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& p = ws.measure("p");
        const auto& f = ws.map("f");
        Verdict v;
        auto one = terminal();
        auto unique = dirac(one, 0);
        v.equal(pushforward(bang(x), p), unique, "!_*p");
        v.equal(pushforward(bang(f.codomain()), pushforward(f, p)), unique, "!_* f_* p");
        v.equal(wasserstein_distance(unique, unique), Rational(0), "W1 on P(1)");
        v.equal(expectation(unit_nested(unique)), unique, "E on PP(1)");
        return v.outcome();
      },
  };
}

Entry dirac_natural() {
  return {
      "dirac_natural",
      "f_*δ_x = δ_{f(x)} and ∫g dδ_x = g(x) for every point x",
      "map f: X→Y; short functional g on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_map("f", map_from(rng, x, b, "y"));
        w.add_functional("g", random_functional(rng, x));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& g = ws.functional("g");
        const auto& x = f.domain();
        Verdict v;
        for (std::size_t i = 0; i < x.size(); ++i) {
          v.equal(pushforward(f, dirac(x, i)), dirac(f.codomain(), f(i)), "f_*δ at " + x.label(i));
          v.equal(integrate(g, dirac(x, i)), g(i), "∫g dδ at " + x.label(i));
        }
        return v.outcome();
      },
  };
}

Entry pushforward_functorial() {
  return {
      "pushforward_functorial",
      "(g∘f)_* = g_*∘f_* and id_* = id",
      "maps f: X→Y, g: Y→Z; measure p on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto f = map_from(rng, x, b, "y");
        auto g = map_from(rng, f.codomain(), b, "z");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", f.codomain());
        w.add_map("f", f);
        w.add_map("g", g);
        w.add_measure("p", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& g = ws.map("g");
        const auto& p = ws.measure("p");
        Verdict v;
        v.equal(pushforward(compose(f, g), p), pushforward(g, pushforward(f, p)), "(g∘f)_*p");
        v.equal(pushforward(identity(p.space()), p), p, "id_*p");
        return v.outcome();
      },
  };
}

Entry partial_integral_short() {
  return {
      "partial_integral_short",
      "y ↦ ∫f(x,y) dp(x) is short, and integrating it against q gives ∫f d(p⊗q)",
      "short functional f on X⊗Y; measures p on X, q on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_space("XY", tensor(x, y));
        w.add_functional("f", random_functional(rng, tensor(x, y)));
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.functional("f");
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        auto slice = partial_integral(f, p);
        v.equal(integrate(slice, q), integrate(f, product(p, q)), "Fubini");
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// Transport

Entry kantorovich_duality() {
  return {
      "kantorovich_duality",
      "primal optimal cost = ∫f dp − ∫f dq for the returned short witness f; the coupling has "
      "marginals p and q",
      "measures p, q on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        const auto& x = p.space();
        Verdict v;
        auto result = wasserstein(p, q);
        Rational cost = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          Rational row = 0;
          Rational col = 0;
          for (std::size_t j = 0; j < x.size(); ++j) {
            v.require(result.plan.at(i, j) >= 0, "coupling nonnegative");
            row += result.plan.at(i, j);
            col += result.plan.at(j, i);
            cost += result.plan.at(i, j) * x.distance(i, j);
          }
          v.equal(row, p(i), "row sum at " + x.label(i));
          v.equal(col, q(i), "column sum at " + x.label(i));
        }
        v.equal(cost, result.value, "coupling cost");
        const auto values = result.witness.potential.values();
        ShortFunctional witness(x, std::vector<Rational>(values.begin(), values.end()));
        v.equal(integrate(witness, p) - integrate(witness, q), result.value, "dual value");
        v.equal(witness(0), Rational(0), "witness normalization");
        return v.outcome();
      },
  };
}

Entry oracle_equivalence() {
  return {
      "oracle_equivalence",
      "network simplex W1 = minimum over all basic feasible transport plans",
      "measures p, q on X with at most 4 support points each",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", random_measure_with_support(rng, x, 4, b));
        w.add_measure("q", random_measure_with_support(rng, x, 4, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        v.equal(wasserstein_distance(p, q), wasserstein_oracle(p, q), "simplex vs oracle");
        return v.outcome();
      },
  };
}

Entry wasserstein_metric() {
  return {
      "wasserstein_metric",
      "W1 is symmetric, satisfies the triangle inequality, and vanishes exactly on the diagonal",
      "measures p, q, s on X (q = p in some cases)",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto p = random_measure(rng, x, b);
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", p);
        w.add_measure("q", rng.chance(1, 5) ? p : random_measure(rng, x, b));
        w.add_measure("s", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        const auto& s = ws.measure("s");
        Verdict v;
        auto pq = wasserstein_distance(p, q);
        v.equal(pq, wasserstein_distance(q, p), "symmetry");
        v.at_most(wasserstein_distance(p, s), pq + wasserstein_distance(q, s), "triangle");
        v.equal(wasserstein_distance(p, p), Rational(0), "W1(p,p)");
        v.require((pq == 0) == (p == q), "W1(p,q) = 0 iff p = q");
        return v.outcome();
      },
  };
}

Entry pushforward_contraction() {
  return {
      "pushforward_contraction",
      "W1(f_*p, f_*q) ≤ W1(p, q) for short f",
      "map f: X→Y; measures p, q on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_map("f", map_from(rng, x, b, "y"));
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        v.at_most(wasserstein_distance(pushforward(f, p), pushforward(f, q)),
                  wasserstein_distance(p, q), "contraction");
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// Monad

Entry monad_left_unit() {
  return {
      "monad_left_unit",
      "E∘δ_P = id: E(δ_p) = p",
      "measure p on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        Verdict v;
        auto report = monad_law_check(p.space(), MonadSample{{p}, {}});
        v.require(report.passed(), "monad_law_check");
        v.equal(expectation(unit_nested(p)), p, "E(δ_p)");
        v.equal(expectation(NestedMeasure(p.space(), {p, p}, {make_rational(1, 3), make_rational(2, 3)})),
                p, "E of a mixture of copies of p");
        return v.outcome();
      },
  };
}

Entry monad_right_unit() {
  return {
      "monad_right_unit",
      "E∘Pδ = id: E(Σ p(x) δ_{δ_x}) = p",
      "measure p on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        Verdict v;
        v.equal(expectation(dirac_nested(p)), p, "E(Pδ(p))");
        return v.outcome();
      },
  };
}

Entry monad_associativity() {
  return {
      "monad_associativity",
      "E∘PE = E∘E on PPPX",
      "doubly nested measure on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_doubly_nested("mu", random_doubly_nested(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& mu = ws.doubly_nested("mu");
        Verdict v;
        v.equal(expectation(map_expectation(mu)), expectation(flatten(mu)), "E∘PE vs E∘E");
        auto report = monad_law_check(mu.base(), MonadSample{{}, {mu}});
        v.require(report.passed(), "monad_law_check");
        return v.outcome();
      },
  };
}

Entry expectation_natural() {
  return {
      "expectation_natural",
      "E∘PPf = Pf∘E",
      "map f: X→Y; nested measure μ on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_map("f", map_from(rng, x, b, "y"));
        w.add_nested("mu", random_nested(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& mu = ws.nested("mu");
        Verdict v;
        v.equal(expectation(pushforward_nested(f, mu)), pushforward(f, expectation(mu)),
                "E(PPf μ) vs f_* Eμ");
        return v.outcome();
      },
  };
}

Entry expectation_short() {
  return {
      "expectation_short",
      "W1(Eμ, Eν) ≤ W1_PPX(μ, ν)",
      "nested measures μ, ν on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_nested("mu", random_nested(rng, x, b));
        w.add_nested("nu", random_nested(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& mu = ws.nested("mu");
        const auto& nu = ws.nested("nu");
        Verdict v;
        v.at_most(wasserstein_distance(expectation(mu), expectation(nu)), nested_wasserstein(mu, nu),
                  "E short");
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// Monoidal structure ∇

Entry delta_nabla_id() {
  return {
      "delta_nabla_id",
      "Δ∘∇ = id: marginals(p⊗q) = (p, q)",
      "measures p on X, q on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        auto [first, second] = marginals(product(p, q));
        v.equal(first, p, "first marginal");
        v.equal(second, q, "second marginal");
        auto laws = marginals(law_product(Law(p), Law(q)).measure);
        v.equal(laws.first, p, "law product first marginal");
        v.equal(laws.second, q, "law product second marginal");
        return v.outcome();
      },
  };
}

Entry nabla_delta_not_inverse() {
  return {
      "nabla_delta_not_inverse",
      "∇∘Δ ≠ id: some joint differs from the product of its marginals (case 0 is ½δ_(0,0) + ½δ_(1,1) on "
      "{0,1}⊗{0,1} with d(0,1) = 1)",
      "joint measure r on X⊗Y",
      Expectation::Counterexample,
      [](Rng& rng, const SizeBudget& b, std::size_t case_index) {
        DocumentWriter w;
        if (case_index == 0) {
          FinMetricSpace bit({"0", "1"}, std::vector<Rational>{0, 1, 1, 0});
          w.add_space("X", bit);
          w.add_space("Y", bit);
          auto xy = tensor(bit, bit);
          w.add_measure("r", Measure(xy, {make_rational(1, 2), 0, 0, make_rational(1, 2)}));
          return w.document();
        }
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("r", random_measure(rng, tensor(x, y), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& r = ws.measure("r");
        Verdict v;
        auto [rx, ry] = marginals(r);
        v.equal(product(rx, ry), r, "∇Δr vs r");
        v.require(is_independent(r) == (product(rx, ry) == r), "is_independent agrees");
        return v.outcome();
      },
  };
}

Entry nabla_isometric() {
  return {
      "nabla_isometric",
      "W1(p⊗q, p'⊗q') = W1(p, p') + W1(q, q')",
      "measures p, p' on X and q, q' on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("p2", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        w.add_measure("q2", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& p2 = ws.measure("p2");
        const auto& q = ws.measure("q");
        const auto& q2 = ws.measure("q2");
        Verdict v;
        v.equal(wasserstein_distance(product(p, q), product(p2, q2)),
                wasserstein_distance(p, p2) + wasserstein_distance(q, q2), "isometry");
        return v.outcome();
      },
  };
}

Entry nabla_natural() {
  return {
      "nabla_natural",
      "f_*p ⊗ g_*q = (f⊗g)_*(p⊗q)",
      "maps f: X→X', g: Y→Y'; measures p on X, q on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_map("f", map_from(rng, x, b, "u"));
        w.add_map("g", map_from(rng, y, b, "v"));
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& g = ws.map("g");
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        v.equal(product(pushforward(f, p), pushforward(g, q)),
                pushforward(tensor_map(f, g), product(p, q)), "naturality");
        return v.outcome();
      },
  };
}

Entry nabla_symmetric() {
  return {
      "nabla_symmetric",
      "braiding_*(p⊗q) = q⊗p",
      "measures p on X, q on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        v.equal(pushforward(braiding(p.space(), q.space()), product(p, q)), product(q, p), "symmetry");
        return v.outcome();
      },
  };
}

Entry nabla_unital() {
  return {
      "nabla_unital",
      "unitors carry p⊗δ_* and δ_*⊗p to p",
      "measure p on X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("p", random_measure(rng, x, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& x = p.space();
        auto one = dirac(terminal(), 0);
        Verdict v;
        v.equal(pushforward(right_unitor(x), product(p, one)), p, "right unitality");
        v.equal(pushforward(left_unitor(x), product(one, p)), p, "left unitality");
        return v.outcome();
      },
  };
}

Entry nabla_associative() {
  return {
      "nabla_associative",
      "associator_*((p⊗q)⊗s) = p⊗(q⊗s)",
      "measures p on X, q on Y, s on Z (small factors)",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = small_space(rng, b, "x");
        auto y = small_space(rng, b, "y");
        auto z = small_space(rng, b, "z");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_space("Z", z);
        w.add_measure("p", random_measure(rng, x, b));
        w.add_measure("q", random_measure(rng, y, b));
        w.add_measure("s", random_measure(rng, z, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        const auto& s = ws.measure("s");
        Verdict v;
        auto alpha = associator(p.space(), q.space(), s.space());
        v.equal(pushforward(alpha, product(product(p, q), s)), product(p, product(q, s)),
                "associativity");
        return v.outcome();
      },
  };
}

Entry nary_independence() {
  return {
      "nary_independence",
      "n-ary ∇ is independent of bracketing, Δ_n∘∇_n = id, and product families are independent",
      "1 to 4 measures on small spaces",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        const std::size_t n = rng.between(1, 4);
        DocumentWriter w;
        for (std::size_t k = 0; k < n; ++k) {
          auto x = small_space(rng, b, "x" + std::to_string(k) + "_");
          w.add_space("X" + std::to_string(k), x);
          w.add_measure("p" + std::to_string(k), random_measure(rng, x, b));
        }
        w.set_params(json{{"arity", n}});
        return w.document();
      },
      [](const Workspace& ws) {
        const std::size_t n = ws.params().at("arity").get<std::size_t>();
        std::vector<Measure> ps;
        for (std::size_t k = 0; k < n; ++k) ps.push_back(ws.measure("p" + std::to_string(k)));
        Verdict v;
        auto left = product_n(ps);
        Measure right = ps.back();
        for (std::size_t k = n - 1; k-- > 0;) right = product(ps[k], right);
        v.require(std::ranges::equal(left.weights(), right.weights()),
                  "left- and right-nested products have equal weight tables");
        if (n == 3) {
          auto alpha = associator(ps[0].space(), ps[1].space(), ps[2].space());
          v.equal(pushforward(alpha, left), right, "associator carries left to right nesting");
        }
        auto margs = marginals_n(left, n);
        v.require(margs.size() == n, "marginal count");
        for (std::size_t k = 0; k < std::min(n, margs.size()); ++k) {
          v.equal(margs[k], ps[k], "marginal " + std::to_string(k));
        }
        v.require(is_independent_family(left, n), "product family independent");
        return v.outcome();
      },
  };
}

Entry strength_law() {
  return {
      "strength",
      "strength(x, q) = δ_x ⊗ q has marginals (δ_x, q) and braids to q ⊗ δ_x",
      "space X; measure q on Y; every point x of X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("q", random_measure(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& q = ws.measure("q");
        Verdict v;
        for (std::size_t i = 0; i < x.size(); ++i) {
          auto s = strength(x, i, q);
          auto [first, second] = marginals(s);
          v.equal(first, dirac(x, i), "first marginal at " + x.label(i));
          v.equal(second, q, "second marginal at " + x.label(i));
          v.equal(pushforward(braiding(x, q.space()), s), product(q, dirac(x, i)),
                  "braided strength at " + x.label(i));
        }
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// Opmonoidal structure Δ

Entry delta_natural() {
  return {
      "delta_natural",
      "marginals((f⊗g)_*r) = (f_*r_X, g_*r_Y)",
      "maps f: X→X', g: Y→Y'; joint r on X⊗Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_map("f", map_from(rng, x, b, "u"));
        w.add_map("g", map_from(rng, y, b, "v"));
        w.add_measure("r", random_measure(rng, tensor(x, y), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& f = ws.map("f");
        const auto& g = ws.map("g");
        const auto& r = ws.measure("r");
        Verdict v;
        auto [rx, ry] = marginals(r);
        auto [sx, sy] = marginals(pushforward(tensor_map(f, g), r));
        v.equal(sx, pushforward(f, rx), "first marginal");
        v.equal(sy, pushforward(g, ry), "second marginal");
        return v.outcome();
      },
  };
}

Entry delta_short() {
  return {
      "delta_short",
      "W1(r_X, r'_X) + W1(r_Y, r'_Y) ≤ W1(r, r')",
      "joints r, r' on X⊗Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("r", random_measure(rng, tensor(x, y), b));
        w.add_measure("r2", random_measure(rng, tensor(x, y), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& r = ws.measure("r");
        const auto& r2 = ws.measure("r2");
        Verdict v;
        auto [rx, ry] = marginals(r);
        auto [sx, sy] = marginals(r2);
        v.at_most(wasserstein_distance(rx, sx) + wasserstein_distance(ry, sy),
                  wasserstein_distance(r, r2), "Δ short");
        return v.outcome();
      },
  };
}

Entry delta_symmetric() {
  return {
      "delta_symmetric",
      "marginals(braiding_* r) = (r_Y, r_X)",
      "joint r on X⊗Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_measure("r", random_measure(rng, tensor(x, y), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& r = ws.measure("r");
        const auto& xy = r.space();
        Verdict v;
        auto [rx, ry] = marginals(r);
        auto [sy, sx] = marginals(pushforward(braiding(xy.left_factor(), xy.right_factor()), r));
        v.equal(sy, ry, "first marginal of the braided joint");
        v.equal(sx, rx, "second marginal of the braided joint");
        return v.outcome();
      },
  };
}

Entry delta_counital() {
  return {
      "delta_counital",
      "for r on X⊗1 (resp. 1⊗X) the X-marginal is the unitor image of r",
      "joints on X⊗1 and 1⊗X",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_measure("r", random_measure(rng, tensor(x, terminal()), b));
        w.add_measure("l", random_measure(rng, tensor(terminal(), x), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& r = ws.measure("r");
        const auto& l = ws.measure("l");
        auto one = dirac(terminal(), 0);
        Verdict v;
        auto [rx, r1] = marginals(r);
        v.equal(rx, pushforward(right_unitor(x), r), "right counitality");
        v.equal(r1, one, "terminal marginal");
        auto [l1, lx] = marginals(l);
        v.equal(lx, pushforward(left_unitor(x), l), "left counitality");
        v.equal(l1, one, "terminal marginal");
        return v.outcome();
      },
  };
}

Entry delta_coassociative() {
  return {
      "delta_coassociative",
      "taking marginals of (X⊗Y)⊗Z in either bracketing yields the same three marginals",
      "joint r on (X⊗Y)⊗Z (small factors)",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = small_space(rng, b, "x");
        auto y = small_space(rng, b, "y");
        auto z = small_space(rng, b, "z");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_space("Z", z);
        w.add_measure("r", random_measure(rng, tensor(tensor(x, y), z), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& y = ws.space("Y");
        const auto& z = ws.space("Z");
        const auto& r = ws.measure("r");
        Verdict v;
        auto [rxy, rz] = marginals(r);
        auto [rx, ry] = marginals(rxy);
        auto [sx, syz] = marginals(pushforward(associator(x, y, z), r));
        auto [sy, sz] = marginals(syz);
        v.equal(rx, sx, "X marginal");
        v.equal(ry, sy, "Y marginal");
        v.equal(rz, sz, "Z marginal");
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// δ and E against ∇ and Δ

Entry dirac_monoidal() {
  return {
      "dirac_monoidal",
      "δ_x ⊗ δ_y = δ_(x,y) for all x, y",
      "spaces X, Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        DocumentWriter w;
        w.add_space("X", random_space(rng, b, "x"));
        w.add_space("Y", random_space(rng, b, "y"));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& y = ws.space("Y");
        auto xy = tensor(x, y);
        Verdict v;
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (std::size_t j = 0; j < y.size(); ++j) {
            v.equal(product(dirac(x, i), dirac(y, j)), dirac(xy, pair_index(y, i, j)),
                    "δ⊗δ at " + xy.label(pair_index(y, i, j)));
          }
        }
        return v.outcome();
      },
  };
}

Entry dirac_opmonoidal() {
  return {
      "dirac_opmonoidal",
      "marginals(δ_(x,y)) = (δ_x, δ_y) for all x, y",
      "spaces X, Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        DocumentWriter w;
        w.add_space("X", random_space(rng, b, "x"));
        w.add_space("Y", random_space(rng, b, "y"));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& x = ws.space("X");
        const auto& y = ws.space("Y");
        auto xy = tensor(x, y);
        Verdict v;
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (std::size_t j = 0; j < y.size(); ++j) {
            auto [first, second] = marginals(dirac(xy, pair_index(y, i, j)));
            v.equal(first, dirac(x, i), "first marginal at " + xy.label(pair_index(y, i, j)));
            v.equal(second, dirac(y, j), "second marginal at " + xy.label(pair_index(y, i, j)));
          }
        }
        return v.outcome();
      },
  };
}

Entry expectation_monoidal() {
  return {
      "expectation_monoidal",
      "E∘∇² = ∇∘(E⊗E) with ∇² = (∇_{X,Y})_*∘∇_{PX,PY}; ∇²(δδ) = δ∇",
      "nested measures μ on X, ν on Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_nested("mu", random_nested(rng, x, b));
        w.add_nested("nu", random_nested(rng, y, b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& mu = ws.nested("mu");
        const auto& nu = ws.nested("nu");
        Verdict v;
        v.equal(expectation(nabla2(mu, nu)), product(expectation(mu), expectation(nu)),
                "E∇²(μ,ν) vs ∇(Eμ,Eν)");
        const auto& p = mu.inner()[0];
        const auto& q = nu.inner()[0];
        v.require(nabla2(unit_nested(p), unit_nested(q)).same_distribution(unit_nested(product(p, q))),
                  "∇²(δ_p, δ_q) = δ_(p⊗q)");
        return v.outcome();
      },
  };
}

Entry expectation_opmonoidal() {
  return {
      "expectation_opmonoidal",
      "Δ∘E = (E⊗E)∘Δ² with Δ² = Δ_{PX,PY}∘(Δ_{X,Y})_*; Δ²(δ_r) = (δ_{r_X}, δ_{r_Y})",
      "nested measure μ on X⊗Y",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto x = random_space(rng, b, "x");
        auto y = random_space(rng, b, "y");
        DocumentWriter w;
        w.add_space("X", x);
        w.add_space("Y", y);
        w.add_space("XY", tensor(x, y));
        w.add_nested("mu", random_nested(rng, tensor(x, y), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& mu = ws.nested("mu");
        Verdict v;
        auto [ex, ey] = marginals(expectation(mu));
        auto [mx, my] = delta2(mu);
        v.equal(expectation(mx), ex, "first component");
        v.equal(expectation(my), ey, "second component");
        const auto& r = mu.inner()[0];
        auto [rx, ry] = marginals(r);
        auto [ux, uy] = delta2(unit_nested(r));
        v.require(ux.same_distribution(unit_nested(rx)), "Δ²(δ_r) first");
        v.require(uy.same_distribution(unit_nested(ry)), "Δ²(δ_r) second");
        return v.outcome();
      },
  };
}

Entry bimonoidality_square() {
  return {
      "bimonoidality_square",
      "Δ_{W⊗Y,X⊗Z}∘swap_*∘∇ (p, q) = (p_W⊗q_Y, p_X⊗q_Z)",
      "joints p on W⊗X, q on Y⊗Z (small factors)",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto sw = small_space(rng, b, "w");
        auto sx = small_space(rng, b, "x");
        auto sy = small_space(rng, b, "y");
        auto sz = small_space(rng, b, "z");
        DocumentWriter w;
        w.add_space("W", sw);
        w.add_space("X", sx);
        w.add_space("Y", sy);
        w.add_space("Z", sz);
        w.add_measure("p", random_measure(rng, tensor(sw, sx), b));
        w.add_measure("q", random_measure(rng, tensor(sy, sz), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        Verdict v;
        auto swap = middle_swap(ws.space("W"), ws.space("X"), ws.space("Y"), ws.space("Z"));
        auto [wy, xz] = marginals(pushforward(swap, product(p, q)));
        auto [pw, px] = marginals(p);
        auto [qy, qz] = marginals(q);
        v.equal(wy, product(pw, qy), "W⊗Y component");
        v.equal(xz, product(px, qz), "X⊗Z component");
        return v.outcome();
      },
  };
}

Entry decomposition_independence() {
  return {
      "decomposition_independence",
      "in r⊗s on W⊗X⊗Y⊗Z, W is independent of Y and X is independent of Z",
      "joints r on W⊗X, s on Y⊗Z (small factors)",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto sw = small_space(rng, b, "w");
        auto sx = small_space(rng, b, "x");
        auto sy = small_space(rng, b, "y");
        auto sz = small_space(rng, b, "z");
        DocumentWriter w;
        w.add_space("W", sw);
        w.add_space("X", sx);
        w.add_space("Y", sy);
        w.add_space("Z", sz);
        w.add_measure("r", random_measure(rng, tensor(sw, sx), b));
        w.add_measure("s", random_measure(rng, tensor(sy, sz), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& r = ws.measure("r");
        const auto& s = ws.measure("s");
        Verdict v;
        auto swap = middle_swap(ws.space("W"), ws.space("X"), ws.space("Y"), ws.space("Z"));
        auto joint = law_product(Law(r), Law(s));
        auto [wy, xz] = marginals(pushforward(swap, joint.measure));
        v.require(is_independent(wy), "W and Y independent");
        v.require(is_independent(xz), "X and Z independent");
        return v.outcome();
      },
  };
}

Entry observable_independence() {
  return {
      "observable_independence",
      "independence of observables f1, f2 under s agrees with independence of P(f1,f2)s; the "
      "tupling projects back to f1, f2; deterministic laws make everything independent",
      "joint s on B1⊗B2; maps f1: A→B1, f2: A→B2 with a law t on A",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto b1 = small_space(rng, b, "b");
        auto b2 = small_space(rng, b, "c");
        auto a = random_space(rng, b, "a");
        DocumentWriter w;
        w.add_space("B1", b1);
        w.add_space("B2", b2);
        w.add_space("A", a);
        w.add_measure("s", random_measure(rng, tensor(b1, b2), b));
        w.add_measure("t", random_measure(rng, a, b));
        w.add_map("f1", map_from(rng, a, b, "u"));
        w.add_map("f2", map_from(rng, a, b, "v"));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& b1 = ws.space("B1");
        const auto& b2 = ws.space("B2");
        const auto& s = ws.measure("s");
        const auto& t = ws.measure("t");
        const auto& f1 = ws.map("f1");
        const auto& f2 = ws.map("f2");
        Verdict v;
        auto on_product = independent_maps(s, proj1(b1, b2), proj2(b1, b2));
        v.equal(on_product.joint, s, "tupling of the projections is the identity");
        v.require(on_product.tupling_short, "tupling of the projections is short");
        v.require(on_product.independent == is_independent(s), "agrees with is_independent");

        auto general = independent_maps(t, f1, f2);
        auto image1 = pushforward(f1, t);
        auto image2 = pushforward(f2, t);
        auto [m1, m2] = marginals(general.joint);
        v.equal(m1, image1, "π1 of the tupled law");
        v.equal(m2, image2, "π2 of the tupled law");
        v.require(general.independent == (general.joint == product(image1, image2)),
                  "independence means product of the images");
        for (std::size_t i = 0; i < t.space().size(); ++i) {
          v.require(independent_maps(dirac(t.space(), i), f1, f2).independent,
                    "deterministic law at " + t.space().label(i));
        }
        v.require(independent_maps(t, f1, bang(t.space())).independent, "trivial observable");
        return v.outcome();
      },
  };
}

// ---------------------------------------------------------------------------
// Convolution

Entry convolution_monoid() {
  return {
      "convolution_monoid",
      "convolution is associative with unit δ_e",
      "internal monoid M; measures p, q, s on M",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto m = random_monoid(rng, b);
        DocumentWriter w;
        w.add_space("M", m.carrier());
        w.add_monoid("m", m);
        w.add_measure("p", random_measure(rng, m.carrier(), b));
        w.add_measure("q", random_measure(rng, m.carrier(), b));
        w.add_measure("s", random_measure(rng, m.carrier(), b));
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& m = ws.monoid("m");
        const auto& p = ws.measure("p");
        const auto& q = ws.measure("q");
        const auto& s = ws.measure("s");
        auto e = dirac(m.carrier(), m.unit());
        Verdict v;
        v.equal(convolve(convolve(p, q, m), s, m), convolve(p, convolve(q, s, m), m), "associativity");
        v.equal(convolve(e, p, m), p, "left unit");
        v.equal(convolve(p, e, m), p, "right unit");
        v.equal(convolve(p, q, m), pushforward_joint(m.mult(), p, q), "pushforward of the joint");
        return v.outcome();
      },
  };
}

Entry convolution_dirac() {
  return {
      "convolution_dirac",
      "δ_x ∗ δ_y = δ_{m(x,y)} for all x, y",
      "internal monoid M",
      Expectation::Holds,
      [](Rng& rng, const SizeBudget& b, std::size_t) {
        auto m = random_monoid(rng, b);
        DocumentWriter w;
        w.add_space("M", m.carrier());
        w.add_monoid("m", m);
        return w.document();
      },
      [](const Workspace& ws) {
        const auto& m = ws.monoid("m");
        const auto& c = m.carrier();
        Verdict v;
        for (std::size_t x = 0; x < c.size(); ++x) {
          for (std::size_t y = 0; y < c.size(); ++y) {
            v.equal(convolve(dirac(c, x), dirac(c, y), m), dirac(c, m(x, y)),
                    "δ" + c.label(x) + " ∗ δ" + c.label(y));
          }
        }
        return v.outcome();
      },
  };
}

std::vector<Entry> build_catalog() {
  std::vector<Entry> catalog{
      affine_terminal(),         bimonoidality_square(),   braiding_involution(),
      convolution_dirac(),       convolution_monoid(),     decomposition_independence(),
      delta_coassociative(),     delta_counital(),         delta_nabla_id(),
      delta_natural(),           delta_short(),            delta_symmetric(),
      dirac_monoidal(),          dirac_natural(),          dirac_opmonoidal(),
      expectation_monoidal(),    expectation_natural(),    expectation_opmonoidal(),
      expectation_short(),       observable_independence(),     kantorovich_duality(),
      monad_associativity(),     monad_left_unit(),        monad_right_unit(),
      nabla_associative(),       nabla_delta_not_inverse(), nabla_isometric(),
      nabla_natural(),           nabla_symmetric(),        nabla_unital(),
      nary_independence(),       oracle_equivalence(),     partial_integral_short(),
      projection_natural(),      pushforward_contraction(), pushforward_functorial(),
      short_map_composition(),   strength_law(),           sum_functional_short(),
      wasserstein_metric(),
  };
  std::sort(catalog.begin(), catalog.end(),
            [](const Entry& a, const Entry& b) { return a.id < b.id; });
  return catalog;
}

CheckOutcome evaluate(const LawCatalogEntry& law, const Workspace& ws) {
  try {
    return law.check(ws);
  } catch (const Error& e) {
    return CheckOutcome{false, std::string("exception: ") + e.what()};
  } catch (const json::exception& e) {
    return CheckOutcome{false, std::string("instance error: ") + e.what()};
  }
}

json budget_json(const SizeBudget& b) {
  return json{{"min_points", b.min_points},
              {"max_points", b.max_points},
              {"max_denominator", b.max_denominator},
              {"nested_inner", b.nested_inner},
              {"small_factor_points", b.small_factor_points}};
}

}  // namespace

const std::vector<LawCatalogEntry>& law_catalog() {
  static const std::vector<LawCatalogEntry> catalog = build_catalog();
  return catalog;
}

const LawCatalogEntry* find_law(std::string_view id) {
  for (const auto& law : law_catalog()) {
    if (law.id == id) return &law;
  }
  return nullptr;
}

std::string LawResult::status() const {
  if (failures != 0) return "fail";
  return expectation == Expectation::Counterexample ? "expected-counterexample found" : "pass";
}

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.ok(); });
}

LawResult run_law(const LawCatalogEntry& law, std::uint64_t seed, std::size_t cases,
                  const SizeBudget& budget) {
  LawResult result;
  result.id = law.id;
  result.statement = law.statement;
  result.expectation = law.expectation;
  const std::uint64_t base = law_seed(seed, law.id);
  for (std::size_t k = 0; k < cases; ++k) {
    Rng rng(mix64(base + k));
    json instance;
    CheckOutcome outcome;
    try {
      instance = law.generate(rng, budget, k);
      outcome = evaluate(law, Workspace::from_json(instance));
    } catch (const Error& e) {
      outcome = CheckOutcome{false, std::string("generation failed: ") + e.what()};
    }
    ++result.cases_run;
    if (!outcome.holds) {
      ++result.counterexamples;
      if (!result.first_counterexample) {
        result.first_counterexample = Counterexample{k, instance, outcome.diagnostics};
      }
    }
  }
  if (law.expectation == Expectation::Holds) {
    result.failures = result.counterexamples;
  } else {
    result.failures = result.counterexamples == 0 ? 1 : 0;
  }
  return result;
}

LawReport run_suite(std::uint64_t seed, std::size_t cases, const SizeBudget& budget,
                    const std::vector<std::string>& only) {
  for (const auto& id : only) {
    if (!find_law(id)) throw ParseError("unknown law '" + id + "'");
  }
  LawReport report{seed, cases, budget, {}};
  for (const auto& law : law_catalog()) {
    if (!only.empty() && std::find(only.begin(), only.end(), law.id) == only.end()) continue;
    report.laws.push_back(run_law(law, seed, cases, budget));
  }
  return report;
}

CheckOutcome check_law(std::string_view id, const json& instance) {
  const auto* law = find_law(id);
  if (!law) throw ParseError("unknown law '" + std::string(id) + "'");
  return evaluate(*law, Workspace::from_json(instance));
}

json to_json(const LawReport& report) {
  json laws = json::array();
  for (const auto& r : report.laws) {
    json entry{{"id", r.id},
               {"statement", r.statement},
               {"expectation", r.expectation == Expectation::Holds ? "holds" : "counterexample"},
               {"cases_run", r.cases_run},
               {"failures", r.failures},
               {"counterexamples", r.counterexamples},
               {"status", r.status()},
               {"first_counterexample", nullptr}};
    if (r.first_counterexample) {
      entry["first_counterexample"] = json{{"case", r.first_counterexample->case_index},
                                           {"instance", r.first_counterexample->instance},
                                           {"diagnostics", r.first_counterexample->diagnostics}};
    }
    laws.push_back(std::move(entry));
  }
  return json{{"schema_version", 1},
              {"seed", report.seed},
              {"cases", report.cases},
              {"budget", budget_json(report.budget)},
              {"laws", std::move(laws)},
              {"all_passed", report.all_passed()}};
}

}  // namespace kantorovich
