"""Exact Wasserstein-1 transport and the Kantorovich monad on finite metric spaces.

Rational inputs may be Fractions, ints or "p/q" strings; rational outputs are
Fractions.
"""

import json
from fractions import Fraction

from . import _kantorovich as _k
from ._kantorovich import (
    Error,
    FinMetricSpace,
    InternalMonoid,
    InvariantViolation,
    Measure,
    MismatchError,
    NestedMeasure,
    ParseError,
    ShortFunctional,
    ShortMap,
    TooLargeError,
    bang,
    braiding,
    compose,
    convolve,
    delta2,
    dirac,
    expectation,
    identity,
    independent_maps,
    is_independent,
    law_ids,
    marginals,
    nabla2,
    product,
    proj1,
    proj2,
    pushforward,
    strength,
    tensor,
    tensor_map,
    terminal,
    unit_nested,
    verified_solve_count,
)

__all__ = [
    "Error", "FinMetricSpace", "InternalMonoid", "InvariantViolation", "Measure",
    "MismatchError", "NestedMeasure", "ParseError", "ShortFunctional", "ShortMap",
    "TooLargeError", "bang", "braiding", "check_law", "compose", "convolve", "delta2",
    "dirac", "distance", "expectation", "identity", "independent_maps", "integrate",
    "is_independent", "law_ids", "load_workspace", "make_measure", "make_space",
    "marginals", "nabla2", "nested_wasserstein", "product", "proj1", "proj2",
    "pushforward", "run_laws", "strength", "tensor", "tensor_map", "terminal",
    "unit_nested", "verified_solve_count", "wasserstein", "wasserstein_oracle", "weights",
]


def _text(value):
    if isinstance(value, float):
        raise TypeError("floating-point values are not accepted; use Fraction or 'p/q'")
    return str(Fraction(value))


def make_space(labels, dist):
    return FinMetricSpace(list(labels), [[_text(d) for d in row] for row in dist])


def make_measure(space, weights):
    return Measure(space, [_text(w) for w in weights])


def weights(measure):
    return [Fraction(w) for w in measure.weights]


def integrate(f, p):
    return Fraction(_k.integrate(f, p))


def wasserstein(p, q):
    """W1 with an optimal coupling (rows: p, columns: q) and a short witness."""
    raw = _k.wasserstein(p, q)
    return {
        "value": Fraction(raw["value"]),
        "coupling": [[Fraction(c) for c in row] for row in raw["coupling"]],
        "witness": [Fraction(v) for v in raw["witness"]],
    }


def distance(p, q):
    return Fraction(_k.wasserstein(p, q)["value"])


def wasserstein_oracle(p, q):
    return Fraction(_k.wasserstein_oracle(p, q))


def nested_wasserstein(mu, nu):
    return Fraction(_k.nested_wasserstein(mu, nu))


def load_workspace(document):
    """Accepts a workspace as a dict or JSON text."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return _k.load_workspace(document)


def run_laws(seed, cases, only=()):
    return json.loads(_k.run_laws(seed, cases, list(only)))


def check_law(law_id, instance):
    if not isinstance(instance, str):
        instance = json.dumps(instance)
    return _k.check_law(law_id, instance)
