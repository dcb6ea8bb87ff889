from fractions import Fraction

import pytest

import kantorovich as k


def bit():
    return k.make_space(["0", "1"], [[0, 1], [1, 0]])


def test_two_point_distance():
    x = k.make_space(["a", "b"], [[0, 1], [1, 0]])
    p = k.make_measure(x, [1, 0])
    q = k.make_measure(x, [Fraction(1, 2), Fraction(1, 2)])
    result = k.wasserstein(p, q)
    assert result["value"] == Fraction(1, 2)
    assert result["coupling"] == [[Fraction(1, 2), Fraction(1, 2)], [0, 0]]
    witness = result["witness"]
    assert witness[0] - witness[1] == Fraction(1, 2) * 2
    assert k.wasserstein_oracle(p, q) == Fraction(1, 2)


def test_correlated_law_is_not_independent():
    b = bit()
    r = k.make_measure(k.tensor(b, b), ["1/2", 0, 0, "1/2"])
    first, second = k.marginals(r)
    assert k.weights(first) == [Fraction(1, 2)] * 2
    assert k.weights(k.product(first, second)) == [Fraction(1, 4)] * 4
    assert not k.is_independent(r)


def test_expectation_and_nested_distance():
    x = k.make_space(["a", "b"], [[0, 1], [1, 0]])
    spread = k.NestedMeasure(x, [k.dirac(x, 0), k.dirac(x, 1)], ["1/2", "1/2"])
    uniform = k.unit_nested(k.make_measure(x, ["1/2", "1/2"]))
    assert k.weights(k.expectation(spread)) == [Fraction(1, 2)] * 2
    assert k.nested_wasserstein(spread, uniform) == Fraction(1, 2)


def test_invariants_raise():
    with pytest.raises(k.InvariantViolation, match="triangle"):
        k.make_space(["a", "b", "c"], [[0, 1, 3], [1, 0, 1], [3, 1, 0]])
    with pytest.raises(k.InvariantViolation):
        k.make_measure(bit(), ["1/2", "1/3"])
    with pytest.raises(k.MismatchError):
        k.marginals(k.dirac(bit(), 0))
    with pytest.raises(TypeError):
        k.make_measure(bit(), [0.5, 0.5])


def test_workspace_and_convolution():
    doc = {
        "spaces": {"G": {"points": ["0", "1"], "dist": [["0", "1"], ["1", "0"]]}},
        "monoids": {
            "Z2": {
                "carrier": "G",
                "mult": {
                    "domain": {"tensor": ["G", "G"]},
                    "codomain": "G",
                    "table": {"(0,0)": "0", "(0,1)": "1", "(1,0)": "1", "(1,1)": "0"},
                },
                "unit": "0",
            }
        },
        "measures": {"h": {"space": "G", "weights": {"0": "1/4", "1": "3/4"}}},
    }
    ws = k.load_workspace(doc)
    z2 = ws["monoids"]["Z2"]
    h = ws["measures"]["h"]
    assert k.weights(k.convolve(h, h, z2)) == [Fraction(10, 16), Fraction(6, 16)]
    e = k.dirac(z2.carrier, z2.unit)
    assert k.convolve(e, h, z2) == h
    with pytest.raises(k.ParseError):
        k.load_workspace({"measures": {"p": {"space": "missing", "weights": {}}}})


def test_law_suite():
    report = k.run_laws(7, 3, ["delta_nabla_id", "nabla_delta_not_inverse"])
    assert report["schema_version"] == 1
    statuses = {law["id"]: law["status"] for law in report["laws"]}
    assert statuses == {
        "delta_nabla_id": "pass",
        "nabla_delta_not_inverse": "expected-counterexample found",
    }
    assert "oracle_equivalence" in k.law_ids()
    instance = report["laws"][1]["first_counterexample"]["instance"]
    holds, diagnostics = k.check_law("nabla_delta_not_inverse", instance)
    assert not holds and diagnostics
