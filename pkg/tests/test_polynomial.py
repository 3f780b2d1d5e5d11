import random
from fractions import Fraction

import pytest

from graphpolylab.errors import DomainError
from graphpolylab.polynomial import (
    SparsePolynomial,
    interpolate_bivariate,
    interpolate_univariate,
    parse_polynomial,
)

X = SparsePolynomial.variable("x")
Y = SparsePolynomial.variable("y")
Z = SparsePolynomial.variable("z")


def random_poly(rng, nvars=2, nterms=4, max_exp=3, max_coeff=6):
    names = ("x", "y", "z")[:nvars]
    terms = {}
    for _ in range(nterms):
        exps = tuple(rng.randint(0, max_exp) for _ in names)
        terms[exps] = terms.get(exps, 0) + rng.randint(-max_coeff, max_coeff)
    return SparsePolynomial(names, terms)


def test_square_of_binomial():
    assert (X + 1) * (X + 1) == X**2 + 2 * X + 1


def test_additive_inverse():
    p = X**3 - 4 * X + 7
    assert (p + (-p)).is_zero()


def test_mul_commutes_on_random_pairs():
    rng = random.Random(1)
    for _ in range(100):
        a, b = random_poly(rng), random_poly(rng)
        assert a * b == b * a


def test_ring_laws_random_triples():
    rng = random.Random(2)
    for _ in range(60):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_normalization_idempotent_and_variable_pruning():
    p = SparsePolynomial(("y", "x"), {(0, 2): 1, (0, 0): 3})
    q = SparsePolynomial(("x",), {(2,): 1, (0,): 3})
    assert p == q
    assert p.variables == ("x",)
    rebuilt = SparsePolynomial(p.variables, p.terms)
    assert rebuilt == p


def test_zero_coefficients_dropped():
    p = SparsePolynomial(("x",), {(1,): 2, (2,): 0})
    assert p.terms == {(1,): 2}
    assert SparsePolynomial(("x",), {(5,): 0}).is_zero()


def test_integer_inputs_stay_integer():
    rng = random.Random(3)
    for _ in range(40):
        a, b = random_poly(rng), random_poly(rng)
        for coeff in (a + b).terms.values():
            assert coeff.denominator == 1
        for coeff in (a * b).terms.values():
            assert coeff.denominator == 1
        subbed = a.substitute({"x": b})
        for coeff in subbed.terms.values():
            assert coeff.denominator == 1


def test_substitute_example():
    assert (X**2 + Z).substitute({"z": X * Y * Z - X * Y}) == X**2 + X * Y * Z - X * Y
    assert (X**2 + 2 * X + 1).substitute({"x": 1}) == 4


def test_substitute_is_simultaneous():
    p = X * Y
    swapped = p.substitute({"x": Y, "y": X})
    assert swapped == X * Y  # x*y -> y*x, not y*y


def test_substitute_then_evaluate_matches_composed():
    rng = random.Random(4)
    for _ in range(100):
        a = random_poly(rng, nvars=3)
        b = random_poly(rng, nvars=2)
        point = {v: Fraction(rng.randint(-4, 4)) for v in ("x", "y", "z")}
        left = a.substitute({"z": b}).evaluate(point)
        right = a.evaluate({**point, "z": b.evaluate(point)})
        assert left == right


def test_substitute_y_zero_matches_eval_oracle():
    rng = random.Random(5)
    for _ in range(50):
        a = random_poly(rng, nvars=3)
        sub = a.substitute({"y": 0})
        for _ in range(3):
            pt = {v: Fraction(rng.randint(-3, 3)) for v in ("x", "y", "z")}
            assert sub.evaluate(pt) == a.evaluate({**pt, "y": 0})


def test_evaluate_examples():
    assert (X**2 - 4).evaluate({"x": 2}) == 0
    with pytest.raises(DomainError):
        (X + Y).evaluate({"x": 1})


def test_float_coefficients_rejected():
    with pytest.raises(DomainError):
        SparsePolynomial(("x",), {(1,): 0.5})


def test_text_serialization():
    assert (X**5 - 4 * X**3 + 3 * X).to_text() == "x^5 - 4*x^3 + 3*x"
    assert (X**2 + 2 * X).to_text() == "x^2 + 2*x"
    assert SparsePolynomial.zero().to_text() == "0"
    assert (1 - X).to_text() == "-x + 1"
    assert (X * Y**2 * 3 - 2).to_text() == "3*x*y^2 - 2"
    assert SparsePolynomial.constant(Fraction(3, 2)).scale(1).to_text() == "3/2"


def test_text_round_trip_random():
    rng = random.Random(6)
    for _ in range(80):
        p = random_poly(rng, nvars=3)
        assert parse_polynomial(p.to_text()) == p


def test_json_round_trip():
    rng = random.Random(7)
    for _ in range(40):
        p = random_poly(rng).scale(Fraction(1, 3))
        assert SparsePolynomial.from_json_dict(p.to_json_dict()) == p


def test_univariate_interpolation_exact():
    coeffs = interpolate_univariate([0, 1, 2], [1, 0, 1])
    assert coeffs == [Fraction(1), Fraction(-2), Fraction(1)]  # (x-1)^2


def test_bivariate_interpolation_examples():
    f = interpolate_bivariate([0, 1, 2], [0, 1], [[0, -1], [1, 0], [4, 3]])
    assert f == X**2 - Y
    const = interpolate_bivariate([0, 1], [0, 1], [[5, 5], [5, 5]])
    assert const == SparsePolynomial.constant(5)


def test_bivariate_interpolation_round_trip():
    rng = random.Random(8)
    for _ in range(20):
        p = random_poly(rng, nvars=2, nterms=6, max_exp=4)
        xs = list(range(5))
        ys = list(range(5))
        grid = [[p.evaluate({"x": a, "y": b}) for b in ys] for a in xs]
        assert interpolate_bivariate(xs, ys, grid) == p


def test_duplicate_nodes_rejected():
    with pytest.raises(DomainError):
        interpolate_univariate([0, 0, 1], [1, 1, 2])
    with pytest.raises(DomainError):
        interpolate_bivariate([0, 0], [0, 1], [[1, 2], [3, 4]])


def test_pow_and_scale():
    assert (X + 1) ** 0 == 1
    assert (X + 1) ** 3 == X**3 + 3 * X**2 + 3 * X + 1
    assert (2 * X).scale(Fraction(1, 2)) == X
