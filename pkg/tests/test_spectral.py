import random

import pytest

from graphpolylab.classes import enumerate_class
from graphpolylab.errors import DomainError
from graphpolylab.graphs import (
    LabeledMultigraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    star_graph,
)
from graphpolylab.invariants.spectral import (
    bareiss_determinant,
    char_poly_adjacency,
    char_poly_laplacian,
    char_poly_via_interpolation,
    char_recurrence_check,
)
from graphpolylab.polynomial import SparsePolynomial

from helpers import random_simple

X = SparsePolynomial.variable("x")


def test_p5_characteristic_polynomial():
    # monic convention; the printed factorization -x(x-1)(x+1)(x^2-3)
    # matches up to the global factor (-1)^5
    assert char_poly_adjacency(path_graph(5)) == X**5 - 4 * X**3 + 3 * X
    assert char_poly_adjacency(path_graph(5)) == X * (X - 1) * (X + 1) * (X**2 - 3)


def test_k1_and_edgeless():
    assert char_poly_adjacency(LabeledMultigraph(1)) == X
    assert char_poly_adjacency(empty_graph(4)) == X**4


def test_star_equals_c4_plus_k1():
    a = char_poly_adjacency(star_graph(5))
    b = char_poly_adjacency(cycle_graph(4).disjoint_union(LabeledMultigraph(1)))
    assert a == b
    # degree-consistent corrected value: x^3 (x-2)(x+2)
    assert a == X**3 * (X - 2) * (X + 2)


def test_p5hat_printed_factorization():
    from graphpolylab.graphs import p5_hat

    assert char_poly_adjacency(p5_hat()) == X * (X**2 - X - 3) * (X**2 + X - 1)
    assert char_poly_adjacency(p5_hat()) != char_poly_adjacency(path_graph(5))


def test_laplacian_examples():
    assert char_poly_laplacian(complete_graph(2)) == X**2 - 2 * X
    assert char_poly_laplacian(empty_graph(5)) == X**5


def test_laplacian_constant_term_zero_up_to_7():
    for n in range(1, 8):
        for g in enumerate_class("all", n):
            assert char_poly_laplacian(g).coefficient({}) == 0


def test_multigraph_rejected():
    with pytest.raises(DomainError):
        char_poly_adjacency(LabeledMultigraph(2, [(1, 2), (1, 2)]))


def test_berkowitz_vs_interpolation_oracle():
    rng = random.Random(19)
    for _ in range(60):
        g = random_simple(rng, rng.randint(1, 8))
        assert char_poly_adjacency(g) == char_poly_via_interpolation(g)
        assert char_poly_laplacian(g) == char_poly_via_interpolation(g, "laplacian")


def test_bareiss_determinant_known_values():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[7]]) == 7
    assert bareiss_determinant([[1, 2], [3, 4]]) == -2
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[2, 0, 0], [0, 0, 1], [0, 1, 0]]) == -2


def test_char_recurrence_examples():
    k1 = LabeledMultigraph(1)
    assert char_recurrence_check(k1, 1, k1, 1)
    assert char_recurrence_check(complete_graph(2), 1, k1, 1)
    assert char_recurrence_check(complete_graph(2), 2, k1, 1)


def test_char_recurrence_200_random_pairs():
    rng = random.Random(20)
    for _ in range(200):
        g1 = random_simple(rng, rng.randint(1, 7))
        g2 = random_simple(rng, rng.randint(1, 7))
        assert char_recurrence_check(
            g1, rng.randint(1, g1.order), g2, rng.randint(1, g2.order)
        )


def test_multiplicative_over_components():
    rng = random.Random(21)
    for _ in range(30):
        g = random_simple(rng, rng.randint(1, 5))
        h = random_simple(rng, rng.randint(1, 5))
        u = g.disjoint_union(h)
        assert char_poly_adjacency(u) == char_poly_adjacency(g) * char_poly_adjacency(h)
