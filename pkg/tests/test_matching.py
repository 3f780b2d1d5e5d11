import itertools
import random

from graphpolylab.classes import enumerate_class
from graphpolylab.graphs import (
    LabeledMultigraph,
    complete_graph,
    cycle_graph,
    empty_graph,
)
from graphpolylab.invariants.matching import (
    matching_M,
    matching_counts,
    matching_g,
    matching_mu,
)
from graphpolylab.invariants.spectral import char_poly_adjacency
from graphpolylab.polynomial import SparsePolynomial

from helpers import random_multigraph, random_simple

X = SparsePolynomial.variable("x")


def brute_matching_counts(g):
    real_edges = [e for e in g.edges if e[0] != e[1]]
    counts = [0] * (g.order // 2 + 1)
    for k in range(len(counts)):
        for combo in itertools.combinations(range(len(real_edges)), k):
            used = set()
            ok = True
            for i in combo:
                a, b = real_edges[i]
                if a in used or b in used:
                    ok = False
                    break
                used.update((a, b))
            counts[k] += ok
    return counts


def test_c4_counts_and_polynomials():
    assert matching_counts(cycle_graph(4)) == [1, 4, 2]
    assert matching_g(cycle_graph(4)) == 1 + 4 * X + 2 * X**2
    assert matching_mu(cycle_graph(4)) == X**4 - 4 * X**2 + 2


def test_edgeless_family_fact():
    # g(E_n) = 1 for every n, while mu still sees the order
    for n in range(1, 8):
        assert matching_g(empty_graph(n)) == 1
        assert matching_mu(empty_graph(n)) == X**n


def test_bivariate_k2():
    w1 = SparsePolynomial.variable("w1")
    w2 = SparsePolynomial.variable("w2")
    assert matching_M(complete_graph(2)) == w1**2 + w2


def test_brute_force_agreement_including_multigraphs():
    rng = random.Random(24)
    for _ in range(60):
        g = random_multigraph(rng, max_order=6)
        assert matching_counts(g) == brute_matching_counts(g)


def test_forest_identity_mu_equals_char_poly():
    # classic equivalence on forests, exact polynomial equality, n <= 10
    for n in range(1, 11):
        for f in enumerate_class("forests", n):
            assert matching_mu(f) == char_poly_adjacency(f)


def test_multiplicative_over_disjoint_union():
    rng = random.Random(25)
    for _ in range(25):
        g = random_simple(rng, rng.randint(1, 5))
        h = random_simple(rng, rng.randint(1, 5))
        assert matching_g(g.disjoint_union(h)) == matching_g(g) * matching_g(h)
