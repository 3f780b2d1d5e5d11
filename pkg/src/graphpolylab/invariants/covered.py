"""Covered-components polynomial C and the three-term edge elimination
polynomial it re-parametrizes.

C(G; x, y, z) sums x^k y^|A| z^c over all edge subsets A, where k counts
the components of the spanning subgraph (V, A) and c the components with at
least one edge.  The edge elimination polynomial follows the recursion

    xi(G) = xi(G - e) + y xi(G / e) + z xi(G + e-extraction)

with xi(K1) = x, xi(empty) = 1, multiplicativity over disjoint unions, and
recovers C under z -> xyz - xy.  The recursion prefers non-loop edges; a
residual loop e is handled by the extension G/e := G - e and
G-extract-e := G minus the loop's vertex.  That loop rule is exercised only
through the C-substitution cross-validation; authoritative xi-equality
testing goes through C.
"""

from __future__ import annotations

from ..cache import register_cache
from ..canon import canonical_key
from ..errors import ResourceBudgetError
from ..polynomial import SparsePolynomial

_MAX_EDGES = 24

_xi_memo = register_cache(300_000)

_XYZ = ("x", "y", "z")


def covered_subset_counts(g):
    """{(k, |A|, c): multiplicity} over all edge subsets A, by exact expansion."""
    m = g.size
    if m > _MAX_EDGES:
        raise ResourceBudgetError(f"subset expansion budgeted for |E| <= {_MAX_EDGES}")
    n = g.order
    edges = g.edges
    parent = list(range(n + 1))
    rank = [0] * (n + 1)
    covered = [False] * (n + 1)
    counts = {}
    state = [n, 0]  # components, covered components

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def apply(u, v):
        """Add edge; return undo record."""
        ru, rv = find(u), find(v)
        if ru == rv:
            if covered[ru]:
                return None
            covered[ru] = True
            state[1] += 1
            return ("cover", ru)
        if rank[ru] < rank[rv]:
            ru, rv = rv, ru
        grew = rank[ru] == rank[rv]
        parent[rv] = ru
        if grew:
            rank[ru] += 1
        old_u, old_v = covered[ru], covered[rv]
        state[0] -= 1
        state[1] += 1 - old_u - old_v
        covered[ru] = True
        return ("union", ru, rv, grew, old_u, old_v)

    def undo(rec):
        if rec is None:
            return
        if rec[0] == "cover":
            covered[rec[1]] = False
            state[1] -= 1
        else:
            _, ru, rv, grew, old_u, old_v = rec
            parent[rv] = rv
            if grew:
                rank[ru] -= 1
            covered[ru] = old_u
            covered[rv] = old_v
            state[0] += 1
            state[1] -= 1 - old_u - old_v

    def rec(i, size):
        if i == m:
            key = (state[0], size, state[1])
            counts[key] = counts.get(key, 0) + 1
            return
        rec(i + 1, size)
        record = apply(*edges[i])
        rec(i + 1, size + 1)
        undo(record)

    rec(0, 0)
    return counts


def covered_components_poly(g):
    """C(G; x, y, z) by exact subset expansion."""
    counts = covered_subset_counts(g)
    return SparsePolynomial(_XYZ, {key: c for key, c in counts.items()})


def xi_poly(g):
    """Edge elimination polynomial by recursion with canonical-form memoization."""
    comps = g.component_sets()
    if len(comps) > 1:
        result = SparsePolynomial.constant(1)
        for comp in comps:
            result = result * xi_poly(g.induced_subgraph(sorted(comp)))
        return result
    key = canonical_key(g)
    hit = _xi_memo.get(key)
    if hit is not None:
        return hit
    if g.size == 0:
        result = SparsePolynomial(("x",), {(g.order,): 1}) if g.order else SparsePolynomial.constant(1)
        _xi_memo.put(key, result)
        return result
    y = SparsePolynomial.variable("y")
    z = SparsePolynomial.variable("z")
    edge = next((e for e in g.edges if e[0] != e[1]), None)
    if edge is not None:
        result = (
            xi_poly(g.delete_edge(edge))
            + y * xi_poly(g.contract_edge(edge))
            + z * xi_poly(g.extract_edge(edge))
        )
    else:
        loop = g.edges[0]
        minus = xi_poly(g.delete_edge(loop))
        result = minus + y * minus + z * xi_poly(g.delete_vertex(loop[0]))
    _xi_memo.put(key, result)
    return result


def xi_substituted_to_C(xi):
    """Apply z -> xyz - xy, turning a xi value into the matching C value."""
    x = SparsePolynomial.variable("x")
    y = SparsePolynomial.variable("y")
    z = SparsePolynomial.variable("z")
    return xi.substitute({"z": x * y * z - x * y})


def covered_components_poly_fast(g):
    """C by whichever exact route is cheaper for this graph.

    Sparse graphs go through the subset expansion, dense ones through the
    memoized xi recursion plus substitution; the two routes agree (that
    identity is pinned by the acceptance suite).
    """
    if g.size <= 14:
        return covered_components_poly(g)
    return xi_substituted_to_C(xi_poly(g))


def crec_join_check(g1, v1, g2, v2):
    """Denominator-cleared one-point-join identity for C; True when it holds.

    With G the join at v1 = v2 and primes deleting the joined vertex:

        xz C(G) = C1 C2 + (xz - x)(C1 C2' + C1' C2) + (x^2 - x^2 z) C1' C2'

    This follows from splitting each factor's subsets by whether the join
    vertex is covered: the isolated-vertex part of C(Gi) is x C(Gi - vi).
    """
    joined = g1.one_point_join(v1, g2, v2)
    x = SparsePolynomial.variable("x")
    z = SparsePolynomial.variable("z")
    c = covered_components_poly(joined)
    c1 = covered_components_poly(g1)
    c2 = covered_components_poly(g2)
    c1d = covered_components_poly(g1.delete_vertex(v1))
    c2d = covered_components_poly(g2.delete_vertex(v2))
    lhs = x * z * c
    rhs = (
        c1 * c2
        + (x * z - x) * (c1 * c2d + c1d * c2)
        + (x * x - x * x * z) * c1d * c2d
    )
    return lhs == rhs
