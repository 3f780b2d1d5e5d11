"""Independence, clique, and vertex cover polynomials.

In counts independent vertex sets by size; Cl(G) = In(complement of G);
VC is the degree-n reversal VC(G;x) = x^n In(G;1/x).
"""

from __future__ import annotations

from ..cache import register_cache
from ..canon import canonical_key
from ..polynomial import SparsePolynomial

_memo = register_cache(100_000)


def _indep_counts(g):
    """counts[k] = number of independent sets of size k."""
    key = canonical_key(g)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    n = g.order
    if g.size == 0:
        from math import comb

        result = [comb(n, k) for k in range(n + 1)]
    else:
        v = max(g.vertices, key=g.degree)
        skip = _indep_counts(g.delete_vertex(v))
        closed = sorted({v, *g.neighbors(v)})
        take = _indep_counts(g.induced_subgraph([w for w in g.vertices if w not in closed]))
        result = [0] * (n + 1)
        for k, c in enumerate(skip):
            result[k] += c
        for k, c in enumerate(take):
            result[k + 1] += c
        while len(result) > 1 and result[-1] == 0:
            result.pop()
    _memo.put(key, result)
    return result


def independence_poly(g):
    g.require_simple("independence_poly")
    return SparsePolynomial(
        ("x",), {(k,): c for k, c in enumerate(_indep_counts(g)) if c}
    )


def clique_poly(g):
    g.require_simple("clique_poly")
    return independence_poly(g.complement())


def vertex_cover_poly(g):
    g.require_simple("vertex_cover_poly")
    n = g.order
    counts = _indep_counts(g)
    return SparsePolynomial(
        ("x",), {(n - k,): c for k, c in enumerate(counts) if c}
    )
