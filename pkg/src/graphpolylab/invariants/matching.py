"""Matching counts m_k and the three matching polynomials built from them.

m_k(G) = m_k(G - e) + m_{k-1}(G - {u, v}) for any edge e = uv, memoized on
canonical forms and multiplied across components.  Loops never take part in
a matching.
"""

from __future__ import annotations

from ..cache import register_cache
from ..canon import canonical_key
from ..polynomial import SparsePolynomial

_memo = register_cache(100_000)


def _counts_connected(g):
    key = canonical_key(g)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    edge = next((e for e in g.edges if e[0] != e[1]), None)
    if edge is None:
        result = [1]
    else:
        without = matching_counts(g.delete_edge(edge))
        using = matching_counts(g.extract_edge(edge))
        size = max(len(without), len(using) + 1)
        result = [0] * size
        for k, c in enumerate(without):
            result[k] += c
        for k, c in enumerate(using):
            result[k + 1] += c
        while len(result) > 1 and result[-1] == 0:
            result.pop()
    _memo.put(key, result)
    return result


def matching_counts(g):
    """[m_0, ..., m_floor(n/2)] with trailing entries zero-filled."""
    acc = [1]
    for comp in g.component_sets():
        part = _counts_connected(g.induced_subgraph(sorted(comp)))
        acc = [
            sum(acc[i] * part[k - i] for i in range(max(0, k - len(part) + 1), min(k, len(acc) - 1) + 1))
            for k in range(len(acc) + len(part) - 1)
        ]
    acc.extend([0] * (g.order // 2 + 1 - len(acc)))
    return acc


def matching_mu(g):
    """Acyclic (defect) matching polynomial: sum (-1)^k m_k x^(n-2k)."""
    n = g.order
    terms = {}
    for k, m in enumerate(matching_counts(g)):
        if m:
            terms[(n - 2 * k,)] = (-1) ** k * m
    return SparsePolynomial(("x",), terms)


def matching_g(g):
    """Generating matching polynomial: sum m_k x^k."""
    return SparsePolynomial(
        ("x",), {(k,): m for k, m in enumerate(matching_counts(g)) if m}
    )


def matching_M(g):
    """Bivariate matching polynomial: sum m_k w1^(n-2k) w2^k."""
    n = g.order
    return SparsePolynomial(
        ("w1", "w2"),
        {(n - 2 * k, k): m for k, m in enumerate(matching_counts(g)) if m},
    )
