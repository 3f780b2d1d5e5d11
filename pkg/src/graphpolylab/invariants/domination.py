"""Domination polynomial: sum of x^|S| over all dominating sets S.

Subset enumeration over closed-neighborhood bitmasks, with the standard
shortcut that every superset of a dominating set dominates.
"""

from __future__ import annotations

from math import comb

from ..errors import ResourceBudgetError
from ..polynomial import SparsePolynomial

_MAX_ORDER = 24


def _closed_neighborhoods(g):
    masks = []
    for v in g.vertices:
        mask = 1 << (v - 1)
        for u in g.neighbors(v):
            mask |= 1 << (u - 1)
        masks.append(mask)
    return masks


def domination_counts(g):
    """counts[k] = number of dominating sets of size k."""
    n = g.order
    if n > _MAX_ORDER:
        raise ResourceBudgetError(f"domination polynomial budgeted for n <= {_MAX_ORDER}")
    if n == 0:
        return [1]
    masks = _closed_neighborhoods(g)
    full = (1 << n) - 1
    counts = [0] * (n + 1)

    def rec(i, covered, size):
        if covered == full:
            # every superset of a dominating set dominates
            rest = n - i
            for k in range(rest + 1):
                counts[size + k] += comb(rest, k)
            return
        if i == n:
            return
        rec(i + 1, covered, size)
        rec(i + 1, covered | masks[i], size + 1)

    rec(0, 0, 0)
    return counts


def domination_poly(g):
    counts = domination_counts(g)
    return SparsePolynomial(("x",), {(k,): c for k, c in enumerate(counts) if c})


def dominating_sets(g):
    """All dominating sets as frozensets; for small-n set-level comparisons."""
    n = g.order
    if n > 16:
        raise ResourceBudgetError("dominating-set listing budgeted for n <= 16")
    masks = _closed_neighborhoods(g)
    full = (1 << n) - 1
    out = []
    for pick in range(1 << n):
        covered = 0
        m = pick
        while m:
            low = m & -m
            covered |= masks[low.bit_length() - 1]
            m ^= low
        if covered == full:
            out.append(frozenset(v + 1 for v in range(n) if pick >> v & 1))
    return out
