"""Generalized chromatic polynomial: colorings with x colors of which y are
proper, adjacent vertices never sharing a proper color.

Each map sorts its vertices into U (proper-colored, properly on G[U]) and
the rest (free colors), so the count at an integer point (x0, y0) is

    sum over U subset V of  chi(G[U]; y0) * (x0 - y0)^(n - |U|)

The polynomial is recovered from an exact (n+1) x (n+1) integer grid with
x0 >= y0 everywhere.  A raw brute-force map counter is exported for tests.
"""

from __future__ import annotations

from itertools import combinations, product

from ..errors import ResourceBudgetError
from ..polynomial import interpolate_bivariate
from .tutte import _chromatic_del_con

_MAX_ORDER = 8


def gen_chromatic_counts(g, x0, y0):
    """Number of generalized colorings at one integer point (x0 >= y0 >= 0)."""
    chi_values = {}
    total = 0
    for r in range(g.order + 1):
        for u in combinations(g.vertices, r):
            chi = _chromatic_del_con(g.induced_subgraph(u))
            val = int(chi.evaluate({"x": y0})) if not chi.is_constant() else chi.constant_value()
            total += val * (x0 - y0) ** (g.order - r)
    return total


def gen_chromatic_poly(g):
    g.require_simple("gen_chromatic_poly")
    n = g.order
    if n > _MAX_ORDER:
        raise ResourceBudgetError(f"generalized chromatic budgeted for n <= {_MAX_ORDER}")
    # precompute chi of every induced subgraph once
    chis = []
    for r in range(n + 1):
        for u in combinations(g.vertices, r):
            chis.append((n - r, _chromatic_del_con(g.induced_subgraph(u))))
    xs = list(range(n, 2 * n + 1))
    ys = list(range(n + 1))
    values = []
    for x0 in xs:
        row = []
        for y0 in ys:
            total = 0
            for free, chi in chis:
                val = chi.evaluate({"x": y0}) if not chi.is_constant() else chi.constant_value()
                total += int(val) * (x0 - y0) ** free
            row.append(total)
        values.append(row)
    return interpolate_bivariate(xs, ys, values, variables=("x", "y"))


def gen_chromatic_bruteforce(g, x0, y0):
    """Literal map counting, for tiny oracle tests: colors 0..y0-1 are proper."""
    count = 0
    edges = [(a, b) for a, b in g.edges if a != b]
    for assignment in product(range(x0), repeat=g.order):
        ok = True
        for a, b in edges:
            ca, cb = assignment[a - 1], assignment[b - 1]
            if ca == cb and ca < y0:
                ok = False
                break
        count += ok
    return count
