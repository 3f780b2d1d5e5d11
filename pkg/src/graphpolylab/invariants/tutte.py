"""Tutte polynomial and its specialisation family.

T comes from deletion-contraction with canonical-form memoization (loops
multiply by y, bridges by x, isolated vertices are invisible); the subset
expansion sum (x-1)^(k(A)-k(E)) (y-1)^(k(A)+|A|-n) is retained as an
independent oracle.  Z, the chromatic polynomial, and the Euler polynomial
have their own direct expansions; flow and reliability are exact
substitution images of T.
"""

from __future__ import annotations

from fractions import Fraction

from ..cache import register_cache
from ..canon import canonical_key
from ..errors import DomainError, GraphPolyLabError, ResourceBudgetError
from ..polynomial import SparsePolynomial

_MAX_EDGES = 24

_tutte_memo = register_cache(300_000)
_chromatic_memo = register_cache(100_000)

_X = SparsePolynomial.variable("x")
_Y = SparsePolynomial.variable("y")


def _is_bridge(g, e):
    return g.delete_edge(e).connected_components() > g.connected_components()


def tutte_poly(g):
    """T(G; x, y) by deletion-contraction, memoized on canonical forms."""
    support = [v for v in g.vertices if g.degree(v) > 0]
    if len(support) < g.order:
        g = g.induced_subgraph(support)
    comps = g.component_sets()
    if len(comps) > 1:
        result = SparsePolynomial.constant(1)
        for comp in comps:
            result = result * tutte_poly(g.induced_subgraph(sorted(comp)))
        return result
    if g.size == 0:
        return SparsePolynomial.constant(1)
    key = canonical_key(g)
    hit = _tutte_memo.get(key)
    if hit is not None:
        return hit
    loops = [e for e in g.edges if e[0] == e[1]]
    if loops:
        stripped = g
        for e in loops:
            stripped = stripped.delete_edge(e)
        result = _Y ** len(loops) * tutte_poly(stripped)
    elif g.is_forest():
        result = _X**g.size
    else:
        e = next(e for e in g.edges if e[0] != e[1])
        if _is_bridge(g, e):
            result = _X * tutte_poly(g.contract_edge(e))
        else:
            result = tutte_poly(g.delete_edge(e)) + tutte_poly(g.contract_edge(e))
    _tutte_memo.put(key, result)
    return result


def _spanning_subset_counts(g):
    """{(components, |A|): count} over all edge subsets A of the spanning subgraph."""
    m = g.size
    if m > _MAX_EDGES:
        raise ResourceBudgetError(f"subset expansion budgeted for |E| <= {_MAX_EDGES}")
    n = g.order
    edges = g.edges
    parent = list(range(n + 1))
    counts = {}
    state = [n]

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i, size):
        if i == m:
            key = (state[0], size)
            counts[key] = counts.get(key, 0) + 1
            return
        rec(i + 1, size)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            rec(i + 1, size + 1)
        else:
            parent[rv] = ru
            state[0] -= 1
            rec(i + 1, size + 1)
            parent[rv] = rv
            state[0] += 1

    rec(0, 0)
    return counts


def tutte_poly_subset(g):
    """Independent oracle: the Whitney rank subset expansion of T."""
    counts = _spanning_subset_counts(g)
    k_full = g.connected_components()
    n = g.order
    xm1 = _X - 1
    ym1 = _Y - 1
    result = SparsePolynomial.zero()
    for (k, a), c in counts.items():
        result = result + c * xm1 ** (k - k_full) * ym1 ** (k + a - n)
    return result


def tutte_eval_subset(g, x0, y0):
    """Exact rational value of the subset expansion at a point."""
    counts = _spanning_subset_counts(g)
    k_full = g.connected_components()
    n = g.order
    x0, y0 = Fraction(x0), Fraction(y0)
    total = Fraction(0)
    for (k, a), c in counts.items():
        total += c * (x0 - 1) ** (k - k_full) * (y0 - 1) ** (k + a - n)
    return total


def partition_Z(g):
    """Potts partition function Z(G; q, w) = sum q^k(A) w^|A|."""
    counts = _spanning_subset_counts(g)
    return SparsePolynomial(
        ("q", "w"), {(k, a): c for (k, a), c in counts.items()}
    )


def _chromatic_del_con(g):
    # parallel edges collapse and loops kill the polynomial, so work on the
    # simple support
    if g.loop_count():
        return SparsePolynomial.zero()
    simple_edges = tuple(sorted(set(g.edges)))
    if len(simple_edges) != g.size:
        g = type(g)(g.order, simple_edges)
    key = canonical_key(g)
    hit = _chromatic_memo.get(key)
    if hit is not None:
        return hit
    if g.size == 0:
        result = SparsePolynomial(("x",), {(g.order,): 1})
    else:
        e = g.edges[0]
        result = _chromatic_del_con(g.delete_edge(e)) - _chromatic_del_con(
            g.contract_edge(e)
        )
    _chromatic_memo.put(key, result)
    return result


def chromatic_from_tutte(g):
    """(-1)^(n-k) x^k T(G; 1-x, 0)."""
    n, k = g.order, g.connected_components()
    t = tutte_poly(g)
    sub = t.substitute({"x": 1 - _X, "y": 0})
    return (-1) ** (n - k) * _X**k * sub


def chromatic_poly(g):
    """Proper-coloring counting polynomial; both computation paths must agree."""
    g.require_simple("chromatic_poly")
    direct = _chromatic_del_con(g)
    via_tutte = chromatic_from_tutte(g)
    if direct != via_tutte:
        raise GraphPolyLabError(
            "chromatic polynomial paths disagree; deletion-contraction or Tutte is broken"
        )
    return direct


def euler_poly(g):
    """Sum of x^|A| over edge subsets A with every degree of (V, A) even."""
    m = g.size
    if m > _MAX_EDGES:
        raise ResourceBudgetError(f"subset expansion budgeted for |E| <= {_MAX_EDGES}")
    counts = [0] * (m + 1)
    edges = g.edges
    odd = set()

    def rec(i, size):
        if i == m:
            if not odd:
                counts[size] += 1
            return
        rec(i + 1, size)
        u, v = edges[i]
        if u != v:
            odd.symmetric_difference_update((u, v))
        rec(i + 1, size + 1)
        if u != v:
            odd.symmetric_difference_update((u, v))

    rec(0, 0)
    return SparsePolynomial(("x",), {(a,): c for a, c in enumerate(counts) if c})


def euler_point_check(g, x0):
    """Compare the Euler polynomial with its Tutte form at a rational point.

    E(G; x) = (1-x)^(m-n+k) x^(n-k) T(G; 1/x, (1+x)/(1-x)); poles at x in {0, 1}.
    """
    x0 = Fraction(x0)
    if x0 == 0 or x0 == 1:
        raise DomainError("evaluation point is a pole of the Euler prefactor")
    m, n, k = g.size, g.order, g.connected_components()
    rhs = (
        (1 - x0) ** (m - n + k)
        * x0 ** (n - k)
        * tutte_eval_subset(g, 1 / x0, (1 + x0) / (1 - x0))
    )
    return euler_poly(g).evaluate({"x": x0}) == rhs


def flow_poly(g):
    """Fl(G; x) = (-1)^(m-n+k) T(G; 0, 1-x)."""
    m, n, k = g.size, g.order, g.connected_components()
    sub = tutte_poly(g).substitute({"x": 0, "y": 1 - _X})
    return (-1) ** (m - n + k) * sub


def flow_point_check(g, x0):
    """Compare flow_poly against the displayed formula with an independent T."""
    m, n, k = g.size, g.order, g.connected_components()
    rhs = (-1) ** (m - n + k) * tutte_eval_subset(g, 0, 1 - Fraction(x0))
    return flow_poly(g).evaluate({"x": x0}) == rhs


def reliability_poly(g):
    """R(G; p) = p^(m-n+k) (1-p)^(n-k) T(G; 1, 1/p), expanded exactly in p."""
    m, n, k = g.size, g.order, g.connected_components()
    t_at_1 = tutte_poly(g).substitute({"x": 1})
    p = SparsePolynomial.variable("p")
    one_minus = (1 - p) ** (n - k)
    result = SparsePolynomial.zero()
    if t_at_1.is_constant():
        coeffs = {0: t_at_1.constant_value()}
    else:
        coeffs = {e[0]: c for e, c in t_at_1.terms.items()}
    top = m - n + k
    for j, c in coeffs.items():
        if j > top:
            raise GraphPolyLabError("reliability exponent bookkeeping failed")
        result = result + c * p ** (top - j) * one_minus
    return result


def reliability_point_check(g, p0):
    """Compare reliability_poly against the displayed formula at a rational point."""
    p0 = Fraction(p0)
    if p0 == 0:
        raise DomainError("evaluation point is a pole of the reliability prefactor")
    m, n, k = g.size, g.order, g.connected_components()
    rhs = p0 ** (m - n + k) * (1 - p0) ** (n - k) * tutte_eval_subset(g, 1, 1 / p0)
    return reliability_poly(g).evaluate({"p": p0}) == rhs


def z_t_point_check(g, x0, y0):
    """T(G; x, y) = (x-1)^-k (y-1)^-n Z(G; (x-1)(y-1), y-1) at a non-pole point."""
    x0, y0 = Fraction(x0), Fraction(y0)
    if x0 == 1 or y0 == 1:
        raise DomainError("evaluation point is a pole of the Z-to-T change of variables")
    n, k = g.order, g.connected_components()
    z = partition_Z(g).evaluate({"q": (x0 - 1) * (y0 - 1), "w": y0 - 1})
    rhs = (x0 - 1) ** (-k) * (y0 - 1) ** (-n) * z
    return tutte_poly(g).evaluate({"x": x0, "y": y0}) == rhs
