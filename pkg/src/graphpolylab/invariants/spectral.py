"""Characteristic polynomials of the adjacency and Laplacian matrices.

Both are monic det(xI - M).  The primary algorithm is Berkowitz's
division-free method on exact integers, applied per connected component
(the matrices are block diagonal).  An independent route evaluates exact
Bareiss determinants at integer points and interpolates; tests hold the two
against each other.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DomainError
from ..polynomial import SparsePolynomial, interpolate_univariate


def adjacency_matrix(g):
    g.require_simple("char_poly_adjacency")
    n = g.order
    m = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        m[a - 1][b - 1] = 1
        m[b - 1][a - 1] = 1
    return m


def laplacian_matrix(g):
    g.require_simple("char_poly_laplacian")
    n = g.order
    m = [[0] * n for _ in range(n)]
    for a, b in g.edges:
        m[a - 1][b - 1] -= 1
        m[b - 1][a - 1] -= 1
        m[a - 1][a - 1] += 1
        m[b - 1][b - 1] += 1
    return m


def berkowitz_coefficients(matrix):
    """Coefficients of det(xI - A), highest power first; division-free."""
    n = len(matrix)
    coeffs = [1]
    for r in range(1, n + 1):
        a = matrix[r - 1][r - 1]
        row = matrix[r - 1][: r - 1]
        col = [matrix[i][r - 1] for i in range(r - 1)]
        # first column of the Toeplitz factor: 1, -a, -R S, -R A S, -R A^2 S, ...
        q = [1, -a]
        v = col
        for _ in range(r - 1):
            q.append(-sum(x * y for x, y in zip(row, v)))
            v = [
                sum(matrix[i][j] * v[j] for j in range(r - 1)) for i in range(r - 1)
            ]
        new = [0] * (r + 1)
        for i, c in enumerate(coeffs):
            if c:
                for j, qj in enumerate(q):
                    if qj and i + j <= r:
                        new[i + j] += c * qj
        coeffs = new
    return coeffs


def _poly_from_desc_coeffs(coeffs):
    n = len(coeffs) - 1
    return SparsePolynomial(("x",), {(n - i,): c for i, c in enumerate(coeffs) if c})


def _charpoly_by_components(g, matrix_of):
    result = SparsePolynomial.constant(1)
    for comp in g.component_sets():
        sub = g.induced_subgraph(sorted(comp))
        result = result * _poly_from_desc_coeffs(
            berkowitz_coefficients(matrix_of(sub))
        )
    return result


def char_poly_adjacency(g):
    """Monic characteristic polynomial of the adjacency matrix."""
    return _charpoly_by_components(g, adjacency_matrix)


def char_poly_laplacian(g):
    """Monic characteristic polynomial of the Laplacian D - A."""
    return _charpoly_by_components(g, laplacian_matrix)


def bareiss_determinant(matrix):
    """Exact integer determinant by fraction-free Gaussian elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [row[:] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def char_poly_via_interpolation(g, which="adjacency"):
    """Independent oracle: interpolate det(x0 I - M) through n+1 integer points."""
    matrix = adjacency_matrix(g) if which == "adjacency" else laplacian_matrix(g)
    n = len(matrix)
    xs = list(range(n + 1))
    vals = []
    for x0 in xs:
        shifted = [
            [(x0 if i == j else 0) - matrix[i][j] for j in range(n)] for i in range(n)
        ]
        vals.append(bareiss_determinant(shifted))
    coeffs = interpolate_univariate(xs, vals)
    terms = {}
    for e, c in enumerate(coeffs):
        if c:
            if isinstance(c, Fraction) and c.denominator != 1:
                raise DomainError("interpolated characteristic polynomial not integral")
            terms[(e,)] = int(c)
    return SparsePolynomial(("x",), terms)


def char_recurrence_check(g1, v1, g2, v2):
    """Bridge-join recurrence for the adjacency characteristic polynomial.

    H is g1 and g2 joined by one new edge v1-v2; checks
    P(H) = P(g1) P(g2) - P(g1 - v1) P(g2 - v2).  Returns True when it holds.
    """
    if not (1 <= v1 <= g1.order) or not (1 <= v2 <= g2.order):
        raise DomainError("join vertices out of range")
    h = g1.disjoint_union(g2).add_edge(v1, g1.order + v2)
    lhs = char_poly_adjacency(h)
    rhs = char_poly_adjacency(g1) * char_poly_adjacency(g2) - char_poly_adjacency(
        g1.delete_vertex(v1)
    ) * char_poly_adjacency(g2.delete_vertex(v2))
    return lhs == rhs
