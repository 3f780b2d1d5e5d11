"""Labeled multigraphs on vertex set 1..n and their structural surgery.

All operations return new graphs; instances are never mutated after
construction, so values can be shared freely across workers.  After any
operation that removes vertices, the survivors are renumbered to 1..n'
preserving their relative order.
"""

from __future__ import annotations

from .errors import DomainError, NoSuchEdgeError


class LabeledMultigraph:
    """Vertices 1..order plus an edge multiset; loops {v,v} allowed."""

    def __init__(self, order, edges=()):
        if order < 0:
            raise DomainError("order must be non-negative")
        norm = []
        for edge in edges:
            u, v = edge
            if not (1 <= u <= order and 1 <= v <= order):
                raise DomainError(f"edge {edge} has an endpoint outside 1..{order}")
            norm.append((u, v) if u <= v else (v, u))
        self._order = order
        self._edges = tuple(sorted(norm))
        self._adj = None

    @property
    def order(self):
        return self._order

    @property
    def edges(self):
        return self._edges

    @property
    def size(self):
        return len(self._edges)

    @property
    def vertices(self):
        return range(1, self._order + 1)

    def _adjacency(self):
        if self._adj is None:
            adj = {v: {} for v in self.vertices}
            for u, v in self._edges:
                adj[u][v] = adj[u].get(v, 0) + 1
                if u != v:
                    adj[v][u] = adj[v].get(u, 0) + 1
            self._adj = adj
        return self._adj

    def multiplicity(self, u, v):
        if not (1 <= u <= self._order and 1 <= v <= self._order):
            raise DomainError(f"vertex pair ({u},{v}) out of range")
        return self._adjacency()[u].get(v, 0)

    def has_edge(self, u, v):
        return self.multiplicity(u, v) > 0

    def neighbors(self, v):
        """Sorted neighbors of v, excluding v itself."""
        return sorted(u for u in self._adjacency()[v] if u != v)

    def degree(self, v):
        """Vertex degree; a loop contributes 2."""
        adj = self._adjacency()[v]
        return sum(m for u, m in adj.items() if u != v) + 2 * adj.get(v, 0)

    def loop_count(self, v=None):
        if v is not None:
            return self._adjacency()[v].get(v, 0)
        return sum(1 for u, v2 in self._edges if u == v2)

    def is_simple(self):
        if self.loop_count():
            return False
        return all(m <= 1 for adj in self._adjacency().values() for m in adj.values())

    def require_simple(self, what="this operation"):
        if not self.is_simple():
            raise DomainError(f"{what} requires a simple graph")

    # -- surgery -------------------------------------------------------------

    def _check_edge(self, e):
        u, v = e
        e = (u, v) if u <= v else (v, u)
        if e not in self._edges:
            raise NoSuchEdgeError(f"edge {e} not present")
        return e

    def delete_edge(self, e):
        """Remove one copy of e."""
        e = self._check_edge(e)
        edges = list(self._edges)
        edges.remove(e)
        return LabeledMultigraph(self._order, edges)

    def contract_edge(self, e):
        """Merge the endpoints of one copy of e; parallel survivors become loops."""
        e = self._check_edge(e)
        u, v = e
        if u == v:
            raise DomainError("cannot contract a loop")
        edges = list(self._edges)
        edges.remove(e)
        # merge v into u, then renumber to close the gap at v
        merged = []
        for a, b in edges:
            a2 = u if a == v else a
            b2 = u if b == v else b
            merged.append((a2, b2))
        relabel = {w: (w if w < v else w - 1) for w in self.vertices if w != v}
        return LabeledMultigraph(
            self._order - 1, [(relabel[a], relabel[b]) for a, b in merged]
        )

    def extract_edge(self, e):
        """Remove both endpoints of e and every incident edge."""
        e = self._check_edge(e)
        gone = set(e)
        return self.induced_subgraph([w for w in self.vertices if w not in gone])

    def delete_vertex(self, v):
        if not (1 <= v <= self._order):
            raise DomainError(f"vertex {v} out of range")
        return self.induced_subgraph([w for w in self.vertices if w != v])

    def add_edge(self, u, v):
        if not (1 <= u <= self._order and 1 <= v <= self._order):
            raise DomainError(f"edge ({u},{v}) out of range")
        return LabeledMultigraph(self._order, self._edges + ((min(u, v), max(u, v)),))

    def add_vertex(self):
        return LabeledMultigraph(self._order + 1, self._edges)

    def induced_subgraph(self, vertices):
        keep = sorted(set(vertices))
        if keep and not (1 <= keep[0] and keep[-1] <= self._order):
            raise DomainError("induced subgraph vertices out of range")
        relabel = {v: i + 1 for i, v in enumerate(keep)}
        edges = [
            (relabel[a], relabel[b])
            for a, b in self._edges
            if a in relabel and b in relabel
        ]
        return LabeledMultigraph(len(keep), edges)

    def relabel(self, perm):
        """Apply a permutation given as {old: new} or a sequence perm[old-1] = new."""
        if not isinstance(perm, dict):
            perm = {i + 1: p for i, p in enumerate(perm)}
        if sorted(perm) != list(self.vertices) or sorted(perm.values()) != list(
            self.vertices
        ):
            raise DomainError("relabeling is not a permutation of 1..n")
        return LabeledMultigraph(
            self._order, [(perm[a], perm[b]) for a, b in self._edges]
        )

    def disjoint_union(self, other):
        shift = self._order
        edges = list(self._edges) + [(a + shift, b + shift) for a, b in other._edges]
        return LabeledMultigraph(self._order + other._order, edges)

    def one_point_join(self, v_self, other, v_other):
        """Identify v_self with v_other; other's vertices are appended after self's."""
        if not (1 <= v_self <= self._order):
            raise DomainError(f"vertex {v_self} out of range in left graph")
        if not (1 <= v_other <= other._order):
            raise DomainError(f"vertex {v_other} out of range in right graph")
        relabel = {}
        nxt = self._order + 1
        for w in other.vertices:
            if w == v_other:
                relabel[w] = v_self
            else:
                relabel[w] = nxt
                nxt += 1
        edges = list(self._edges) + [(relabel[a], relabel[b]) for a, b in other._edges]
        return LabeledMultigraph(self._order + other._order - 1, edges)

    def complement(self):
        self.require_simple("complement")
        present = set(self._edges)
        edges = [
            (u, v)
            for u in self.vertices
            for v in range(u + 1, self._order + 1)
            if (u, v) not in present
        ]
        return LabeledMultigraph(self._order, edges)

    # -- connectivity ----------------------------------------------------------

    def component_sets(self):
        """Vertex sets of connected components, sorted by least vertex."""
        parent = list(range(self._order + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self._edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        comps = {}
        for v in self.vertices:
            comps.setdefault(find(v), []).append(v)
        return [frozenset(c) for c in sorted(comps.values())]

    def connected_components(self):
        return len(self.component_sets())

    def covered_components(self):
        """Components containing at least one edge (loops count)."""
        touched = set()
        for a, b in self._edges:
            touched.add(a)
            touched.add(b)
        return sum(1 for comp in self.component_sets() if comp & touched)

    def is_connected(self):
        return self._order <= 1 or self.connected_components() == 1

    def is_forest(self):
        """True iff acyclic: no loops, no parallel edges, no cycles."""
        parent = list(range(self._order + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self._edges:
            if a == b:
                return False
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[rb] = ra
        return True

    def is_tree(self):
        return self._order >= 1 and self.is_forest() and self.is_connected()

    def isolated_vertices(self):
        adj = self._adjacency()
        return [v for v in self.vertices if not adj[v]]

    # -- value semantics ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LabeledMultigraph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self):
        return hash((self._order, self._edges))

    def __repr__(self):
        return f"LabeledMultigraph({self._order}, {list(self._edges)})"

    def __getstate__(self):
        return (self._order, self._edges)

    def __setstate__(self, state):
        self._order, self._edges = state
        self._adj = None


# -- standard constructions -------------------------------------------------


def empty_graph(n):
    return LabeledMultigraph(n)


def path_graph(n):
    return LabeledMultigraph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    if n < 3:
        raise DomainError("cycles need at least 3 vertices")
    return LabeledMultigraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_graph(n):
    return LabeledMultigraph(
        n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    )


def star_graph(n):
    """K_{1,n-1} with center 1."""
    if n < 1:
        raise DomainError("star needs at least 1 vertex")
    return LabeledMultigraph(n, [(1, v) for v in range(2, n + 1)])


def complete_bipartite(a, b):
    return LabeledMultigraph(
        a + b, [(u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)]
    )


def p5_hat():
    """The 5-path with an extra edge joining its two stems."""
    return path_graph(5).add_edge(2, 4)
