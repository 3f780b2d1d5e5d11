"""Canonical labeling, isomorphism, and automorphism machinery.

The algorithm is individualization-refinement: refine an ordered partition
of the vertices until it is equitable (multiplicity-aware), then branch on
the vertices of the first non-singleton cell.  Each discrete partition is a
candidate labeling; its code is the column-major multiplicity vector of the
relabeled adjacency matrix (loops on the diagonal).  The canonical labeling
is the leaf maximizing the code, i.e. the edge list is the least one (in
column-major pair order) reachable under the invariant cell ordering, which
makes it a deterministic representative of the isomorphism class: two
graphs are isomorphic iff their canonical edge lists (plus orders) agree.
Leaves whose code collides with the first or the best leaf yield
automorphisms; their orbits prune sibling branches, which keeps star-like
and edgeless graphs tractable.

Budgeted for order <= 32; every experiment in this package is desk-scale
(the largest inputs are mate certificates over order-20 forest hosts).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import LabeledMultigraph

_MAX_ORDER = 32


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical edge list plus |Aut(G)|; equal forms <=> isomorphic graphs."""

    order: int
    edges: tuple
    automorphism_count: int

    @property
    def key(self):
        return (self.order, self.edges)


def _refine(n, adj, partition):
    """Equitable refinement; returns a stable ordered partition."""
    cells = [list(c) for c in partition]
    while True:
        changed = False
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for u in cell:
                row = adj[u]
                sig = tuple(
                    tuple(sorted(row[w] for w in other if w in row)) for other in cells
                )
                groups.setdefault(sig, []).append(u)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(sorted(groups[sig]))
        cells = new_cells
        if not changed:
            return cells


def _code_of(n, adj, label_of):
    """Column-major multiplicity vector of the relabeled adjacency matrix."""
    vertex_at = [0] * (n + 1)
    for v, lab in enumerate(label_of):
        if v:
            vertex_at[lab] = v
    code = []
    for j in range(1, n + 1):
        row = adj[vertex_at[j]]
        for i in range(1, j + 1):
            code.append(row.get(vertex_at[i], 0))
    return tuple(code)


class _Search:
    def __init__(self, g, colors=None):
        self.n = g.order
        adj = {}
        for v in g.vertices:
            adj[v] = {}
        for a, b in g.edges:
            adj[a][b] = adj[a].get(b, 0) + 1
            if a != b:
                adj[b][a] = adj[b].get(a, 0) + 1
        self.adj = adj
        colors = colors or {}
        groups = {}
        for v in g.vertices:
            key = (colors.get(v, 0), adj[v].get(v, 0))
            groups.setdefault(key, []).append(v)
        self.initial = [sorted(groups[k]) for k in sorted(groups)]
        self.first_code = None
        self.first_label = None
        self.best_code = None
        self.best_label = None
        self.generators = []
        self.uf = list(range(self.n + 1))

    def _find(self, x):
        uf = self.uf
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def _record(self, lab_a, lab_b):
        """lab_a and lab_b produce equal codes, so lab_b^-1 . lab_a in Aut(G)."""
        n = self.n
        inv_b = [0] * (n + 1)
        for v in range(1, n + 1):
            inv_b[lab_b[v]] = v
        gamma = tuple(inv_b[lab_a[v]] for v in range(1, n + 1))
        if gamma == tuple(range(1, n + 1)):
            return
        self.generators.append(gamma)
        for v in range(1, n + 1):
            ra, rb = self._find(v), self._find(gamma[v - 1])
            if ra != rb:
                self.uf[rb] = ra

    def _leaf(self, partition):
        n = self.n
        label_of = [0] * (n + 1)
        for i, cell in enumerate(partition):
            label_of[cell[0]] = i + 1
        code = _code_of(n, self.adj, label_of)
        if self.first_code is None:
            self.first_code = code
            self.first_label = label_of
            self.best_code = code
            self.best_label = label_of
            return
        matched = False
        if code == self.first_code:
            self._record(label_of, self.first_label)
            matched = True
        # maximizing the multiplicity vector = minimizing the edge list in
        # the column-major pair order (edges get the earliest possible slots)
        if code > self.best_code:
            self.best_code = code
            self.best_label = label_of
        elif code == self.best_code and not matched:
            self._record(label_of, self.best_label)

    def _dfs(self, partition):
        partition = _refine(self.n, self.adj, partition)
        target = None
        for i, cell in enumerate(partition):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            self._leaf(partition)
            return
        cell = partition[target]
        processed = []
        for v in cell:
            rv = self._find(v)
            if any(self._find(w) == rv for w in processed):
                continue
            rest = [w for w in cell if w != v]
            child = partition[:target] + [[v], rest] + partition[target + 1 :]
            self._dfs(child)
            processed.append(v)

    def run(self):
        if self.n == 0:
            self.best_label = [0]
            self.best_code = ()
            return self
        self._dfs(self.initial)
        return self


def _aut_order(n, generators):
    if not generators:
        return 1
    from sympy.combinatorics import Permutation, PermutationGroup

    perms = [Permutation([gamma[v] - 1 for v in range(n)]) for gamma in generators]
    return int(PermutationGroup(perms).order())


def _run_search(g, colors=None):
    if g.order > _MAX_ORDER:
        raise DomainError(
            f"canonical labeling budgeted for order <= {_MAX_ORDER}, got {g.order}"
        )
    return _Search(g, colors).run()


def canonical_form(g):
    """CanonicalForm of g; cached on the graph instance."""
    cached = getattr(g, "_canon_form", None)
    if cached is not None:
        return cached
    search = _run_search(g)
    label_of = search.best_label
    edges = tuple(
        sorted(
            (min(label_of[a], label_of[b]), max(label_of[a], label_of[b]))
            for a, b in g.edges
        )
    )
    form = CanonicalForm(g.order, edges, _aut_order(g.order, search.generators))
    g._canon_form = form
    return form


def canonical_key(g):
    return canonical_form(g).key


def canonical_labeling(g):
    """A permutation {vertex: label} realizing the canonical form."""
    search = _run_search(g)
    return {v: search.best_label[v] for v in g.vertices}


def canonical_graph(g):
    return g.relabel(canonical_labeling(g)) if g.order else g


def are_isomorphic(g, h):
    return g.order == h.order and canonical_key(g) == canonical_key(h)


def automorphism_generators(g):
    return list(_run_search(g).generators)


def automorphism_orbits(g):
    """Vertex orbits of Aut(g), as a sorted list of sorted tuples."""
    search = _run_search(g)
    reps = {}
    for v in g.vertices:
        reps.setdefault(search._find(v), []).append(v)
    return sorted(tuple(sorted(orbit)) for orbit in reps.values())


def rooted_canonical_key(g, root):
    """Canonical key of (g, root); equal keys <=> root-preserving isomorphism.

    Only comparable against other rooted keys.
    """
    if not (1 <= root <= g.order):
        raise DomainError(f"root {root} out of range")
    search = _run_search(g, colors={root: 1})
    return (g.order, search.best_code)


def isomorphic_rooted(g, root_g, h, root_h):
    if g.order != h.order:
        return False
    return rooted_canonical_key(g, root_g) == rooted_canonical_key(h, root_h)
