"""Mate constructions: pairs of non-isomorphic graphs sharing a polynomial.

Each construction returns a MateCertificate carrying both graphs, the
polynomial id, and two independently checked bits: exact polynomial
equality and non-isomorphism.  Equality is a theorem for every construction
here; non-isomorphism can genuinely fail on symmetric inputs, so it is
verified per instance rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import (
    automorphism_orbits,
    canonical_key,
    rooted_canonical_key,
)
from .classes import enumerate_class
from .errors import DomainError, GraphPolyLabError, ResourceBudgetError
from .graph6 import write_graph6
from .graphs import LabeledMultigraph, path_graph
from .invariants import compute
from .invariants.covered import covered_components_poly_fast
from .invariants.domination import domination_poly
from .invariants.sets import clique_poly
from .invariants.spectral import char_poly_adjacency, char_poly_laplacian
from .pendants import RootedPendant, _revalidate, graft_pendant, replace_pendant
from .utils import random_forest


@dataclass(frozen=True)
class PseudosimilarPair:
    """A tree with vertices u, v whose deletions share a characteristic
    polynomial while no automorphism carries u to v.

    `removal_isomorphic` upgrades the deletions from cospectral to actually
    isomorphic.  The weak form is what the spectral swap needs (the classic
    order-9 gadget is of this kind: its deletions are cospectral but not
    isomorphic); the strong form is what the covered-components swap needs
    (the smallest instance is the unique order-11 tree).
    """

    tree: LabeledMultigraph
    u: int
    v: int
    removal_isomorphic: bool = False

    def __post_init__(self):
        if not self.tree.is_tree():
            raise DomainError("pseudosimilar pairs are searched in trees")
        if self.u == self.v:
            raise DomainError("u and v must differ")
        del_u = self.tree.delete_vertex(self.u)
        del_v = self.tree.delete_vertex(self.v)
        iso = canonical_key(del_u) == canonical_key(del_v)
        if not iso and char_poly_adjacency(del_u) != char_poly_adjacency(del_v):
            raise DomainError("tree-u and tree-v are not even cospectral")
        object.__setattr__(self, "removal_isomorphic", iso)
        for orbit in automorphism_orbits(self.tree):
            if self.u in orbit and self.v in orbit:
                raise DomainError("an automorphism maps u to v; vertices are similar")


@dataclass(frozen=True)
class MateCertificate:
    g: LabeledMultigraph
    h: LabeledMultigraph
    polynomial_id: str
    construction: str
    equal: bool
    nonisomorphic: bool

    @property
    def valid(self):
        return self.equal and self.nonisomorphic

    def to_json_dict(self):
        return {
            "construction": self.construction,
            "g": write_graph6(self.g),
            "h": write_graph6(self.h),
            "polynomial_id": self.polynomial_id,
            "equal": self.equal,
            "nonisomorphic": self.nonisomorphic,
            "polynomial": compute(self.polynomial_id, self.g).to_text()
            if self.equal
            else None,
        }


def _certificate(g, h, polynomial_id, construction, value_of):
    equal = value_of(g) == value_of(h)
    noniso = canonical_key(g) != canonical_key(h)
    return MateCertificate(g, h, polynomial_id, construction, equal, noniso)


def find_pseudosimilar_trees(max_order):
    """All (tree, u, v) with cospectral deletions but u, v in different
    automorphism orbits, over all trees up to max_order.  Pairs whose
    deletions are isomorphic carry removal_isomorphic=True."""
    if max_order > 12:
        raise ResourceBudgetError("pseudosimilar search budgeted for order <= 12")
    out = []
    for n in range(2, max_order + 1):
        for tree in enumerate_class("trees", n):
            orbits = automorphism_orbits(tree)
            orbit_of = {}
            for i, orbit in enumerate(orbits):
                for w in orbit:
                    orbit_of[w] = i
            spectra = {}
            for w in tree.vertices:
                spectra[w] = char_poly_adjacency(tree.delete_vertex(w))
            for u in tree.vertices:
                for v in range(u + 1, n + 1):
                    if orbit_of[u] == orbit_of[v] or spectra[u] != spectra[v]:
                        continue
                    out.append(PseudosimilarPair(tree, u, v))
    return out


def _validate_pendant_occurrence(g, occ, pair):
    _revalidate(g, occ)
    induced = g.induced_subgraph(occ.witness)
    inside_rank = occ.witness.index(occ.inside_endpoint) + 1
    if rooted_canonical_key(induced, inside_rank) != rooted_canonical_key(
        pair.tree, pair.v
    ):
        raise DomainError(
            "occurrence does not match the pseudosimilar tree rooted at v"
        )


def schwenk_swap(g, occ, pair):
    """Re-root a pendant pseudosimilar tree from v to u; preserves the
    adjacency characteristic polynomial by the bridge-join recurrence."""
    _validate_pendant_occurrence(g, occ, pair)
    h = replace_pendant(g, occ, RootedPendant(pair.tree, pair.u))
    return _certificate(g, h, "char_adj", "schwenk_swap", char_poly_adjacency)


def xi_swap(g, occ, pair):
    """Same pendant re-rooting; preserves the covered-components polynomial
    (hence the edge elimination polynomial, Tutte, and matching values).

    Needs the strong gadget: the one-point-join expansion of C makes
    C(G_v) - C(G_u) a multiple of C(tree-v) - C(tree-u), so the deletions
    must be isomorphic, not merely cospectral.
    """
    if not pair.removal_isomorphic:
        raise DomainError(
            "xi_swap needs a pair with isomorphic deletions; this one is only cospectral"
        )
    _validate_pendant_occurrence(g, occ, pair)
    h = replace_pendant(g, occ, RootedPendant(pair.tree, pair.u))
    return _certificate(g, h, "covered_C", "xi_swap", covered_components_poly_fast)


def stem_toggle(g):
    """Delete an edge joining two stems; dominating sets are unchanged.

    Returns None when g has no adjacent stem pair (not applicable).
    """
    stems = {
        v for v in g.vertices if any(g.degree(u) == 1 for u in g.neighbors(v))
    }
    edge = next(
        (e for e in g.edges if e[0] != e[1] and e[0] in stems and e[1] in stems),
        None,
    )
    if edge is None:
        return None
    h = g.delete_edge(edge)
    return _certificate(g, h, "dom", "stem_toggle", domination_poly)


def _path_ends(induced):
    ends = [v for v in induced.vertices if induced.degree(v) == 1]
    degs = sorted(induced.degree(v) for v in induced.vertices)
    if not (
        induced.order == 5
        and induced.size == 4
        and induced.is_connected()
        and degs == [1, 1, 2, 2, 2]
    ):
        raise DomainError("occurrence does not induce a path on five vertices")
    return ends


def p5_graft_swap(g, occ):
    """Add the stem-stem edge inside a pendant 5-path; preserves Dom.

    The pendant root must keep both path ends as leaves of g (root at the
    2nd, 3rd, or 4th path vertex).
    """
    _revalidate(g, occ)
    induced = g.induced_subgraph(occ.witness)
    ends = _path_ends(induced)
    inside_rank = occ.witness.index(occ.inside_endpoint) + 1
    if inside_rank in ends:
        raise DomainError("pendant root is a path end; its leaf status would break")
    stems = sorted(
        {w for end in ends for w in induced.neighbors(end)}
    )
    stem_vertices = tuple(occ.witness[s - 1] for s in stems)
    h = g.add_edge(*stem_vertices)
    return _certificate(g, h, "dom", "p5_graft_swap", domination_poly)


def clique_root_swap(g, occ):
    """Re-root a pendant 3-path from an end to the middle; preserves the
    clique polynomial (no clique of size 3 or more can meet the pendant)."""
    _revalidate(g, occ)
    induced = g.induced_subgraph(occ.witness)
    if not (
        induced.order == 3
        and induced.size == 2
        and sorted(induced.degree(v) for v in induced.vertices) == [1, 1, 2]
    ):
        raise DomainError("occurrence does not induce a path on three vertices")
    inside_rank = occ.witness.index(occ.inside_endpoint) + 1
    if induced.degree(inside_rank) != 1:
        raise DomainError("pendant 3-path must be rooted at an end vertex")
    h = replace_pendant(g, occ, RootedPendant(path_graph(3), 2))
    return _certificate(g, h, "clique", "clique_root_swap", clique_poly)


def verify_mate(g, h, polynomial_id):
    """Exact polynomial equality plus canonical-form non-isomorphism."""
    return _certificate(g, h, polynomial_id, "search", lambda x: compute(polynomial_id, x))


def laplacian_swap_search(max_order, hosts=50, seed=0):
    """Exploratory: hunt for a pendant re-rooting gadget that preserves the
    Laplacian characteristic polynomial.  May (and at small orders does)
    return an empty list.
    """
    import random

    if max_order > 10:
        raise ResourceBudgetError("Laplacian gadget search budgeted for order <= 10")
    rng = random.Random(seed)
    candidates = []
    seen = set()

    def try_gadget(graph, u, v):
        if canonical_key(graph.delete_vertex(u)) != canonical_key(
            graph.delete_vertex(v)
        ):
            return
        probe = (canonical_key(graph), u, v)
        if probe in seen:
            return
        seen.add(probe)
        for _ in range(hosts):
            host = random_forest(rng, 1, 8)
            attach = rng.randint(1, host.order)
            g1 = graft_pendant(host, attach, RootedPendant(graph, v))
            g2 = graft_pendant(host, attach, RootedPendant(graph, u))
            if char_poly_laplacian(g1) != char_poly_laplacian(g2):
                return
        candidates.append({"graph": graph, "u": u, "v": v, "hosts_checked": hosts})

    for n in range(2, max_order + 1):
        for tree in enumerate_class("trees", n):
            orbits = automorphism_orbits(tree)
            orbit_of = {}
            for i, orbit in enumerate(orbits):
                for w in orbit:
                    orbit_of[w] = i
            for u in tree.vertices:
                for v in range(u + 1, tree.order + 1):
                    if orbit_of[u] != orbit_of[v]:
                        try_gadget(tree, u, v)
    for n in range(2, min(max_order, 7) + 1):
        for graph in enumerate_class("all", n):
            if not graph.is_connected() or graph.is_tree():
                continue
            orbits = automorphism_orbits(graph)
            orbit_of = {}
            for i, orbit in enumerate(orbits):
                for w in orbit:
                    orbit_of[w] = i
            for u in graph.vertices:
                for v in range(u + 1, graph.order + 1):
                    if orbit_of[u] != orbit_of[v]:
                        try_gadget(graph, u, v)
    return candidates


_gadget_cache = {}


def schwenk_tree_pair(order=9):
    """The pinned spectral gadget: the order-9 pair whose deleted-vertex
    characteristic polynomial is x^8 - 6x^6 + 10x^4 - 4x^2."""
    from .polynomial import SparsePolynomial

    if "schwenk" in _gadget_cache:
        return _gadget_cache["schwenk"]
    x = SparsePolynomial.variable("x")
    target = x**8 - 6 * x**6 + 10 * x**4 - 4 * x**2
    for pair in find_pseudosimilar_trees(order):
        if pair.tree.order != order:
            continue
        if char_poly_adjacency(pair.tree.delete_vertex(pair.v)) == target:
            _gadget_cache["schwenk"] = pair
            return pair
    raise GraphPolyLabError("pinned pseudosimilar tree not found")


def xi_tree_pair(max_order=11):
    """The pinned strong gadget: the smallest tree with truly pseudosimilar
    vertices (isomorphic deletions, distinct orbits); unique at order 11."""
    if "xi" in _gadget_cache:
        return _gadget_cache["xi"]
    for pair in find_pseudosimilar_trees(max_order):
        if pair.removal_isomorphic:
            _gadget_cache["xi"] = pair
            return pair
    raise GraphPolyLabError("no removal-isomorphic pseudosimilar tree found")
