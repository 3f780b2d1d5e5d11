"""Pendant appearances: detection, grafting, and replacement.

A pendant appearance of a rooted connected graph (H, r) inside a host G is
a vertex subset W inducing a copy of H that is attached to the rest of G by
exactly one edge.  Two matching modes are supported:

* labeled-exact: the increasing bijection {1..|W|} -> W must be an
  isomorphism H -> G[W], the unique crossing edge must be incident with
  min(W), and the bijection must carry the pendant root to min(W).
* relaxed: any isomorphism H -> G[W] carrying the root to the crossing-edge
  endpoint qualifies.

The mate constructions only need the relaxed mode; pendant-frequency
counting uses the labeled-exact mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import rooted_canonical_key
from .errors import DomainError, StaleOccurrenceError
from .graphs import LabeledMultigraph


@dataclass(frozen=True)
class RootedPendant:
    """A connected simple graph with a distinguished root vertex."""

    graph: LabeledMultigraph
    root: int

    def __post_init__(self):
        if not (1 <= self.root <= self.graph.order):
            raise DomainError(f"root {self.root} out of range")
        self.graph.require_simple("RootedPendant")
        if not self.graph.is_connected():
            raise DomainError("pendant graph must be connected")


@dataclass(frozen=True)
class PendantOccurrence:
    """A witness set W plus its unique crossing edge inside a host graph."""

    host: LabeledMultigraph
    witness: tuple
    root: int  # least element of W
    crossing_edge: tuple

    @property
    def inside_endpoint(self):
        a, b = self.crossing_edge
        return a if a in self.witness else b

    @property
    def outside_endpoint(self):
        a, b = self.crossing_edge
        return b if a in self.witness else a


def _crossing_edges(g, wset):
    return [e for e in g.edges if (e[0] in wset) != (e[1] in wset)]


def find_pendant_occurrences(g, pendant, relaxed=False):
    """All pendant appearances of (pendant.graph, pendant.root) in g."""
    g.require_simple("find_pendant_occurrences")
    h = pendant.graph.order
    if g.order <= h:
        raise DomainError("host must have more vertices than the pendant")
    pendant_edges = set(pendant.graph.edges)
    out = []
    for wtuple in combinations(g.vertices, h):
        wset = set(wtuple)
        crossing = _crossing_edges(g, wset)
        if len(crossing) != 1:
            continue
        edge = crossing[0]
        inside = edge[0] if edge[0] in wset else edge[1]
        if relaxed:
            induced = g.induced_subgraph(wtuple)
            inside_rank = wtuple.index(inside) + 1
            if induced.size != pendant.graph.size:
                continue
            if rooted_canonical_key(induced, inside_rank) != rooted_canonical_key(
                pendant.graph, pendant.root
            ):
                continue
        else:
            if inside != wtuple[0]:
                continue  # crossing edge must sit at the least element of W
            if wtuple[pendant.root - 1] != inside:
                continue  # increasing bijection must carry the root there
            mapped = {
                (min(wtuple[a - 1], wtuple[b - 1]), max(wtuple[a - 1], wtuple[b - 1]))
                for a, b in pendant_edges
            }
            induced_edges = {
                e for e in g.edges if e[0] in wset and e[1] in wset
            }
            if mapped != induced_edges:
                continue
        out.append(PendantOccurrence(g, wtuple, wtuple[0], edge))
    return out


def count_pendant_occurrences(g, pendant):
    """Labeled-exact pendant count; zero when the pendant is too large."""
    if g.order <= pendant.graph.order:
        return 0
    return len(find_pendant_occurrences(g, pendant, relaxed=False))


def graft_pendant(core, attach, pendant):
    """Attach a fresh copy of the pendant to `attach` by one edge at its root."""
    if not (1 <= attach <= core.order):
        raise DomainError(f"attach vertex {attach} out of range")
    shift = core.order
    edges = list(core.edges)
    edges.extend((a + shift, b + shift) for a, b in pendant.graph.edges)
    edges.append((attach, shift + pendant.root))
    return LabeledMultigraph(core.order + pendant.graph.order, edges)


def occurrence_of_graft(core, attach, pendant):
    """The PendantOccurrence created by graft_pendant with the same arguments."""
    g = graft_pendant(core, attach, pendant)
    shift = core.order
    witness = tuple(range(shift + 1, shift + pendant.graph.order + 1))
    edge = (min(attach, shift + pendant.root), max(attach, shift + pendant.root))
    return PendantOccurrence(g, witness, witness[0], edge)


def _revalidate(g, occ):
    if occ.host != g:
        raise StaleOccurrenceError("occurrence belongs to a different host graph")
    wset = set(occ.witness)
    crossing = _crossing_edges(g, wset)
    if crossing != [occ.crossing_edge]:
        raise StaleOccurrenceError("witness set no longer has that unique crossing edge")


def replace_pendant(g, occ, q):
    """Swap the witnessed pendant for q, re-grafting at the old host endpoint."""
    _revalidate(g, occ)
    outside = occ.outside_endpoint
    keep = [v for v in g.vertices if v not in set(occ.witness)]
    relabel = {v: i + 1 for i, v in enumerate(keep)}
    core = g.induced_subgraph(keep)
    return graft_pendant(core, relabel[outside], q)
