"""Planarity predicate.

Backed by networkx's left-right planarity criterion.  Loops and parallel
edges never affect planarity, so multigraphs are tested via their simple
support.
"""

from __future__ import annotations

import networkx as nx


def is_planar(g):
    if g.order <= 4:
        return True
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((a, b) for a, b in g.edges if a != b)
    ok, _ = nx.check_planarity(G, counterexample=False)
    return ok
