import itertools
import random

import pytest

from graphpolylab.canon import canonical_key
from graphpolylab.classes import enumerate_class
from graphpolylab.errors import DomainError, StaleOccurrenceError
from graphpolylab.graphs import (
    LabeledMultigraph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from graphpolylab.pendants import (
    PendantOccurrence,
    RootedPendant,
    count_pendant_occurrences,
    find_pendant_occurrences,
    graft_pendant,
    occurrence_of_graft,
    replace_pendant,
)

from helpers import random_simple, subsets

K2_ROOT1 = RootedPendant(complete_graph(2), 1)


def test_rooted_pendant_validation():
    with pytest.raises(DomainError):
        RootedPendant(complete_graph(2), 3)
    with pytest.raises(DomainError):
        RootedPendant(LabeledMultigraph(2), 1)  # disconnected
    with pytest.raises(DomainError):
        RootedPendant(LabeledMultigraph(1, [(1, 1)]), 1)  # loop


def test_path4_k2_single_occurrence():
    occs = find_pendant_occurrences(path_graph(4), K2_ROOT1)
    assert len(occs) == 1
    assert occs[0].witness == (3, 4)
    assert occs[0].root == 3
    assert occs[0].crossing_edge == (2, 3)


def test_star_has_no_k2_occurrences():
    assert find_pendant_occurrences(star_graph(5), K2_ROOT1) == []


def test_pendant_must_be_smaller_than_host():
    with pytest.raises(DomainError):
        find_pendant_occurrences(complete_graph(2), K2_ROOT1)


def test_labeled_mode_requires_root_to_hit_min_witness():
    # same K2 pendant rooted at 2: increasing bijection sends 2 to max(W),
    # never to the crossing vertex min(W)
    occs = find_pendant_occurrences(path_graph(4), RootedPendant(complete_graph(2), 2))
    assert occs == []


def naive_occurrences(g, pendant, relaxed):
    """Brute-force oracle: try all witness sets and, for the relaxed mode,
    all explicit bijections."""
    h = pendant.graph.order
    out = []
    for w in itertools.combinations(g.vertices, h):
        wset = set(w)
        crossing = [e for e in g.edges if (e[0] in wset) != (e[1] in wset)]
        if len(crossing) != 1:
            continue
        edge = crossing[0]
        inside = edge[0] if edge[0] in wset else edge[1]
        induced_edges = {e for e in g.edges if e[0] in wset and e[1] in wset}
        if relaxed:
            found = False
            for perm in itertools.permutations(w):
                mapping = {i + 1: perm[i] for i in range(h)}
                if mapping[pendant.root] != inside:
                    continue
                mapped = {
                    (min(mapping[a], mapping[b]), max(mapping[a], mapping[b]))
                    for a, b in pendant.graph.edges
                }
                if mapped == induced_edges:
                    found = True
                    break
            if not found:
                continue
        else:
            if inside != w[0] or w[pendant.root - 1] != inside:
                continue
            mapped = {
                (min(w[a - 1], w[b - 1]), max(w[a - 1], w[b - 1]))
                for a, b in pendant.graph.edges
            }
            if mapped != induced_edges:
                continue
        out.append((w, edge))
    return out


@pytest.mark.parametrize("relaxed", [False, True])
def test_agrees_with_naive_all_subsets_checker(relaxed):
    pendants = [
        RootedPendant(complete_graph(2), 1),
        RootedPendant(complete_graph(2), 2),
        RootedPendant(path_graph(3), 1),
        RootedPendant(path_graph(3), 2),
        RootedPendant(complete_graph(3), 1),
    ]
    for n in range(4, 8):
        for g in enumerate_class("all", n):
            for pendant in pendants:
                got = [
                    (o.witness, o.crossing_edge)
                    for o in find_pendant_occurrences(g, pendant, relaxed=relaxed)
                ]
                assert got == naive_occurrences(g, pendant, relaxed)


def test_graft_examples():
    assert graft_pendant(LabeledMultigraph(1), 1, K2_ROOT1) == path_graph(3)
    g = graft_pendant(cycle_graph(4), 1, RootedPendant(LabeledMultigraph(1), 1))
    assert g.order == 5 and g.size == 5 and g.degree(5) == 1
    with pytest.raises(DomainError):
        graft_pendant(complete_graph(2), 7, K2_ROOT1)


def test_graft_then_relaxed_find_succeeds_50_random_pairs():
    rng = random.Random(18)
    for _ in range(50):
        core = random_simple(rng, rng.randint(1, 6))
        p_order = rng.randint(1, 4)
        tree = None
        while tree is None or not tree.is_connected():
            tree = random_simple(rng, p_order, p=0.7)
        pendant = RootedPendant(tree, rng.randint(1, p_order))
        attach = rng.randint(1, core.order)
        g = graft_pendant(core, attach, pendant)
        assert len(find_pendant_occurrences(g, pendant, relaxed=True)) >= 1


def test_occurrence_of_graft_is_valid_and_relaxed_findable():
    occ = occurrence_of_graft(complete_graph(3), 2, RootedPendant(path_graph(3), 2))
    assert occ.witness == (4, 5, 6)
    assert occ.inside_endpoint == 5
    assert occ.outside_endpoint == 2


def test_replace_identity_swap_is_isomorphic():
    occ = occurrence_of_graft(complete_graph(3), 1, K2_ROOT1)
    h = replace_pendant(occ.host, occ, K2_ROOT1)
    assert canonical_key(h) == canonical_key(occ.host)


def test_replace_preserves_order_and_size_for_equal_pendants():
    # pendant path-on-3 rooted at an end, replaced by one rooted at the middle
    occ = occurrence_of_graft(LabeledMultigraph(2, [(1, 2)]), 2, RootedPendant(path_graph(3), 1))
    g = occ.host
    assert g.order == 5 and g.size == 4
    h = replace_pendant(g, occ, RootedPendant(path_graph(3), 2))
    assert h.order == 5 and h.size == 4
    assert canonical_key(h) != canonical_key(g)


def test_stale_occurrence_rejected():
    occ = occurrence_of_graft(complete_graph(3), 1, K2_ROOT1)
    tampered = occ.host.add_edge(1, 4)
    with pytest.raises(StaleOccurrenceError):
        replace_pendant(tampered, PendantOccurrence(occ.host, occ.witness, occ.root, occ.crossing_edge), K2_ROOT1)
    # second crossing edge breaks revalidation even with matching host
    broken = occ.host.add_edge(2, 5)
    occ2 = PendantOccurrence(broken, occ.witness, occ.root, occ.crossing_edge)
    with pytest.raises(StaleOccurrenceError):
        replace_pendant(broken, occ2, K2_ROOT1)


def test_count_pendant_occurrences_zero_for_oversized():
    assert count_pendant_occurrences(complete_graph(2), K2_ROOT1) == 0
