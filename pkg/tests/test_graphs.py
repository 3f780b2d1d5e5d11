import random

import pytest

from graphpolylab.classes import enumerate_class
from graphpolylab.errors import DomainError, NoSuchEdgeError
from graphpolylab.graphs import (
    LabeledMultigraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    p5_hat,
    path_graph,
    star_graph,
)


def test_edge_endpoint_validation():
    with pytest.raises(DomainError):
        LabeledMultigraph(2, [(1, 3)])
    with pytest.raises(DomainError):
        LabeledMultigraph(2, [(0, 1)])


def test_contract_triangle_gives_double_edge():
    g = complete_graph(3).contract_edge((1, 2))
    assert g.order == 2
    assert g.edges == ((1, 2), (1, 2))


def test_extract_k2_gives_empty_graph():
    g = complete_graph(2).extract_edge((1, 2))
    assert g.order == 0 and g.size == 0


def test_delete_k2_gives_isolated_pair():
    g = complete_graph(2).delete_edge((1, 2))
    assert g.order == 2 and g.size == 0


def test_contract_keeps_parallels_and_makes_loops():
    g = LabeledMultigraph(2, [(1, 2), (1, 2), (1, 2)])
    c = g.contract_edge((1, 2))
    assert c.order == 1
    assert c.edges == ((1, 1), (1, 1))


def test_contract_loop_rejected():
    g = LabeledMultigraph(1, [(1, 1)])
    with pytest.raises(DomainError):
        g.contract_edge((1, 1))


def test_missing_edge_errors():
    with pytest.raises(NoSuchEdgeError):
        path_graph(3).delete_edge((1, 3))


def test_join_and_union_examples():
    j = complete_graph(2).one_point_join(2, complete_graph(2), 1)
    assert j.edges == path_graph(3).edges and j.order == 3
    u = LabeledMultigraph(1).disjoint_union(LabeledMultigraph(1))
    assert u.order == 2 and u.size == 0
    tri_pend = complete_graph(3).one_point_join(1, complete_graph(2), 1)
    assert tri_pend.order == 4 and tri_pend.size == 4
    assert sorted(tri_pend.degree(v) for v in tri_pend.vertices) == [1, 2, 2, 3]


def test_join_validates_vertices():
    with pytest.raises(DomainError):
        complete_graph(2).one_point_join(5, complete_graph(2), 1)


def test_surgery_bookkeeping_all_graphs_up_to_6():
    for n in range(1, 7):
        for g in enumerate_class("all", n):
            for e in set(g.edges):
                assert g.delete_edge(e).size == g.size - 1
                assert g.extract_edge(e).order == g.order - 2
                if e[0] != e[1]:
                    assert g.contract_edge(e).order == g.order - 1


def test_renumbering_preserves_relative_order():
    g = path_graph(5).delete_vertex(3)
    # old 1,2,4,5 -> new 1,2,3,4; surviving edges (1,2) and (4,5)->(3,4)
    assert g.edges == ((1, 2), (3, 4))


def test_components_and_covered():
    g = LabeledMultigraph(3, [(1, 2)])
    assert g.connected_components() == 2
    assert g.covered_components() == 1
    loop = LabeledMultigraph(2, [(1, 1)])
    assert loop.covered_components() == 1
    assert empty_graph(4).covered_components() == 0


def test_forest_and_tree_predicates():
    assert path_graph(6).is_forest() and path_graph(6).is_tree()
    assert not cycle_graph(4).is_forest()
    assert not LabeledMultigraph(2, [(1, 2), (1, 2)]).is_forest()
    assert not LabeledMultigraph(1, [(1, 1)]).is_forest()
    forest = path_graph(3).disjoint_union(path_graph(2))
    assert forest.is_forest() and not forest.is_tree()


def test_complement():
    assert complete_graph(4).complement().size == 0
    assert path_graph(3).complement().edges == ((1, 3),)
    with pytest.raises(DomainError):
        LabeledMultigraph(1, [(1, 1)]).complement()


def test_degree_counts_loops_twice():
    g = LabeledMultigraph(2, [(1, 1), (1, 2)])
    assert g.degree(1) == 3
    assert g.degree(2) == 1
    assert g.loop_count() == 1


def test_star_and_p5hat_shapes():
    s = star_graph(5)
    assert sorted(s.degree(v) for v in s.vertices) == [1, 1, 1, 1, 4]
    h = p5_hat()
    assert h.size == 5 and h.order == 5
    assert h.has_edge(2, 4)


def test_relabel_is_permutation_checked():
    with pytest.raises(DomainError):
        path_graph(3).relabel({1: 1, 2: 2, 3: 2})


def test_induced_subgraph_random_consistency():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(2, 7)
        g = LabeledMultigraph(
            n,
            [
                (u, v)
                for u in range(1, n + 1)
                for v in range(u, n + 1)
                if rng.random() < 0.4
            ],
        )
        keep = sorted(rng.sample(range(1, n + 1), rng.randint(1, n)))
        sub = g.induced_subgraph(keep)
        assert sub.order == len(keep)
        expected = sum(1 for a, b in g.edges if a in keep and b in keep)
        assert sub.size == expected
