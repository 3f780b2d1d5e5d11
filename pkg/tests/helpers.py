"""Shared test utilities: brute-force oracles and random graph sources."""

import itertools

from graphpolylab.graphs import LabeledMultigraph


def random_multigraph(rng, max_order=5, p_edge=0.35, p_double=0.08, loops=True):
    n = rng.randint(1, max_order)
    edges = []
    for u in range(1, n + 1):
        lo = u if loops else u + 1
        for v in range(lo, n + 1):
            r = rng.random()
            if r < p_edge:
                edges.append((u, v))
            if r < p_double:
                edges.append((u, v))
    return LabeledMultigraph(n, edges)


def random_simple(rng, n, p=0.5):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return LabeledMultigraph(n, edges)


def all_permutations_of(g):
    for perm in itertools.permutations(range(1, g.order + 1)):
        yield g.relabel({i + 1: perm[i] for i in range(g.order)})


def brute_isomorphic(g, h):
    if g.order != h.order or g.size != h.size:
        return False
    return any(k.edges == h.edges for k in all_permutations_of(g))


def brute_automorphism_count(g):
    return sum(1 for k in all_permutations_of(g) if k.edges == g.edges)


def all_labeled_simple_graphs(n):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield LabeledMultigraph(
            n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        )


def subsets(iterable):
    items = list(iterable)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)
