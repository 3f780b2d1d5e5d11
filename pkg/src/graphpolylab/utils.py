"""Seeded random graph sources and a deterministic parallel map."""

from __future__ import annotations

import heapq
import os
from multiprocessing import Pool

from .errors import DomainError
from .graphs import LabeledMultigraph


def prufer_decode(seq, n):
    """Labeled tree on 1..n from a coding sequence in [1..n]^(n-2)."""
    if n < 1:
        raise DomainError("trees need at least one vertex")
    if len(seq) != max(0, n - 2):
        raise DomainError("coding sequence must have length n - 2")
    if n == 1:
        return LabeledMultigraph(1)
    degree = [1] * (n + 1)
    for s in seq:
        if not 1 <= s <= n:
            raise DomainError("coding sequence entry out of range")
        degree[s] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return LabeledMultigraph(n, edges)


def random_tree(n, rng):
    """Uniform labeled tree via a uniform coding sequence."""
    return prufer_decode([rng.randint(1, n) for _ in range(max(0, n - 2))], n)


def random_forest(rng, min_order=1, max_order=12):
    """A forest assembled from one to three uniform random trees."""
    total = rng.randint(min_order, max_order)
    parts = rng.randint(1, min(3, total))
    sizes = []
    remaining = total
    for i in range(parts - 1):
        s = rng.randint(1, remaining - (parts - 1 - i))
        sizes.append(s)
        remaining -= s
    sizes.append(remaining)
    forest = LabeledMultigraph(0)
    for s in sizes:
        forest = forest.disjoint_union(random_tree(s, rng))
    return forest


def random_simple_graph(n, rng, p=0.5):
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return LabeledMultigraph(n, edges)


def default_jobs():
    value = os.environ.get("GRAPHPOLYLAB_JOBS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def parallel_map(func, items, jobs=1):
    """Order-preserving map; results are identical for any worker count."""
    items = list(items)
    if jobs <= 1 or len(items) < 4:
        return [func(item) for item in items]
    with Pool(processes=jobs) as pool:
        return pool.map(func, items)
