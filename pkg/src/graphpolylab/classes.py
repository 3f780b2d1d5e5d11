"""Named graph classes with membership predicates and isomorph-free enumerators.

Enumeration augments the order-(n-1) representatives with one new vertex per
possible attachment set, then deduplicates by canonical form.  All four
registered classes are closed under vertex deletion, so augmenting within
the class is exhaustive.  Streams are deterministic: representatives are
canonical graphs sorted by canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .canon import canonical_graph, canonical_key
from .errors import DomainError, ResourceBudgetError
from .graphs import LabeledMultigraph
from .planarity import is_planar


@dataclass(frozen=True)
class ClassSpec:
    """A decidable graph class: membership predicate plus enumeration policy."""

    name: str
    membership: callable
    max_order: int
    extensions: callable = field(default=None)  # g -> iterable of attachment sets


def _all_subsets(g):
    verts = list(g.vertices)
    for r in range(len(verts) + 1):
        yield from combinations(verts, r)


def _forest_subsets(g):
    # a new vertex keeps the graph a forest iff it attaches to each tree
    # component at most once
    choices = [[None] + sorted(comp) for comp in g.component_sets()]
    for pick in product(*choices):
        yield tuple(v for v in pick if v is not None)


def _leaf_attachments(g):
    # trees of order n arise from trees of order n-1 by attaching one leaf
    return ((v,) for v in g.vertices)


def _is_all(g):
    return g.is_simple()


def _is_forest(g):
    return g.is_simple() and g.is_forest()


def _is_tree(g):
    return g.order >= 1 and g.is_simple() and g.is_tree()


def _is_planar_class(g):
    return g.is_simple() and is_planar(g)


CLASSES = {
    "all": ClassSpec("all", _is_all, 9),
    "forests": ClassSpec("forests", _is_forest, 14, _forest_subsets),
    "trees": ClassSpec("trees", _is_tree, 14, _leaf_attachments),
    "planar": ClassSpec("planar", _is_planar_class, 9),
}

_cache = {}


def get_class(name):
    try:
        return CLASSES[name]
    except KeyError:
        raise DomainError(
            f"unknown class {name!r}; known: {', '.join(sorted(CLASSES))}"
        ) from None


def enumerate_class(spec, n):
    """Isomorph-free exhaustive list of class members of order n, sorted."""
    if isinstance(spec, str):
        spec = get_class(spec)
    if n < 0:
        raise DomainError("order must be non-negative")
    if n > spec.max_order:
        raise ResourceBudgetError(
            f"class {spec.name!r} enumeration budgeted for n <= {spec.max_order}; "
            f"feed externally generated graph6 lines for larger orders"
        )
    key = (spec.name, n)
    if key in _cache:
        return _cache[key]
    if n == 0:
        reps = [LabeledMultigraph(0)] if spec.membership(LabeledMultigraph(0)) else []
    elif n == 1:
        one = LabeledMultigraph(1)
        reps = [one] if spec.membership(one) else []
    else:
        prev = enumerate_class(spec, n - 1)
        extensions = spec.extensions or _all_subsets
        seen = set()
        reps = []
        for g in prev:
            base_edges = g.edges
            for attach in extensions(g):
                h = LabeledMultigraph(n, base_edges + tuple((v, n) for v in attach))
                if not spec.membership(h):
                    continue
                ck = canonical_key(h)
                if ck in seen:
                    continue
                seen.add(ck)
                reps.append(canonical_graph(h))
        reps.sort(key=canonical_key)
    _cache[key] = reps
    return reps


def class_members_from_lines(spec, n, lines):
    """Filter externally supplied graph6 lines to class members of order n."""
    from .graph6 import iter_graph6_lines

    if isinstance(spec, str):
        spec = get_class(spec)
    out = []
    for g in iter_graph6_lines(lines):
        if g.order == n and spec.membership(g):
            out.append(g)
    return out
