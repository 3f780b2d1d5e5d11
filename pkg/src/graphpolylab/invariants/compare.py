"""Distinctive-power comparison of two graph polynomials on a finite class.

Two graphs are similar when they share order, size, and component count;
"P at most as distinctive as Q" means Q-equality forces P-equality.  The
scan reports witness pairs in both directions and checks the unique-set
inclusion U_P(n) subset-of U_Q(n) that a confirmed relation implies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..classes import enumerate_class
from ..graph6 import write_graph6


@dataclass(frozen=True)
class SimilarityKey:
    order: int
    size: int
    components: int


def similarity_key(g):
    return SimilarityKey(g.order, g.size, g.connected_components())


@dataclass
class ComparisonReport:
    p: str
    q: str
    class_name: str
    n: int
    similar_only: bool
    q_equal_p_unequal: list = field(default_factory=list)  # witnesses against P <= Q
    p_equal_q_unequal: list = field(default_factory=list)  # witnesses against Q <= P
    u_p_subset_u_q: bool = None
    u_q_subset_u_p: bool = None

    @property
    def p_at_most_q(self):
        """No similar pair is Q-equal but P-unequal."""
        return not self.q_equal_p_unequal

    @property
    def q_at_most_p(self):
        return not self.p_equal_q_unequal

    def to_json_dict(self):
        return {
            "p": self.p,
            "q": self.q,
            "class": self.class_name,
            "n": self.n,
            "similar_only": self.similar_only,
            "q_equal_p_unequal": self.q_equal_p_unequal,
            "p_equal_q_unequal": self.p_equal_q_unequal,
            "p_at_most_q": self.p_at_most_q,
            "q_at_most_p": self.q_at_most_p,
            "u_p_subset_u_q": self.u_p_subset_u_q,
            "u_q_subset_u_p": self.u_q_subset_u_p,
        }


def compare_dp(p_id, q_id, class_name, n, similar_only=True):
    """Scan all (similar) pairs of the class at order n for one-sided splits."""
    from . import compute

    graphs = enumerate_class(class_name, n)
    p_vals = [compute(p_id, g) for g in graphs]
    q_vals = [compute(q_id, g) for g in graphs]
    report = ComparisonReport(p_id, q_id, class_name, n, similar_only)
    groups = {}
    for i, g in enumerate(graphs):
        key = similarity_key(g) if similar_only else None
        groups.setdefault(key, []).append(i)
    for members in groups.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                i, j = members[a], members[b]
                pe = p_vals[i] == p_vals[j]
                qe = q_vals[i] == q_vals[j]
                if qe and not pe:
                    report.q_equal_p_unequal.append(
                        (write_graph6(graphs[i]), write_graph6(graphs[j]))
                    )
                elif pe and not qe:
                    report.p_equal_q_unequal.append(
                        (write_graph6(graphs[i]), write_graph6(graphs[j]))
                    )
    # unique sets are defined against the whole class at this order
    def unique_flags(vals):
        counts = {}
        for v in vals:
            counts[v] = counts.get(v, 0) + 1
        return [counts[v] == 1 for v in vals]

    p_unique = unique_flags(p_vals)
    q_unique = unique_flags(q_vals)
    report.u_p_subset_u_q = all(qu for pu, qu in zip(p_unique, q_unique) if pu)
    report.u_q_subset_u_p = all(pu for pu, qu in zip(p_unique, q_unique) if qu)
    return report
