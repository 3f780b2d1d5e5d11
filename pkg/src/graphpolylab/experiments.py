"""Desk-scale empirical studies: uniqueness ratios, pendant-appearance
frequencies, distinctive-power audits, and fingerprint searches.

Mates are sought inside the class at the same order only, which makes the
uniqueness sets computable; for polynomials blind to isolated vertices
(Tutte) or to order (the generating matching polynomial) the reports carry
an explicit caveat, since cross-order mates exist for those.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .canon import canonical_form
from .classes import enumerate_class, get_class
from .errors import NotSupportedError, ResourceBudgetError
from .graph6 import write_graph6
from .graphs import LabeledMultigraph
from .invariants import compute
from .invariants.compare import compare_dp, similarity_key
from .pendants import count_pendant_occurrences
from .polynomial import SparsePolynomial
from .utils import parallel_map, prufer_decode, random_tree

# polynomials with known cross-order mates: T ignores isolated vertices and
# the generating matching polynomial ignores order entirely
ORDER_CAVEAT_IDS = {"tutte", "match_g"}


@dataclass
class UniquenessReport:
    polynomial_id: str
    class_name: str
    n: int
    class_size_unlabeled: int
    class_size_labeled: int
    unique_unlabeled: int
    unique_labeled: int
    alpha_labeled: Fraction
    alpha_unlabeled: Fraction
    note: str

    def to_json_dict(self, buckets=None):
        data = {
            "polynomial_id": self.polynomial_id,
            "class": self.class_name,
            "n": self.n,
            "class_size_unlabeled": self.class_size_unlabeled,
            "class_size_labeled": self.class_size_labeled,
            "unique_unlabeled": self.unique_unlabeled,
            "unique_labeled": self.unique_labeled,
            "alpha_labeled": str(self.alpha_labeled),
            "alpha_unlabeled": str(self.alpha_unlabeled),
            "note": self.note,
        }
        if buckets is not None:
            data["buckets"] = buckets
        return data

    CSV_FIELDS = (
        "polynomial_id,class,n,class_size_unlabeled,class_size_labeled,"
        "unique_unlabeled,unique_labeled,alpha_labeled,alpha_unlabeled,note"
    )

    def to_csv_row(self):
        return (
            f"{self.polynomial_id},{self.class_name},{self.n},"
            f"{self.class_size_unlabeled},{self.class_size_labeled},"
            f"{self.unique_unlabeled},{self.unique_labeled},"
            f"{self.alpha_labeled},{self.alpha_unlabeled},{self.note}"
        )


def polynomial_buckets(polynomial_id, graphs, jobs=1):
    """Graphs bucketed by exact polynomial value (serialized text key)."""
    values = parallel_map(_BucketWorker(polynomial_id), graphs, jobs)
    buckets = {}
    for g, text in zip(graphs, values):
        buckets.setdefault(text, []).append(g)
    return buckets


class _BucketWorker:
    """Picklable per-graph polynomial serializer for worker pools."""

    def __init__(self, polynomial_id):
        self.polynomial_id = polynomial_id

    def __call__(self, g):
        return compute(self.polynomial_id, g).to_text()


def uniqueness_ratio(polynomial_id, class_name, n, jobs=1, with_buckets=False):
    """Bucket the isomorphism classes of the class at order n by polynomial
    value; singletons are the unique graphs.  Labeled weights are n!/|Aut|."""
    graphs = enumerate_class(class_name, n)
    buckets = polynomial_buckets(polynomial_id, graphs, jobs)
    fact = math.factorial(n)
    total_unlabeled = len(graphs)
    total_labeled = 0
    unique_unlabeled = 0
    unique_labeled = 0
    for members in buckets.values():
        weights = [fact // canonical_form(g).automorphism_count for g in members]
        total_labeled += sum(weights)
        if len(members) == 1:
            unique_unlabeled += 1
            unique_labeled += weights[0]
    note = "order-restricted mates"
    if polynomial_id in ORDER_CAVEAT_IDS:
        note += "; cross-order mates exist for this polynomial (upper bound only)"
    report = UniquenessReport(
        polynomial_id,
        class_name if isinstance(class_name, str) else class_name.name,
        n,
        total_unlabeled,
        total_labeled,
        unique_unlabeled,
        unique_labeled,
        Fraction(unique_labeled, total_labeled) if total_labeled else Fraction(1),
        Fraction(unique_unlabeled, total_unlabeled) if total_unlabeled else Fraction(1),
        note,
    )
    if with_buckets:
        json_buckets = {
            text: [write_graph6(g) for g in members]
            for text, members in sorted(buckets.items())
        }
        return report, json_buckets
    return report


@dataclass
class PendantFrequencyReport:
    pendant_graph6: str
    pendant_root: int
    class_name: str
    n: int
    samples: int
    histogram: dict  # occurrence count -> number of sampled graphs
    fraction_with_occurrence: Fraction
    exhaustive: bool

    def to_json_dict(self):
        return {
            "pendant": self.pendant_graph6,
            "root": self.pendant_root,
            "class": self.class_name,
            "n": self.n,
            "samples": self.samples,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "fraction_with_occurrence": str(self.fraction_with_occurrence),
            "exhaustive": self.exhaustive,
        }


def _all_labeled_trees(n):
    if n == 1:
        yield LabeledMultigraph(1)
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_decode(list(seq), n)


def _all_labeled_members(spec, n):
    if n > 6:
        raise ResourceBudgetError("exhaustive labeled scan budgeted for n <= 6")
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        g = LabeledMultigraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        if spec.membership(g):
            yield g


def pendant_frequency(pendant, class_name, n, samples=None, seed=0):
    """Distribution of labeled-exact pendant counts over the class at order n.

    samples=None walks the whole labeled class (trees via all coding
    sequences, others by brute force for n <= 6); otherwise draws that many
    graphs, which is only supported for trees (uniform coding sequences).
    """
    import random

    spec = get_class(class_name)
    histogram = {}
    total = 0

    def tally(g):
        nonlocal total
        f = count_pendant_occurrences(g, pendant)
        histogram[f] = histogram.get(f, 0) + 1
        total += 1

    if samples is None:
        if class_name == "trees":
            if n >= 2 and n ** (n - 2) > 2_000_000:
                raise ResourceBudgetError(
                    "exhaustive tree scan budgeted for n^(n-2) <= 2e6"
                )
            for g in _all_labeled_trees(n):
                tally(g)
        else:
            for g in _all_labeled_members(spec, n):
                tally(g)
        exhaustive = True
    else:
        if class_name != "trees":
            raise NotSupportedError(
                f"no sampler for class {class_name!r}; only trees can be sampled"
            )
        rng = random.Random(seed)
        for _ in range(samples):
            tally(random_tree(n, rng))
        exhaustive = False
    frac = (
        Fraction(sum(c for f, c in histogram.items() if f >= 1), total)
        if total
        else Fraction(0)
    )
    return PendantFrequencyReport(
        write_graph6(pendant.graph),
        pendant.root,
        class_name,
        n,
        total,
        histogram,
        frac,
        exhaustive,
    )


@dataclass(frozen=True)
class Fingerprint:
    polynomial_id: str
    target: SparsePolynomial

    @classmethod
    def from_text(cls, polynomial_id, text):
        return cls(polynomial_id, SparsePolynomial.from_text(text))


# evaluation order: cheap spectral filter before anything else
_FILTER_RANK = {"char_adj": 0, "char_lap": 1, "match_mu": 2, "dom": 3}


@dataclass
class SearchReport:
    matches: list  # graph6 strings
    scanned: int
    exhausted: bool

    def to_json_dict(self):
        return {
            "matches": self.matches,
            "scanned": self.scanned,
            "exhausted": self.exhausted,
        }


def _compute_for_search(polynomial_id, g):
    return compute(polynomial_id, g)


def fingerprint_search(fingerprints, n, source=None, budget=10_000, seed=0):
    """Scan order-n graphs for ones matching every fingerprint.

    `source` may be any iterable of graphs (e.g. parsed from a graph6 file);
    by default a seeded uniform random stream of order-n simple graphs is
    scanned.  Stops at `budget` graphs and reports partial results.
    """
    import random

    from .utils import random_simple_graph

    ordered = sorted(fingerprints, key=lambda f: _FILTER_RANK.get(f.polynomial_id, 99))
    if source is None:
        rng = random.Random(seed)
        source = (random_simple_graph(n, rng) for _ in iter(int, 1))
    matches = []
    scanned = 0
    exhausted = True
    for g in source:
        if scanned >= budget:
            exhausted = False
            break
        if g.order != n:
            continue
        scanned += 1
        if all(_compute_for_search(f.polynomial_id, g) == f.target for f in ordered):
            matches.append(write_graph6(g))
    return SearchReport(sorted(set(matches)), scanned, exhausted)


def coxi_fingerprints():
    """Printed spectral/domination fingerprints of the two lost order-10
    mate graphs, as search targets (expanded from their factored forms)."""
    x = SparsePolynomial.variable("x")
    pa_g1 = x**2 * (x**4 - x**3 - 4 * x**2 + 2 * x + 3) * (
        x**4 + x**3 - 4 * x**2 - 2 * x + 3
    )
    pa_g2 = x**2 * (x - 1) * (x + 1) * (x**2 - 2) * (x**4 - 5 * x**2 + 3)
    dom_g1 = (
        x**10 + 10 * x**9 + 40 * x**8 + 82 * x**7 + 92 * x**6 + 56 * x**5 + 16 * x**4
    )
    dom_g2 = (
        x**10 + 10 * x**9 + 41 * x**8 + 86 * x**7 + 94 * x**6 + 48 * x**5 + 9 * x**4
    )
    return {
        "G1": [Fingerprint("char_adj", pa_g1), Fingerprint("dom", dom_g1)],
        "G2": [Fingerprint("char_adj", pa_g2), Fingerprint("dom", dom_g2)],
    }


# (P, Q, similar_only) triples claimed as "P at most as distinctive as Q";
# bidirectional claims appear once with both=True
_DP_CLAIMS = [
    ("chromatic", "tutte", True, False),
    ("tutte", "partition_Z", True, True),
    ("partition_Z", "covered_C", False, False),
    ("covered_C", "xi_eq", False, True),
    ("vcover", "indep", True, True),
    ("indep", "gen_chromatic", True, False),
    ("match_mu", "match_g", True, True),
    ("match_g", "match_M", True, True),
    ("match_mu", "match_M", False, True),
    ("euler", "tutte", True, False),
    ("flow", "tutte", True, False),
    ("reliability", "tutte", True, False),
    ("chromatic", "gen_chromatic", False, False),
    ("gen_chromatic", "xi_eq", False, False),
]

_INCOMPARABLE_PAIRS = [
    ("char_adj", "chromatic"),
    ("char_adj", "indep"),
    ("chromatic", "indep"),
    ("char_adj", "dom"),
    ("char_adj", "covered_C"),
    ("dom", "covered_C"),
]


@dataclass
class AuditReport:
    class_name: str
    n: int
    relations: list = field(default_factory=list)
    incomparability: list = field(default_factory=list)

    @property
    def violations(self):
        return [r for r in self.relations if r["violations"]]

    def to_json_dict(self):
        return {
            "class": self.class_name,
            "n": self.n,
            "relations": self.relations,
            "incomparability": self.incomparability,
            "all_claims_hold": not self.violations,
        }


def dp_chain_audit(class_name, n, jobs=1):
    """Scan the class at order n for counterexamples to every claimed
    distinctive-power relation, and collect incomparability witnesses."""
    report = AuditReport(class_name, n)
    for p, q, similar_only, both in _DP_CLAIMS:
        cmp = compare_dp(p, q, class_name, n, similar_only=similar_only)
        violations = list(cmp.q_equal_p_unequal)
        if both:
            violations += list(cmp.p_equal_q_unequal)
        report.relations.append(
            {
                "p": p,
                "q": q,
                "similar_only": similar_only,
                "bidirectional": both,
                "violations": violations,
                "u_p_subset_u_q": cmp.u_p_subset_u_q,
            }
        )
    for p, q in _INCOMPARABLE_PAIRS:
        cmp = compare_dp(p, q, class_name, n, similar_only=True)
        report.incomparability.append(
            {
                "p": p,
                "q": q,
                "q_equal_p_unequal": cmp.q_equal_p_unequal,
                "p_equal_q_unequal": cmp.p_equal_q_unequal,
            }
        )
    return report
