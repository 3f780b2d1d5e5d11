"""Command-line surface: compute, enumerate, ratio, mates, audit,
pendant-freq, search.

Exit codes: 0 success, 1 domain/validation error, 2 resource-budget error.
Given the same seed, identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import enumerate_class, get_class
from .errors import GraphPolyLabError, ResourceBudgetError
from .graph6 import parse_any, read_graph6_file, write_graph6
from .invariants import compute, polynomial_ids
from .pendants import RootedPendant, find_pendant_occurrences
from .utils import default_jobs


class _CliError(Exception):
    def __init__(self, message, code=1):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message, 1)


def _input_graphs(args):
    if getattr(args, "graph6", None):
        return [parse_any(args.graph6)]
    if getattr(args, "file", None):
        return read_graph6_file(args.file)
    data = sys.stdin.read()
    graphs = [parse_any(line) for line in data.splitlines() if line.strip()]
    if not graphs:
        raise _CliError("no input graphs: pass --graph6, --file, or graph6 lines on stdin")
    return graphs


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _json(data):
    return json.dumps(data, indent=2, sort_keys=True)


def _cmd_compute(args):
    graphs = _input_graphs(args)
    if args.format == "json":
        records = [
            {
                "graph6": write_graph6(g),
                "polynomial_id": args.poly,
                "polynomial": compute(args.poly, g).to_text(),
            }
            for g in graphs
        ]
        _emit(args, _json(records))
    else:
        _emit(args, "\n".join(compute(args.poly, g).to_text() for g in graphs))
    return 0


def _cmd_enumerate(args):
    if args.file:
        from .classes import class_members_from_lines

        with open(args.file, "r", encoding="ascii") as fh:
            graphs = class_members_from_lines(args.cls, args.n, fh)
    else:
        graphs = enumerate_class(args.cls, args.n)
    _emit(args, "\n".join(write_graph6(g) for g in graphs))
    return 0


def _cmd_ratio(args):
    from .experiments import uniqueness_ratio

    if args.buckets:
        report, buckets = uniqueness_ratio(
            args.poly, args.cls, args.n, jobs=args.jobs, with_buckets=True
        )
        _emit(args, _json(report.to_json_dict(buckets)))
        return 0
    report = uniqueness_ratio(args.poly, args.cls, args.n, jobs=args.jobs)
    if args.format == "csv":
        _emit(args, report.CSV_FIELDS + "\n" + report.to_csv_row())
    else:
        _emit(args, _json(report.to_json_dict()))
    return 0


def _find_occurrence(g, pendant, what):
    occs = find_pendant_occurrences(g, pendant, relaxed=True)
    if not occs:
        raise _CliError(f"graph has no pendant appearance of {what}")
    return occs[0]


def _cmd_mates(args):
    from . import mates as m
    from .graphs import path_graph

    name = args.construction
    if name == "pseudosimilar":
        pairs = m.find_pseudosimilar_trees(args.max_order)
        _emit(
            args,
            _json(
                [
                    {
                        "tree": write_graph6(p.tree),
                        "u": p.u,
                        "v": p.v,
                        "removal_isomorphic": p.removal_isomorphic,
                    }
                    for p in pairs
                ]
            ),
        )
        return 0
    if name == "laplacian_search":
        found = m.laplacian_swap_search(args.max_order, seed=args.seed)
        _emit(
            args,
            _json(
                [
                    {"graph": write_graph6(c["graph"]), "u": c["u"], "v": c["v"]}
                    for c in found
                ]
            ),
        )
        return 0
    graphs = _input_graphs(args)
    certs = []
    for g in graphs:
        if name == "stem_toggle":
            cert = m.stem_toggle(g)
            if cert is None:
                raise _CliError("graph has no pair of adjacent stems")
        elif name == "p5_graft_swap":
            occ = _find_occurrence(g, RootedPendant(path_graph(5), args.p5_root), "P5")
            cert = m.p5_graft_swap(g, occ)
        elif name == "clique_root_swap":
            occ = _find_occurrence(g, RootedPendant(path_graph(3), 1), "P3 at an end")
            cert = m.clique_root_swap(g, occ)
        elif name == "schwenk_swap":
            pair = m.schwenk_tree_pair()
            occ = _find_occurrence(
                g, RootedPendant(pair.tree, pair.v), "the spectral gadget tree"
            )
            cert = m.schwenk_swap(g, occ, pair)
        elif name == "xi_swap":
            pair = m.xi_tree_pair()
            occ = _find_occurrence(
                g, RootedPendant(pair.tree, pair.v), "the pseudosimilar gadget tree"
            )
            cert = m.xi_swap(g, occ, pair)
        else:
            raise _CliError(f"unknown construction {name!r}")
        certs.append(cert.to_json_dict())
    _emit(args, _json(certs if len(certs) > 1 else certs[0]))
    return 0


def _cmd_audit(args):
    from .experiments import dp_chain_audit

    report = dp_chain_audit(args.cls, args.n, jobs=args.jobs)
    _emit(args, _json(report.to_json_dict()))
    return 0


def _cmd_pendant_freq(args):
    from .experiments import pendant_frequency

    pendant = RootedPendant(parse_any(args.pendant_graph6), args.root)
    report = pendant_frequency(
        pendant, args.cls, args.n, samples=args.samples, seed=args.seed
    )
    _emit(args, _json(report.to_json_dict()))
    return 0


def _cmd_search(args):
    from .experiments import coxi_fingerprints, fingerprint_search

    source = None
    if args.file:
        source = read_graph6_file(args.file)
    targets = coxi_fingerprints()
    results = {}
    for label, prints in sorted(targets.items()):
        report = fingerprint_search(
            prints, args.n, source=source, budget=args.budget, seed=args.seed
        )
        results[label] = report.to_json_dict()
    _emit(args, _json(results))
    return 0


def build_parser():
    parser = _Parser(prog="graphpolylab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    ids = ", ".join(polynomial_ids())
    classes = "all, forests, trees, planar"

    def add_io(p):
        p.add_argument("--graph6", help="one graph6/sparse6 line")
        p.add_argument("--file", help="file of graph6/sparse6 lines")
        p.add_argument("--output", help="write the report here instead of stdout")

    p = sub.add_parser("compute", help="evaluate a graph polynomial")
    p.add_argument("--poly", required=True, help=f"polynomial id: {ids}")
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_io(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("enumerate", help="stream class members of one order")
    p.add_argument("--class", dest="cls", required=True, help=f"class: {classes}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--file", help="filter externally generated graph6 lines instead")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("ratio", help="uniqueness-ratio report")
    p.add_argument("--poly", required=True, help=f"polynomial id: {ids}")
    p.add_argument("--class", dest="cls", required=True, help=f"class: {classes}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--buckets", action="store_true", help="include full buckets (json)")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--output")
    p.set_defaults(func=_cmd_ratio)

    p = sub.add_parser("mates", help="run a mate construction")
    p.add_argument(
        "--construction",
        required=True,
        help=(
            "one of stem_toggle, p5_graft_swap, clique_root_swap, schwenk_swap, "
            "xi_swap, pseudosimilar, laplacian_search"
        ),
    )
    p.add_argument("--max-order", type=int, default=9, help="for the searches")
    p.add_argument("--p5-root", type=int, default=3, choices=(2, 3, 4))
    p.add_argument("--seed", type=int, default=0)
    add_io(p)
    p.set_defaults(func=_cmd_mates)

    p = sub.add_parser("audit", help="distinctive-power chain audit")
    p.add_argument("--class", dest="cls", required=True, help=f"class: {classes}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--output")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("pendant-freq", help="pendant-appearance frequency report")
    p.add_argument("--pendant-graph6", required=True)
    p.add_argument("--root", type=int, default=1)
    p.add_argument("--class", dest="cls", required=True, help=f"class: {classes}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_pendant_freq)

    p = sub.add_parser("search", help="fingerprint search for the lost order-10 mates")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--budget", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--file", help="graph6 lines to scan instead of a random stream")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_search)

    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphPolyLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
