import random

import pytest

from graphpolylab.errors import Graph6ParseError, UnsupportedFormatError
from graphpolylab.graph6 import (
    iter_graph6_lines,
    parse_any,
    parse_graph6,
    parse_sparse6,
    read_graph6_file,
    write_graph6,
    write_sparse6,
)
from graphpolylab.graphs import LabeledMultigraph, complete_graph, path_graph

from helpers import random_multigraph, random_simple


def test_known_codes():
    assert write_graph6(LabeledMultigraph(1)) == "@"
    assert write_graph6(complete_graph(2)) == "A_"
    assert write_graph6(LabeledMultigraph(0)) == "?"
    assert parse_graph6("@") == LabeledMultigraph(1)
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("Bg") == path_graph(3)
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


def test_round_trip_randomized_1000():
    rng = random.Random(10)
    for _ in range(1000):
        g = random_simple(rng, rng.randint(0, 12), p=0.4)
        assert parse_graph6(write_graph6(g)) == g


def test_large_order_header():
    g = LabeledMultigraph(63, [(1, 63)])
    assert parse_graph6(write_graph6(g)) == g


def test_malformed_inputs():
    with pytest.raises(Graph6ParseError):
        parse_graph6("")
    with pytest.raises(Graph6ParseError) as exc:
        parse_graph6("C")  # order 4 needs one more byte
    assert exc.value.offset is not None
    with pytest.raises(Graph6ParseError):
        parse_graph6("B\x19")  # out-of-range character
    with pytest.raises(Graph6ParseError):
        parse_graph6("A_~~~")  # trailing bytes
    with pytest.raises(Graph6ParseError):
        parse_graph6(":A_")  # sparse6 routed to graph6 parser


def test_write_rejects_multigraphs():
    with pytest.raises(UnsupportedFormatError):
        write_graph6(LabeledMultigraph(2, [(1, 2), (1, 2)]))
    with pytest.raises(UnsupportedFormatError):
        write_graph6(LabeledMultigraph(1, [(1, 1)]))


def test_sparse6_round_trip_multigraphs():
    rng = random.Random(11)
    for _ in range(500):
        g = random_multigraph(rng, max_order=9)
        assert parse_sparse6(write_sparse6(g)) == g


def test_sparse6_power_of_two_orders():
    # padding edge case lives at n = 2^k
    for n in (2, 4, 8, 16):
        g = LabeledMultigraph(n, [(1, n - 1)] if n > 2 else [(1, 2)])
        assert parse_sparse6(write_sparse6(g)) == g


def test_parse_any_dispatch():
    g = LabeledMultigraph(3, [(1, 1), (2, 3), (2, 3)])
    assert parse_any(write_sparse6(g)) == g
    assert parse_any("Bg") == path_graph(3)


def test_file_io(tmp_path):
    graphs = [path_graph(4), complete_graph(3), LabeledMultigraph(2, [(1, 2), (1, 2)])]
    lines = [write_graph6(graphs[0]), write_graph6(graphs[1]), write_sparse6(graphs[2])]
    path = tmp_path / "batch.g6"
    path.write_text("\n".join(lines) + "\n\n")
    assert read_graph6_file(path) == graphs
    assert list(iter_graph6_lines(lines)) == graphs
