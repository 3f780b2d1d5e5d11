"""graph6 and sparse6 codecs (one graph per line, nauty-compatible).

graph6 covers simple graphs; sparse6 additionally carries loops and
parallel edges and is used wherever a multigraph must round-trip.
"""

from __future__ import annotations

from .errors import Graph6ParseError, UnsupportedFormatError
from .graphs import LabeledMultigraph

_G6_HEADER = ">>graph6<<"
_S6_HEADER = ">>sparse6<<"


def _read_order(data, pos):
    """Decode the N(n) prefix; returns (n, next position)."""
    if pos >= len(data):
        raise Graph6ParseError("missing order field", pos)
    c = ord(data[pos])
    if c == 126:  # '~'
        if pos + 1 < len(data) and ord(data[pos + 1]) == 126:
            chars = data[pos + 2 : pos + 8]
            if len(chars) < 6:
                raise Graph6ParseError("truncated 8-byte order field", pos)
            n = 0
            for i, ch in enumerate(chars):
                v = ord(ch) - 63
                if not 0 <= v <= 63:
                    raise Graph6ParseError(f"bad character {ch!r}", pos + 2 + i)
                n = (n << 6) | v
            return n, pos + 8
        chars = data[pos + 1 : pos + 4]
        if len(chars) < 3:
            raise Graph6ParseError("truncated 4-byte order field", pos)
        n = 0
        for i, ch in enumerate(chars):
            v = ord(ch) - 63
            if not 0 <= v <= 63:
                raise Graph6ParseError(f"bad character {ch!r}", pos + 1 + i)
            n = (n << 6) | v
        if n < 63:
            raise Graph6ParseError("non-minimal order encoding", pos)
        return n, pos + 4
    v = c - 63
    if not 0 <= v <= 62:
        raise Graph6ParseError(f"bad character {data[pos]!r} in order field", pos)
    return v, pos + 1


def _write_order(n):
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise UnsupportedFormatError("order too large for graph6")


def parse_graph6(text):
    """Decode one graph6 line into a simple LabeledMultigraph."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER) :]
    if not data:
        raise Graph6ParseError("empty graph6 line", 0)
    if data.startswith(":"):
        raise Graph6ParseError("sparse6 input given to the graph6 parser; use parse_sparse6", 0)
    n, pos = _read_order(data, 0)
    need = n * (n - 1) // 2
    bits = []
    for i in range(pos, len(data)):
        v = ord(data[i]) - 63
        if not 0 <= v <= 63:
            raise Graph6ParseError(f"bad character {data[i]!r}", i)
        for s in (5, 4, 3, 2, 1, 0):
            bits.append((v >> s) & 1)
    if len(bits) < need:
        raise Graph6ParseError(
            f"truncated bit vector: need {need} bits, got {len(bits)}", len(data)
        )
    if len(bits) - need >= 6:
        raise Graph6ParseError("trailing bytes after bit vector", pos + (need + 5) // 6)
    edges = []
    k = 0
    for j in range(1, n):  # 0-based column-major upper triangle
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return LabeledMultigraph(n, edges)


def write_graph6(g):
    """Encode a simple graph as one graph6 line."""
    if not g.is_simple():
        raise UnsupportedFormatError(
            "graph6 cannot encode loops or parallel edges; use write_sparse6"
        )
    n = g.order
    present = set(g.edges)
    out = [_write_order(n)]
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((i + 1, j + 1) in present)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc, filled = 0, 0
    if filled:
        acc <<= 6 - filled
        out.append(chr(acc + 63))
    return "".join(out)


def _bits_needed(n):
    k = 1
    while (1 << k) < n:
        k += 1
    return k


def parse_sparse6(text):
    """Decode one sparse6 line into a LabeledMultigraph (loops/multi-edges ok)."""
    data = text.strip()
    if data.startswith(_S6_HEADER):
        data = data[len(_S6_HEADER) :]
    if not data.startswith(":"):
        raise Graph6ParseError("sparse6 lines start with ':'", 0)
    n, pos = _read_order(data, 1)
    bits = []
    for i in range(pos, len(data)):
        v = ord(data[i]) - 63
        if not 0 <= v <= 63:
            raise Graph6ParseError(f"bad character {data[i]!r}", i)
        for s in (5, 4, 3, 2, 1, 0):
            bits.append((v >> s) & 1)
    if n <= 1:
        k = 1
    else:
        k = _bits_needed(n)
    edges = []
    v = 0
    idx = 0
    while idx + k < len(bits):
        b = bits[idx]
        x = 0
        for t in range(k):
            x = (x << 1) | bits[idx + 1 + t]
        idx += k + 1
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            edges.append((x + 1, v + 1))
    return LabeledMultigraph(n, edges)


def write_sparse6(g):
    """Encode any multigraph as one sparse6 line."""
    n = g.order
    k = 1 if n <= 1 else _bits_needed(n)
    bits = []

    def emit(b, x):
        bits.append(b)
        for s in range(k - 1, -1, -1):
            bits.append((x >> s) & 1)

    v = 0
    for a, b in sorted(((min(e), max(e)) for e in g.edges), key=lambda e: (e[1], e[0])):
        u, w = a - 1, b - 1  # w is the current vertex, u <= w
        if w == v:
            emit(0, u)
        elif w == v + 1:
            v += 1
            emit(1, u)
        else:
            v = w
            emit(1, w)
            emit(0, u)
    # pad with 1s to a multiple of 6; when n is a power of two and the final
    # group could decode as one extra edge, lead the padding with a 0
    pad = (-len(bits)) % 6
    if (
        pad >= k + 1
        and n > 1
        and n == (1 << k)
        and v < n - 1
    ):
        bits.append(0)
        pad -= 1
    bits.extend([1] * pad)
    out = [":", _write_order(n)]
    for i in range(0, len(bits), 6):
        acc = 0
        for bit in bits[i : i + 6]:
            acc = (acc << 1) | bit
        out.append(chr(acc + 63))
    encoded = "".join(out)
    check = parse_sparse6(encoded)
    if check != g:
        raise UnsupportedFormatError("internal sparse6 encoding failure")
    return encoded


def parse_any(line):
    """Dispatch on format: sparse6 lines start with ':'."""
    stripped = line.strip()
    if stripped.startswith(_S6_HEADER) or stripped.startswith(":"):
        return parse_sparse6(stripped)
    return parse_graph6(stripped)


def iter_graph6_lines(lines):
    """Yield graphs from an iterable of graph6/sparse6 lines; blanks skipped."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_any(line)


def read_graph6_file(path):
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6_lines(fh))
