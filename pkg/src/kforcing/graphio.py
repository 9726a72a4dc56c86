"""graph6 and edge-list serialization.

graph6 packs the upper-triangle adjacency bits (column by column) into
6-bit groups offset by 63, after a length header: a single byte for
n <= 62, or '~' plus three bytes carrying 18 bits for larger n. The
writer always emits the short form when it applies, so writing is
canonical and parse/write round-trip exactly.

The edge-list format is line oriented: "u v" adds an edge, a bare "v"
declares an isolated (or just present) vertex, '#' starts a comment.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import Graph, GraphError

_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Raised for malformed graph6 input."""


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a :class:`Graph`."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in data):
        raise Graph6Error(f"character outside the printable range 63..126: {s!r}")

    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4:
            raise Graph6Error(f"malformed length header: {s!r}")
        if data[1] == 63:
            raise Graph6Error("the 8-byte length form (n > 258047) is not supported")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        if n <= 62:
            raise Graph6Error(f"long-form header used for n={n} <= 62")
        body = data[4:]

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    if len(body) != ngroups:
        raise Graph6Error(
            f"expected {ngroups} adjacency bytes for n={n}, got {len(body)}"
        )

    adj = [0] * n
    idx = 0
    for group in body:
        for shift in range(5, -1, -1):
            bit = (group >> shift) & 1
            if idx >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bits")
                continue
            if bit:
                u, v = _edge_at(idx)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(adj))


def _edge_at(idx: int) -> tuple[int, int]:
    # Bits run over columns j = 1..n-1, rows i = 0..j-1; bit index
    # idx = j(j-1)/2 + i.
    j = 1
    while (j + 1) * j // 2 <= idx:
        j += 1
    return idx - j * (j - 1) // 2, j


def write_graph6(g: Graph) -> str:
    """Encode a graph as its canonical graph6 string."""
    if g.n <= 62:
        head = [g.n]
    elif g.n <= 258047:
        head = [63, (g.n >> 12) & 63, (g.n >> 6) & 63, g.n & 63]
    else:
        raise Graph6Error(f"n={g.n} too large for the supported graph6 forms")

    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    while len(bits) % 6:
        bits.append(0)
    groups = [
        (bits[i] << 5)
        | (bits[i + 1] << 4)
        | (bits[i + 2] << 3)
        | (bits[i + 3] << 2)
        | (bits[i + 4] << 1)
        | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + groups)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse every nonempty line of a graph6 stream."""
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def read_graph6_file(path: str) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6_lines(fh))


def write_graph6_file(graphs: Iterable[Graph], fh: TextIO) -> int:
    count = 0
    for g in graphs:
        fh.write(write_graph6(g) + "\n")
        count += 1
    return count


def parse_edge_list(text: str) -> Graph:
    """Parse the human-readable edge-list format."""
    edges: list[tuple[int, int]] = []
    present: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            values = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
        if any(v < 0 for v in values):
            raise GraphError(f"line {lineno}: negative vertex index")
        if len(values) == 1:
            present.add(values[0])
        elif len(values) == 2:
            u, v = values
            if u == v:
                raise GraphError(f"line {lineno}: self-loop at {u}")
            edges.append((u, v))
            present.update(values)
        else:
            raise GraphError(f"line {lineno}: expected 'u v' or 'v', got {raw!r}")
    n = max(present) + 1 if present else 0
    return Graph.from_edges(n, edges)


def write_edge_list(g: Graph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges()]
    covered = set()
    for u, v in g.edges():
        covered.add(u)
        covered.add(v)
    for v in range(g.n):
        if v not in covered:
            lines.append(str(v))
    return "\n".join(lines) + ("\n" if lines else "")
