"""Immutable simple undirected graphs over dense 0-based vertex indices.

Adjacency is stored as one int bitmask per vertex, so subset-heavy
algorithms (forcing closures, domination solvers, subset enumeration)
run on machine-word operations. Vertex sets travel through the whole
package as plain int bitmasks; :func:`mask_from` / :func:`vertices_from`
convert at the boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


def mask_from(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_from(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def subsets_of_size(n: int, c: int) -> Iterator[int]:
    """All c-subsets of 0..n-1 as bitmasks, in colexicographic order.

    Colex order on same-size sets is exactly ascending bitmask order,
    so Gosper's hack enumerates it directly.
    """
    if c == 0:
        yield 0
        return
    if c > n:
        return
    mask = (1 << c) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbor bitmask of ``v``.

    Instances are immutable value objects and safe to share between
    concurrent workers. Mutating operations (vertex/edge deletion)
    return new graphs with vertices re-indexed densely.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = self.full_mask
        for v, nbrs in enumerate(self.adj):
            if nbrs & (1 << v):
                raise GraphError(f"self-loop at vertex {v}")
            if nbrs & ~full:
                raise GraphError(f"neighbor of {v} out of range")
        for v in range(self.n):
            for u in iter_bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise GraphError(f"asymmetric edge ({v}, {u})")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph on ``n`` vertices from an edge iterable."""
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_from(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((a.bit_count() for a in self.adj), reverse=True))

    # -- derived graphs -------------------------------------------------

    def induced_subgraph(self, mask: int) -> Graph:
        """Subgraph induced by the vertices of ``mask``, re-indexed densely.

        Relative vertex order is preserved.
        """
        keep = vertices_from(mask)
        index = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            for u in iter_bits(self.adj[v] & mask):
                adj[index[v]] |= 1 << index[u]
        return Graph(len(keep), tuple(adj))

    def delete_vertex(self, v: int) -> Graph:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.induced_subgraph(self.full_mask & ~(1 << v))

    def delete_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    # -- connectivity ---------------------------------------------------

    def component_of(self, start: int, within: int | None = None) -> int:
        """Bitmask of the component containing ``start``, restricted to ``within``."""
        allowed = self.full_mask if within is None else within
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v] & allowed
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected_within(self, mask: int) -> bool:
        """True iff the subgraph induced by ``mask`` is connected.

        A singleton is connected; the empty mask is not.
        """
        if mask == 0:
            return False
        start = (mask & -mask).bit_length() - 1
        return self.component_of(start, mask) == mask

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return self.is_connected_within(self.full_mask)

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.m == self.n - 1


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union, with each graph's vertices shifted past the previous."""
    n = 0
    adj: list[int] = []
    for g in graphs:
        adj.extend(a << n for a in g.adj)
        n += g.n
    return Graph(n, tuple(adj))


def components(g: Graph) -> list[int]:
    """Partition the vertices into connected components.

    Returns one bitmask per component, ordered by smallest member vertex.
    """
    out = []
    remaining = g.full_mask
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = g.component_of(start, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def degree_profile(g: Graph) -> tuple[int, int, int, dict[int, int]]:
    """Return (max degree, min degree, leaf count, degree histogram).

    Leaves are vertices of degree exactly one. Rejects the empty graph.
    """
    if g.n == 0:
        raise GraphError("degree profile undefined for the empty graph")
    hist: dict[int, int] = {}
    for v in range(g.n):
        d = g.degree(v)
        hist[d] = hist.get(d, 0) + 1
    degrees = sorted(hist)
    return degrees[-1], degrees[0], hist.get(1, 0), hist
