"""Immutable simple graphs stored as per-vertex neighbourhood bitmasks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

MAX_ORDER = 64

# A natural number or infinity. Finite values are plain ints; infinity is math.inf,
# so ordering and min/max work without a wrapper type.
ExtendedNat = Union[int, float]
INF: float = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertex, self-loop, bad order)."""


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    leaf_count: int


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``rows[v]`` is the bitmask of neighbours of ``v``.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match order")
        full = (1 << self.n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full:
                raise GraphError(f"row {v} references a vertex >= n")
            if r >> v & 1:
                raise GraphError(f"self-loop at {v}")
            rest = r
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
                rest ^= low

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, r in enumerate(self.rows):
            for v in iter_bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def max_degree(self) -> int:
        return max(r.bit_count() for r in self.rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates and orientation are ignored."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
    rows = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_rows(rows: Sequence[int]) -> Graph:
    return Graph(len(rows), tuple(rows))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def component_mask(rows: Sequence[int], start: int, within: int = -1) -> int:
    """Bitmask of the component containing ``start`` inside the vertex set ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return component_mask(g.rows, 0) == (1 << g.n) - 1


def bfs_layers(rows: Sequence[int], source: int, n: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        nxt &= ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> list[list[ExtendedNat]]:
    """Classical distance matrix, with ``INF`` between components."""
    out: list[list[ExtendedNat]] = []
    for s in range(g.n):
        out.append([INF if d < 0 else d for d in bfs_layers(g.rows, s, g.n)])
    return out


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees()
    return DegreeProfile(min(degs), max(degs), sum(1 for d in degs if d == 1))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex ``v`` as ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex set")
    rows = [0] * g.n
    for v, r in enumerate(g.rows):
        m = 0
        for u in iter_bits(r):
            m |= 1 << perm[u]
        rows[perm[v]] = m
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return from_edges(len(vertices), edges)


def delete_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    rows = list(g.rows)
    for u, v in edges:
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))
