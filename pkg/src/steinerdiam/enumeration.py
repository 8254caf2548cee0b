"""Isomorph-free generation of graphs by canonical vertex augmentation.

A graph on k+1 vertices is built from a stored representative on k vertices by
adding vertex k with neighbourhood X. Neighbourhoods are taken one per orbit of
the parent's automorphism group, and a child is kept only when the new vertex
lies in the orbit of the child's canonical deletion vertex: among the eligible
vertices (non-cut vertices when generating connected graphs, all vertices
otherwise) those with the smallest (degree, neighbour-degree sum), and among
those the one placed last by the canonical labelling.

Degree caps and edge counts are hereditary along the construction path, so
they prune whole subtrees.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .canon import labelling_of_rows, orbits
from .graph import Graph, component_mask, iter_bits

DEFAULT_MAX_ORDER = 12


class EnumerationCapError(ValueError):
    """Requested order exceeds the enumeration cap."""


def order_cap() -> int:
    """Enumeration cap; the STEINER_MAX_N environment variable can only lower it."""
    env = os.environ.get("STEINER_MAX_N")
    if env:
        try:
            return max(1, min(DEFAULT_MAX_ORDER, int(env)))
        except ValueError:
            pass
    return DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class EnumFilter:
    order: int
    max_degree_exact: Optional[int] = None
    edge_count: Optional[int] = None
    connected_only: bool = True
    min_edges: Optional[int] = None
    max_edges: Optional[int] = None

    def __post_init__(self) -> None:
        n = self.order
        cap = order_cap()
        if n < 1:
            raise ValueError("order must be at least 1")
        if n > cap:
            raise EnumerationCapError(f"order {n} exceeds enumeration cap {cap}")
        if self.max_degree_exact is not None and not 0 <= self.max_degree_exact <= max(n - 1, 0):
            raise ValueError(f"max degree {self.max_degree_exact} impossible for order {n}")
        if self.edge_count is not None and not 0 <= self.edge_count <= n * (n - 1) // 2:
            raise ValueError(f"edge count {self.edge_count} impossible for order {n}")

    def edge_bounds(self) -> tuple[int, int]:
        n = self.order
        lo, hi = 0, n * (n - 1) // 2
        if self.connected_only:
            lo = n - 1
        if self.max_degree_exact is not None:
            hi = min(hi, n * self.max_degree_exact // 2)
        if self.min_edges is not None:
            lo = max(lo, self.min_edges)
        if self.max_edges is not None:
            hi = min(hi, self.max_edges)
        if self.edge_count is not None:
            lo, hi = max(lo, self.edge_count), min(hi, self.edge_count)
        return lo, hi


def _orbit_minimal(x: int, gens: Sequence[Sequence[int]]) -> bool:
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for g in gens:
            z = 0
            for u in iter_bits(y):
                z |= 1 << g[u]
            if z < x:
                return False
            if z not in seen:
                seen.add(z)
                stack.append(z)
    return True


class _Generator:
    def __init__(self, flt: EnumFilter, shard: int, shards: int, split_level: Optional[int]) -> None:
        n = flt.order
        self.n = n
        self.connected = flt.connected_only
        self.exact_delta = flt.max_degree_exact
        self.cap = n - 1 if flt.max_degree_exact is None else flt.max_degree_exact
        self.lo, self.hi = flt.edge_bounds()
        self.shard, self.shards = shard, shards
        self.split_level = split_level if split_level is not None else max(1, n - 3)
        self.split_counter = 0
        # most edges addable by vertices k..n-1 given the degree cap
        self.future_max = [0] * (n + 1)
        for k in range(n - 1, -1, -1):
            self.future_max[k] = self.future_max[k + 1] + min(k, self.cap)

    def _eligible(self, rows: list[int], k: int, w: int) -> bool:
        if not self.connected:
            return True
        if rows[w] & (rows[w] - 1) == 0:
            return True  # degree <= 1 never disconnects
        within = ((1 << k) - 1) & ~(1 << w)
        start = (within & -within).bit_length() - 1
        return component_mask(rows, start, within) == within

    def _accept(self, rows: list[int], k: int):
        """Return (accepted, labelling-or-None) for the child whose new vertex is k-1."""
        v = k - 1
        degs = [r.bit_count() for r in rows]
        dv = degs[v]
        key_v = sum(degs[u] for u in iter_bits(rows[v]))
        ties = []
        for w in range(v):
            dw = degs[w]
            if dw > dv:
                continue
            if dw == dv:
                kw = sum(degs[u] for u in iter_bits(rows[w]))
                if kw > key_v:
                    continue
                if not self._eligible(rows, k, w):
                    continue
                if kw < key_v:
                    return False, None
                ties.append(w)
            elif self._eligible(rows, k, w):
                return False, None
        if not ties:
            return True, None
        lab = labelling_of_rows(rows, k)
        pos = lab.position()
        best = max(ties + [v], key=lambda w: pos[w])
        if best == v:
            return True, lab
        reps = orbits(k, lab.generators)
        return reps[best] == reps[v], lab

    def run(self) -> Iterator[tuple[int, ...]]:
        n = self.n
        if n == 1:
            if self.lo <= 0 <= self.hi and self.exact_delta in (None, 0) and self._take_split(1):
                yield (0,)
            return
        yield from self._extend([0], 1, 0, None)

    def _take_split(self, k: int) -> bool:
        if self.shards == 1 or k != self.split_level:
            return True
        i = self.split_counter
        self.split_counter += 1
        return i % self.shards == self.shard

    def _extend(self, rows: list[int], k: int, e: int, gens) -> Iterator[tuple[int, ...]]:
        n = self.n
        if k == self.split_level and not self._take_split(k):
            return
        if k == n:
            if e >= self.lo and (self.exact_delta is None or max(r.bit_count() for r in rows) == self.exact_delta):
                yield tuple(rows)
            return
        if gens is None:
            gens = labelling_of_rows(rows, k).generators
        cap = self.cap
        remaining = n - k - 1
        min_each = 1 if self.connected else 0
        size_lo = max(min_each, self.lo - e - self.future_max[k + 1])
        size_hi = min(k, cap, self.hi - e - remaining * min_each)
        if size_lo > size_hi:
            return
        avail = [v for v in range(k) if rows[v].bit_count() < cap]
        bit_k = 1 << k
        for size in range(size_lo, min(size_hi, len(avail)) + 1):
            for xs in combinations(avail, size):
                x = 0
                for u in xs:
                    x |= 1 << u
                if gens and not _orbit_minimal(x, gens):
                    continue
                child = rows[:]
                for u in xs:
                    child[u] |= bit_k
                child.append(x)
                ok, lab = self._accept(child, k + 1)
                if not ok:
                    continue
                yield from self._extend(child, k + 1, e + size, lab.generators if lab is not None else None)


def generate_rows(
    flt: EnumFilter, shard: int = 0, shards: int = 1, split_level: Optional[int] = None
) -> Iterator[tuple[int, ...]]:
    """Adjacency rows of one representative per isomorphism class (no Graph objects)."""
    if shards < 1 or not 0 <= shard < shards:
        raise ValueError(f"bad shard {shard} of {shards}")
    lo, hi = flt.edge_bounds()
    if lo > hi:
        return iter(())
    if flt.max_degree_exact is not None and flt.order > 1 and flt.max_degree_exact == 0:
        if flt.connected_only:
            return iter(())
    return _Generator(flt, shard, shards, split_level).run()


def generate(
    flt: EnumFilter, shard: int = 0, shards: int = 1, split_level: Optional[int] = None
) -> Iterator[Graph]:
    """Stream one graph per isomorphism class matching ``flt``.

    With ``shards > 1`` only the part of the search tree owned by ``shard`` is
    walked; the shards partition the full stream.
    """
    n = flt.order
    for rows in generate_rows(flt, shard, shards, split_level):
        yield Graph(n, rows)


def count(flt: EnumFilter, shard: int = 0, shards: int = 1) -> int:
    return sum(1 for _ in generate_rows(flt, shard, shards))
