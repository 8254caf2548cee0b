"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine an ordered partition to an equitable
one, individualise each vertex of the first non-singleton cell, recurse. Leaves
are compared by their relabelled adjacency rows and the largest wins. Equal
leaves give automorphisms, which prune siblings (orbit pruning) and allow a
jump back to the common ancestor with the first leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, iter_bits


@dataclass(frozen=True)
class Labelling:
    lab: tuple[int, ...]  # canonical position -> vertex
    rows: tuple[int, ...]  # adjacency rows of the relabelled graph
    generators: tuple[tuple[int, ...], ...]  # automorphisms, perm[v] = image

    def position(self) -> list[int]:
        pos = [0] * len(self.lab)
        for i, v in enumerate(self.lab):
            pos[v] = i
        return pos


def refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until every cell is equitable.

    Cells split in place, ordered by their neighbour-count signature, so the
    result is invariant under relabelling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                r = rows[v]
                key = tuple((r & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                new.append(cell)
            else:
                for key in sorted(groups):
                    new.append(groups[key])
        if len(new) == len(cells):
            return new
        cells = new


def _relabel(rows: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    pos = [0] * len(lab)
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        m = 0
        for u in iter_bits(rows[v]):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


def orbits(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) of every vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, rows: Sequence[int], n: int) -> None:
        self.rows = rows
        self.n = n
        self.first_lab: Optional[list[int]] = None
        self.first_cert: Optional[tuple[int, ...]] = None
        self.first_path: list[int] = []
        self.best_lab: Optional[list[int]] = None
        self.best_cert: Optional[tuple[int, ...]] = None
        self.gens: list[tuple[int, ...]] = []

    def _automorphism(self, src: Sequence[int], dst: Sequence[int]) -> tuple[int, ...]:
        perm = [0] * self.n
        for a, b in zip(src, dst):
            perm[a] = b
        return tuple(perm)

    def _leaf(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        lab = [c[0] for c in cells]
        cert = _relabel(self.rows, lab)
        if self.first_cert is None:
            self.first_lab, self.first_cert, self.first_path = lab, cert, list(path)
            self.best_lab, self.best_cert = lab, cert
            return None
        if cert == self.first_cert:
            self.gens.append(self._automorphism(self.first_lab, lab))
            common = 0
            for a, b in zip(path, self.first_path):
                if a != b:
                    break
                common += 1
            return common
        if cert > self.best_cert:
            self.best_lab, self.best_cert = lab, cert
        elif cert == self.best_cert:
            self.gens.append(self._automorphism(self.best_lab, lab))
        return None

    def run(self, cells: list[list[int]], path: list[int]) -> Optional[int]:
        target = -1
        for i, c in enumerate(cells):
            if len(c) > 1:
                target = i
                break
        if target < 0:
            return self._leaf(cells, path)
        depth = len(path)
        cell = cells[target]
        explored: list[int] = []
        seen_gens = -1
        reps: list[int] = []
        for v in cell:
            if explored:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    fixing = [g for g in self.gens if all(g[p] == p for p in path)]
                    reps = orbits(self.n, fixing)
                rv = reps[v] if reps else v
                if any((reps[w] if reps else w) == rv for w in explored):
                    continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1 :]
            r = self.run(refine(self.rows, child), path + [v])
            explored.append(v)
            if r is not None and r < depth:
                return r
        return None


def canonical_labelling(g: Graph, partition: Optional[list[list[int]]] = None) -> Labelling:
    """Canonical labelling of ``g`` plus a generating set of its automorphism group.

    ``partition`` optionally colours the vertices (ordered cells); the result is
    then canonical for the coloured graph.
    """
    return labelling_of_rows(g.rows, g.n, partition)


def labelling_of_rows(
    rows: Sequence[int], n: int, partition: Optional[list[list[int]]] = None
) -> Labelling:
    cells = [list(c) for c in partition] if partition else [list(range(n))]
    s = _Search(rows, n)
    s.run(refine(rows, cells), [])
    return Labelling(tuple(s.best_lab), s.best_cert, tuple(s.gens))


def canonical_graph(g: Graph) -> Graph:
    return Graph(g.n, canonical_labelling(g).rows)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    from .graph6 import MAX_SHORT_ORDER, encode

    c = canonical_graph(g)
    if c.n <= MAX_SHORT_ORDER:
        return encode(c).encode("ascii")
    return (f"{c.n}:" + ",".join(format(r, "x") for r in c.rows)).encode("ascii")


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_labelling(a).rows == canonical_labelling(b).rows
