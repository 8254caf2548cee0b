"""Exact e_k(n, l, d): fewest edges in a connected graph of order n, maximum
degree exactly l and Steiner k-diameter at most d."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .canon import canonical_form
from .enumeration import EnumFilter, generate_rows, order_cap, EnumerationCapError
from .graph import INF, ExtendedNat, Graph, bfs_layers
from .steiner import BIG, steiner_table, _popcounts

DEFAULT_WITNESS_CAP = 10


class QueryError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalQuery:
    n: int
    ell: int
    d: int
    k: int = 3

    def __post_init__(self) -> None:
        if self.n > order_cap():
            raise EnumerationCapError(f"order {self.n} exceeds enumeration cap {order_cap()}")
        if not 2 <= self.k <= self.n:
            raise QueryError(f"need 2 <= k <= n, got k={self.k}, n={self.n}")
        if not 1 <= self.ell <= self.n - 1:
            raise QueryError(f"need 1 <= l <= n-1, got l={self.ell}, n={self.n}")
        if self.d < 0:
            raise QueryError("d must be non-negative")


@dataclass
class ExtremalResult:
    query: ExtremalQuery
    value: ExtendedNat
    witnesses: list[Graph] = field(default_factory=list)
    witness_total: int = 0
    graphs_examined: int = 0
    edge_counts_swept: tuple[int, int] = (0, -1)
    elapsed: float = 0.0


def sdiam_rows(rows: Sequence[int], n: int, k: int, bound: Optional[int] = None) -> int:
    """sdiam_k of raw rows as an int (BIG if disconnected).

    With ``bound`` set, any return value above ``bound`` only certifies
    ``sdiam_k > bound``; the classical diameter is tested first since it is a
    lower bound for every k >= 2.
    """
    d = np.empty((n, n), dtype=np.int64)
    diam = 0
    for s in range(n):
        row = bfs_layers(rows, s, n)
        if -1 in row:
            return BIG
        ecc = max(row)
        if bound is not None and ecc > bound:
            return ecc
        if ecc > diam:
            diam = ecc
        d[s] = row
    if k == 2:
        return diam
    if k == 3:
        pair = d[:, None, :] + d[None, :, :]
        return int((pair[:, :, None, :] + d[None, None, :, :]).min(axis=3).max())
    table = steiner_table(Graph(n, tuple(rows)))
    return int(table[_popcounts(n) == k].max())


def _effective_d(q: ExtremalQuery) -> int:
    return min(q.d, q.n - 1)


def _scan_stratum(args) -> tuple[int, list[tuple[int, ...]], int]:
    """(examined, feasible rows up to cap, feasible total) for one shard of one stratum."""
    n, ell, m, k, d, shard, shards, cap = args
    flt = EnumFilter(n, max_degree_exact=ell, edge_count=m)
    examined = 0
    found: list[tuple[int, ...]] = []
    total = 0
    for rows in generate_rows(flt, shard, shards):
        examined += 1
        if sdiam_rows(rows, n, k, bound=d) <= d:
            total += 1
            if cap is None or len(found) < cap:
                found.append(rows)
    return examined, found, total


def compute_e(
    q: ExtremalQuery,
    witness_cap: Optional[int] = DEFAULT_WITNESS_CAP,
    shards: int = 1,
    workers: int = 1,
    shard: Optional[int] = None,
) -> ExtremalResult:
    """Search edge counts m = n-1, n, ... and stop at the first stratum holding a feasible graph.

    ``witness_cap=None`` collects every minimum witness. With ``workers > 1``
    each stratum's shards run in a process pool; the stratum is always finished
    before stopping, so the witness set does not depend on scheduling.
    ``shard`` restricts the search to one part of the partition (for manual
    parallel runs); the minimum over all parts is the true value.
    """
    if shard is not None and not 0 <= shard < shards:
        raise QueryError(f"bad shard {shard} of {shards}")
    t0 = time.perf_counter()
    n, ell, k = q.n, q.ell, q.k
    res = ExtremalResult(q, INF)
    if q.d < k - 1:
        res.elapsed = time.perf_counter() - t0
        return res
    d = _effective_d(q)
    lo = n - 1
    hi = min(n * (n - 1) // 2, n * ell // 2)
    res.edge_counts_swept = (lo, lo - 1)
    pool = ProcessPoolExecutor(workers) if workers > 1 and shards > 1 else None
    try:
        for m in range(lo, hi + 1):
            owned = range(shards) if shard is None else [shard]
            jobs = [(n, ell, m, k, d, i, shards, witness_cap) for i in owned]
            parts = list(pool.map(_scan_stratum, jobs)) if pool else [_scan_stratum(j) for j in jobs]
            res.edge_counts_swept = (lo, m)
            found: list[tuple[int, ...]] = []
            for examined, rows_list, total in parts:
                res.graphs_examined += examined
                res.witness_total += total
                found.extend(rows_list)
            if res.witness_total:
                res.value = m
                graphs = [Graph(n, r) for r in found]
                if shards > 1:
                    graphs.sort(key=canonical_form)
                res.witnesses = graphs if witness_cap is None else graphs[:witness_cap]
                break
    finally:
        if pool:
            pool.shutdown()
    res.elapsed = time.perf_counter() - t0
    return res


def minimality_audit(q: ExtremalQuery, m: int) -> int:
    """Number of feasible graphs with m - 1 edges (should be 0 for a correct minimum m)."""
    if m - 1 < q.n - 1:
        return 0
    _, _, total = _scan_stratum((q.n, q.ell, m - 1, q.k, _effective_d(q), 0, 1, 0))
    return total


@dataclass
class SweepRow:
    n: int
    ell: int
    d: int
    k: int
    value: ExtendedNat
    witness: Optional[Graph]
    graphs_examined: int


def sweep_order(n: int, k: int = 3, ells: Optional[Iterable[int]] = None) -> list[SweepRow]:
    """e_k(n, l, d) for every l and every k-1 <= d <= n-1 at one order.

    Each stratum (n, l, m) is enumerated once and its graphs' sdiam_k values
    serve all d at the same time.
    """
    if n > order_cap():
        raise EnumerationCapError(f"order {n} exceeds enumeration cap {order_cap()}")
    if not 2 <= k <= n:
        raise QueryError(f"need 2 <= k <= n, got k={k}, n={n}")
    out: list[SweepRow] = []
    ds = list(range(k - 1, n))
    for ell in ells if ells is not None else range(1, n):
        best: dict[int, tuple[int, tuple[int, ...]]] = {}
        examined = 0
        for m in range(n - 1, min(n * (n - 1) // 2, n * ell // 2) + 1):
            smallest = None
            for rows in generate_rows(EnumFilter(n, max_degree_exact=ell, edge_count=m)):
                examined += 1
                s = sdiam_rows(rows, n, k)
                for d in ds:
                    if d >= s and d not in best:
                        best[d] = (m, rows)
                if smallest is None or s < smallest:
                    smallest = s
            if len(best) == len(ds):
                break
        for d in ds:
            if d in best:
                m, rows = best[d]
                out.append(SweepRow(n, ell, d, k, m, Graph(n, rows), examined))
            else:
                out.append(SweepRow(n, ell, d, k, INF, None, examined))
    return out


def sweep(n_range: Iterable[int], k: int = 3) -> dict[tuple[int, int, int], SweepRow]:
    table: dict[tuple[int, int, int], SweepRow] = {}
    for n in n_range:
        for row in sweep_order(n, k):
            table[(row.n, row.ell, row.d)] = row
    return table
