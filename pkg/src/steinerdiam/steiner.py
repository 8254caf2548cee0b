"""Steiner distance, Steiner k-eccentricity, k-radius and k-diameter.

Three exact routes are kept apart on purpose:

* median identity (k <= 3): a minimum tree on at most three terminals has at
  most one branch vertex, so d(S) = min over v of the summed distances to S;
* Dreyfus-Wagner dynamic programming over terminal subsets (any k);
* the definitional oracle: smallest connected vertex set containing S.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import INF, ExtendedNat, Graph, bfs_layers, component_mask, iter_bits

BIG = 1 << 20  # stands in for infinity inside integer arrays
MAX_DP_TERMINALS = 16
MAX_TABLE_ORDER = 12
MAX_ORACLE_ORDER = 16

Edge = tuple[int, int]


class SteinerError(ValueError):
    pass


def terminal_set(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    ts = tuple(sorted(set(int(v) for v in s)))
    if len(ts) < 2:
        raise SteinerError("a terminal set needs at least two distinct vertices")
    if ts[0] < 0 or ts[-1] >= g.n:
        raise SteinerError(f"terminal out of range for n={g.n}")
    return ts


def _check_k(g: Graph, k: int) -> None:
    if not 2 <= k <= g.n:
        raise SteinerError(f"k must satisfy 2 <= k <= n (k={k}, n={g.n})")


def distance_matrix(g: Graph) -> np.ndarray:
    """BFS distances as an int64 array, BIG between components."""
    d = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = bfs_layers(g.rows, s, g.n)
        d[s] = [BIG if x < 0 else x for x in row]
    return d


def _ext(x: int) -> ExtendedNat:
    return INF if x >= BIG else int(x)


def _bfs_parents(g: Graph, root: int) -> list[int]:
    parent = [-1] * g.n
    parent[root] = root
    frontier = [root]
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(g.rows[v]):
                if parent[u] < 0:
                    parent[u] = v
                    nxt.append(u)
        frontier = nxt
    return parent


def _path_edges(g: Graph, a: int, b: int) -> set[Edge]:
    parent = _bfs_parents(g, a)
    out = set()
    v = b
    while v != a:
        p = parent[v]
        out.add((min(p, v), max(p, v)))
        v = p
    return out


# -- median identity -------------------------------------------------------


def _median(g: Graph, ts: Sequence[int], witness: bool):
    d = distance_matrix(g)
    total = d[list(ts)].sum(axis=0)
    v = int(np.argmin(total))
    value = int(total[v])
    if value >= BIG:
        return INF, None
    if not witness:
        return value, None
    parent = _bfs_parents(g, v)
    edges: set[Edge] = set()
    for t in ts:
        x = t
        while x != v:
            p = parent[x]
            edges.add((min(p, x), max(p, x)))
            x = p
    return value, sorted(edges)


# -- Dreyfus-Wagner ----------------------------------------------------------


def _dreyfus_wagner(g: Graph, ts: Sequence[int], witness: bool):
    k = len(ts)
    if k > MAX_DP_TERMINALS:
        raise SteinerError(f"subset DP supports at most {MAX_DP_TERMINALS} terminals, got {k}")
    d = distance_matrix(g)
    root = ts[-1]
    q = k - 1
    n = g.n
    full = (1 << q) - 1
    pre = np.full((full + 1, n), BIG, dtype=np.int64)  # before the path relaxation
    dp = np.full((full + 1, n), BIG, dtype=np.int64)
    for i in range(q):
        pre[1 << i, ts[i]] = 0
        dp[1 << i] = d[ts[i]]
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue
        low = mask & -mask
        rest = mask ^ low
        best = None
        sub = rest
        while True:
            a = sub | low
            if a != mask:
                cand = dp[a] + dp[mask ^ a]
                best = cand if best is None else np.minimum(best, cand)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        pre[mask] = np.minimum(best, BIG)
        dp[mask] = (pre[mask][:, None] + d).min(axis=0)
    value = int(dp[full, root])
    if value >= BIG:
        return INF, None
    if not witness:
        return value, None
    edges: set[Edge] = set()

    def build(mask: int, v: int) -> None:
        u = int(np.argmin(pre[mask] + d[:, v]))
        if u != v:
            edges.update(_path_edges(g, u, v))
        if mask & (mask - 1) == 0:
            return
        low = mask & -mask
        rest = mask ^ low
        best_val, best_a = None, None
        sub = rest
        while True:
            a = sub | low
            if a != mask:
                val = dp[a, u] + dp[mask ^ a, u]
                if best_val is None or val < best_val:
                    best_val, best_a = val, a
            if sub == 0:
                break
            sub = (sub - 1) & rest
        build(best_a, u)
        build(mask ^ best_a, u)

    build(full, root)
    return value, sorted(edges)


# -- public API -------------------------------------------------------------


def steiner_tree(g: Graph, s: Iterable[int], method: str = "auto") -> tuple[ExtendedNat, Optional[list[Edge]]]:
    """Steiner distance of ``s`` together with a minimum Steiner tree (edge list).

    ``method`` is ``"median"`` (k <= 3 only), ``"dp"`` or ``"auto"`` (median for
    k <= 3, DP otherwise). The tree is None when the terminals are disconnected.
    """
    ts = terminal_set(g, s)
    return _dispatch(g, ts, method, witness=True)


def steiner_distance(g: Graph, s: Iterable[int], method: str = "auto") -> ExtendedNat:
    ts = terminal_set(g, s)
    return _dispatch(g, ts, method, witness=False)[0]


def _dispatch(g: Graph, ts: Sequence[int], method: str, witness: bool):
    if method == "auto":
        method = "median" if len(ts) <= 3 else "dp"
    if method == "median":
        if len(ts) > 3:
            raise SteinerError("the median identity only holds for at most three terminals")
        return _median(g, ts, witness)
    if method == "dp":
        return _dreyfus_wagner(g, ts, witness)
    if method == "oracle":
        return steiner_distance_oracle(g, ts), None
    raise SteinerError(f"unknown method {method!r}")


def steiner_distance_oracle(g: Graph, s: Iterable[int]) -> ExtendedNat:
    """min |U| - 1 over vertex sets U containing ``s`` that induce a connected subgraph."""
    if g.n > MAX_ORACLE_ORDER:
        raise SteinerError(f"oracle limited to n <= {MAX_ORACLE_ORDER}")
    ts = terminal_set(g, s)
    smask = 0
    for t in ts:
        smask |= 1 << t
    others = [v for v in range(g.n) if not smask >> v & 1]
    for extra in range(len(others) + 1):
        for add in combinations(others, extra):
            u = smask
            for v in add:
                u |= 1 << v
            if component_mask(g.rows, ts[0], u) == u:
                return len(ts) + extra - 1
    return INF


# -- all-subsets table ---------------------------------------------------------


@lru_cache(maxsize=None)
def _split_plan(n: int):
    """Per popcount level: the masks, and (mask index, A, B) for splits A|B = mask with low bit in A."""
    levels = []
    by_pop: dict[int, list[int]] = {}
    for mask in range(1, 1 << n):
        by_pop.setdefault(mask.bit_count(), []).append(mask)
    for p in range(2, n + 1):
        masks = by_pop[p]
        idx, aa, bb = [], [], []
        for i, mask in enumerate(masks):
            low = mask & -mask
            rest = mask ^ low
            sub = rest
            while True:
                a = sub | low
                if a != mask:
                    idx.append(i)
                    aa.append(a)
                    bb.append(mask ^ a)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        starts = np.flatnonzero(np.r_[True, np.diff(np.asarray(idx)) != 0])
        levels.append((np.asarray(masks), np.asarray(aa), np.asarray(bb), starts))
    return levels


def steiner_table(g: Graph) -> np.ndarray:
    """Steiner distance of every vertex subset at once, indexed by bitmask.

    Dreyfus-Wagner with every vertex a terminal, vectorised per subset size.
    Entries for subsets of size < 2 are 0; disconnected subsets hold BIG.
    """
    n = g.n
    if n > MAX_TABLE_ORDER:
        raise SteinerError(f"all-subsets table limited to n <= {MAX_TABLE_ORDER}")
    d = distance_matrix(g)
    dp = np.zeros((1 << n, n), dtype=np.int64)
    for a in range(n):
        dp[1 << a] = d[a]
    for masks, aa, bb, starts in _split_plan(n):
        vals = dp[aa] + dp[bb]
        best = np.minimum.reduceat(vals, starts, axis=0)
        np.minimum(best, BIG, out=best)
        dp[masks] = (best[:, :, None] + d[None, :, :]).min(axis=1)
    out = dp.min(axis=1)
    out[0] = 0
    for a in range(n):
        out[1 << a] = 0
    return np.minimum(out, BIG)


@lru_cache(maxsize=None)
def _popcounts(n: int) -> np.ndarray:
    return np.array([m.bit_count() for m in range(1 << n)])


# -- eccentricity, radius, diameter ---------------------------------------------


def _triple_tensor(g: Graph) -> np.ndarray:
    d = distance_matrix(g)
    pair = d[:, None, :] + d[None, :, :]
    return (pair[:, :, None, :] + d[None, None, :, :]).min(axis=3)


def _quad_eccentricities(g: Graph) -> np.ndarray:
    """Steiner 4-eccentricities from distances alone.

    A tree spanning four terminals has at most two branch vertices u, v, with
    two terminals hanging off each (u = v allowed), so
    d({a,b,c,e}) = min over pairings ab|ce of min_{u,v} d(a,u)+d(b,u)+d(u,v)+d(v,c)+d(v,e).
    Tuples with repeated vertices never exceed a true 4-set containing them.
    """
    d = distance_matrix(g)
    n = g.n
    f = d[:, None, :] + d[None, :, :]  # f[a,b,u]
    ecc = np.zeros(n, dtype=np.int64)
    for a in range(n):
        ga = (f[a][:, :, None] + d[None, :, :]).min(axis=1)  # ga[b,v]
        m = (ga[:, None, None, :] + f[None, :, :, :]).min(axis=3)  # m[b,c,e], pairing ab|ce
        best = np.minimum(np.minimum(m, m.transpose(1, 0, 2)), m.transpose(1, 2, 0))
        ecc[a] = best.max()
    return np.minimum(ecc, BIG)


def eccentricities(g: Graph, k: int) -> list[ExtendedNat]:
    """Steiner k-eccentricity of every vertex."""
    _check_k(g, k)
    n = g.n
    if k == 2:
        d = distance_matrix(g)
        return [_ext(x) for x in d.max(axis=1)]
    if k == 3:
        t = _triple_tensor(g)
        return [_ext(x) for x in t.reshape(n, -1).max(axis=1)]
    if n <= MAX_TABLE_ORDER:
        table = steiner_table(g)
        sel = np.flatnonzero(_popcounts(n) == k)
        vals = table[sel]
        out = []
        for v in range(n):
            has_v = (sel >> v) & 1 == 1
            out.append(_ext(vals[has_v].max()))
        return out
    if k == 4:
        return [_ext(x) for x in _quad_eccentricities(g)]
    ecc: list[ExtendedNat] = [0] * n
    for s in combinations(range(n), k):
        val = _dispatch(g, s, "dp", witness=False)[0]
        for v in s:
            if val > ecc[v]:
                ecc[v] = val
    return ecc


def steiner_eccentricity(g: Graph, v: int, k: int) -> ExtendedNat:
    if not 0 <= v < g.n:
        raise SteinerError(f"vertex {v} out of range")
    return eccentricities(g, k)[v]


def sdiam(g: Graph, k: int) -> ExtendedNat:
    """Steiner k-diameter; INF for a disconnected graph."""
    _check_k(g, k)
    if k == 2:
        return _ext(distance_matrix(g).max())
    if k == 3:
        return _ext(_triple_tensor(g).max())
    return max(eccentricities(g, k))


def srad(g: Graph, k: int) -> ExtendedNat:
    return min(eccentricities(g, k))


def sdiam_all(g: Graph) -> dict[int, ExtendedNat]:
    """sdiam_k for every 2 <= k <= n from one all-subsets table (n <= 12)."""
    n = g.n
    table = steiner_table(g)
    pc = _popcounts(n)
    return {k: _ext(table[pc == k].max()) for k in range(2, n + 1)}


def sdiam3_rows(rows: Sequence[int], n: int) -> int:
    """sdiam_3 for raw adjacency rows, BIG when disconnected (hot path for searches)."""
    d = np.empty((n, n), dtype=np.int64)
    for s in range(n):
        row = bfs_layers(rows, s, n)
        if -1 in row:
            return BIG
        d[s] = row
    pair = d[:, None, :] + d[None, :, :]
    return int((pair[:, :, None, :] + d[None, None, :, :]).min(axis=3).max())


def is_steiner_tree(g: Graph, s: Iterable[int], edges: Sequence[Edge]) -> bool:
    """True iff ``edges`` form a tree of ``g`` whose vertex set contains ``s``."""
    verts = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        verts.update((u, v))
    ts = set(s)
    if not edges:
        return len(ts) <= 1
    if not ts <= verts or len(edges) != len(verts) - 1:
        return False
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x] - seen:
            seen.add(y)
            stack.append(y)
    return seen == verts
