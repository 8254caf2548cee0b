"""Executable checks for the closed-form statements on Steiner diameters and e_3.

Every claim compares hard-coded expected values (the ``_expect_*`` functions
and the literal tables below, which never call the oracles) with values
computed by the steiner and extremal modules. Enumerative parts are truncated
to the enumeration cap; the range actually covered is recorded per report.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb, inf
from typing import Callable, Optional, Union

from .canon import canonical_form
from .enumeration import EnumFilter, generate_rows, order_cap
from .extremal import ExtremalQuery, compute_e, minimality_audit
from .families import FamilySpec, build
from .graph import Graph, complement, degree_profile, from_edges, is_connected
from .graph6 import encode
from .steiner import _popcounts, sdiam, sdiam3_rows, sdiam_all, steiner_table

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy-documented"

# exhaustive limit for the all-subsets property checks, and the random sample bound
PROPERTY_EXHAUSTIVE_MAX = 7
PROPERTY_RANDOM_MAX = 10
DEFAULT_SAMPLES = 1000
DEFAULT_SEED = 20160


class ClaimId(str, Enum):
    OBS_1_1 = "OBS_1_1"
    OBS_1_2 = "OBS_1_2"
    THM_1_1 = "THM_1_1"
    OBS_2_1_CYCLE = "OBS_2_1_CYCLE"
    OBS_2_1_COMPLETE = "OBS_2_1_COMPLETE"
    THM_2_1 = "THM_2_1"
    LEM_2_1 = "LEM_2_1"
    LEM_2_2 = "LEM_2_2"
    LEM_2_3 = "LEM_2_3"
    COR_2_1 = "COR_2_1"
    LEM_2_4 = "LEM_2_4"
    THM_3_1 = "THM_3_1"
    PROP_3_1 = "PROP_3_1"
    LEM_3_1 = "LEM_3_1"
    THM_3_2 = "THM_3_2"
    THM_4_1 = "THM_4_1"
    THM_4_2 = "THM_4_2"
    THM_4_3 = "THM_4_3"
    PROP_5_2 = "PROP_5_2"


Value = Union[int, float, str, list]


@dataclass
class Row:
    params: dict
    relation: str  # "==", "<=", "in", "one-of", "sets-equal", "violations=="
    expected: Value
    computed: Value
    status: str
    witness: Optional[str] = None
    note: str = ""


@dataclass
class ClaimReport:
    claim: ClaimId
    statement: str
    verified_range: str
    rows: list[Row] = field(default_factory=list)
    status: str = PASS
    evidence: list[str] = field(default_factory=list)


@dataclass
class SuiteReport:
    n_max: int
    reports: list[ClaimReport]

    @property
    def failed(self) -> list[ClaimId]:
        return [r.claim for r in self.reports if r.status == FAIL]

    @property
    def discrepancies(self) -> list[ClaimId]:
        return [r.claim for r in self.reports if r.status == DISCREPANCY]

    @property
    def status(self) -> str:
        if self.failed:
            return FAIL
        return DISCREPANCY if self.discrepancies else PASS

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0


# -- helpers ---------------------------------------------------------------------


def _cmp(relation: str, expected: Value, computed: Value) -> bool:
    if relation == "==":
        return computed == expected
    if relation == "<=":
        return computed <= expected
    if relation == "in":
        lo, hi = expected
        return lo <= computed <= hi
    if relation == "one-of":
        return computed in expected
    raise ValueError(relation)


def _row(params: dict, relation: str, expected: Value, computed: Value, **kw) -> Row:
    return Row(params, relation, expected, computed, PASS if _cmp(relation, expected, computed) else FAIL, **kw)


def _finish(rep: ClaimReport) -> ClaimReport:
    states = {r.status for r in rep.rows}
    rep.status = FAIL if FAIL in states else DISCREPANCY if DISCREPANCY in states else PASS
    return rep


def _g6(rows: tuple[int, ...], n: int) -> str:
    return encode(Graph(n, rows))


def _canon(rows: tuple[int, ...], n: int) -> bytes:
    return canonical_form(Graph(n, rows))


def _enum_max(n_max: int) -> int:
    return min(n_max, order_cap())


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Every connected graph of order n (one per class) with its sdiam_3."""
    return tuple((rows, sdiam3_rows(rows, n)) for rows in generate_rows(EnumFilter(n)))


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    return tuple((rows, sdiam3_rows(rows, n)) for rows in generate_rows(EnumFilter(n, edge_count=n - 1)))


@lru_cache(maxsize=None)
def _e(n: int, ell: int, d: int, k: int = 3) -> tuple[Union[int, float], Optional[str]]:
    res = compute_e(ExtremalQuery(n, ell, d, k), witness_cap=1)
    return res.value, (encode(res.witnesses[0]) if res.witnesses else None)


def _random_connected(rng: random.Random, n: int) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    p = rng.uniform(0.0, 0.6)
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def _property_graphs(n_max: int, samples: int, seed: int):
    """(label, graph) pairs: exhaustive small orders, then a seeded random sample."""
    for n in range(2, min(n_max, PROPERTY_EXHAUSTIVE_MAX, order_cap()) + 1):
        for rows in generate_rows(EnumFilter(n)):
            yield "exhaustive", Graph(n, rows)
    top = min(n_max, PROPERTY_RANDOM_MAX)
    if top >= 3:
        rng = random.Random(seed)
        for _ in range(samples):
            yield "random", _random_connected(rng, rng.randint(3, top))


def _property_range(n_max: int, samples: int) -> str:
    ex = min(n_max, PROPERTY_EXHAUSTIVE_MAX, order_cap())
    return f"all connected graphs 2 <= n <= {ex}; {samples} random connected graphs 3 <= n <= {min(n_max, PROPERTY_RANDOM_MAX)}"


def _tally_rows(tally: dict[tuple[str, int], list[int]], what: str) -> list[Row]:
    out = []
    for (label, n), (graphs, bad, wit) in sorted(tally.items()):
        out.append(Row({"source": label, "n": n, "graphs": graphs, "check": what}, "violations==", 0, bad,
                       PASS if bad == 0 else FAIL, witness=wit))
    return out


def _bump(tally: dict, key: tuple[str, int], bad: bool, g: Graph) -> None:
    entry = tally.setdefault(key, [0, 0, None])
    entry[0] += 1
    if bad:
        entry[1] += 1
        if entry[2] is None:
            entry[2] = encode(g)


# -- invariants --------------------------------------------------------------------


def _check_obs_1_1(n_max: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClaimReport:
    rep = ClaimReport(ClaimId.OBS_1_1, "d(S) >= k-1 for every S with |S| = k, 2 <= k <= n",
                      _property_range(n_max, samples))
    tally: dict = {}
    for label, g in _property_graphs(n_max, samples, seed):
        table = steiner_table(g)
        sizes = _popcounts(g.n)
        mask = sizes >= 2
        _bump(tally, (label, g.n), bool((table[mask] < sizes[mask] - 1).any()), g)
    rep.rows = _tally_rows(tally, "d(S) >= |S|-1")
    return _finish(rep)


def _spanning_subgraph(g: Graph, rng: random.Random) -> Graph:
    """Connected spanning subgraph obtained by deleting random non-bridge edges."""
    edges = list(g.edges())
    rng.shuffle(edges)
    keep = set(edges)
    for e in edges:
        if rng.random() < 0.5:
            continue
        trial = keep - {e}
        if is_connected(from_edges(g.n, trial)):
            keep = trial
    return from_edges(g.n, keep)


def _check_obs_1_2(n_max: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClaimReport:
    rep = ClaimReport(ClaimId.OBS_1_2,
                      "sdiam_k(G) <= sdiam_k(H) for connected spanning H of G; sdiam_k(G) <= sdiam_{k+1}(G)",
                      _property_range(n_max, samples))
    sub: dict = {}
    mono: dict = {}
    rng = random.Random(seed + 1)
    for label, g in _property_graphs(n_max, samples, seed):
        dg = sdiam_all(g)
        dh = sdiam_all(_spanning_subgraph(g, rng))
        n = g.n
        _bump(sub, (label, n), any(dg[k] > dh[k] for k in range(2, n + 1)), g)
        _bump(mono, (label, n), any(dg[k] > dg[k + 1] for k in range(2, n)), g)
    rep.rows = _tally_rows(sub, "spanning subgraph") + _tally_rows(mono, "monotone in k")
    return _finish(rep)


def _check_thm_1_1(n_max: int, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED) -> ClaimReport:
    rep = ClaimReport(ClaimId.THM_1_1, "k-1 <= sdiam_k(G) <= n-1 for connected G; both bounds attained",
                      _property_range(n_max, samples))
    tally: dict = {}
    for label, g in _property_graphs(n_max, samples, seed):
        dg = sdiam_all(g)
        _bump(tally, (label, g.n), any(not k - 1 <= dg[k] <= g.n - 1 for k in dg), g)
    rep.rows = _tally_rows(tally, "k-1 <= sdiam_k <= n-1")
    # sharpness: complete graphs meet the lower bound, paths the upper one
    for n in range(2, min(n_max, 12) + 1):
        kn, pn = sdiam_all(build(f"complete:{n}")), sdiam_all(build(f"path:{n}"))
        for k in range(2, n + 1):
            rep.rows.append(_row({"graph": f"complete:{n}", "k": k}, "==", k - 1, kn[k]))
            rep.rows.append(_row({"graph": f"path:{n}", "k": k}, "==", n - 1, pn[k]))
    return _finish(rep)


# -- families ----------------------------------------------------------------------


def _check_obs_2_1_cycle(n_max: int) -> ClaimReport:
    rep = ClaimReport(ClaimId.OBS_2_1_CYCLE, "sdiam_k(C_n) = floor(n(k-1)/k)",
                      f"3 <= n <= {n_max}; k in {{2,3,4}}, every k <= n when n <= 12")
    for n in range(3, n_max + 1):
        g = build(f"cycle:{n}")
        ks = range(2, n + 1) if n <= 12 else range(2, 5)
        vals = sdiam_all(g) if n <= 12 else {k: sdiam(g, k) for k in ks}
        for k in ks:
            rep.rows.append(_row({"n": n, "k": k}, "==", n * (k - 1) // k, vals[k]))
    return _finish(rep)


def _check_obs_2_1_complete(n_max: int) -> ClaimReport:
    top = min(n_max, 12)
    rep = ClaimReport(ClaimId.OBS_2_1_COMPLETE, "sdiam_k(K_n) = k-1", f"2 <= k <= n <= {top}")
    for n in range(2, top + 1):
        vals = sdiam_all(build(f"complete:{n}"))
        for k in range(2, n + 1):
            rep.rows.append(_row({"n": n, "k": k}, "==", k - 1, vals[k]))
    return _finish(rep)


def _partitions(n: int, smallest: int = 1):
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _expect_multipartite(parts: tuple[int, ...], k: int) -> int:
    return k - 1 if k > max(parts) else k


def _check_prop_3_1(n_max: int) -> ClaimReport:
    top = min(n_max, 12)
    rep = ClaimReport(ClaimId.PROP_3_1, "sdiam_k(K_{n_1..n_r}) = k-1 if k > n_r, else k",
                      f"every partition of n into >= 2 parts, 2 <= n <= {top}, 2 <= k <= n")
    for n in range(2, top + 1):
        for parts in _partitions(n):
            if len(parts) < 2:
                continue
            spec = "multipartite:" + ",".join(map(str, parts))
            vals = sdiam_all(build(spec))
            for k in range(2, n + 1):
                rep.rows.append(_row({"parts": list(parts), "k": k}, "==", _expect_multipartite(parts, k), vals[k]))
    return _finish(rep)


# -- characterisations -----------------------------------------------------------


def _set_row(n: int, expected: set[bytes], computed: set[bytes], **extra) -> Row:
    diff = sorted(expected ^ computed)
    return Row({"n": n, **extra}, "sets-equal", len(expected), len(computed), PASS if not diff else FAIL,
               witness=diff[0].decode() if diff else None,
               note="" if not diff else f"{len(diff)} graphs in one class only")


def _check_lem_2_1(n_max: int) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(ClaimId.LEM_2_1, "tree with r >= 4 leaves: sdiam_3(T) <= n-r+2",
                      f"all trees 5 <= n <= {top}")
    for n in range(5, top + 1):
        worst: dict[int, tuple[int, tuple[int, ...]]] = {}
        for rows, s in _trees(n):
            r = sum(1 for x in rows if x.bit_count() == 1)
            if r >= 4 and (r not in worst or s > worst[r][0]):
                worst[r] = (s, rows)
        for r in sorted(worst):
            s, rows = worst[r]
            rep.rows.append(_row({"n": n, "leaves": r}, "<=", n - r + 2, s, witness=_g6(rows, n)))
    return _finish(rep)


def _spider_forms(n: int) -> set[bytes]:
    out = set()
    for a in range(n):
        for b in range(a, n):
            c = n - 1 - a - b
            if c >= b:
                out.add(canonical_form(build(f"tabc:{a},{b},{c}")))
            c = n - 3 - a - b
            if c >= b:
                out.add(canonical_form(build(f"c3abc:{a},{b},{c}")))
    return out


def _check_lem_2_3(n_max: int) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(ClaimId.LEM_2_3, "sdiam_3(G) = n-1 iff G is T_{a,b,c} or C_3(a,b,c)",
                      f"all connected graphs 3 <= n <= {top}")
    for n in range(3, top + 1):
        found = {_canon(rows, n) for rows, s in _connected(n) if s == n - 1}
        rep.rows.append(_set_row(n, _spider_forms(n), found))
    return _finish(rep)


def _check_cor_2_1(n_max: int) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(ClaimId.COR_2_1, "connected, max degree 2 and sdiam_3 <= n-2 implies C_n (and C_n qualifies for n >= 4)",
                      f"all connected graphs 3 <= n <= {top}")
    for n in range(3, top + 1):
        expected = {canonical_form(build(f"cycle:{n}"))} if n >= 4 else set()
        found = {_canon(rows, n) for rows, s in _connected(n)
                 if s <= n - 2 and max(x.bit_count() for x in rows) == 2}
        rep.rows.append(_set_row(n, expected, found))
    return _finish(rep)


def _check_lem_2_4(n_max: int) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(ClaimId.LEM_2_4, "sdiam_3(G) = 2 iff max degree of complement <= 1 iff min degree >= n-2",
                      f"all connected graphs 3 <= n <= {top}")
    for n in range(3, top + 1):
        by_sdiam, by_delta, by_comp = set(), set(), set()
        for rows, s in _connected(n):
            g = Graph(n, rows)
            key = _canon(rows, n) if s == 2 or min(x.bit_count() for x in rows) >= n - 2 else None
            if s == 2:
                by_sdiam.add(key)
            if degree_profile(g).min_degree >= n - 2:
                by_delta.add(key)
                if degree_profile(complement(g)).max_degree <= 1:
                    by_comp.add(key)
        rep.rows.append(_set_row(n, by_delta, by_sdiam, condition="min degree >= n-2"))
        rep.rows.append(_set_row(n, by_delta, by_comp, condition="complement max degree <= 1"))
    return _finish(rep)


def _check_lem_3_1(n_max: int) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(ClaimId.LEM_3_1, "a tree with n >= 5 has sdiam_3 = 3 iff it is a star",
                      f"all trees 5 <= n <= {top}")
    for n in range(5, top + 1):
        found = {_canon(rows, n) for rows, s in _trees(n) if s == 3}
        rep.rows.append(_set_row(n, {canonical_form(build(f"star:{n}"))}, found))
    return _finish(rep)


# -- extremal tables -------------------------------------------------------------


Case = tuple[str, int, int, int, Value, str]  # (part, n, ell, d, expected, relation)


def _expect_thm_3_1(n: int) -> list[Case]:
    even = n % 2 == 0
    return [
        ("l=n-1", n, n - 1, 2, comb(n, 2) - ((n - 2) // 2 if even else (n - 1) // 2), "=="),
        ("l=n-2", n, n - 2, 2, comb(n, 2) - n // 2 if even else inf, "=="),
    ]


def _expect_thm_3_2(n: int) -> list[Case]:
    out: list[Case] = [("l=n-1", n, n - 1, 3, n - 1, "=="), ("l=n-2", n, n - 2, 3, 2 * n - 5, "==")]
    if n >= 5:
        out.append(("l=n-3", n, n - 3, 3, 2 * n - 5, "=="))
    out.append(("l=2", n, 2, 3, {4: 3, 5: 5}.get(n, inf), "=="))
    for ell in range(-(-n // 2), n - 3):
        out.append(("n/2 <= l <= n-4", n, ell, 3, [n, ell * (n - ell)], "in"))
    return out


def _expect_thm_4_1(n: int) -> list[Case]:
    out: list[Case] = [("l=2", n, 2, n - 2, n, "=="), ("l=3", n, 3, n - 2, {4: n + 1, 5: n}.get(n, n - 1), "==")]
    if n >= 5:
        out += [("4 <= l <= n-1", n, ell, n - 2, n - 1, "==") for ell in range(4, n)]
    return out


# (7, 3, 4): the lemma-level table gives n+1 = 8, the theorem-level table gives n = 7
CONFLICT = (7, 3, 4)
CONFLICT_VALUES = {"lemma-level statement (n+1 for n = 6, 7)": 8, "theorem-level statement (n for n = 7)": 7}


def _expect_thm_4_2(n: int) -> list[Case]:
    l3 = {5: inf, 6: n + 1, 7: sorted(CONFLICT_VALUES.values())}.get(n, n - 1)
    out: list[Case] = [
        ("l=2", n, 2, n - 3, inf if n in (5, 6) else n, "=="),
        ("l=3", n, 3, n - 3, l3, "one-of" if n == 7 else "=="),
        ("l=4", n, 4, n - 3, {5: comb(5, 2) - 2, 6: n + 1}.get(n, n - 1), "=="),
    ]
    if n >= 6:
        out += [("5 <= l <= n-1", n, ell, n - 3, n - 1, "==") for ell in range(5, n)]
    return out


def _expect_thm_4_3(n: int) -> list[Case]:
    out: list[Case] = [("l=2", n, 2, n - 4, inf if n <= 9 else n, "==")]
    if n >= 6:
        out += [
            ("l=3", n, 3, n - 4, {6: inf, 7: n + 3, 8: n + 2, 9: n + 1}.get(n, n - 1), "=="),
            ("l=4", n, 4, n - 4, {6: 2 * n, 7: n + 2}.get(n, n - 1), "=="),
            ("l=5", n, 5, n - 4, {6: 2 * n + 1, 7: n + 2}.get(n, n - 1), "=="),
        ]
    if n >= 7:
        out += [("6 <= l <= n-1", n, ell, n - 4, n - 1, "==") for ell in range(6, n)]
    return out


def _expect_lem_2_2(n: int) -> list[Case]:
    return [("", n, ell, d, n - 1, "==") for d in range(2, n - 1) for ell in range(n - d + 2, n - 1)]


def _prop_5_2_bound(n: int, d: int) -> int:
    return (n - d + 1) * (n - d + 2) // 2 + d - 3


def _table_rows(cases: list[Case]) -> list[Row]:
    rows = []
    for part, n, ell, d, expected, relation in cases:
        value, wit = _e(n, ell, d)
        rows.append(_row({"part": part, "n": n, "l": ell, "d": d, "k": 3}, relation, expected, value, witness=wit))
    return rows


def _construction_rows(spec: str, max_degree: int, edges: int, sdiam3_max: int) -> list[Row]:
    g = build(FamilySpec.parse(spec))
    got = degree_profile(g).max_degree
    return [
        _row({"construction": spec, "quantity": "max_degree"}, "==", max_degree, got),
        _row({"construction": spec, "quantity": "edges"}, "==", edges, g.edge_count),
        _row({"construction": spec, "quantity": "sdiam3"}, "<=", sdiam3_max, sdiam(g, 3), witness=encode(g)),
    ]


def _extremal_claim(cid: ClaimId, statement: str, lo: int, n_max: int,
                    cases: Callable[[int], list[Case]]) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(cid, statement, f"{lo} <= n <= {top}, exhaustive minimum-size search")
    for n in range(lo, top + 1):
        rep.rows += _table_rows(cases(n))
    return rep


def _check_thm_2_1(n_max: int) -> ClaimReport:
    top = _enum_max(n_max)
    rep = ClaimReport(ClaimId.THM_2_1, "e_k(n,l,n-1) = n-1 for 2 <= l <= n-1, 3 <= k <= n",
                      f"3 <= n <= {top}, every l and k")
    for n in range(3, top + 1):
        for k in range(3, n + 1):
            for ell in range(2, n):
                value, wit = _e(n, ell, n - 1, k)
                rep.rows.append(_row({"n": n, "l": ell, "d": n - 1, "k": k}, "==", n - 1, value, witness=wit))
    return _finish(rep)


def _check_lem_2_2(n_max: int) -> ClaimReport:
    rep = _extremal_claim(ClaimId.LEM_2_2, "e_3(n,l,d) = n-1 for 2 <= d <= n-2, n-d+2 <= l <= n-2",
                          4, n_max, _expect_lem_2_2)
    return _finish(rep)


def _check_thm_3_1(n_max: int) -> ClaimReport:
    rep = _extremal_claim(ClaimId.THM_3_1, "e_3(n,n-1,2) and e_3(n,n-2,2) by parity of n", 3, n_max, _expect_thm_3_1)
    return _finish(rep)


def _check_thm_3_2(n_max: int) -> ClaimReport:
    rep = _extremal_claim(ClaimId.THM_3_2, "e_3(n,l,3) for l in {n-1, n-2, n-3, 2} and the band n/2 <= l <= n-4",
                          4, n_max, _expect_thm_3_2)
    for n in range(4, n_max + 1):
        rep.rows += _construction_rows(f"k2m:{n}", n - 2, 2 * n - 5, 3)
        for r in range(1, n - 3):
            rep.rows += _construction_rows(f"twocenter:{n},{r}", n - 3, 2 * n - 5, 3)
    return _finish(rep)


def _check_thm_4_1(n_max: int) -> ClaimReport:
    rep = _extremal_claim(ClaimId.THM_4_1, "e_3(n,l,n-2) for every l", 4, n_max, _expect_thm_4_1)
    for n in range(6, n_max + 1):
        rep.rows += _construction_rows(f"tdouble:2,{n - 4},2", 3, n - 1, n - 2)
    return _finish(rep)


def _check_thm_4_2(n_max: int) -> ClaimReport:
    rep = _extremal_claim(ClaimId.THM_4_2, "e_3(n,l,n-3) for every l", 5, n_max, _expect_thm_4_2)
    for n in range(8, n_max + 1):
        rep.rows += _construction_rows(f"tstar:{n - 7},1", 3, n - 1, n - 3)
    for row in rep.rows:
        p = row.params
        if (p.get("n"), p.get("l"), p.get("d")) != CONFLICT or row.status != PASS:
            continue
        row.status = DISCREPANCY
        confirmed = [name for name, v in CONFLICT_VALUES.items() if v == row.computed]
        refuted = [name for name, v in CONFLICT_VALUES.items() if v != row.computed]
        audit = minimality_audit(ExtremalQuery(*CONFLICT), int(row.computed))
        row.note = f"oracle confirms the {confirmed[0]}; contradicts the {refuted[0]}"
        rep.evidence.append(
            f"e_3(7,3,4) = {row.computed}: confirms the {confirmed[0]} and contradicts the {refuted[0]}; "
            f"witness {row.witness}; feasible graphs with {int(row.computed) - 1} edges: {audit}"
        )
    return _finish(rep)


def _check_thm_4_3(n_max: int) -> ClaimReport:
    rep = _extremal_claim(ClaimId.THM_4_3, "e_3(n,l,n-4) for every l", 5, n_max, _expect_thm_4_3)
    chorded = {7: "chorded:7,0-3,1-4,2-5", 8: "chorded:8,0-4,2-6", 9: "chorded:9,0-4"}
    for n in range(7, min(n_max, 9) + 1):
        rep.rows += _construction_rows(chorded[n], 3, 10, n - 4)
    for row in rep.rows:
        if row.status == FAIL and "part" in row.params:
            p = row.params
            rep.evidence.append(
                f"e_3({p['n']},{p['l']},{p['d']}) computed {row.computed}, stated {row.expected}; witness {row.witness}"
            )
    return _finish(rep)


def _check_prop_5_2(n_max: int) -> ClaimReport:
    oracle_top = min(_enum_max(n_max), 8)
    rep = ClaimReport(ClaimId.PROP_5_2, "e_3(n,n-d+1,d) <= (n-d+1)(n-d+2)/2 + d-3 via the layered-clique graph",
                      f"constructions 5 <= n <= {n_max}, 4 <= d <= n-1, every p >= q >= 1; "
                      f"exhaustive e_3 at l = n-d+1 for n <= {oracle_top}")
    for n in range(5, n_max + 1):
        for d in range(4, n):
            s = n - d + 1
            bound = _prop_5_2_bound(n, d)
            for q in range(1, s // 2 + 1):
                p = s - q
                g = build(f"layered:{p},{q},{d}")
                params = {"n": n, "d": d, "p": p, "q": q}
                rep.rows += [
                    _row({**params, "quantity": "order"}, "==", n, g.n),
                    _row({**params, "quantity": "max_degree"}, "==", s, degree_profile(g).max_degree),
                    _row({**params, "quantity": "edges"}, "==", bound, g.edge_count),
                    _row({**params, "quantity": "sdiam3"}, "<=", d, sdiam(g, 3), witness=encode(g)),
                ]
            if n <= oracle_top:
                value, wit = _e(n, s, d)
                rep.rows.append(_row({"n": n, "l": s, "d": d, "quantity": "e_3"}, "<=", bound, value, witness=wit))
    return _finish(rep)


_CHECKS: dict[ClaimId, Callable[[int], ClaimReport]] = {
    ClaimId.OBS_1_1: _check_obs_1_1,
    ClaimId.OBS_1_2: _check_obs_1_2,
    ClaimId.THM_1_1: _check_thm_1_1,
    ClaimId.OBS_2_1_CYCLE: _check_obs_2_1_cycle,
    ClaimId.OBS_2_1_COMPLETE: _check_obs_2_1_complete,
    ClaimId.THM_2_1: _check_thm_2_1,
    ClaimId.LEM_2_1: _check_lem_2_1,
    ClaimId.LEM_2_2: _check_lem_2_2,
    ClaimId.LEM_2_3: _check_lem_2_3,
    ClaimId.COR_2_1: _check_cor_2_1,
    ClaimId.LEM_2_4: _check_lem_2_4,
    ClaimId.THM_3_1: _check_thm_3_1,
    ClaimId.PROP_3_1: _check_prop_3_1,
    ClaimId.LEM_3_1: _check_lem_3_1,
    ClaimId.THM_3_2: _check_thm_3_2,
    ClaimId.THM_4_1: _check_thm_4_1,
    ClaimId.THM_4_2: _check_thm_4_2,
    ClaimId.THM_4_3: _check_thm_4_3,
    ClaimId.PROP_5_2: _check_prop_5_2,
}


def registry() -> dict[ClaimId, Callable[[int], ClaimReport]]:
    return dict(_CHECKS)


def run_claim(claim: Union[ClaimId, str], n_max: int, **kw) -> ClaimReport:
    """Run one claim over orders up to ``n_max`` (enumerative parts stop at the cap).

    Keyword arguments ``samples`` and ``seed`` reach the random-sample checks.
    """
    cid = ClaimId(claim)
    if n_max < 1:
        raise ValueError("n_max must be positive")
    fn = _CHECKS[cid]
    if cid in (ClaimId.OBS_1_1, ClaimId.OBS_1_2, ClaimId.THM_1_1):
        return fn(n_max, **kw)
    return fn(n_max)


def _run_one(args: tuple[str, int]) -> ClaimReport:
    return run_claim(args[0], args[1])


def run_all(n_max: int, workers: int = 1) -> SuiteReport:
    """Every claim, reports in registry order regardless of ``workers``."""
    ids = list(ClaimId)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(_run_one, [(c.value, n_max) for c in ids]))
    else:
        reports = [run_claim(c, n_max) for c in ids]
    return SuiteReport(n_max, reports)
