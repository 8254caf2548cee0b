"""Named graph constructions and their asserted parameters.

Every family has a fixed vertex numbering so that graph6 output is
reproducible. Text syntax is ``kind:p1,p2,...`` (e.g. ``cycle:9``,
``tabc:1,2,3``, ``layered:3,3,5``, ``kmm:7,3``, ``chorded:9,0-4``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Optional

from .graph import Graph, from_edges


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, _, rest = text.strip().partition(":")
        kind = kind.lower()
        if kind not in _BUILDERS:
            raise FamilyError(f"unknown family {kind!r}; known: {', '.join(sorted(_BUILDERS))}")
        tokens = [t for t in rest.split(",") if t.strip()] if rest else []
        try:
            if kind == "chorded":
                if not tokens:
                    raise FamilyError("chorded needs an order")
                chords = []
                for t in tokens[1:]:
                    a, b = t.split("-")
                    chords.append((int(a), int(b)))
                return cls(kind, (int(tokens[0]), tuple(chords)))
            return cls(kind, tuple(int(t) for t in tokens))
        except ValueError as exc:
            raise FamilyError(f"bad parameters in {text!r}: {exc}") from None

    def __str__(self) -> str:
        if self.kind == "chorded":
            n, chords = self.params
            return "chorded:" + ",".join([str(n)] + [f"{a}-{b}" for a, b in chords])
        return f"{self.kind}:" + ",".join(str(p) for p in self.params)


@dataclass(frozen=True)
class FamilyProperties:
    order: int
    edge_count: int
    max_degree: int
    sdiam3: Optional[int] = None
    sdiam3_kind: Optional[str] = None  # "exact" or "upper"
    note: str = ""


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def _arity(spec: FamilySpec, *counts: int) -> None:
    _need(len(spec.params) in counts, f"{spec.kind} takes {' or '.join(map(str, counts))} parameters")


# -- builders ---------------------------------------------------------------


def _path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def _cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def _star(n: int) -> Graph:
    # centre 0, leaves 1..n-1
    _need(n >= 1, "star needs n >= 1")
    return from_edges(n, [(0, i) for i in range(1, n)])


def _complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return from_edges(n, combinations(range(n), 2))


def _multipartite(*parts: int) -> Graph:
    _need(len(parts) >= 2 and all(p >= 1 for p in parts), "multipartite needs >= 2 non-empty parts")
    parts = tuple(sorted(parts))
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    return from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]])


def _kmm(n: int, m: int) -> Graph:
    # removed matching: (0,1), (2,3), ...
    _need(n >= 3 and 0 <= m <= n // 2, "kmm needs n >= 3 and 0 <= m <= n/2")
    removed = {(2 * i, 2 * i + 1) for i in range(m)}
    return from_edges(n, [e for e in combinations(range(n), 2) if e not in removed])


def _broom(n: int, ell: int) -> Graph:
    # centre 0 with leaves 1..ell-1, path 0-ell-(ell+1)-...-(n-1)
    _need(2 <= ell <= n - 1, "broom needs 2 <= l <= n-1")
    edges = [(0, i) for i in range(1, ell)]
    chain = [0] + list(range(ell, n))
    edges += list(zip(chain, chain[1:]))
    return from_edges(n, edges)


def _legs(start: int, anchors: list[int], lengths: tuple[int, ...], edges: list) -> int:
    nxt = start
    for anchor, length in zip(anchors, lengths):
        prev = anchor
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt


def _tabc(a: int, b: int, c: int) -> Graph:
    # centre 0, then the three legs in order
    _need(min(a, b, c) >= 0, "tabc legs must be non-negative")
    edges: list = []
    n = _legs(1, [0, 0, 0], (a, b, c), edges)
    return from_edges(n, edges)


def _c3abc(a: int, b: int, c: int) -> Graph:
    # triangle 0,1,2 with legs hanging from 0, 1, 2
    _need(min(a, b, c) >= 0, "c3abc legs must be non-negative")
    edges: list = [(0, 1), (1, 2), (0, 2)]
    n = _legs(3, [0, 1, 2], (a, b, c), edges)
    return from_edges(n, edges)


def _double_broom(a: int, b: int, c: int) -> Graph:
    # path 0..b-1; leaves of the left centre b..b+a-1, of the right centre b+a..n-1
    _need(a >= 0 and c >= 0 and b >= 1, "tdouble needs a, c >= 0 and b >= 1")
    n = a + b + c
    edges = [(i, i + 1) for i in range(b - 1)]
    edges += [(0, b + i) for i in range(a)]
    edges += [(b - 1, b + a + i) for i in range(c)]
    return from_edges(n, edges)


def _tstar(x: int, y: int) -> Graph:
    # path 0..x-1; K_{1,3} centres x and x+3 hang off vertex 0 with two leaves each;
    # the far path end x-1 carries y leaves
    _need(x >= 1 and y >= 0, "tstar needs x >= 1 and y >= 0")
    n = x + y + 6
    edges = [(i, i + 1) for i in range(x - 1)]
    for c in (x, x + 3):
        edges += [(0, c), (c, c + 1), (c, c + 2)]
    edges += [(x - 1, x + 6 + i) for i in range(y)]
    return from_edges(n, edges)


def _two_center(n: int, r: Optional[int] = None) -> Graph:
    # u=0, v=1, w=2, x_i = 2+i; u~all x, v~x_1..x_r, w~x_{r+1}..x_{n-3}, v~w
    _need(n >= 5, "twocenter needs n >= 5")
    if r is None:
        r = (n - 3) // 2
    _need(1 <= r <= n - 4, "twocenter needs 1 <= r <= n-4")
    xs = [2 + i for i in range(1, n - 2)]
    edges = [(0, x) for x in xs] + [(1, x) for x in xs[:r]] + [(2, x) for x in xs[r:]] + [(1, 2)]
    return from_edges(n, edges)


def _k2m(n: int) -> Graph:
    # K_{2,n-2} on {0,1} | {2..n-1} without the edge 1-(n-1)
    _need(n >= 4, "k2m needs n >= 4")
    edges = [(0, x) for x in range(2, n)] + [(1, x) for x in range(2, n - 1)]
    return from_edges(n, edges)


def _chorded(n: int, chords: tuple = ()) -> Graph:
    _need(n >= 3, "chorded cycle needs n >= 3")
    cyc = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    for a, b in chords:
        _need(0 <= a < n and 0 <= b < n and a != b, f"bad chord {a}-{b}")
        _need((min(a, b), max(a, b)) not in cyc, f"chord {a}-{b} is a cycle edge")
    return from_edges(n, list(cyc) + list(chords))


def _layered(p: int, q: int, d: int, n: Optional[int] = None) -> Graph:
    # U = 0..p-1, W = p..p+q-1, v_1 = p+q, v_2..v_{d-1} = p+q+1..p+q+d-2
    _need(p >= q >= 1 and d >= 4, "layered needs p >= q >= 1 and d >= 4")
    order = p + q + d - 1
    _need(n is None or n == order, f"layered order is p+q+d-1 = {order}, declared {n}")
    us = list(range(p))
    ws = list(range(p, p + q))
    v1 = p + q
    vs = list(range(p + q + 1, order))  # v_2 .. v_{d-1}
    edges = list(combinations(us, 2)) + list(combinations(ws, 2))
    edges += [(u, w) for u in us for w in ws]
    edges += [(v1, u) for u in us] + [(vs[0], w) for w in ws]
    edges += list(zip(vs, vs[1:]))
    return from_edges(order, edges)


_BUILDERS: dict[str, Callable[..., Graph]] = {
    "path": _path,
    "cycle": _cycle,
    "star": _star,
    "complete": _complete,
    "multipartite": _multipartite,
    "kmm": _kmm,
    "broom": _broom,
    "tabc": _tabc,
    "c3abc": _c3abc,
    "tdouble": _double_broom,
    "tstar": _tstar,
    "twocenter": _two_center,
    "k2m": _k2m,
    "chorded": _chorded,
    "layered": _layered,
}

_ARITY = {
    "path": (1,), "cycle": (1,), "star": (1,), "complete": (1,), "kmm": (2,), "broom": (2,),
    "tabc": (3,), "c3abc": (3,), "tdouble": (3,), "tstar": (2,), "twocenter": (1, 2),
    "k2m": (1,), "chorded": (1, 2), "layered": (3, 4),
}


def build(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    if spec.kind not in _BUILDERS:
        raise FamilyError(f"unknown family {spec.kind!r}")
    if spec.kind in _ARITY:
        _arity(spec, *_ARITY[spec.kind])
    return _BUILDERS[spec.kind](*spec.params)


# -- asserted properties ------------------------------------------------------


def _tree_claim(n: int, leaves: int) -> tuple[Optional[int], Optional[str]]:
    # at most three leaves: a path or spider, diameter n-1; at least four: n - r + 2
    if n < 3:
        return None, None
    if leaves <= 3:
        return n - 1, "exact"
    return n - leaves + 2, "upper"


def _legs_delta(lengths: tuple[int, ...], base: int) -> int:
    centre = base + sum(1 for x in lengths if x > 0)
    inner = 2 if any(x >= 2 for x in lengths) else 1 if any(lengths) else 0
    return max(centre, inner)


def expected_properties(spec: FamilySpec | str) -> FamilyProperties:
    """Order, size, maximum degree and sdiam_3 value/bound asserted for a family member."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    build(spec)  # validates parameters
    k, p = spec.kind, spec.params
    if k == "path":
        n = p[0]
        return FamilyProperties(n, n - 1, min(n - 1, 2), *((n - 1, "exact") if n >= 3 else (None, None)))
    if k == "cycle":
        n = p[0]
        return FamilyProperties(n, n, 2, 2 * n // 3, "exact")
    if k in ("star", "complete", "multipartite"):
        if k == "star":
            parts = (1, p[0] - 1) if p[0] >= 2 else (1,)
        elif k == "complete":
            parts = (1,) * p[0]
        else:
            parts = tuple(sorted(p))
        n = sum(parts)
        edges = (n * n - sum(x * x for x in parts)) // 2
        delta = n - min(parts) if len(parts) > 1 else 0
        val = (2 if 3 > max(parts) else 3) if n >= 3 else None
        return FamilyProperties(n, edges, delta, val, "exact" if val is not None else None)
    if k == "kmm":
        n, m = p
        return FamilyProperties(n, comb(n, 2) - m, n - 1 if 2 * m < n else n - 2, 2, "exact")
    if k == "broom":
        n, ell = p
        return FamilyProperties(n, n - 1, ell, *_tree_claim(n, ell))
    if k == "tabc":
        n = sum(p) + 1
        val = (n - 1, "exact") if n >= 3 else (None, None)
        return FamilyProperties(n, n - 1, _legs_delta(p, 0), *val)
    if k == "c3abc":
        n = sum(p) + 3
        return FamilyProperties(n, n, 3 if any(p) else 2, n - 1, "exact")
    if k == "tdouble":
        a, b, c = p
        n = a + b + c
        if b == 1:
            delta, leaves = a + c, a + c
        else:
            delta = max(a + 1, c + 1, 2 if b >= 3 else 1)
            leaves = a + c + (a == 0) + (c == 0)
        return FamilyProperties(n, n - 1, delta, *_tree_claim(n, leaves))
    if k == "tstar":
        x, y = p
        n = x + y + 6
        if x >= 2:
            delta = max(3, y + 1)
            leaves = 4 + y + (y == 0)
        else:
            delta = max(3, y + 2)
            leaves = 4 + y
        return FamilyProperties(n, n - 1, delta, *_tree_claim(n, leaves),
                                note="constructor is an interpretation of an inconsistent definition")
    if k == "twocenter":
        n = p[0]
        return FamilyProperties(n, 2 * n - 5, n - 3, 3, "exact")
    if k == "k2m":
        n = p[0]
        return FamilyProperties(n, 2 * n - 5, n - 2, 3, "upper")
    if k == "chorded":
        n, chords = p if len(p) == 2 else (p[0], ())
        extra = [0] * n
        for a, b in chords:
            extra[a] += 1
            extra[b] += 1
        return FamilyProperties(n, n + len(chords), 2 + max(extra))
    if k == "layered":
        pp, q, d = p[:3]
        n = pp + q + d - 1
        return FamilyProperties(n, (n - d + 1) * (n - d + 2) // 2 + d - 3, n - d + 1, d, "upper")
    raise FamilyError(f"no properties for {k}")
