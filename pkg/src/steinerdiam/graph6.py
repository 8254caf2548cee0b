"""graph6 encoding (short order form only, n <= 62)."""

from __future__ import annotations

from .graph import Graph

HEADER = ">>graph6<<"
MAX_SHORT_ORDER = 62


class Graph6Error(ValueError):
    pass


def encode(g: Graph) -> str:
    n = g.n
    if n > MAX_SHORT_ORDER:
        raise Graph6Error(f"order {n} needs the long graph6 order form, which is not supported")
    bits = []
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            bits.append(rj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = x << 1 | b
        out.append(chr(x + 63))
    return "".join(out)


def decode(s: str) -> Graph:
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long order form is not supported")
    if n == 0:
        raise Graph6Error("graph6 order 0 is not a valid graph here")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = s[1:]
    if len(payload) != need:
        raise Graph6Error(f"payload has {len(payload)} chars, expected {need} for n={n}")
    rows = [0] * n
    k = 0
    j, i = 1, 0
    for ch in payload:
        x = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if x >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                j, i = j + 1, 0
    return Graph(n, tuple(rows))
