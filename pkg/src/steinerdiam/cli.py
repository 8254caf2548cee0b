"""Command-line entry point: ``steinerdiam <subcommand> ...``.

Exit codes: 0 success, 1 claim failure, 2 usage or input error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from .enumeration import EnumerationCapError, EnumFilter, generate_rows
from .extremal import DEFAULT_WITNESS_CAP, ExtremalQuery, QueryError, compute_e
from .families import FamilyError, FamilySpec, build, expected_properties
from .graph import Graph, GraphError, degree_profile
from .graph6 import Graph6Error, decode, encode
from .report import (
    ReportError,
    claim_document,
    extremal_document,
    load,
    merge_extremal,
    suite_document,
    to_csv,
    to_json,
)
from .steiner import SteinerError, sdiam, steiner_tree
from .verify import ClaimId, run_all, run_claim

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _fmt(x) -> str:
    return "inf" if x == float("inf") else str(x)


def _lines(path: Optional[str]) -> Iterable[str]:
    stream: TextIO = sys.stdin if path in (None, "-") else open(path, encoding="ascii")
    try:
        for line in stream:
            line = line.strip()
            if line:
                yield line
    finally:
        if stream is not sys.stdin:
            stream.close()


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)


def _cmd_sdiam(a: argparse.Namespace) -> int:
    for line in _lines(a.file):
        g = decode(line)
        print(_fmt(sdiam(g, a.k)), flush=True)
    return EXIT_OK


def _cmd_steiner(a: argparse.Namespace) -> int:
    g = decode(a.graph)
    terms = [int(t) for t in a.terminals.split(",") if t.strip()]
    value, edges = steiner_tree(g, terms, method=a.method)
    print(_fmt(value))
    if a.witness and edges is not None:
        print(" ".join(f"{u}-{v}" for u, v in edges))
    return EXIT_OK


def _cmd_construct(a: argparse.Namespace) -> int:
    spec = FamilySpec.parse(a.spec)
    g = build(spec)
    print(encode(g))
    if a.props:
        prof = degree_profile(g)
        print(f"order={g.n}")
        print(f"edges={g.edge_count}")
        print(f"max_degree={prof.max_degree}")
        if g.n >= 3:
            print(f"sdiam3={_fmt(sdiam(g, 3))}")
        claim = expected_properties(spec)
        if claim.sdiam3 is not None:
            op = "==" if claim.sdiam3_kind == "exact" else "<="
            print(f"claimed: order={claim.order} edges={claim.edge_count} max_degree={claim.max_degree} "
                  f"sdiam3{op}{claim.sdiam3}")
        else:
            print(f"claimed: order={claim.order} edges={claim.edge_count} max_degree={claim.max_degree}")
    return EXIT_OK


def _cmd_enumerate(a: argparse.Namespace) -> int:
    flt = EnumFilter(a.n, max_degree_exact=a.max_degree, edge_count=a.edges, connected_only=not a.all,
                     min_edges=a.min_edges, max_edges=a.max_edges)
    count = 0
    for rows in generate_rows(flt, a.shard, a.shards):
        count += 1
        if not a.count:
            sys.stdout.write(encode(Graph(a.n, rows)) + "\n")
    if a.count:
        print(count)
    sys.stdout.flush()
    return EXIT_OK


def _cmd_extremal(a: argparse.Namespace) -> int:
    q = ExtremalQuery(a.n, a.l, a.d, a.k)
    cap = None if a.all_witnesses else a.witness_cap
    res = compute_e(q, witness_cap=cap, shards=a.shards, workers=a.workers, shard=a.shard)
    doc = extremal_document(res, shard=a.shard, shards=a.shards, timing=a.timing)
    _emit(to_csv(doc) if a.format == "csv" else to_json(doc), a.output)
    return EXIT_OK


def _cmd_verify(a: argparse.Namespace) -> int:
    if a.list:
        for c in ClaimId:
            print(c.value)
        return EXIT_OK
    if bool(a.claim) == bool(a.all):
        raise _Usage("give exactly one of a claim id or --all")
    t0 = time.perf_counter()
    if a.all:
        suite = run_all(a.n_max, workers=a.workers)
        doc = suite_document(suite, time.perf_counter() - t0, timing=a.timing)
        code = suite.exit_code
        flagged = suite.discrepancies
    else:
        try:
            cid = ClaimId(a.claim.upper())
        except ValueError:
            raise _Usage(f"unknown claim {a.claim!r}; see --list") from None
        rep = run_claim(cid, a.n_max)
        doc = claim_document(rep, a.n_max, time.perf_counter() - t0, timing=a.timing)
        code = EXIT_FAIL if rep.status == "fail" else EXIT_OK
        flagged = [cid] if rep.status == "discrepancy-documented" else []
    _emit(to_csv(doc) if a.format == "csv" else to_json(doc), a.output)
    for c in flagged:
        print(f"WARNING: {c.value} has a documented discrepancy (see report evidence)", file=sys.stderr)
    return code


def _cmd_merge(a: argparse.Namespace) -> int:
    docs = [load(Path(p).read_text(encoding="ascii")) for p in a.reports]
    doc = merge_extremal(docs, witness_cap=a.witness_cap)
    _emit(to_csv(doc) if a.format == "csv" else to_json(doc), a.output)
    return EXIT_OK


class _Usage(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="steinerdiam", description="Steiner diameters and the extremal function e_k(n,l,d).")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("sdiam", help="sdiam_k of each graph6 line")
    s.add_argument("file", nargs="?", help="graph6 file (default stdin)")
    s.add_argument("-k", type=int, default=3)
    s.set_defaults(func=_cmd_sdiam)

    s = sub.add_parser("steiner", help="Steiner distance of a terminal set")
    s.add_argument("graph", help="graph6 string")
    s.add_argument("-t", "--terminals", required=True, help="comma-separated vertices")
    s.add_argument("--method", choices=["auto", "median", "dp", "oracle"], default="auto")
    s.add_argument("--witness", action="store_true", help="also print a minimum Steiner tree")
    s.set_defaults(func=_cmd_steiner)

    s = sub.add_parser("construct", help="build a named family member, e.g. cycle:9 or layered:3,3,5")
    s.add_argument("spec")
    s.add_argument("--props", action="store_true", help="print measured and claimed parameters")
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("enumerate", help="one graph6 line per isomorphism class")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-l", "--max-degree", type=int, help="exact maximum degree")
    s.add_argument("-e", "--edges", type=int, help="exact edge count")
    s.add_argument("--min-edges", type=int)
    s.add_argument("--max-edges", type=int)
    s.add_argument("--all", action="store_true", help="include disconnected graphs")
    s.add_argument("--count", action="store_true", help="print only the number of graphs")
    _shard_flags(s)
    s.set_defaults(func=_cmd_enumerate)

    s = sub.add_parser("extremal", help="exact e_k(n,l,d) with witnesses")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-l", type=int, required=True)
    s.add_argument("-d", type=int, required=True)
    s.add_argument("-k", type=int, default=3)
    s.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    s.add_argument("--all-witnesses", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    _shard_flags(s, single_default=None)
    _output_flags(s)
    s.set_defaults(func=_cmd_extremal)

    s = sub.add_parser("verify", help="re-derive a claim (or all) over orders up to --n-max")
    s.add_argument("claim", nargs="?")
    s.add_argument("--all", action="store_true")
    s.add_argument("--list", action="store_true", help="list claim ids")
    s.add_argument("--n-max", type=int, default=7)
    s.add_argument("--workers", type=int, default=1)
    _output_flags(s)
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("merge", help="merge per-shard extremal reports")
    s.add_argument("reports", nargs="+")
    s.add_argument("--witness-cap", type=int, default=DEFAULT_WITNESS_CAP)
    _output_flags(s, timing=False)
    s.set_defaults(func=_cmd_merge)
    return p


def _shard_flags(s: argparse.ArgumentParser, single_default: Optional[int] = 0) -> None:
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--shard", type=int, default=single_default)


def _output_flags(s: argparse.ArgumentParser, timing: bool = True) -> None:
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.add_argument("-o", "--output")
    if timing:
        s.add_argument("--timing", action="store_true", help="add a meta field with timestamp and elapsed time")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return a.func(a)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (_Usage, Graph6Error, GraphError, FamilyError, QueryError, SteinerError, ReportError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
