"""JSON and CSV report documents.

Infinity is written as the string ``"inf"`` in both formats. Timing data lives
only under the optional top-level ``meta`` key, so documents without it are
byte-identical across reruns.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any, Iterable, Optional

from .canon import canonical_form
from .extremal import ExtremalResult
from .graph6 import decode, encode
from .verify import ClaimReport, SuiteReport

SCHEMA_VERSION = "1"

_VALUE = {"oneOf": [{"type": "integer", "minimum": 0}, {"const": "inf"}]}

SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "steinerdiam report",
    "type": "object",
    "required": ["schema_version", "kind", "query", "results"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "kind": {"enum": ["extremal", "claim", "suite"]},
        "query": {"type": "object"},
        "results": {"type": "object"},
        "meta": {"type": "object"},
    },
    "allOf": [
        {
            "if": {"properties": {"kind": {"const": "extremal"}}},
            "then": {
                "properties": {
                    "query": {
                        "type": "object",
                        "required": ["n", "l", "d", "k", "shards", "shard"],
                    },
                    "results": {
                        "type": "object",
                        "required": ["value", "witness_total", "witnesses", "graphs_examined", "edge_counts_swept"],
                        "properties": {
                            "value": _VALUE,
                            "witness_total": {"type": "integer", "minimum": 0},
                            "witnesses": {"type": "array", "items": {"type": "string", "pattern": "^[?-~]+$"}},
                            "graphs_examined": {"type": "integer", "minimum": 0},
                            "edge_counts_swept": {"type": "array", "items": {"type": "integer"}},
                        },
                    },
                }
            },
        },
        {
            "if": {"properties": {"kind": {"enum": ["claim", "suite"]}}},
            "then": {
                "properties": {
                    "query": {"type": "object", "required": ["n_max"]},
                    "results": {"type": "object", "required": ["status"]},
                }
            },
        },
    ],
}


class ReportError(ValueError):
    pass


def jsonable(x: Any) -> Any:
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Enum):
        return x.value
    if is_dataclass(x) and not isinstance(x, type):
        return {k: jsonable(v) for k, v in asdict(x).items()}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


def _meta(elapsed: Optional[float]) -> dict[str, Any]:
    out: dict[str, Any] = {"generated_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())}
    if elapsed is not None:
        out["elapsed_seconds"] = round(elapsed, 3)
    return out


def extremal_document(res: ExtremalResult, shard: Optional[int] = None, shards: int = 1,
                      timing: bool = False) -> dict[str, Any]:
    q = res.query
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "extremal",
        "query": {"n": q.n, "l": q.ell, "d": q.d, "k": q.k, "shards": shards, "shard": shard},
        "results": {
            "value": jsonable(res.value),
            "witness_total": res.witness_total,
            "witnesses": [encode(g) for g in res.witnesses],
            "graphs_examined": res.graphs_examined,
            "edge_counts_swept": list(res.edge_counts_swept),
        },
    }
    if timing:
        doc["meta"] = _meta(res.elapsed)
    return doc


def claim_payload(rep: ClaimReport) -> dict[str, Any]:
    return jsonable(rep)


def claim_document(rep: ClaimReport, n_max: int, elapsed: Optional[float] = None,
                   timing: bool = False) -> dict[str, Any]:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "claim",
        "query": {"claim": rep.claim.value, "n_max": n_max},
        "results": {"status": rep.status, "claims": [claim_payload(rep)]},
    }
    if timing:
        doc["meta"] = _meta(elapsed)
    return doc


def suite_document(suite: SuiteReport, elapsed: Optional[float] = None, timing: bool = False) -> dict[str, Any]:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "kind": "suite",
        "query": {"n_max": suite.n_max},
        "results": {
            "status": suite.status,
            "exit_code": suite.exit_code,
            "failed": [c.value for c in suite.failed],
            "discrepancies": [c.value for c in suite.discrepancies],
            "claims": [claim_payload(r) for r in suite.reports],
        },
    }
    if timing:
        doc["meta"] = _meta(elapsed)
    return doc


def to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def load(text: str) -> dict[str, Any]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReportError(f"not a JSON report: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema_version") != SCHEMA_VERSION:
        raise ReportError(f"unsupported report (schema_version must be {SCHEMA_VERSION!r})")
    return doc


# -- CSV --------------------------------------------------------------------------

EXTREMAL_COLUMNS = ["n", "l", "d", "k", "shard", "shards", "value", "witness_total", "graphs_examined", "witnesses"]
CLAIM_COLUMNS = ["claim", "claim_status", "params", "relation", "expected", "computed", "row_status", "witness"]


def _cell(x: Any) -> str:
    x = jsonable(x)
    if x is None:
        return ""
    if isinstance(x, (list, dict)):
        return json.dumps(x, separators=(",", ":"), sort_keys=True)
    return str(x)


def to_csv(doc: dict[str, Any]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if doc["kind"] == "extremal":
        w.writerow(EXTREMAL_COLUMNS)
        q, r = doc["query"], doc["results"]
        w.writerow([_cell(q[c]) for c in ("n", "l", "d", "k", "shard", "shards")]
                   + [_cell(r["value"]), r["witness_total"], r["graphs_examined"], " ".join(r["witnesses"])])
        return buf.getvalue()
    w.writerow(CLAIM_COLUMNS)
    for c in doc["results"]["claims"]:
        for row in c["rows"]:
            w.writerow([c["claim"], c["status"], _cell(row["params"]), row["relation"], _cell(row["expected"]),
                        _cell(row["computed"]), row["status"], _cell(row["witness"])])
    return buf.getvalue()


# -- merging shard reports ----------------------------------------------------------


def _rank(v: Any) -> float:
    return math.inf if v == "inf" else v


def merge_extremal(docs: Iterable[dict[str, Any]], witness_cap: Optional[int] = None) -> dict[str, Any]:
    """Combine the per-shard documents of one sharded extremal query.

    The value is the minimum over shards; witnesses come from the shards that
    attain it, ordered by canonical form.
    """
    docs = list(docs)
    if not docs:
        raise ReportError("nothing to merge")
    base = {k: v for k, v in docs[0]["query"].items() if k != "shard"}
    shards = base["shards"]
    seen: set[int] = set()
    for doc in docs:
        if doc.get("kind") != "extremal":
            raise ReportError("only extremal reports can be merged")
        if {k: v for k, v in doc["query"].items() if k != "shard"} != base:
            raise ReportError("reports belong to different queries")
        s = doc["query"]["shard"]
        if s is None or s in seen:
            raise ReportError(f"shard {s} missing index or given twice")
        seen.add(s)
    if seen != set(range(shards)):
        raise ReportError(f"missing shards: {sorted(set(range(shards)) - seen)}")
    best = min(_rank(d["results"]["value"]) for d in docs)
    winners = [d for d in docs if _rank(d["results"]["value"]) == best]
    witnesses = sorted((w for d in winners for w in d["results"]["witnesses"]),
                       key=lambda s: canonical_form(decode(s)))
    if witness_cap is not None:
        witnesses = witnesses[:witness_cap]
    lo = min(d["results"]["edge_counts_swept"][0] for d in docs)
    hi = max(d["results"]["edge_counts_swept"][1] for d in docs)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "extremal",
        "query": {**base, "shard": None},
        "results": {
            "value": jsonable(best),
            "witness_total": sum(d["results"]["witness_total"] for d in winners),
            "witnesses": witnesses,
            "graphs_examined": sum(d["results"]["graphs_examined"] for d in docs),
            "edge_counts_swept": [lo, hi],
        },
    }
