from __future__ import annotations

import math

import pytest

from steinerdiam.canon import canonical_form
from steinerdiam.enumeration import EnumerationCapError
from steinerdiam.extremal import ExtremalQuery, QueryError, compute_e, minimality_audit, sweep_order
from steinerdiam.graph import is_connected
from steinerdiam.steiner import sdiam


@pytest.mark.parametrize(
    "n, ell, d, value",
    [(8, 5, 7, 7), (6, 3, 3, 7), (5, 3, 2, math.inf), (4, 3, 2, 5), (6, 4, 3, 7), (7, 3, 3, 10)],
)
def test_known_values(n, ell, d, value):
    res = compute_e(ExtremalQuery(n, ell, d))
    assert res.value == value
    for g in res.witnesses:
        assert is_connected(g) and max(g.degrees()) == ell
        assert g.edge_count == value and sdiam(g, 3) <= d
    if value != math.inf:
        assert res.witnesses and minimality_audit(res.query, value) == 0
    else:
        assert not res.witnesses


def test_diameter_below_k_minus_one_is_inf():
    res = compute_e(ExtremalQuery(6, 5, 1))
    assert res.value == math.inf and res.graphs_examined == 0


def test_large_d_behaves_like_n_minus_one():
    assert compute_e(ExtremalQuery(6, 3, 40)).value == compute_e(ExtremalQuery(6, 3, 5)).value == 5


@pytest.mark.parametrize("bad", [(6, 0, 3, 3), (6, 6, 3, 3), (6, 3, 3, 1), (6, 3, 3, 7), (6, 3, -1, 3)])
def test_query_validation(bad):
    with pytest.raises(QueryError):
        ExtremalQuery(*bad)


def test_cap():
    with pytest.raises(EnumerationCapError):
        ExtremalQuery(13, 3, 5)


def test_witness_cap_and_full_set():
    full = compute_e(ExtremalQuery(7, 3, 4), witness_cap=None)
    assert full.value == 8 and full.witness_total == len(full.witnesses) == 8
    capped = compute_e(ExtremalQuery(7, 3, 4), witness_cap=2)
    assert len(capped.witnesses) == 2 and capped.witness_total == 8


def test_sharded_matches_serial():
    q = ExtremalQuery(7, 4, 3)
    serial = compute_e(q, witness_cap=None)
    sharded = compute_e(q, witness_cap=None, shards=3)
    pooled = compute_e(q, witness_cap=None, shards=3, workers=2)
    forms = sorted(canonical_form(g) for g in serial.witnesses)
    for other in (sharded, pooled):
        assert other.value == serial.value
        assert [canonical_form(g) for g in other.witnesses] == forms
    parts = [compute_e(q, witness_cap=None, shards=3, shard=i) for i in range(3)]
    assert min(p.value for p in parts) == serial.value
    assert sum(p.witness_total for p in parts if p.value == serial.value) == serial.witness_total


def test_sweep_agrees_with_single_queries():
    rows = sweep_order(6)
    for r in rows:
        assert r.value == compute_e(ExtremalQuery(r.n, r.ell, r.d)).value
        if r.witness is not None:
            assert sdiam(r.witness, 3) <= r.d and r.witness.edge_count == r.value


def test_other_k():
    # e_4 with d = n-1 is n-1 for every admissible degree
    for ell in range(2, 6):
        assert compute_e(ExtremalQuery(6, ell, 5, k=4)).value == 5
