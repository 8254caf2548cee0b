from __future__ import annotations

import math
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerdiam.families import build
from steinerdiam.graph import from_edges
from steinerdiam.steiner import (
    SteinerError,
    _quad_eccentricities,
    eccentricities,
    is_steiner_tree,
    sdiam,
    sdiam_all,
    srad,
    steiner_distance,
    steiner_distance_oracle,
    steiner_eccentricity,
    steiner_table,
    steiner_tree,
)

from .strategies import graphs, to_nx


def _nx_steiner(g, s):
    # independent definitional reference: smallest connected vertex superset
    h = to_nx(g)
    others = [v for v in range(g.n) if v not in s]
    for extra in range(len(others) + 1):
        for add in combinations(others, extra):
            if nx.is_connected(h.subgraph(list(s) + list(add))):
                return len(s) + extra - 1
    return math.inf


def test_cycle_three_terminals():
    c6 = build("cycle:6")
    assert steiner_distance(c6, [0, 2, 4]) == 4
    assert steiner_distance_oracle(c6, [0, 2, 4]) == 4
    assert srad(c6, 3) == 4


def test_spec_examples():
    assert sdiam(build("cycle:9"), 3) == 6
    assert sdiam(build("complete:7"), 4) == 3
    assert steiner_eccentricity(build("cycle:9"), 0, 3) == 6


def test_disconnected_terminals_inf():
    g = from_edges(4, [(0, 1), (2, 3)])
    assert steiner_distance(g, [0, 2]) == math.inf
    assert steiner_distance(g, [0, 1, 2, 3], method="dp") == math.inf
    assert steiner_tree(g, [0, 3])[1] is None
    assert sdiam(g, 2) == math.inf


@pytest.mark.parametrize("bad", [[0], [0, 0], [0, 9], [-1, 2]])
def test_bad_terminal_sets(bad):
    with pytest.raises(SteinerError):
        steiner_distance(build("path:4"), bad)


def test_median_refuses_four_terminals():
    with pytest.raises(SteinerError):
        steiner_distance(build("path:5"), [0, 1, 2, 3], method="median")


@given(graphs(min_n=2, max_n=9), st.data())
@settings(max_examples=150)
def test_routes_agree(g, data):
    k = data.draw(st.integers(2, g.n))
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k, unique=True))
    ref = steiner_distance_oracle(g, s)
    assert steiner_distance(g, s, method="dp") == ref
    if k <= 3:
        assert steiner_distance(g, s, method="median") == ref
    table = steiner_table(g)
    mask = sum(1 << v for v in s)
    assert (math.inf if table[mask] >= 1 << 20 else int(table[mask])) == ref


@given(graphs(min_n=2, max_n=8), st.data())
@settings(max_examples=60)
def test_oracle_matches_networkx_reference(g, data):
    k = data.draw(st.integers(2, g.n))
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k, unique=True))
    assert steiner_distance_oracle(g, s) == _nx_steiner(g, sorted(s))


@given(graphs(min_n=2, max_n=10, connected=True), st.data())
@settings(max_examples=100)
def test_witness_trees_are_valid_and_optimal(g, data):
    k = data.draw(st.integers(2, min(g.n, 6)))
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=k, max_size=k, unique=True))
    for method in ("median", "dp") if k <= 3 else ("dp",):
        value, edges = steiner_tree(g, s, method=method)
        assert is_steiner_tree(g, s, edges)
        assert len(edges) == value


@given(graphs(min_n=4, max_n=9))
@settings(max_examples=60)
def test_four_terminal_route_matches_table(g):
    ecc = eccentricities(g, 4)
    quad = [math.inf if x >= 1 << 20 else int(x) for x in _quad_eccentricities(g)]
    assert quad == ecc


@given(graphs(min_n=3, max_n=9, connected=True))
@settings(max_examples=60)
def test_diameters_consistent(g):
    allk = sdiam_all(g)
    for k in range(2, g.n + 1):
        assert allk[k] == sdiam(g, k)
        assert srad(g, k) <= allk[k]
    assert allk[2] == nx.diameter(to_nx(g))


def test_is_steiner_tree_rejects():
    g = build("cycle:5")
    assert not is_steiner_tree(g, [0, 2], [(0, 1)])
    assert not is_steiner_tree(g, [0, 2], [(0, 2)])
    assert not is_steiner_tree(g, [0, 1], [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
