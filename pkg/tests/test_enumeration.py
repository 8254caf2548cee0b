from __future__ import annotations

from itertools import combinations, permutations
from math import factorial

import networkx as nx
import pytest

from steinerdiam.canon import canonical_form
from steinerdiam.enumeration import EnumerationCapError, EnumFilter, count, generate, order_cap

from .strategies import to_nx

CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]  # unlabelled connected graphs, n = 1..8
ALL = [1, 2, 4, 11, 34, 156, 1044, 12346]
LABELLED_CONNECTED = [1, 1, 4, 38, 728, 26704, 1866256]


@pytest.mark.parametrize("n", range(1, 9))
def test_class_counts(n):
    assert count(EnumFilter(n)) == CONNECTED[n - 1]
    assert count(EnumFilter(n, connected_only=False)) == ALL[n - 1]


def _aut_order(g):
    h = to_nx(g)
    return sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())


@pytest.mark.parametrize("n", range(1, 8))
def test_orbit_counting_connected(n):
    # every labelled connected graph is counted exactly once: sum n!/|Aut| over classes
    total = sum(factorial(n) // _aut_order(g) for g in generate(EnumFilter(n)))
    assert total == LABELLED_CONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_orbit_counting_all(n):
    total = sum(factorial(n) // _aut_order(g) for g in generate(EnumFilter(n, connected_only=False)))
    assert total == 2 ** (n * (n - 1) // 2)


def _brute_classes(n, connected):
    # canonical key: lexicographically smallest sorted edge list over all relabellings
    pairs = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    keys = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        if connected and not nx.is_connected(h):
            continue
        key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
        keys.add((key, max(dict(h.degree()).values(), default=0), len(edges)))
    return keys


@pytest.mark.parametrize("n", [3, 4, 5])
def test_filters_against_brute_force(n):
    classes = _brute_classes(n, connected=True)
    for ell in range(1, n):
        for m in range(n - 1, n * (n - 1) // 2 + 1):
            want = sum(1 for _, d, e in classes if d == ell and e == m)
            assert count(EnumFilter(n, max_degree_exact=ell, edge_count=m)) == want


def test_no_duplicates_and_filters_hold():
    forms = set()
    for g in generate(EnumFilter(7, max_degree_exact=3)):
        assert max(g.degrees()) == 3 and nx.is_connected(to_nx(g))
        forms.add(canonical_form(g))
    assert len(forms) == count(EnumFilter(7, max_degree_exact=3))


@pytest.mark.parametrize("shards", [2, 3, 5])
def test_shards_partition(shards):
    full = {canonical_form(g) for g in generate(EnumFilter(7))}
    parts = [{canonical_form(g) for g in generate(EnumFilter(7), shard=i, shards=shards)} for i in range(shards)]
    assert sum(len(p) for p in parts) == len(full)
    assert set().union(*parts) == full


def test_edge_strata_sum():
    n = 7
    assert sum(count(EnumFilter(n, edge_count=m)) for m in range(n - 1, 22)) == CONNECTED[n - 1]
    assert sum(count(EnumFilter(n, max_degree_exact=ell)) for ell in range(1, n)) == CONNECTED[n - 1]


def test_cap(monkeypatch):
    with pytest.raises(EnumerationCapError):
        EnumFilter(order_cap() + 1)
    monkeypatch.setenv("STEINER_MAX_N", "6")
    assert order_cap() == 6
    with pytest.raises(EnumerationCapError):
        EnumFilter(7)
    monkeypatch.setenv("STEINER_MAX_N", "40")
    assert order_cap() == 12


def test_impossible_filters_are_empty():
    assert count(EnumFilter(5, max_degree_exact=1)) == 0
    assert count(EnumFilter(4, edge_count=2)) == 0
    with pytest.raises(ValueError):
        EnumFilter(4, max_degree_exact=4)
