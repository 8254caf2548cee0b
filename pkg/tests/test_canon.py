from __future__ import annotations

import random
from itertools import permutations
from math import factorial

import networkx as nx
from hypothesis import given, settings

from steinerdiam.canon import are_isomorphic, canonical_form, canonical_labelling, orbits
from steinerdiam.families import build
from steinerdiam.graph import from_edges, permute

from .strategies import graphs, to_nx


def _group_order(n, gens):
    # closure of the generated group, fine for the small cases used here
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[p[i]] for i in range(n))
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return len(seen)


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=60)
def test_invariant_under_all_permutations(g):
    form = canonical_form(g)
    for perm in permutations(range(g.n)):
        assert canonical_form(permute(g, perm)) == form


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
def test_isomorphism_matches_networkx(a, b):
    if a.n == b.n and a.edge_count == b.edge_count:
        assert are_isomorphic(a, b) == nx.is_isomorphic(to_nx(a), to_nx(b))


@given(graphs(min_n=1, max_n=7))
def test_generators_are_automorphisms(g):
    lab = canonical_labelling(g)
    for p in lab.generators:
        assert permute(g, p) == g


@given(graphs(min_n=1, max_n=7))
@settings(max_examples=40)
def test_group_order_matches_networkx(g):
    lab = canonical_labelling(g)
    h = to_nx(g)
    count = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter())
    assert _group_order(g.n, lab.generators) == count


def test_known_group_orders():
    assert _group_order(6, canonical_labelling(build("complete:6")).generators) == factorial(6)
    assert _group_order(8, canonical_labelling(build("cycle:8")).generators) == 16
    petersen = from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                          + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert _group_order(10, canonical_labelling(petersen).generators) == 120


def test_orbits_of_star():
    lab = canonical_labelling(build("star:5"))
    reps = orbits(5, lab.generators)
    assert reps == [0, 1, 1, 1, 1]


def test_larger_random_relabelling():
    rng = random.Random(7)
    for n in (12, 20, 30):
        g = build(f"cycle:{n}")
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(permute(g, perm)) == canonical_form(g)
