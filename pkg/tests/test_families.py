from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerdiam.families import FamilyError, FamilySpec, build, expected_properties
from steinerdiam.graph import DegreeProfile, degree_profile, is_connected
from steinerdiam.steiner import sdiam

SPECS = [
    "path:6", "cycle:9", "star:6", "complete:5", "multipartite:3,3", "multipartite:1,2,3", "kmm:7,3",
    "broom:8,5", "broom:7,3", "tabc:1,2,3", "tabc:0,2,3", "c3abc:1,2,3", "c3abc:0,0,2", "tdouble:3,2,2",
    "tdouble:3,4,3", "tdouble:2,1,3", "tstar:1,1", "tstar:3,1", "tstar:2,0", "twocenter:9", "twocenter:8,1",
    "k2m:6", "k2m:4", "chorded:9,0-4", "chorded:7,0-3,1-4,2-5", "chorded:8,0-4,2-6", "layered:3,3,5",
    "layered:2,1,6,8",
]


def _check(spec):
    g = build(spec)
    e = expected_properties(spec)
    assert is_connected(g)
    assert (g.n, g.edge_count, degree_profile(g).max_degree) == (e.order, e.edge_count, e.max_degree)
    if e.sdiam3 is not None:
        got = sdiam(g, 3)
        assert got == e.sdiam3 if e.sdiam3_kind == "exact" else got <= e.sdiam3


@pytest.mark.parametrize("spec", SPECS)
def test_claimed_properties(spec):
    _check(spec)


@pytest.mark.parametrize("spec", SPECS)
def test_text_round_trip(spec):
    assert str(FamilySpec.parse(spec)) == spec


def test_examples():
    g = build("kmm:7,3")
    assert (g.edge_count, degree_profile(g).max_degree) == (18, 6)
    assert sdiam(build("cycle:9"), 3) == 6
    assert build("layered:3,3,5").n == 7 + 3


def test_k2m_degrees():
    # K_{2,4} minus one edge: min 1, max 4, one leaf
    assert degree_profile(build("k2m:6")) == DegreeProfile(1, 4, 1)


@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
def test_spiders(a, b, c):
    if a + b + c + 1 >= 3:
        _check(f"tabc:{a},{b},{c}")
    _check(f"c3abc:{a},{b},{c}")


@given(st.integers(0, 4), st.integers(1, 5), st.integers(0, 4))
def test_double_brooms(a, b, c):
    if a + b + c >= 3:
        _check(f"tdouble:{a},{b},{c}")


@given(st.integers(5, 14), st.data())
@settings(max_examples=40)
def test_layered(n, data):
    d = data.draw(st.integers(4, n - 1))
    s = n - d + 1
    q = data.draw(st.integers(1, s // 2))
    _check(f"layered:{s - q},{q},{d}")


@given(st.integers(5, 14), st.data())
@settings(max_examples=30)
def test_two_center(n, data):
    r = data.draw(st.integers(1, n - 4))
    _check(f"twocenter:{n},{r}")


@given(st.integers(1, 4), st.integers(0, 4))
def test_tstar(x, y):
    _check(f"tstar:{x},{y}")


@pytest.mark.parametrize("bad", [
    "cycle:2", "nosuch:3", "layered:1,2,5", "layered:3,3,3", "layered:3,3,5,9", "broom:5,5",
    "twocenter:8,5", "kmm:5,3", "chorded:6,0-1", "chorded:6,0-9", "tabc:1,2", "cycle:x",
])
def test_invalid(bad):
    with pytest.raises(FamilyError):
        build(bad)
