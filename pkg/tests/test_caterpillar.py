import json

import pytest
from hypothesis import given, strategies as st

from caterpack.caterpillar import (
    Caterpillar,
    RegularParams,
    caterpillars_from_json,
    center_of,
    check_packing_necessary,
    forbids_n_eq_2h,
    make_center_caterpillar,
    make_regular_caterpillar,
    path_caterpillar,
    placement_conditions,
    placement_exists,
    regularity_of,
    spine_length_for,
)
from caterpack.errors import ParameterError


def test_small_regular_caterpillar_shape():
    c = make_regular_caterpillar(3, 2)
    assert c.n == 6
    assert c.spine == (0, 1)
    assert [len(ls) for ls in c.leaves] == [2, 2]
    assert sorted(c.edges()) == [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]


@pytest.mark.parametrize("delta,sigma,n", [(4, 4, 14), (17, 2, 34), (9, 4, 34), (2, 2, 4)])
def test_vertex_counts(delta, sigma, n):
    assert make_regular_caterpillar(delta, sigma).n == n
    assert RegularParams(delta, sigma).n == n


@given(st.integers(2, 12), st.integers(1, 12))
def test_regular_generation_properties(delta, sigma):
    c = make_regular_caterpillar(delta, sigma)
    assert c.n == sigma * (delta - 1) + 2
    deg = c.degrees()
    assert all(deg[s] == delta for s in c.spine)
    assert sum(deg) == 2 * (c.n - 1)
    assert regularity_of(c) == delta
    # removing the leaves leaves the spine path
    leaves = {v for v in range(c.n) if deg[v] == 1}
    assert set(range(c.n)) - leaves == set(c.spine)


@pytest.mark.parametrize("delta,sigma", [(1, 3), (0, 2), (3, 0)])
def test_bad_regular_params(delta, sigma):
    with pytest.raises(ParameterError):
        make_regular_caterpillar(delta, sigma)


def test_regularity_of_examples():
    assert regularity_of(make_regular_caterpillar(4, 4)) == 4
    assert regularity_of(make_center_caterpillar(10, 3)) is None
    assert regularity_of(path_caterpillar(4)) == 2


def test_caterpillar_validation():
    with pytest.raises(ParameterError):
        Caterpillar(4, (0, 1), ((2,), (2,)))  # vertex used twice
    with pytest.raises(ParameterError):
        Caterpillar(3, (0, 1), ((2,), ()))  # spine end without leaves
    with pytest.raises(ParameterError):
        Caterpillar(2, (0,), ((1,),))


@given(st.integers(2, 8), st.integers(1, 8))
def test_json_round_trip(delta, sigma):
    c = make_regular_caterpillar(delta, sigma)
    assert Caterpillar.from_dict(json.loads(c.to_json())) == c
    assert caterpillars_from_json(json.dumps([c.to_dict(), c.to_dict()])) == [c, c]


def test_malformed_json():
    with pytest.raises(ParameterError):
        Caterpillar.from_dict({"n": 3, "spine": [0]})


@pytest.mark.parametrize(
    "n,h,maxdeg,expected",
    [(6, 3, [3, 3, 3], True), (8, 4, [3, 3, 3, 3], True), (10, 3, [8, 1, 1], False), (5, 3, [2, 2, 2], False)],
)
def test_necessary_conditions(n, h, maxdeg, expected):
    assert check_packing_necessary(n, h, maxdeg) is expected


@pytest.mark.parametrize(
    "delta,sigma,h,expected",
    [(3, 2, 3, True), (3, 3, 4, False), (4, 4, 7, True), (4, 4, 8, False), (5, 3, 3, True)],
)
def test_placement_exists(delta, sigma, h, expected):
    assert placement_exists(delta, sigma, h) is expected


def test_placement_conditions_name_the_failure():
    bad = placement_conditions(3, 3, 4)
    assert len(bad) == 1 and "(ii)" in bad[0]
    bad = placement_conditions(8, 2, 10)
    assert any("(i)" in b for b in bad)


def test_single_spine_vertex_rejected():
    with pytest.raises(ParameterError):
        placement_exists(5, 1, 2)


@pytest.mark.parametrize("delta,h,expected", [(3, 4, True), (3, 3, False), (2, 2, False), (5, 5, False), (4, 7, False), (3, 6, True)])
def test_forbids_n_eq_2h(delta, h, expected):
    assert forbids_n_eq_2h(delta, h) is expected


def test_forbids_needs_existing_caterpillar():
    with pytest.raises(ParameterError):
        forbids_n_eq_2h(4, 3)  # no 4-regular caterpillar on 6 vertices


@pytest.mark.parametrize("n,h,center_deg", [(10, 3, 7), (11, 4, 7), (24, 5, 19), (30, 3, 27)])
def test_center_caterpillar(n, h, center_deg):
    c = make_center_caterpillar(n, h)
    assert c.n == n
    assert c.degrees()[center_of(c)] == center_deg == n - h


@pytest.mark.parametrize("n,h", [(9, 3), (23, 5), (20, 6), (12, 2)])
def test_center_caterpillar_range(n, h):
    with pytest.raises(ParameterError):
        make_center_caterpillar(n, h)


def test_spine_length_for():
    assert spine_length_for(9, 34) == 4
    assert spine_length_for(17, 34) == 2
    assert spine_length_for(4, 13) is None
