import pytest
from hypothesis import given, strategies as st

from caterpack.caterpillar import make_regular_caterpillar
from caterpack.errors import ParameterError, PreconditionError, VerificationError
from caterpack.layout import (
    INNER,
    OUTER,
    ConvexDrawing,
    drawing_from_assignment,
    ending_offset,
    is_contiguous_window,
    norm_edge,
    rotate,
    short_edges,
    slope_class,
    upper_part,
    used_slope_window,
    zigzag_drawing,
)

GRID = [(d, s) for d in range(2, 10) for s in range(2, 9)]


def zz(delta, sigma, start=0, side=INNER):
    return zigzag_drawing(make_regular_caterpillar(delta, sigma), start, side)


def test_small_zigzag_by_hand():
    # positions v1..v6 are 0..5 here
    d = zz(3, 2)
    assert d.edge_set() == {(0, 3), (1, 3), (2, 3), (0, 4), (0, 5)}
    assert short_edges(d) == ((0, 5), (2, 3))
    assert d.ending == 3
    assert all(s == INNER for s in d.sides)


def test_fourteen_point_zigzag():
    d = zz(4, 4)
    assert (d.start, d.ending) == (0, 7)
    first, _ = short_edges(d)
    assert first == (0, 13)
    r = rotate(d, 1)
    assert (r.start, r.ending) == (1, 8)


def test_odd_spine_ending():
    assert zz(3, 3).ending == 3
    assert ending_offset(8, 3, 3) == 3


def test_rotation_group_action():
    d = zz(4, 3, side=OUTER)
    assert rotate(d, 0) == d
    assert rotate(rotate(d, 5), 7) == rotate(d, 12)
    assert rotate(d, d.n) == d
    assert rotate(d, 3).sides == d.sides


@given(st.sampled_from(GRID), st.integers(0, 60))
def test_short_edges_shift_with_rotation(grid, ell):
    d = zz(*grid)
    n = d.n
    a, b = short_edges(d)
    ra, rb = short_edges(rotate(d, ell))
    shift = lambda e: norm_edge((e[0] + ell) % n, (e[1] + ell) % n)
    assert {ra, rb} == {shift(a), shift(b)}


@pytest.mark.parametrize("delta,sigma", GRID)
def test_zigzag_structure_over_grid(delta, sigma):
    d = zz(delta, sigma)
    n = d.n
    # spanning bijection and edges matching the caterpillar
    assert sorted(d.assign) == list(range(n))
    cat = make_regular_caterpillar(delta, sigma)
    assert d.edge_set() == {norm_edge(d.assign[a], d.assign[b]) for a, b in cat.edges()}
    # the two hull edges touch the starting and ending points
    first, second = short_edges(d)
    assert d.start in first
    assert d.ending in second
    # ending offset from the closed form
    assert (d.ending - d.start) % n == (n - (delta - 1) * (sigma % 2)) // 2
    # every edge joins the upper part to the lower part
    upper = upper_part(d)
    for a, b in d.edges:
        assert (a in upper) != (b in upper)
    # slope window: delta consecutive classes
    classes = {slope_class(a, b, n) for a, b in d.edges}
    assert len(classes) == delta
    assert is_contiguous_window(classes, n)
    assert used_slope_window(d) == sorted(classes, key=lambda c: (c - (2 * d.start - delta)) % n)


@pytest.mark.parametrize("delta,sigma", GRID[::3])
def test_every_spine_vertex_uses_whole_window(delta, sigma):
    d = zz(delta, sigma)
    window = set(used_slope_window(d))
    cat = make_regular_caterpillar(delta, sigma)
    for s in cat.spine:
        p = d.assign[s]
        incident = {slope_class(a, b, d.n) for a, b in d.edges if p in (a, b)}
        assert incident == window


@given(st.sampled_from(GRID), st.integers(0, 40))
def test_slope_shift_law(grid, ell):
    d = zz(*grid)
    n = d.n
    before = used_slope_window(d)
    after = used_slope_window(rotate(d, ell))
    assert after == [(c + 2 * ell) % n for c in before]


def test_disjoint_windows_for_offset_pair():
    # five-regular and three-regular caterpillars on 14 points, offsets 0 and 2
    d1 = zz(5, 3, 0)
    d2 = zz(3, 6, 2)
    assert not set(used_slope_window(d1)) & set(used_slope_window(d2))


def test_window_needs_zigzag():
    cat = make_regular_caterpillar(3, 2)
    d = drawing_from_assignment(cat, list(range(6)), 6, INNER)
    with pytest.raises(PreconditionError):
        used_slope_window(d)


def test_short_edges_count_checked():
    cat = make_regular_caterpillar(3, 2)
    # spine 0-1, leaves 2,3 on 0 and 4,5 on 1, identity placement has three hull edges
    d = drawing_from_assignment(cat, list(range(6)), 6, INNER)
    with pytest.raises(VerificationError):
        short_edges(d)


def test_contiguity_helper():
    assert is_contiguous_window({9, 0, 1}, 10)
    assert not is_contiguous_window({1, 3}, 10)
    assert is_contiguous_window(set(range(10)), 10)


def test_zigzag_rejects_bad_input():
    with pytest.raises(ParameterError):
        zz(3, 1)
    with pytest.raises(ParameterError):
        zz(3, 2, start=6)
    with pytest.raises(ParameterError):
        zz(3, 2, side="left")


@given(st.sampled_from(GRID), st.integers(0, 30), st.sampled_from([INNER, OUTER]))
def test_drawing_json_round_trip(grid, ell, side):
    d = rotate(zz(*grid, side=side), ell)
    back = ConvexDrawing.from_dict(d.to_dict())
    assert back == d
    assert back.ending == d.ending


def test_malformed_drawing_json():
    with pytest.raises(ParameterError):
        ConvexDrawing.from_dict({"n": 4, "edges": [[0, 1]]})
    with pytest.raises(ParameterError):
        ConvexDrawing.from_dict({"n": 4, "edges": [[0, 7, "inner"]]})
