import pytest
from hypothesis import given, strategies as st

from zpstab.geometry import (
    Component,
    DegenerateInputError,
    Orientation,
    Point,
    Side,
    orient,
    point_in_polygon,
    ray_line_component,
    segments_properly_cross,
)

P = Point


def test_orient_basic():
    assert orient(P(0, 0), P(1, 0), P(0, 1)) is Orientation.LEFT
    assert orient(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR
    assert orient(P(0, 0), P(0, 1), P(1, 0)) is Orientation.RIGHT


coords = st.integers(min_value=-50, max_value=50)
points = st.builds(P, coords, coords)


@given(points, points, points)
def test_orient_reversal_and_cyclic_shift(a, b, c):
    assert orient(a, b, c).value == -orient(c, b, a).value
    assert orient(a, b, c) is orient(b, c, a)


def test_proper_crossing_examples():
    assert segments_properly_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert not segments_properly_cross(P(0, 0), P(1, 0), P(1, 0), P(2, 1))
    assert not segments_properly_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1))


@given(points, points, points, points)
def test_proper_crossing_symmetry(a, b, c, d):
    r = segments_properly_cross(a, b, c, d)
    assert r == segments_properly_cross(c, d, a, b)
    assert r == segments_properly_cross(b, a, c, d)
    assert r == segments_properly_cross(a, b, d, c)


def test_ray_line_component_examples():
    x, y = P(0, 0), P(2, 0)
    assert ray_line_component(x, y, P(1, -1), P(1, 1)) is Component.BODY
    assert ray_line_component(x, y, P(3, -1), P(3, 1)) is Component.HEAD
    assert ray_line_component(x, y, P(3, 1), P(4, 2)) is None
    assert ray_line_component(x, y, P(-1, -1), P(-1, 1)) is Component.TAIL


def test_ray_line_component_swap_symmetry():
    # tail(x,y) = head(y,x) for the same edge
    x, y = P(0, 0), P(3, 1)
    e1, e2 = P(-2, -1), P(-1, 2)
    assert ray_line_component(x, y, e1, e2) is Component.TAIL
    assert ray_line_component(y, x, e1, e2) is Component.HEAD


def test_ray_line_component_degeneracies():
    x, y = P(0, 0), P(2, 0)
    with pytest.raises(DegenerateInputError):
        ray_line_component(x, y, P(3, 0), P(4, 1))  # endpoint on the pair line
    with pytest.raises(DegenerateInputError):
        ray_line_component(x, y, P(1, -1), P(-1, 1))  # crossing lands on x


@given(points, points, st.builds(P, st.integers(-10, 10), st.integers(-10, 10)),
       st.builds(P, st.integers(-10, 10), st.integers(-10, 10)))
def test_ray_component_pair_reversal(x, y, e1, e2):
    if x == y:
        return
    try:
        fwd = ray_line_component(x, y, e1, e2)
        bwd = ray_line_component(y, x, e1, e2)
    except DegenerateInputError:
        return
    swap = {Component.TAIL: Component.HEAD, Component.HEAD: Component.TAIL,
            Component.BODY: Component.BODY, None: None}
    assert bwd is swap[fwd]


UNIT_SQUARE = [P(0, 0), P(2, 0), P(2, 2), P(0, 2)]


def test_point_in_polygon_examples():
    assert point_in_polygon(P(1, 1), UNIT_SQUARE) is Side.INSIDE
    assert point_in_polygon(P(5, 5), UNIT_SQUARE) is Side.OUTSIDE
    assert point_in_polygon(P(1, 0), UNIT_SQUARE) is Side.ON_BOUNDARY
    assert point_in_polygon(P(0, 0), UNIT_SQUARE) is Side.ON_BOUNDARY
