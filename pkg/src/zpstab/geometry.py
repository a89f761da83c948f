"""Exact low-level geometric predicates.

Every predicate here is a sign computation on exact scalars (Python ints or
fractions.Fraction), so no floating-point rounding can flip an outcome.  All
other modules build on these; a single wrong sign would silently corrupt a
parity class downstream.

All functions are pure and safe to call concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence, Union

Scalar = Union[int, Fraction]


class GeometryError(Exception):
    pass


class DegenerateInputError(GeometryError):
    """A collinear triple (general-position violation) made a query ambiguous."""


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self) -> str:
        return f"({self.x}, {self.y})"


class Orientation(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


class Component(Enum):
    """Open component of line(x, y) minus {x, y}, in x + t*(y-x) coordinates."""

    TAIL = "tail"   # t < 0
    BODY = "body"   # 0 < t < 1
    HEAD = "head"   # t > 1


class Side(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"
    ON_BOUNDARY = "on_boundary"


def orient_value(a: Point, b: Point, c: Point) -> Scalar:
    """Doubled signed area of triangle abc (exact)."""
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)


def orient(a: Point, b: Point, c: Point) -> Orientation:
    v = orient_value(a, b, c)
    if v > 0:
        return Orientation.LEFT
    if v < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def segments_properly_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True iff the open segments share exactly one interior point.

    Endpoint contact, collinear overlap and mere touching all return False;
    a proper crossing requires each segment's endpoints strictly on opposite
    sides of the other's supporting line.
    """
    d1 = orient_value(q1, q2, p1)
    d2 = orient_value(q1, q2, p2)
    if d1 == 0 or d2 == 0 or (d1 > 0) == (d2 > 0):
        return False
    d3 = orient_value(p1, p2, q1)
    d4 = orient_value(p1, p2, q2)
    if d3 == 0 or d4 == 0 or (d3 > 0) == (d4 > 0):
        return False
    return True


def ray_line_component(x: Point, y: Point, e1: Point, e2: Point) -> Optional[Component]:
    """Which open component of line(x,y) \\ {x,y} the edge e1e2 properly crosses.

    Returns None when the edge does not properly cross the line.  Exact: the
    crossing parameter t is never divided out; only integer sign tests on
    d1*B - d2*A style expressions are used.

    Raises DegenerateInputError when a collinear triple makes the crossing
    land on a removed point or graze an edge endpoint (general-position
    violation: x,y,e1 / x,y,e2 / e1,e2,x / e1,e2,y collinear).
    """
    if x == y:
        raise DegenerateInputError("pair line undefined: x == y")
    d1 = orient_value(x, y, e1)
    d2 = orient_value(x, y, e2)
    if d1 == 0:
        raise DegenerateInputError(f"collinear triple: {x}, {y}, {e1}")
    if d2 == 0:
        raise DegenerateInputError(f"collinear triple: {x}, {y}, {e2}")
    if (d1 > 0) == (d2 > 0):
        return None
    ux = y.x - x.x
    uy = y.y - x.y
    a_dot = (e1.x - x.x) * ux + (e1.y - x.y) * uy
    b_dot = (e2.x - x.x) * ux + (e2.y - x.y) * uy
    den = d1 - d2                      # nonzero: d1, d2 have opposite signs
    num_t = d1 * b_dot - d2 * a_dot    # sign(t) = sign(num_t) * sign(den)
    if num_t == 0:
        raise DegenerateInputError(f"edge {e1}-{e2} passes through {x}")
    num_t1 = num_t - den * (ux * ux + uy * uy)  # sign(t-1) = sign(num_t1) * sign(den)
    if num_t1 == 0:
        raise DegenerateInputError(f"edge {e1}-{e2} passes through {y}")
    pos = den > 0
    if (num_t > 0) != pos:
        return Component.TAIL
    if (num_t1 > 0) == pos:
        return Component.HEAD
    return Component.BODY


def point_on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab (exact)."""
    if orient_value(a, b, p) != 0:
        return False
    return (
        min(a.x, b.x) <= p.x <= max(a.x, b.x)
        and min(a.y, b.y) <= p.y <= max(a.y, b.y)
    )


def point_in_polygon(p: Point, vertices: Sequence[Point]) -> Side:
    """Exact ray-crossing point-in-polygon classification.

    Vertex and edge grazing is exact: boundary points are reported as
    ON_BOUNDARY, and the half-open crossing rule (a.y > p.y) != (b.y > p.y)
    counts each vertex-level crossing exactly once.
    """
    n = len(vertices)
    for i in range(n):
        if point_on_segment(p, vertices[i], vertices[(i + 1) % n]):
            return Side.ON_BOUNDARY
    crossings = 0
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            # p.x < crossing x  <=>  sign(num) matches sign(b.y - a.y)
            num = (a.x - p.x) * (b.y - a.y) + (p.y - a.y) * (b.x - a.x)
            if (num > 0) == (b.y > a.y):
                crossings += 1
    return Side.INSIDE if crossings % 2 == 1 else Side.OUTSIDE
