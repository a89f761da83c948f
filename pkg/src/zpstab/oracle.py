"""Independent brute-force oracles.

These deliberately share no crossing logic with the production code paths:
the stab oracle intersects the full pair line with every edge by solving for
the intersection parameters with exact Fraction division and binning the
results, and the point-in-polygon oracle uses winding numbers instead of ray
crossings.  They exist so that every fast path has a second, structurally
different implementation to disagree with.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .geometry import Point, Side, orient, Orientation, point_on_segment
from .polygon import Polygon
from .stabbing import StabTriple


def brute_stab_triple(poly: Polygon, x: int, y: int) -> StabTriple:
    """Count crossings by explicitly solving line/edge intersections.

    Line:  p(t) = X + t*(Y - X).  Edge:  e(s) = E1 + s*(E2 - E1).
    A proper edge crossing has 0 < s < 1; its component is read from t.
    """
    pts = poly.vertices
    n = poly.n
    X, Y = pts[x], pts[y]
    ux = Fraction(Y.x - X.x)
    uy = Fraction(Y.y - X.y)
    tail = body = head = 0
    for i in range(n):
        j = (i + 1) % n
        if x in (i, j) or y in (i, j):
            continue
        E1, E2 = pts[i], pts[j]
        ex = Fraction(E2.x - E1.x)
        ey = Fraction(E2.y - E1.y)
        denom = ex * uy - ey * ux
        if denom == 0:
            continue  # parallel to the pair line: no proper crossing
        # solve E1 + s*(E2-E1) = X + t*(Y-X)
        rx = Fraction(X.x - E1.x)
        ry = Fraction(X.y - E1.y)
        s = (rx * uy - ry * ux) / denom
        if not (0 < s < 1):
            continue
        t = (rx * ey - ry * ex) / denom
        if t < 0:
            tail += 1
        elif t > 1:
            head += 1
        elif 0 < t < 1:
            body += 1
        else:
            raise AssertionError("crossing at a removed point despite general position")
    return StabTriple(tail, body, head)


def winding_point_in_polygon(p: Point, vertices: Sequence[Point]) -> Side:
    """Winding-number classification (exact quadrant-free formulation)."""
    n = len(vertices)
    for i in range(n):
        if point_on_segment(p, vertices[i], vertices[(i + 1) % n]):
            return Side.ON_BOUNDARY
    wn = 0
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        if a.y <= p.y:
            if b.y > p.y and orient(a, b, p) is Orientation.LEFT:
                wn += 1
        else:
            if b.y <= p.y and orient(a, b, p) is Orientation.RIGHT:
                wn -= 1
    return Side.INSIDE if wn != 0 else Side.OUTSIDE
