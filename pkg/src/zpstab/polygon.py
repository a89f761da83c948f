"""Polygon data model, chains, convex/reflex + hull flags, and the
coordinate-based visibility oracle used as ground truth.

A Polygon is immutable after load; every query here is read-only.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .geometry import (
    Point,
    Scalar,
    Side,
    orient_value,
    point_in_polygon,
    segments_properly_cross,
)

Pair = Tuple[int, int]


class PolygonError(Exception):
    """Base class; `code` is the machine-readable invariant name."""

    code = "invalid"


class TooFewVerticesError(PolygonError):
    code = "TooFewVertices"


class NotSimpleError(PolygonError):
    code = "NotSimple"


class CollinearTripleError(PolygonError):
    code = "CollinearTriple"


@dataclass(frozen=True)
class Polygon:
    """Simple polygon, CCW vertex order, no three vertices collinear."""

    vertices: Tuple[Point, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Tuple[int, int]]:
        n = self.n
        return [(i, (i + 1) % n) for i in range(n)]

    def edge_pairs(self) -> set:
        n = self.n
        return {canonical_pair(i, (i + 1) % n) for i in range(n)}


def canonical_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


def signed_area2(vertices: Sequence[Point]) -> Scalar:
    """Twice the signed area (positive for CCW)."""
    total: Scalar = 0
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        total += a.x * b.y - b.x * a.y
    return total


def _to_scalar(value) -> Scalar:
    """Exact conversion: ints pass through, decimal strings become Fractions."""
    if isinstance(value, bool):
        raise PolygonError(f"coordinate must be a number, got {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        frac = Fraction(value)
        return int(frac) if frac.denominator == 1 else frac
    if isinstance(value, float):
        # floats are rejected: callers must supply ints or decimal strings so
        # that exactness is explicit at the boundary
        raise PolygonError(
            f"float coordinate {value!r} not accepted; pass an int or a decimal string"
        )
    raise PolygonError(f"unsupported coordinate type {type(value).__name__}")


def load_polygon(raw_vertices) -> Polygon:
    """Validate and CCW-normalize a vertex list.

    Raises TooFewVerticesError, CollinearTripleError (general-position
    violation) or NotSimpleError; never silently perturbs the input.
    """
    pts: List[Point] = []
    for item in raw_vertices:
        x, y = item
        pts.append(Point(_to_scalar(x), _to_scalar(y)))
    n = len(pts)
    if n < 3:
        raise TooFewVerticesError(f"polygon needs at least 3 vertices, got {n}")
    if len({(p.x, p.y) for p in pts}) != n:
        raise NotSimpleError("duplicate vertices")
    for i, j, k in combinations(range(n), 3):
        if orient_value(pts[i], pts[j], pts[k]) == 0:
            raise CollinearTripleError(f"vertices {i}, {j}, {k} are collinear")
    # With general position established, any simplicity violation is a proper
    # crossing between non-adjacent edges.
    for i in range(n):
        a1 = pts[i]
        a2 = pts[(i + 1) % n]
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            if segments_properly_cross(a1, a2, pts[j], pts[(j + 1) % n]):
                raise NotSimpleError(f"edges {i}-{(i + 1) % n} and {j}-{(j + 1) % n} cross")
    if signed_area2(pts) < 0:
        pts = [pts[0]] + pts[:0:-1]
    return Polygon(tuple(pts))


@dataclass(frozen=True)
class VertexFlags:
    convex: Tuple[bool, ...]
    on_hull: Tuple[bool, ...]


def convex_hull_indices(points: Sequence[Point]) -> List[int]:
    """Andrew monotone chain; returns hull corner indices in CCW order.

    Collinear points never occur among polygon vertices (general position),
    so strict turns suffice.
    """
    idx = sorted(range(len(points)), key=lambda i: (points[i].x, points[i].y))
    if len(idx) <= 2:
        return idx

    def half(ordering):
        out: List[int] = []
        for i in ordering:
            while len(out) >= 2 and orient_value(points[out[-2]], points[out[-1]], points[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def vertex_flags(poly: Polygon) -> VertexFlags:
    """convex[v] from the local turn; on_hull[v] from the vertex-set hull."""
    n = poly.n
    pts = poly.vertices
    convex = tuple(
        orient_value(pts[(v - 1) % n], pts[v], pts[(v + 1) % n]) > 0 for v in range(n)
    )
    hull = set(convex_hull_indices(pts))
    on_hull = tuple(v in hull for v in range(n))
    return VertexFlags(convex=convex, on_hull=on_hull)


def hull_edge_pairs(poly: Polygon) -> set:
    """Edges of the convex hull as canonical vertex-index pairs.

    Hull vertices of a simple polygon appear on the hull in boundary order,
    so consecutive hull corners give the hull edges.
    """
    hull = convex_hull_indices(poly.vertices)
    k = len(hull)
    return {canonical_pair(hull[i], hull[(i + 1) % k]) for i in range(k)}


def chain_vertices(x: int, y: int, n: int) -> List[int]:
    """Inclusive CCW index interval from x to y."""
    if x == y:
        raise ValueError("chain endpoints must differ")
    out = [x]
    i = x
    while i != y:
        i = (i + 1) % n
        out.append(i)
    return out


class VisClass(Enum):
    INTERNAL = "I"
    EXTERNAL = "E"
    BOUNDARY = "B"
    NOT_VISIBLE = "-"


class VisibilityMap:
    """Ground-truth visibility classes for all unordered vertex pairs."""

    def __init__(self, n: int, classes: Dict[Pair, VisClass]):
        self.n = n
        self._classes = classes

    def get(self, x: int, y: int) -> VisClass:
        return self._classes[canonical_pair(x, y)]

    def pairs(self) -> Dict[Pair, VisClass]:
        return dict(self._classes)

    def visible_pairs(self) -> set:
        return {
            p
            for p, c in self._classes.items()
            if c in (VisClass.INTERNAL, VisClass.EXTERNAL, VisClass.BOUNDARY)
        }


def _segment_blocked(poly: Polygon, x: int, y: int) -> bool:
    pts = poly.vertices
    n = poly.n
    px, py = pts[x], pts[y]
    for i in range(n):
        j = (i + 1) % n
        if i in (x, y) or j in (x, y):
            continue
        if segments_properly_cross(px, py, pts[i], pts[j]):
            return True
    return False


def _midpoint_side(poly: Polygon, x: int, y: int) -> Side:
    # Doubled coordinates keep the midpoint test in exact integers.
    pts = poly.vertices
    mid = Point(pts[x].x + pts[y].x, pts[x].y + pts[y].y)
    doubled = [Point(2 * p.x, 2 * p.y) for p in pts]
    return point_in_polygon(mid, doubled)


def visibility_oracle(poly: Polygon) -> VisibilityMap:
    """Classify every unordered pair by direct segment/edge geometry.

    A pair is NOT_VISIBLE iff its open segment properly crosses some edge;
    polygon edges are BOUNDARY; otherwise the (exact) midpoint in/out test
    decides INTERNAL versus EXTERNAL.  Under general position a visible open
    segment cannot touch the boundary, so the midpoint decides.
    """
    n = poly.n
    edge_set = poly.edge_pairs()
    classes: Dict[Pair, VisClass] = {}
    for x in range(n):
        for y in range(x + 1, n):
            pair = (x, y)
            if pair in edge_set:
                classes[pair] = VisClass.BOUNDARY
            elif _segment_blocked(poly, x, y):
                classes[pair] = VisClass.NOT_VISIBLE
            else:
                side = _midpoint_side(poly, x, y)
                if side is Side.ON_BOUNDARY:
                    raise CollinearTripleError(
                        f"visible segment {x}-{y} touches the boundary at its midpoint"
                    )
                classes[pair] = (
                    VisClass.INTERNAL if side is Side.INSIDE else VisClass.EXTERNAL
                )
    return VisibilityMap(n, classes)


@dataclass(frozen=True)
class TriangularWitness:
    """Evidence that chain [x, y] is k-triangular."""

    x: int
    y: int
    length: int
    hull_corners: Tuple[int, ...]
    z_internal: Tuple[int, ...]
    z_external: Tuple[int, ...]


def _sees_both_via(
    vis: VisibilityMap, z: int, x: int, y: int, strict: VisClass
) -> bool:
    """z sees x and y with classes in {strict, BOUNDARY}, at least one strict.

    Polygon edges count as wildcard sight edges (a witness adjacent to x or y
    reaches it along the boundary); requiring one strict edge keeps convex
    polygons witness-free on the external side.
    """
    a = vis.get(z, x)
    b = vis.get(z, y)
    allowed = (strict, VisClass.BOUNDARY)
    return a in allowed and b in allowed and (a is strict or b is strict)


def is_triangular_chain(
    poly: Polygon, x: int, y: int, vis: Optional[VisibilityMap] = None
) -> Optional[TriangularWitness]:
    """Witness that chain [x,y]'s hull is a triangle and both sight witnesses
    exist, or None.

    Witness vertices may be any z outside {x, y}, including chain-interior
    vertices.  Diagnostics only: this uses coordinates via the oracle.
    """
    chain = chain_vertices(x, y, poly.n)
    if len(chain) < 3:
        return None
    hull_local = convex_hull_indices([poly.vertices[i] for i in chain])
    if len(hull_local) != 3:
        return None
    if vis is None:
        vis = visibility_oracle(poly)
    z_int = tuple(
        z for z in range(poly.n) if z not in (x, y) and _sees_both_via(vis, z, x, y, VisClass.INTERNAL)
    )
    z_ext = tuple(
        z for z in range(poly.n) if z not in (x, y) and _sees_both_via(vis, z, x, y, VisClass.EXTERNAL)
    )
    if not z_int or not z_ext:
        return None
    return TriangularWitness(
        x=x,
        y=y,
        length=len(chain),
        hull_corners=tuple(chain[i] for i in hull_local),
        z_internal=z_int,
        z_external=z_ext,
    )


def is_nontriangular(poly: Polygon, k: int, vis: Optional[VisibilityMap] = None) -> bool:
    """True iff no chain with at least k vertices is triangular."""
    if k < 3:
        raise ValueError("k must be at least 3")
    n = poly.n
    # Hull-of-chain is cheap; the oracle is only computed when some chain
    # actually has a triangular hull.
    candidates: List[Tuple[int, int]] = []
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            length = (y - x) % n + 1
            if length < k:
                continue
            chain = chain_vertices(x, y, n)
            if len(convex_hull_indices([poly.vertices[i] for i in chain])) == 3:
                candidates.append((x, y))
    if not candidates:
        return True
    if vis is None:
        vis = visibility_oracle(poly)
    for x, y in candidates:
        if is_triangular_chain(poly, x, y, vis) is not None:
            return False
    return True
