"""Stabbing tables: raw Tail/Body/Head counts for every ordered vertex pair,
and their zero-parity / pure-parity reductions.

Counting rule: for the line through vertices x and y, an edge contributes to
the component (tail: t < 0, body: 0 < t < 1, head: t > 1) that its interior
properly crosses.  Edges incident to x or y meet the line only at a removed
point (or lie along it) and are excluded from all three counts.

Table construction is the naive all-pairs x all-edges scan with exact
predicates; tables are immutable snapshots once built.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, Tuple

from .geometry import Component, DegenerateInputError
from .polygon import Pair, Polygon, canonical_pair


class ZPClass(Enum):
    ZERO = "z"
    ODD = "o"
    EVEN_POS = "e"


class PPClass(Enum):
    EVEN = "even"
    ODD = "odd"


def zp_class(count: int) -> ZPClass:
    if count == 0:
        return ZPClass.ZERO
    return ZPClass.ODD if count % 2 == 1 else ZPClass.EVEN_POS


def pp_class(count: int) -> PPClass:
    return PPClass.ODD if count % 2 == 1 else PPClass.EVEN


@dataclass(frozen=True)
class StabTriple:
    tail: int
    body: int
    head: int

    def zp(self) -> Tuple[ZPClass, ZPClass, ZPClass]:
        return (zp_class(self.tail), zp_class(self.body), zp_class(self.head))

    def pp(self) -> Tuple[PPClass, PPClass, PPClass]:
        return (pp_class(self.tail), pp_class(self.body), pp_class(self.head))


def stab_triple(poly: Polygon, x: int, y: int) -> StabTriple:
    """Exact Tail/Body/Head counts for the ordered pair (x, y)."""
    if x == y:
        raise ValueError("stab triple needs two distinct vertices")
    pts = poly.vertices
    n = poly.n
    px, py = pts[x], pts[y]
    ux = py.x - px.x
    uy = py.y - px.y
    # Per-vertex signed distances to the pair line and dot products along it.
    cross = [0] * n
    dot = [0] * n
    for i in range(n):
        dx = pts[i].x - px.x
        dy = pts[i].y - px.y
        cross[i] = ux * dy - uy * dx
        dot[i] = ux * dx + uy * dy
    length2 = ux * ux + uy * uy
    tail = body = head = 0
    for i in range(n):
        j = (i + 1) % n
        if i == x or i == y or j == x or j == y:
            continue
        d1 = cross[i]
        d2 = cross[j]
        if d1 == 0 or d2 == 0:
            raise DegenerateInputError(
                f"vertex on line through {x} and {y} (general-position violation)"
            )
        if (d1 > 0) == (d2 > 0):
            continue
        den = d1 - d2
        num_t = d1 * dot[j] - d2 * dot[i]
        if num_t == 0 or num_t == den * length2:
            raise DegenerateInputError(
                f"edge {i}-{j} crosses line({x},{y}) at a removed point"
            )
        pos = den > 0
        if (num_t > 0) != pos:
            tail += 1
        elif (num_t - den * length2 > 0) == pos:
            head += 1
        else:
            body += 1
    return StabTriple(tail, body, head)


class StabTable:
    """Raw counts for all ordered pairs, with the swap symmetries asserted."""

    def __init__(self, n: int, entries: Dict[Tuple[int, int], StabTriple]):
        self.n = n
        self._entries = entries

    def get(self, x: int, y: int) -> StabTriple:
        return self._entries[(x, y)]

    def ordered_pairs(self) -> Iterator[Tuple[int, int, StabTriple]]:
        for x in range(self.n):
            for y in range(self.n):
                if x != y:
                    yield x, y, self._entries[(x, y)]


def stab_table(poly: Polygon) -> StabTable:
    n = poly.n
    entries: Dict[Tuple[int, int], StabTriple] = {}
    for x in range(n):
        for y in range(x + 1, n):
            t = stab_triple(poly, x, y)
            entries[(x, y)] = t
            entries[(y, x)] = StabTriple(t.head, t.body, t.tail)
    # swap symmetry is structural above; assert it stayed intact
    for x in range(n):
        for y in range(x + 1, n):
            a, b = entries[(x, y)], entries[(y, x)]
            assert a.tail == b.head and a.body == b.body and a.head == b.tail
    return StabTable(n, entries)


class ZPTable:
    def __init__(self, n: int, classes: Dict[Tuple[int, int], Tuple[ZPClass, ZPClass, ZPClass]]):
        self.n = n
        self._classes = classes

    def get(self, x: int, y: int) -> Tuple[ZPClass, ZPClass, ZPClass]:
        return self._classes[(x, y)]

    def tail_class(self, x: int, y: int) -> ZPClass:
        return self._classes[(x, y)][0]

    def body_class(self, x: int, y: int) -> ZPClass:
        return self._classes[(x, y)][1]

    def head_class(self, x: int, y: int) -> ZPClass:
        return self._classes[(x, y)][2]


class PPTable:
    def __init__(self, n: int, classes: Dict[Tuple[int, int], Tuple[PPClass, PPClass, PPClass]]):
        self.n = n
        self._classes = classes

    def get(self, x: int, y: int) -> Tuple[PPClass, PPClass, PPClass]:
        return self._classes[(x, y)]

    def fingerprint(self) -> Tuple:
        """Hashable canonical form (for collision bucketing)."""
        return tuple(
            (x, y, tuple(c.value for c in self._classes[(x, y)]))
            for x in range(self.n)
            for y in range(self.n)
            if x != y
        )


def zp_table(st: StabTable) -> ZPTable:
    return ZPTable(st.n, {(x, y): t.zp() for x, y, t in st.ordered_pairs()})


def pp_table(st: StabTable) -> PPTable:
    return PPTable(st.n, {(x, y): t.pp() for x, y, t in st.ordered_pairs()})


def visible_pairs(zp: ZPTable) -> set:
    """Unordered pairs whose body class is Zero (the visibility edges)."""
    out = set()
    for x in range(zp.n):
        for y in range(x + 1, zp.n):
            if zp.body_class(x, y) is ZPClass.ZERO:
                out.add(canonical_pair(x, y))
    return out


def straddles(poly: Polygon, x: int, y: int, v: int) -> bool:
    """Side-switch bit of the boundary excursion through v on line(x, y).

    For a non-adjacent pair this is the plain test: v's two boundary
    neighbors lie strictly on opposite sides of the line.  When (x, y) is a
    polygon edge the boundary travels ALONG the line between them, so the
    whole edge is a single excursion; its switch bit (outer neighbors on
    opposite sides) is attributed to the smaller-indexed endpoint so that
    straddles(x) + straddles(y) counts it exactly once.  With this reading
    tail + body + head == straddles(x) + straddles(y)  (mod 2)
    for every ordered pair, by the Jordan curve theorem.
    """
    from .geometry import orient_value

    if v not in (x, y):
        raise ValueError("straddle vertex must be one of the pair endpoints")
    pts = poly.vertices
    n = poly.n
    other = y if v == x else x
    if other in ((v - 1) % n, (v + 1) % n):
        if v != min(x, y):
            return False
        wa = pts[(x - 1) % n] if (x - 1) % n != y else pts[(x + 1) % n]
        wb = pts[(y - 1) % n] if (y - 1) % n != x else pts[(y + 1) % n]
        da = orient_value(pts[x], pts[y], wa)
        db = orient_value(pts[x], pts[y], wb)
    else:
        da = orient_value(pts[x], pts[y], pts[(v - 1) % n])
        db = orient_value(pts[x], pts[y], pts[(v + 1) % n])
    return da != 0 and db != 0 and (da > 0) != (db > 0)
