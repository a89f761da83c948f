"""Seed-deterministic random simple polygon generation.

Strategy: sample distinct lattice points in general position, connect them in
random order, then repeatedly untangle edge crossings by 2-opt segment
reversal until the tour is simple.  2-opt strictly decreases total tour
length at every step, so untangling terminates.
"""
from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .geometry import Point, orient_value, segments_properly_cross
from .polygon import Polygon, is_nontriangular, load_polygon


class GenerationFailedError(Exception):
    pass


def _in_general_position(pts: List[Tuple[int, int]], candidate: Tuple[int, int]) -> bool:
    c = Point(*candidate)
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if orient_value(Point(*pts[i]), Point(*pts[j]), c) == 0:
                return False
    return True


def _sample_points(rng: random.Random, n: int, span: int) -> List[Tuple[int, int]]:
    pts: List[Tuple[int, int]] = []
    attempts = 0
    while len(pts) < n:
        attempts += 1
        if attempts > 200 * n + 1000:
            raise GenerationFailedError(
                f"could not place {n} points in general position on a {span}x{span} grid"
            )
        cand = (rng.randrange(span), rng.randrange(span))
        if cand in pts:
            continue
        if _in_general_position(pts, cand):
            pts.append(cand)
    return pts


def _find_crossing(order: List[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
    n = len(order)
    pts = [Point(*p) for p in order]
    for i in range(n):
        i2 = (i + 1) % n
        for j in range(i + 1, n):
            j2 = (j + 1) % n
            if j == i or j2 == i or i2 == j:
                continue
            if segments_properly_cross(pts[i], pts[i2], pts[j], pts[j2]):
                return i, j
    return None


def _untangle(rng: random.Random, order: List[Tuple[int, int]], budget: int = 20000) -> bool:
    for _ in range(budget):
        hit = _find_crossing(order)
        if hit is None:
            return True
        i, j = hit
        # reverse the segment between the two crossing edges
        order[i + 1 : j + 1] = reversed(order[i + 1 : j + 1])
    return False


def generate_random_polygon(
    n: int,
    seed: int,
    style: str = "generic",
    span: Optional[int] = None,
    max_attempts: int = 60,
) -> Polygon:
    """Deterministic-for-seed random simple polygon in general position.

    style="nontriangular" retries until the polygon contains no triangular
    chain of 8 or more vertices.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if style not in ("generic", "nontriangular"):
        raise ValueError(f"unknown style {style!r}")
    if span is None:
        span = max(4 * n, 16)
    rng = random.Random(seed)
    for _ in range(max_attempts):
        try:
            pts = _sample_points(rng, n, span)
        except GenerationFailedError:
            continue
        order = pts[:]
        rng.shuffle(order)
        if not _untangle(rng, order):
            continue
        try:
            poly = load_polygon(order)
        except Exception:
            continue
        if style == "nontriangular" and not is_nontriangular(poly, 8):
            continue
        return poly
    raise GenerationFailedError(
        f"no valid {style} polygon with n={n} after {max_attempts} attempts (seed {seed})"
    )
