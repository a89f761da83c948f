import pytest
from hypothesis import given, settings, strategies as st

from zpstab.geometry import Point, Side, point_in_polygon
from zpstab.oracle import winding_point_in_polygon
from zpstab.polygon import (
    CollinearTripleError,
    NotSimpleError,
    TooFewVerticesError,
    VisClass,
    canonical_pair,
    chain_vertices,
    convex_hull_indices,
    hull_edge_pairs,
    is_nontriangular,
    is_triangular_chain,
    load_polygon,
    signed_area2,
    vertex_flags,
    visibility_oracle,
)
from zpstab.randgen import generate_random_polygon

SQUARE = [(0, 0), (4, 0), (4, 3), (0, 3)]
# square with one bottom edge dented inward (dent vertex index 1)
DENTED = [(0, 0), (2, 1), (4, 0), (4, 3), (0, 3)]
PENTAGON = [(2, 0), (4, 1), (3, 4), (1, 4), (0, 1)]


def test_load_normalizes_cw_to_ccw():
    cw = list(reversed(SQUARE))
    poly = load_polygon(cw)
    assert signed_area2(poly.vertices) > 0
    # vertex 0 stays first under reversal
    assert poly.vertices[0] == Point(*cw[0])
    assert {tuple(v) for v in poly.vertices} == set(SQUARE)


def test_load_rejects_collinear():
    with pytest.raises(CollinearTripleError):
        load_polygon([(0, 0), (1, 0), (2, 0), (1, 1)])


def test_load_rejects_bowtie():
    with pytest.raises(NotSimpleError):
        load_polygon([(0, 0), (2, 2), (2, 0), (0, 2)])


def test_load_rejects_too_few():
    with pytest.raises(TooFewVerticesError):
        load_polygon([(0, 0), (1, 0)])


def test_flags_convex_pentagon():
    poly = load_polygon(PENTAGON)
    flags = vertex_flags(poly)
    assert all(flags.convex)
    assert all(flags.on_hull)


def test_flags_dent():
    poly = load_polygon(DENTED)
    flags = vertex_flags(poly)
    assert not flags.convex[1]
    assert not flags.on_hull[1]
    assert all(flags.convex[i] for i in (0, 2, 3, 4))
    # every hull vertex is convex
    assert all(flags.convex[i] for i in range(poly.n) if flags.on_hull[i])


def test_chain_vertices():
    assert chain_vertices(0, 3, 6) == [0, 1, 2, 3]
    assert chain_vertices(3, 0, 6) == [3, 4, 5, 0]
    assert len(chain_vertices(0, 8, 12)) == 9


def test_chain_vertex_count_identity():
    n = 11
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            assert len(chain_vertices(x, y, n)) + len(chain_vertices(y, x, n)) == n + 2


def test_visibility_convex_all_internal():
    poly = load_polygon(PENTAGON)
    vis = visibility_oracle(poly)
    for pair, cls in vis.pairs().items():
        assert cls in (VisClass.INTERNAL, VisClass.BOUNDARY)


def test_visibility_dent_external_and_blocked():
    poly = load_polygon(DENTED)
    vis = visibility_oracle(poly)
    # corners flanking the dent see each other outside the polygon
    assert vis.get(0, 2) is VisClass.EXTERNAL
    # polygon edges are boundary
    assert vis.get(0, 1) is VisClass.BOUNDARY
    # boundary pairs are exactly the polygon edges
    boundary = {p for p, c in vis.pairs().items() if c is VisClass.BOUNDARY}
    assert boundary == poly.edge_pairs()


def test_visibility_blocked_pair():
    # square with a deep spike dangling from the top: the spike blocks the
    # bottom-right/top-left diagonal
    spiked = [(0, 0), (6, 0), (6, 6), (4, 5), (3, 1), (2, 5), (0, 6)]
    poly = load_polygon(spiked)
    vis = visibility_oracle(poly)
    assert vis.get(1, 6) is VisClass.NOT_VISIBLE
    # the notch mouth is seen from outside
    assert vis.get(3, 5) is VisClass.EXTERNAL


def test_visibility_symmetry_and_not_visible_has_body():
    poly = generate_random_polygon(12, seed=7)
    vis = visibility_oracle(poly)
    for (x, y), cls in vis.pairs().items():
        assert vis.get(y, x) is cls


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_point_in_polygon_agrees_with_winding(seed):
    import random

    rng = random.Random(seed)
    poly = generate_random_polygon(rng.randrange(4, 11), seed=seed)
    span = 40
    for _ in range(34):
        p = Point(rng.randrange(-span, span), rng.randrange(-span, span))
        assert point_in_polygon(p, poly.vertices) is winding_point_in_polygon(p, poly.vertices)


def test_convex_polygon_not_triangular_chains():
    poly = load_polygon(PENTAGON)
    vis = visibility_oracle(poly)
    for x in range(poly.n):
        for y in range(poly.n):
            if x != y:
                assert is_triangular_chain(poly, x, y, vis) is None
    assert is_nontriangular(poly, 3)
    assert is_nontriangular(poly, 8)


def test_hull_edges_of_dented_square():
    poly = load_polygon(DENTED)
    hull = hull_edge_pairs(poly)
    assert canonical_pair(0, 2) in hull     # pocket lid over the dent
    assert canonical_pair(0, 1) not in hull
