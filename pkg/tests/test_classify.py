import pytest
from hypothesis import given, settings, strategies as st

from zpstab.classify import (
    EdgeClass,
    InconsistentInputError,
    Provenance,
    ambiguous_pairs,
    classify_edges,
    even_property,
    explain_ambiguous,
    odd_property,
)
from zpstab.polygon import (
    VisClass,
    canonical_pair,
    hull_edge_pairs,
    is_nontriangular,
    load_polygon,
    vertex_flags,
    visibility_oracle,
)
from zpstab.randgen import generate_random_polygon
from zpstab.stabbing import stab_table, zp_table

PENTAGON = [(2, 0), (4, 1), (3, 4), (1, 4), (0, 1)]
DENTED = [(0, 0), (2, 1), (4, 0), (4, 3), (0, 3)]


def classify_poly(poly):
    zp = zp_table(stab_table(poly))
    flags = vertex_flags(poly)
    return classify_edges(zp, flags, poly.edge_pairs(), hull_edge_pairs(poly))


def test_convex_polygon_all_internal():
    poly = load_polygon(PENTAGON)
    result = classify_poly(poly)
    assert len(result) == 10
    for c in result:
        assert c.edge_class in (EdgeClass.INTERNAL, EdgeClass.BOUNDARY)
    assert not ambiguous_pairs(result)


def test_convex_even_property_everywhere():
    poly = load_polygon(PENTAGON)
    zp = zp_table(stab_table(poly))
    for x in range(5):
        for y in range(5):
            for z in range(5):
                if len({x, y, z}) == 3:
                    assert even_property(zp, x, y, z)
                    assert not odd_property(zp, x, y, z)


def test_dented_square_classes_match_oracle():
    poly = load_polygon(DENTED)
    result = classify_poly(poly)
    vis = visibility_oracle(poly)
    for c in result:
        truth = vis.get(*c.pair)
        if c.edge_class is EdgeClass.INTERNAL:
            assert truth is VisClass.INTERNAL
        elif c.edge_class is EdgeClass.EXTERNAL:
            assert truth is VisClass.EXTERNAL
        elif c.edge_class is EdgeClass.BOUNDARY:
            assert truth is VisClass.BOUNDARY
    # the pocket lid over the dent is recognized from hull structure alone
    lid = next(c for c in result if c.pair == (0, 2))
    assert lid.edge_class is EdgeClass.EXTERNAL
    assert lid.provenance is Provenance.HULL_POCKET_LID


def soundness_check(poly):
    """No classified pair may contradict the oracle; returns ambiguous pairs."""
    result = classify_poly(poly)
    vis = visibility_oracle(poly)
    for c in result:
        truth = vis.get(*c.pair)
        assert truth is not VisClass.NOT_VISIBLE, "classified an invisible pair"
        if c.edge_class is EdgeClass.INTERNAL:
            assert truth is VisClass.INTERNAL, (poly.vertices, c)
        elif c.edge_class is EdgeClass.EXTERNAL:
            assert truth is VisClass.EXTERNAL, (poly.vertices, c)
    return ambiguous_pairs(result)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 1_000_000))
def test_classifier_soundness_fuzz_smoke(seed):
    import random

    n = random.Random(seed).randrange(4, 16)
    poly = generate_random_polygon(n, seed=seed)
    soundness_check(poly)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 1_000_000))
def test_ambiguous_pairs_have_triangular_witnesses(seed):
    import random

    n = random.Random(seed).randrange(8, 16)
    poly = generate_random_polygon(n, seed=seed)
    amb = soundness_check(poly)
    if amb:
        witnesses = explain_ambiguous(poly, amb)
        for pair, w in witnesses.items():
            assert w.length >= 8


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 1_000_000))
def test_nontriangular_polygons_fully_classified(seed):
    import random

    n = random.Random(seed).randrange(8, 18)
    try:
        poly = generate_random_polygon(n, seed=seed, style="nontriangular", max_attempts=8)
    except Exception:
        return
    assert not soundness_check(poly)
