"""Stabbing counts, zero-parity information, and I/E visibility classification
for simple polygons and sampled smooth curves."""

from .geometry import (
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
from .polygon import (
    CollinearTripleError,
    NotSimpleError,
    Polygon,
    PolygonError,
    TooFewVerticesError,
    TriangularWitness,
    VertexFlags,
    VisClass,
    chain_vertices,
    hull_edge_pairs,
    is_nontriangular,
    is_triangular_chain,
    load_polygon,
    vertex_flags,
    visibility_oracle,
)
from .stabbing import (
    PPClass,
    PPTable,
    StabTable,
    StabTriple,
    ZPClass,
    ZPTable,
    pp_class,
    pp_table,
    stab_table,
    stab_triple,
    straddles,
    visible_pairs,
    zp_class,
    zp_table,
)
from .classify import (
    EdgeClass,
    EdgeClassification,
    InconsistentInputError,
    NoWitnessFoundError,
    Provenance,
    ambiguous_pairs,
    classify_edges,
    even_property,
    explain_ambiguous,
    odd_property,
)
from .randgen import GenerationFailedError, generate_random_polygon

__all__ = [name for name in dir() if not name.startswith("_")]
