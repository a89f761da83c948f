"""Internal/external classification of visibility edges from zero-parity
information alone.

The classifier sees only: the ZP table, per-vertex convex/hull flags, the set
of polygon edges and the set of hull edges.  No coordinates.  Rules fire in a
fixed order and later rules only touch still-unknown pairs, so order affects
provenance labels but not final classes.

Rule sketch (soundness is fuzz-tested against the coordinate oracle):
  1. polygon edges are BOUNDARY (they act as internal edges in triangle
     rules: every triangulation contains them);
  2. hull edges between non-adjacent vertices are EXTERNAL (pocket lids);
  3. a visible pair joined by an inclusive all-convex chain whose
     complementary open chain holds a hull vertex is INTERNAL (the hull
     vertex pins the rest of the polygon outside the chain+chord loop, and a
     closed curve of reflex-in-loop vertices plus one chord cannot exist);
     a pair joined by an inclusive all-reflex chain is EXTERNAL (an internal
     chord would cut off a subpolygon with fewer than three convex corners);
  4. a visible pair with no reflex odd-head witness under either orientation
     is INTERNAL; one lacking a convex even-head witness in both chains
     under both orientations is EXTERNAL;
  5. fixpoint: a nonhull pair that cannot be a side of two internal
     (external) triangles with apexes in opposite chains - even counting
     unknown pairs optimistically - is forced EXTERNAL (INTERNAL); repeat to
     a fixed point.  Boundary pairs count as possible sides of both kinds of
     triangle (pocket triangulations reuse polygon edges).
  6. whatever survives is AMBIGUOUS.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Set, Tuple

from .polygon import Pair, VertexFlags, canonical_pair, chain_vertices
from .stabbing import ZPClass, ZPTable, visible_pairs


class EdgeClass(Enum):
    INTERNAL = "I"
    EXTERNAL = "E"
    BOUNDARY = "B"
    AMBIGUOUS = "?"


class Provenance(Enum):
    POLYGON_EDGE = "PolygonEdge"
    HULL_POCKET_LID = "HullPocketLid"
    LEMMA2_CONVEX = "Lemma2-convex"
    LEMMA2_REFLEX = "Lemma2-reflex"
    LEMMA3_NO_ODD_WITNESS = "Lemma3-noOddWitness"
    LEMMA3_NO_EVEN_WITNESS = "Lemma3-noEvenWitness"
    LEMMA4_PROPAGATION = "Lemma4-propagation"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class EdgeClassification:
    pair: Pair
    edge_class: EdgeClass
    provenance: Provenance


class InconsistentInputError(Exception):
    """Two rules forced contradictory classes: upstream bug or invalid flags."""


def even_property(zp: ZPTable, x: int, y: int, z: int) -> bool:
    """Head(w, z) is even (zero counts as even) for every w in chain [x, y],
    excluding w = z."""
    if z == x or z == y:
        raise ValueError("witness z must differ from the pair endpoints")
    for w in chain_vertices(x, y, zp.n):
        if w == z:
            continue
        if zp.head_class(w, z) is ZPClass.ODD:
            return False
    return True


def odd_property(zp: ZPTable, x: int, y: int, z: int) -> bool:
    """Head(w, z) is odd for every w in chain [x, y], excluding w = z."""
    if z == x or z == y:
        raise ValueError("witness z must differ from the pair endpoints")
    for w in chain_vertices(x, y, zp.n):
        if w == z:
            continue
        if zp.head_class(w, z) is not ZPClass.ODD:
            return False
    return True


def _open_chain(x: int, y: int, n: int) -> List[int]:
    return chain_vertices(x, y, n)[1:-1]


def _has_even_witness_both_chains(zp: ZPTable, flags: VertexFlags, x: int, y: int) -> bool:
    n = zp.n
    for chain in (_open_chain(x, y, n), _open_chain(y, x, n)):
        if not any(flags.convex[z] and even_property(zp, x, y, z) for z in chain):
            return False
    return True


def _has_odd_witness(zp: ZPTable, flags: VertexFlags, x: int, y: int,
                     pockets: List[List[int]]) -> bool:
    """An external edge lies inside one pocket, and its reflex odd-head
    witness sits on the pocket chain strictly between the endpoints (the
    chain's extreme vertex there).  A pair with no common pocket, or none
    whose between-interval holds such a witness, cannot be external."""
    for interval in pockets:
        try:
            i, j = interval.index(x), interval.index(y)
        except ValueError:
            continue
        if i > j:
            i, j = j, i
        for z in interval[i + 1 : j]:
            if not flags.convex[z] and (
                odd_property(zp, x, y, z) or odd_property(zp, y, x, z)
            ):
                return True
    return False


class _State:
    def __init__(self, pairs: Iterable[Pair]):
        self.classes: Dict[Pair, Optional[EdgeClass]] = {p: None for p in pairs}
        self.provenance: Dict[Pair, Provenance] = {}

    def set(self, pair: Pair, cls: EdgeClass, prov: Provenance) -> None:
        current = self.classes[pair]
        if current is not None:
            if current is not cls:
                raise InconsistentInputError(
                    f"pair {pair}: {current.value} vs {cls.value} ({prov.value})"
                )
            return
        self.classes[pair] = cls
        self.provenance[pair] = prov

    def unknown(self) -> List[Pair]:
        return [p for p, c in self.classes.items() if c is None]

    def copy(self) -> "_State":
        twin = _State(())
        twin.classes = dict(self.classes)
        twin.provenance = dict(self.provenance)
        return twin


def _pockets(flags: VertexFlags) -> List[List[int]]:
    """Inclusive boundary intervals between consecutive hull vertices that
    contain at least one off-hull vertex.  Every external edge, and every
    triangle of external edges, lives inside one of these."""
    n = len(flags.on_hull)
    hull = [v for v in range(n) if flags.on_hull[v]]
    out = []
    for idx, h in enumerate(hull):
        interval = chain_vertices(h, hull[(idx + 1) % len(hull)], n)
        if len(interval) > 2:
            out.append(interval)
    return out


def _lemma4_pass(state: _State, n: int, hull_edges: Set[Pair], flags: VertexFlags,
                 pockets: List[List[int]]) -> bool:
    """One propagation sweep; returns True if anything was forced."""

    def possibly(pair: Pair, kind: EdgeClass) -> bool:
        cls = state.classes.get(pair)
        if pair not in state.classes:
            return False  # not a visible pair at all
        if cls is None or cls is EdgeClass.BOUNDARY:
            return True
        return cls is kind

    def apex_ok(x: int, z: int, y: int, kind: EdgeClass) -> bool:
        s1 = canonical_pair(x, z)
        s2 = canonical_pair(z, y)
        if not (possibly(s1, kind) and possibly(s2, kind)):
            return False
        # A triangle whose other two sides are both polygon edges sits in the
        # wedge between z's edges: inside the polygon iff z is convex.  So
        # such an apex can only support a triangle matching z's convexity.
        if state.classes.get(s1) is EdgeClass.BOUNDARY and state.classes.get(s2) is EdgeClass.BOUNDARY:
            return flags.convex[z] == (kind is EdgeClass.INTERNAL)
        return True

    def internal_feasible(x: int, y: int) -> bool:
        # two triangles over xy, apexes in opposite chains, all sides
        # possibly internal
        for chain in (_open_chain(x, y, n), _open_chain(y, x, n)):
            if not any(apex_ok(x, z, y, EdgeClass.INTERNAL) for z in chain):
                return False
        return True

    def external_feasible(x: int, y: int) -> bool:
        # an external edge and both of its external triangles live inside a
        # single pocket: one apex between x and y along the pocket chain, the
        # other in the pocket's remainder
        for interval in pockets:
            try:
                i, j = interval.index(x), interval.index(y)
            except ValueError:
                continue
            if i > j:
                i, j = j, i
            between = interval[i + 1 : j]
            remainder = interval[:i] + interval[j + 1 :]
            if any(apex_ok(x, z, y, EdgeClass.EXTERNAL) for z in between) and any(
                apex_ok(x, z, y, EdgeClass.EXTERNAL) for z in remainder
            ):
                return True
        return False

    changed = False
    for pair in state.unknown():
        if pair in hull_edges:
            continue
        x, y = pair
        can_internal = internal_feasible(x, y)
        can_external = external_feasible(x, y)
        if not can_internal and not can_external:
            raise InconsistentInputError(
                f"pair {pair} can complete neither internal nor external triangles"
            )
        if not can_internal:
            state.set(pair, EdgeClass.EXTERNAL, Provenance.LEMMA4_PROPAGATION)
            changed = True
        elif not can_external:
            state.set(pair, EdgeClass.INTERNAL, Provenance.LEMMA4_PROPAGATION)
            changed = True
    return changed


def classify_edges(
    zp: ZPTable,
    flags: VertexFlags,
    polygon_edges: Set[Pair],
    hull_edges: Set[Pair],
) -> List[EdgeClassification]:
    """Classify every visible pair (body class Zero) as I/E/Boundary, leaving
    AMBIGUOUS exactly the pairs no rule decides.

    Output is deterministic and sorted by pair.
    """
    n = zp.n
    vis = visible_pairs(zp)
    state = _State(sorted(vis))

    for pair in sorted(polygon_edges):
        if pair in state.classes:
            state.set(pair, EdgeClass.BOUNDARY, Provenance.POLYGON_EDGE)

    for pair in sorted(hull_edges):
        if pair in state.classes and pair not in polygon_edges:
            state.set(pair, EdgeClass.EXTERNAL, Provenance.HULL_POCKET_LID)

    for pair in state.unknown():
        x, y = pair
        for a, b in ((x, y), (y, x)):
            chain = chain_vertices(a, b, n)
            complement_open = chain_vertices(b, a, n)[1:-1]
            if all(flags.convex[v] for v in chain) and any(
                flags.on_hull[v] for v in complement_open
            ):
                state.set(pair, EdgeClass.INTERNAL, Provenance.LEMMA2_CONVEX)
                break
            if all(not flags.convex[v] for v in chain):
                state.set(pair, EdgeClass.EXTERNAL, Provenance.LEMMA2_REFLEX)
                break

    # The head-parity witnesses of an I/E edge are guaranteed for at least
    # one orientation of the pair, so a class is forced only when both
    # orientations lack the required witness.
    pockets = _pockets(flags)
    for pair in state.unknown():
        x, y = pair
        if pair not in hull_edges and not _has_odd_witness(zp, flags, x, y, pockets):
            state.set(pair, EdgeClass.INTERNAL, Provenance.LEMMA3_NO_ODD_WITNESS)
        elif not _has_even_witness_both_chains(zp, flags, x, y) and not _has_even_witness_both_chains(
            zp, flags, y, x
        ):
            state.set(pair, EdgeClass.EXTERNAL, Provenance.LEMMA3_NO_EVEN_WITNESS)

    while _lemma4_pass(state, n, hull_edges, flags, pockets):
        pass

    # Consistent-completion sweep: enumerate every total I/E assignment of
    # the still-unknown pairs that survives triangle propagation.  The true
    # classes are one such completion, so a pair that takes the same class in
    # all of them is forced.  Unknown clusters are small, so the exponential
    # enumeration is cheap in practice (budget-capped for safety).
    unknown = state.unknown()
    if unknown and len(unknown) <= 16:
        consistent: List[Dict[Pair, EdgeClass]] = []

        def extend(trial: _State) -> None:
            todo = trial.unknown()
            if not todo:
                consistent.append({p: trial.classes[p] for p in unknown})
                return
            pair = todo[0]
            for guess in (EdgeClass.INTERNAL, EdgeClass.EXTERNAL):
                branch = trial.copy()
                branch.classes[pair] = guess
                try:
                    while _lemma4_pass(branch, n, hull_edges, flags, pockets):
                        pass
                except InconsistentInputError:
                    continue
                extend(branch)

        extend(state)
        if not consistent:
            raise InconsistentInputError("no consistent completion exists")
        for pair in unknown:
            classes = {assignment[pair] for assignment in consistent}
            if len(classes) == 1:
                state.set(pair, classes.pop(), Provenance.LEMMA4_PROPAGATION)
        while _lemma4_pass(state, n, hull_edges, flags, pockets):
            pass

    out: List[EdgeClassification] = []
    for pair in sorted(state.classes):
        cls = state.classes[pair]
        if cls is None:
            out.append(EdgeClassification(pair, EdgeClass.AMBIGUOUS, Provenance.UNRESOLVED))
        else:
            out.append(EdgeClassification(pair, cls, state.provenance[pair]))
    return out


def ambiguous_pairs(classifications: Iterable[EdgeClassification]) -> List[Pair]:
    return [c.pair for c in classifications if c.edge_class is EdgeClass.AMBIGUOUS]


class NoWitnessFoundError(Exception):
    """An ambiguous pair has no triangular-chain witness: either a classifier
    bug or a genuine counterexample to the chain lemma.  Never swallowed."""


def explain_ambiguous(poly, amb: Iterable[Pair], vis=None) -> Dict[Pair, "object"]:
    """Attach a triangular-chain witness (coordinate-based diagnostics) to
    every ambiguous pair.  Raises NoWitnessFoundError when a pair has none."""
    from .polygon import is_triangular_chain, visibility_oracle

    if vis is None:
        vis = visibility_oracle(poly)
    out = {}
    for pair in amb:
        x, y = pair
        witness = is_triangular_chain(poly, x, y, vis) or is_triangular_chain(poly, y, x, vis)
        if witness is None:
            raise NoWitnessFoundError(
                f"ambiguous pair {pair} spans no triangular chain"
            )
        out[pair] = witness
    return out
