"""Interior hulls, outward shifts and onion-skin peeling."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DegeneratePolygonError, EmptyPolygonError, NotAnInteriorPolygonError
from .polygon import EMPTY, LatticePolygon, hull, interior_lattice_points


@lru_cache(maxsize=1 << 15)
def interior_hull(delta: LatticePolygon) -> LatticePolygon:
    """Convex hull of the lattice points strictly inside delta.

    Degenerate input has no strict interior, so points and segments map to the
    empty polygon.
    """
    if not delta.is_two_dim:
        return EMPTY
    return hull(interior_lattice_points(delta))


def move_out(gamma: LatticePolygon) -> LatticePolygon:
    """Shift every supporting line one integral unit outward and intersect.

    Defined for interior hulls only: consecutive shifted lines must meet in
    lattice points, otherwise :class:`NotAnInteriorPolygonError` is raised.
    """
    if not gamma.is_two_dim:
        raise DegeneratePolygonError("outward shift needs a two-dimensional polygon")
    cons = gamma.edge_constraints
    n = len(cons)
    corners = []
    for i in range(n):
        a1, b1, c1 = cons[i]
        a2, b2, c2 = cons[(i + 1) % n]
        det = a1 * b2 - a2 * b1
        nx = (c1 + 1) * b2 - (c2 + 1) * b1
        ny = a1 * (c2 + 1) - a2 * (c1 + 1)
        if nx % det or ny % det:
            raise NotAnInteriorPolygonError(
                f"shifted edges {i} and {(i + 1) % n} meet at the non-lattice point ({nx}/{det}, {ny}/{det})"
            )
        corners.append((nx // det, ny // det))
    return hull(corners)


@dataclass(frozen=True)
class OnionTrace:
    """The maximal chain of iterated interior hulls, outermost first."""

    skins: tuple[LatticePolygon, ...]


def onion_skins(delta: LatticePolygon) -> OnionTrace:
    """Peel delta by repeated interior hulls until the interior is empty."""
    if delta.is_empty:
        raise EmptyPolygonError("cannot peel the empty polygon")
    skins = [delta]
    while True:
        nxt = interior_hull(skins[-1])
        if nxt.is_empty:
            return OnionTrace(tuple(skins))
        skins.append(nxt)
