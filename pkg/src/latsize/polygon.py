"""Exact lattice polygons and affine unimodular maps.

Coordinates are Python integers and every operation is exact. Polygons are
immutable and canonical: counterclockwise vertex order starting at the
lexicographically smallest vertex, segments store their two extreme lattice
points in sorted order. Structural equality therefore coincides with equality
as point sets, and all values are safe to share between threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

from .errors import (
    CoordinateGuardError,
    DegeneratePolygonError,
    EmptyPolygonError,
    InternalConsistencyError,
)

Point = tuple[int, int]

_DEFAULT_GUARD = 1 << 31


def coordinate_guard() -> int:
    """Largest allowed |coordinate|; lower it with LATSIZE_GUARD when fuzzing."""
    raw = os.environ.get("LATSIZE_GUARD")
    return int(raw) if raw else _DEFAULT_GUARD


def _check_point(p: Point, guard: int) -> None:
    x, y = p
    if not isinstance(x, int) or not isinstance(y, int):
        raise CoordinateGuardError(f"lattice point must have integer coordinates: {p!r}")
    if abs(x) > guard or abs(y) > guard:
        raise CoordinateGuardError(f"coordinate exceeds guard {guard}: {p!r}")


def integral_length(p: Point, q: Point) -> int:
    """Number of primitive lattice steps from p to q; gcd(0, 0) is 0."""
    return math.gcd(q[0] - p[0], q[1] - p[1])


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _primitive(v: Point) -> Point:
    g = math.gcd(v[0], v[1])
    return (v[0] // g, v[1] // g)


@dataclass(frozen=True)
class LatticePolygon:
    """Convex hull of lattice points, possibly degenerate.

    ``vertices`` is empty, a single point, a sorted extreme pair, or the
    strictly convex counterclockwise vertex cycle starting at the
    lexicographically smallest vertex. Build instances through :func:`hull`.
    """

    vertices: tuple[Point, ...]

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    @property
    def is_two_dim(self) -> bool:
        return len(self.vertices) >= 3

    @property
    def kind(self) -> str:
        return ("empty", "point", "segment")[len(self.vertices)] if len(self.vertices) < 3 else "polygon"

    def edges(self) -> tuple[tuple[Point, Point], ...]:
        vs = self.vertices
        n = len(vs)
        if n < 3:
            return ()
        return tuple((vs[i], vs[(i + 1) % n]) for i in range(n))

    @cached_property
    def area2(self) -> int:
        """Twice the Euclidean area (0 for degenerate polygons)."""
        vs = self.vertices
        n = len(vs)
        if n < 3:
            return 0
        return sum(vs[i][0] * vs[(i + 1) % n][1] - vs[(i + 1) % n][0] * vs[i][1] for i in range(n))

    @cached_property
    def edge_constraints(self) -> tuple[tuple[int, int, int], ...]:
        """Per edge the primitive outward form (a, b, c) with a*x + b*y <= c on the polygon."""
        out = []
        for p, q in self.edges():
            dx, dy = q[0] - p[0], q[1] - p[1]
            g = math.gcd(dx, dy)
            a, b = dy // g, -dx // g
            out.append((a, b, a * p[0] + b * p[1]))
        return tuple(out)

    def translate(self, t: Point) -> "LatticePolygon":
        return LatticePolygon(tuple((x + t[0], y + t[1]) for x, y in self.vertices))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"LatticePolygon<{self.kind}>{list(self.vertices)}"


EMPTY = LatticePolygon(())


def hull(points: Iterable[Point]) -> LatticePolygon:
    """Convex hull of the given lattice points, in canonical form."""
    guard = coordinate_guard()
    pts = []
    for p in points:
        p = (p[0], p[1])
        _check_point(p, guard)
        pts.append(p)
    pts = sorted(set(pts))
    if not pts:
        return EMPTY
    if len(pts) == 1:
        return LatticePolygon((pts[0],))
    if all(_cross(pts[0], pts[-1], p) == 0 for p in pts):
        return LatticePolygon((pts[0], pts[-1]))
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return LatticePolygon(tuple(lower[:-1] + upper[:-1]))


def standard_triangle(d: int) -> LatticePolygon:
    """conv{(0,0), (d,0), (0,d)}."""
    return hull([(0, 0), (d, 0), (0, d)])


def upsilon(d: int) -> LatticePolygon:
    """The d-th dilation of conv{(-1,-1), (1,0), (0,1)}."""
    return hull([(-d, -d), (d, 0), (0, d)])


def rectangle(a: int, b: int) -> LatticePolygon:
    """The axis-aligned box [0,a] x [0,b]."""
    return hull([(0, 0), (a, 0), (a, b), (0, b)])


def lawrence_prism(a: int, b: int) -> LatticePolygon:
    """conv{(0,0), (a,0), (b,1), (0,1)}: a polygon of lattice width one."""
    return hull([(0, 0), (a, 0), (b, 1), (0, 1)])


@dataclass(frozen=True)
class Measures:
    """Exact lattice-point counts of a polygon."""

    area2: int
    boundary_count: int
    interior_count: int
    total_count: int


def _column_bounds(delta: LatticePolygon, x: int, slack: int) -> Optional[tuple[int, int]]:
    """Integer y-range of the column at x, with < (slack=1) or <= (slack=0) edge tests."""
    lo = hi = None
    for a, b, c in delta.edge_constraints:
        t = c - slack - a * x
        if b > 0:
            ub = t // b
            hi = ub if hi is None else min(hi, ub)
        elif b < 0:
            lb = -(t // (-b))  # ceil(t / b) for the flipped inequality
            lo = lb if lo is None else max(lo, lb)
        elif t < 0:
            return None
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def interior_lattice_points(delta: LatticePolygon) -> list[Point]:
    """Lattice points strictly inside delta (empty for degenerate polygons)."""
    if not delta.is_two_dim:
        return []
    xs = [v[0] for v in delta.vertices]
    out: list[Point] = []
    for x in range(min(xs), max(xs) + 1):
        rng = _column_bounds(delta, x, 1)
        if rng is not None:
            out.extend((x, y) for y in range(rng[0], rng[1] + 1))
    return out


def lattice_points(delta: LatticePolygon) -> list[Point]:
    """All lattice points of delta (boundary included)."""
    if delta.is_empty:
        return []
    if delta.is_point:
        return [delta.vertices[0]]
    if delta.is_segment:
        p, q = delta.vertices
        g = integral_length(p, q)
        dx, dy = (q[0] - p[0]) // g, (q[1] - p[1]) // g
        return [(p[0] + k * dx, p[1] + k * dy) for k in range(g + 1)]
    xs = [v[0] for v in delta.vertices]
    out: list[Point] = []
    for x in range(min(xs), max(xs) + 1):
        rng = _column_bounds(delta, x, 0)
        if rng is not None:
            out.extend((x, y) for y in range(rng[0], rng[1] + 1))
    return out


def measures(delta: LatticePolygon) -> Measures:
    """Area and lattice-point counts, with the Pick identity as a cross-check."""
    if delta.is_empty:
        raise EmptyPolygonError("measures of the empty polygon are undefined")
    if delta.is_point:
        return Measures(0, 1, 0, 1)
    if delta.is_segment:
        n = integral_length(*delta.vertices) + 1
        return Measures(0, n, 0, n)
    area2 = delta.area2
    boundary = sum(integral_length(p, q) for p, q in delta.edges())
    interior = len(interior_lattice_points(delta))
    if area2 != 2 * interior + boundary - 2:
        raise InternalConsistencyError(
            f"Pick identity failed: area2={area2} boundary={boundary} interior={interior}"
        )
    return Measures(area2, boundary, interior, interior + boundary)


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> M x + t with integer M, det M = +-1 and integer translation t."""

    m11: int
    m12: int
    m21: int
    m22: int
    t1: int
    t2: int

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError(f"matrix determinant must be +-1, got {self.det}")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @classmethod
    def identity(cls) -> "AffineUnimodularMap":
        return cls(1, 0, 0, 1, 0, 0)

    @classmethod
    def translation(cls, t1: int, t2: int) -> "AffineUnimodularMap":
        return cls(1, 0, 0, 1, t1, t2)

    def apply(self, p: Point) -> Point:
        return (
            self.m11 * p[0] + self.m12 * p[1] + self.t1,
            self.m21 * p[0] + self.m22 * p[1] + self.t2,
        )

    def compose(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """self after other: (self.compose(other))(p) == self(other(p))."""
        return AffineUnimodularMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            self.m11 * other.t1 + self.m12 * other.t2 + self.t1,
            self.m21 * other.t1 + self.m22 * other.t2 + self.t2,
        )

    def inverse(self) -> "AffineUnimodularMap":
        d = self.det
        i11, i12, i21, i22 = d * self.m22, -d * self.m12, -d * self.m21, d * self.m11
        return AffineUnimodularMap(
            i11, i12, i21, i22, -(i11 * self.t1 + i12 * self.t2), -(i21 * self.t1 + i22 * self.t2)
        )


def apply_map(phi: AffineUnimodularMap, delta: LatticePolygon) -> LatticePolygon:
    """Image polygon, re-canonicalized; preserves kind and all lattice counts."""
    return hull([phi.apply(v) for v in delta.vertices])


def _extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, u, v) with u*a + v*b == g == gcd(a, b)."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def complete_to_basis(u: Point) -> Point:
    """A vector w with u[0]*w[1] - u[1]*w[0] == 1, for primitive u."""
    g, s, t = _extended_gcd(u[0], u[1])
    if g != 1:
        raise ValueError(f"vector must be primitive: {u!r}")
    return (-t, s)


def _solve_frame(d1: Point, d2: Point, f1: Point, f2: Point) -> Optional[tuple[int, int, int, int]]:
    """Integer matrix M with M d1 = f1 and M d2 = f2, if one with det +-1 exists."""
    det_d = d1[0] * d2[1] - d1[1] * d2[0]
    if det_d == 0:
        return None
    n11 = f1[0] * d2[1] - f2[0] * d1[1]
    n12 = -f1[0] * d2[0] + f2[0] * d1[0]
    n21 = f1[1] * d2[1] - f2[1] * d1[1]
    n22 = -f1[1] * d2[0] + f2[1] * d1[0]
    if any(n % det_d for n in (n11, n12, n21, n22)):
        return None
    m = (n11 // det_d, n12 // det_d, n21 // det_d, n22 // det_d)
    if m[0] * m[3] - m[1] * m[2] not in (1, -1):
        return None
    return m


def are_equivalent(d1: LatticePolygon, d2: LatticePolygon) -> Optional[AffineUnimodularMap]:
    """A unimodular map sending d1 onto d2 exactly, or None.

    Two-dimensional polygons are matched by mapping the edge frame at the
    first vertex of d1 onto the frame at every vertex of d2, in both
    orientations; a candidate is accepted only if the induced affine map has
    determinant +-1 and reproduces d2.
    """
    if d1.kind != d2.kind:
        return None
    if d1.is_empty:
        return AffineUnimodularMap.identity()
    if d1.is_point:
        p, q = d1.vertices[0], d2.vertices[0]
        return AffineUnimodularMap.translation(q[0] - p[0], q[1] - p[1])
    if d1.is_segment:
        if integral_length(*d1.vertices) != integral_length(*d2.vertices):
            return None
        (p1, q1), (p2, q2) = d1.vertices, d2.vertices
        u1 = _primitive((q1[0] - p1[0], q1[1] - p1[1]))
        u2 = _primitive((q2[0] - p2[0], q2[1] - p2[1]))
        w1, w2 = complete_to_basis(u1), complete_to_basis(u2)
        # M = B2 B1^{-1} for the column bases B_i = (u_i | w_i), each of det 1.
        m11 = u2[0] * w1[1] - w2[0] * u1[1]
        m12 = -u2[0] * w1[0] + w2[0] * u1[0]
        m21 = u2[1] * w1[1] - w2[1] * u1[1]
        m22 = -u2[1] * w1[0] + w2[1] * u1[0]
        phi = AffineUnimodularMap(
            m11, m12, m21, m22,
            p2[0] - (m11 * p1[0] + m12 * p1[1]),
            p2[1] - (m21 * p1[0] + m22 * p1[1]),
        )
        return phi if apply_map(phi, d1) == d2 else None
    n = len(d1.vertices)
    if n != len(d2.vertices) or d1.area2 != d2.area2:
        return None
    v0 = d1.vertices[0]
    d_next = _primitive((d1.vertices[1][0] - v0[0], d1.vertices[1][1] - v0[1]))
    d_prev = _primitive((d1.vertices[-1][0] - v0[0], d1.vertices[-1][1] - v0[1]))
    for j, w in enumerate(d2.vertices):
        f_next = _primitive((d2.vertices[(j + 1) % n][0] - w[0], d2.vertices[(j + 1) % n][1] - w[1]))
        f_prev = _primitive((d2.vertices[j - 1][0] - w[0], d2.vertices[j - 1][1] - w[1]))
        for g1, g2 in ((f_next, f_prev), (f_prev, f_next)):
            m = _solve_frame(d_next, d_prev, g1, g2)
            if m is None:
                continue
            phi = AffineUnimodularMap(
                m[0], m[1], m[2], m[3],
                w[0] - (m[0] * v0[0] + m[1] * v0[1]),
                w[1] - (m[2] * v0[0] + m[3] * v0[1]),
            )
            if apply_map(phi, d1) == d2:
                return phi
    return None


@dataclass(frozen=True)
class SpecialShape:
    """A recognized named shape: kind plus its integer parameters."""

    kind: str  # "standard_triangle" | "upsilon" | "rectangle" | "lawrence_prism"
    params: tuple[int, ...]


@lru_cache(maxsize=1 << 15)
def recognize_special(delta: LatticePolygon) -> Optional[SpecialShape]:
    """Detect equivalence with a standard triangle, dilated upsilon triangle,
    unimodular rectangle or Lawrence prism; None otherwise.

    When several families match (the unit square is both a rectangle and a
    width-one prism) the first kind in the order above wins.
    """
    if not delta.is_two_dim:
        raise DegeneratePolygonError("special-shape recognition needs a two-dimensional polygon")
    vs = delta.vertices
    n = len(vs)
    lens = [integral_length(p, q) for p, q in delta.edges()]
    if n == 3 and lens[0] == lens[1] == lens[2]:
        d = lens[0]
        if delta.area2 == d * d and are_equivalent(delta, standard_triangle(d)) is not None:
            return SpecialShape("standard_triangle", (d,))
        if delta.area2 == 3 * d * d and are_equivalent(delta, upsilon(d)) is not None:
            return SpecialShape("upsilon", (d,))
    if n == 4:
        prims = [_primitive((q[0] - p[0], q[1] - p[1])) for p, q in delta.edges()]
        opposite = (
            prims[0] == (-prims[2][0], -prims[2][1])
            and prims[1] == (-prims[3][0], -prims[3][1])
            and lens[0] == lens[2]
            and lens[1] == lens[3]
        )
        if opposite and abs(prims[0][0] * prims[1][1] - prims[0][1] * prims[1][0]) == 1:
            a, b = sorted((lens[0], lens[1]))
            if are_equivalent(delta, rectangle(a, b)) is not None:
                return SpecialShape("rectangle", (a, b))
    for a, b, c in delta.edge_constraints:
        vals = [a * x + b * y for x, y in vs]
        if c - min(vals) == 1:
            top = [v for v in vs if a * v[0] + b * v[1] == c]
            bot = [v for v in vs if a * v[0] + b * v[1] == c - 1]
            len_top = integral_length(top[0], top[1]) if len(top) == 2 else 0
            len_bot = integral_length(bot[0], bot[1]) if len(bot) == 2 else 0
            hi, lo = max(len_top, len_bot), min(len_top, len_bot)
            return SpecialShape("lawrence_prism", (hi, lo))
    return None
