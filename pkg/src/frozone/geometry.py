"""Exact 2-D primitives: vectors, rotations, convex hulls, and zone queries.

All predicates treat zone boundaries as closed with a 1e-9 m tolerance, and
hulls are returned in a canonical form (counter-clockwise, lexicographically
smallest vertex first) so polygon equality is plain ``==``.

This module is deliberately plain Python: it is the readable reference the
compiled kernels are checked against, and it is fast enough for everything
outside the simulation inner loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

TOL = 1e-9  # closed-boundary tolerance for zone predicates, meters
_TURN_EPS = 1e-12  # cross-product magnitude below which points are collinear


@dataclass(frozen=True)
class Vec2:
    x: float
    y: float

    def __add__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Vec2") -> "Vec2":
        return Vec2(self.x - other.x, self.y - other.y)

    def scaled(self, s: float) -> "Vec2":
        return Vec2(self.x * s, self.y * s)

    def dot(self, other: "Vec2") -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y)

    def normalized(self) -> "Vec2":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize a zero vector")
        return Vec2(self.x / n, self.y / n)

    def bearing(self) -> float:
        return math.atan2(self.y, self.x)


def rotate(v: Vec2, phi: float) -> Vec2:
    """Rotate v by phi radians about the origin (counter-clockwise)."""
    c = math.cos(phi)
    s = math.sin(phi)
    return Vec2(c * v.x - s * v.y, s * v.x + c * v.y)


def dist(a: Vec2, b: Vec2) -> float:
    dx = a.x - b.x
    dy = a.y - b.y
    return math.sqrt(dx * dx + dy * dy)


@dataclass(frozen=True)
class ConvexPolygon:
    """Convex polygon in canonical form.

    Vertices are counter-clockwise, start at the lexicographically smallest
    point, and contain no three consecutive collinear points.
    """

    vertices: tuple[Vec2, ...]

    def __post_init__(self) -> None:
        v = self.vertices
        if len(v) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        n = len(v)
        for i in range(n):
            a, b, c = v[i], v[(i + 1) % n], v[(i + 2) % n]
            if _cross(a, b, c) <= _TURN_EPS:
                raise ValueError("vertices must make strict counter-clockwise turns")
        lo = min(v, key=lambda p: (p.x, p.y))
        if v[0] != lo:
            raise ValueError("first vertex must be the lexicographically smallest")


@dataclass(frozen=True)
class Circle:
    center: Vec2
    radius: float

    def __post_init__(self) -> None:
        if not self.radius > 0.0:
            raise ValueError("radius must be > 0")


@dataclass(frozen=True)
class InflatedSegment:
    """A segment grown by a fixed inflation radius (a stadium shape)."""

    a: Vec2
    b: Vec2
    inflation: float

    def __post_init__(self) -> None:
        if not self.inflation > 0.0:
            raise ValueError("inflation must be > 0")


Pfz = Circle | InflatedSegment | ConvexPolygon


def _cross(o: Vec2, a: Vec2, b: Vec2) -> float:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: Sequence[Vec2]) -> ConvexPolygon | tuple[Vec2, Vec2] | Vec2:
    """Convex hull with degenerate results made explicit.

    Returns a canonical ConvexPolygon for >= 3 non-collinear distinct points,
    the extreme pair (lexicographically ordered) when all points are
    collinear, or the single point when all coincide.  Raises on empty input.
    """
    if not points:
        raise ValueError("empty point set")
    pts = sorted({(p.x, p.y) for p in points})
    if len(pts) == 1:
        return Vec2(*pts[0])

    def chain(seq):
        out: list[tuple[float, float]] = []
        for p in seq:
            while len(out) >= 2 and _cross(
                Vec2(*out[-2]), Vec2(*out[-1]), Vec2(*p)
            ) <= _TURN_EPS:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        return Vec2(*pts[0]), Vec2(*pts[-1])
    return ConvexPolygon(tuple(Vec2(*p) for p in hull))


def signed_gap(zone: Pfz, p: Vec2) -> float:
    """Signed distance to the zone boundary: positive outside, negative inside.

    For points outside a polygon this is the true distance to the polygon;
    inside any zone it is minus the depth as seen by the containment test.
    """
    if isinstance(zone, Circle):
        return dist(p, zone.center) - zone.radius
    if isinstance(zone, InflatedSegment):
        return _segment_dist(p, zone.a, zone.b) - zone.inflation
    m = math.inf
    verts = zone.vertices
    n = len(verts)
    for i in range(n):
        a = verts[i]
        b = verts[(i + 1) % n]
        ex = b.x - a.x
        ey = b.y - a.y
        elen = math.sqrt(ex * ex + ey * ey)
        if elen < 1e-18:
            continue
        sd = (ex * (p.y - a.y) - ey * (p.x - a.x)) / elen
        if sd < m:
            m = sd
    if m >= 0.0:
        return -m
    best = math.inf
    for i in range(n):
        d = _segment_dist(p, verts[i], verts[(i + 1) % n])
        if d < best:
            best = d
    return best


def _segment_dist(p: Vec2, a: Vec2, b: Vec2) -> float:
    ex = b.x - a.x
    ey = b.y - a.y
    ll = ex * ex + ey * ey
    if ll < 1e-24:
        t = 0.0
    else:
        t = ((p.x - a.x) * ex + (p.y - a.y) * ey) / ll
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    qx = p.x - (a.x + t * ex)
    qy = p.y - (a.y + t * ey)
    return math.sqrt(qx * qx + qy * qy)


def contains(zone: Pfz, p: Vec2) -> bool:
    """Closed-region membership test (boundary points are inside)."""
    return signed_gap(zone, p) <= TOL


def dist_to_zone(zone: Pfz, p: Vec2) -> float:
    """Distance from p to the zone; exactly 0 whenever contains() holds."""
    g = signed_gap(zone, p)
    return 0.0 if g <= TOL else g


def zone_encoding(zone: Pfz) -> tuple[int, list[float]]:
    """Flatten a zone into the (kind, data) form the kernels consume."""
    if isinstance(zone, Circle):
        return 0, [zone.center.x, zone.center.y, zone.radius]
    if isinstance(zone, InflatedSegment):
        return 1, [zone.a.x, zone.a.y, zone.b.x, zone.b.y, zone.inflation]
    data: list[float] = []
    for v in zone.vertices:
        data.append(v.x)
        data.append(v.y)
    return 2, data
