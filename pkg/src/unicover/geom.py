"""Planar geometry kernel: points, arcs, arc-polygons, hulls, areas, intersections.

All lengths are in units of the shape diameter (constant-width curves have
width 1). Angles are radians everywhere in the library; degrees appear only
at the CLI boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

TWO_PI = 2.0 * math.pi

# Centralized epsilon policy: geometric predicates (closure, on-curve,
# intersection residuals) use GEOM_EPS; containment/admissibility checks get
# the looser CONTAIN_EPS slack.  Computations that need more than double
# precision (areas at the 1e-11..1e-21 scale) live in unicover.bounds.hansen
# and use mpmath instead.
GEOM_EPS = 1e-12
CONTAIN_EPS = 1e-9


class DegenerateHullError(ValueError):
    """All input points are (numerically) collinear."""


class Point2(NamedTuple):
    x: float
    y: float


def unit(angle: float) -> Point2:
    """Unit vector at `angle` radians from the positive x axis."""
    return Point2(math.cos(angle), math.sin(angle))


def add(p, q) -> Point2:
    return Point2(p[0] + q[0], p[1] + q[1])


def sub(p, q) -> Point2:
    return Point2(p[0] - q[0], p[1] - q[1])


def scale(p, s: float) -> Point2:
    return Point2(p[0] * s, p[1] * s)


def dot(p, q) -> float:
    return p[0] * q[0] + p[1] * q[1]


def cross(p, q) -> float:
    return p[0] * q[1] - p[1] * q[0]


def dist(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def rotate(p, angle: float) -> Point2:
    c, s = math.cos(angle), math.sin(angle)
    return Point2(c * p[0] - s * p[1], s * p[0] + c * p[1])


def angle_of(p) -> float:
    return math.atan2(p[1], p[0])


def norm_angle(a: float) -> float:
    """Reduce to [0, 2*pi)."""
    return a % TWO_PI


def ccw_sweep(a0: float, a1: float) -> float:
    """Counterclockwise sweep from angle a0 to a1, in (0, 2*pi]."""
    s = (a1 - a0) % TWO_PI
    return s if s > 0.0 else TWO_PI


# ---------------------------------------------------------------------------
# Boundary pieces


@dataclass(frozen=True)
class ArcSegment:
    """Circular arc from start_angle to end_angle around center.

    Traversal is counterclockwise when ccw is True, else clockwise.  The
    sweep is always in (0, 2*pi).
    """

    center: Point2
    radius: float
    start_angle: float
    end_angle: float
    ccw: bool = True

    @property
    def sweep(self) -> float:
        if self.ccw:
            return ccw_sweep(self.start_angle, self.end_angle)
        return ccw_sweep(self.end_angle, self.start_angle)

    @property
    def start(self) -> Point2:
        return add(self.center, scale(unit(self.start_angle), self.radius))

    @property
    def end(self) -> Point2:
        return add(self.center, scale(unit(self.end_angle), self.radius))

    def point_at(self, t: float) -> Point2:
        """Point at fraction t in [0,1] along the arc."""
        d = self.sweep if self.ccw else -self.sweep
        a = self.start_angle + t * d
        return add(self.center, scale(unit(a), self.radius))

    def angles(self, n: int) -> np.ndarray:
        d = self.sweep if self.ccw else -self.sweep
        return self.start_angle + np.linspace(0.0, 1.0, n) * d


@dataclass(frozen=True)
class LineSegment:
    start: Point2
    end: Point2

    def point_at(self, t: float) -> Point2:
        return Point2(
            self.start[0] + t * (self.end[0] - self.start[0]),
            self.start[1] + t * (self.end[1] - self.start[1]),
        )


Piece = Union[ArcSegment, LineSegment]


def arc_from_endpoints(center: Point2, radius: float, start: Point2, end: Point2,
                       ccw: bool = True) -> ArcSegment:
    """Arc around `center` running from `start` to `end` (both on the circle)."""
    a0 = angle_of(sub(start, center))
    a1 = angle_of(sub(end, center))
    return ArcSegment(center, radius, a0, a1, ccw)


@dataclass(frozen=True)
class ArcPolygon:
    """Closed boundary of arcs and straight segments, traversed CCW.

    Arcs are stored exactly (center/radius/angles); discretization is always
    an explicit operation.
    """

    pieces: tuple

    def __post_init__(self):
        if len(self.pieces) < 1:
            raise ValueError("empty arc-polygon")

    def validate(self, eps: float = 1e-9) -> None:
        """Check closure and CCW orientation; raises on failure."""
        n = len(self.pieces)
        for i, piece in enumerate(self.pieces):
            nxt = self.pieces[(i + 1) % n]
            e = piece.end if isinstance(piece, ArcSegment) else piece.end
            s = nxt.start if isinstance(nxt, ArcSegment) else nxt.start
            if dist(e, s) > eps:
                raise ValueError(f"arc-polygon not closed at piece {i}: gap {dist(e, s):.3e}")
        if self.area() <= 0.0:
            raise ValueError("arc-polygon is not counterclockwise")

    def area(self) -> float:
        """Signed area via the line integral (1/2) * integral(x dy - y dx).

        For an arc the contribution is r^2*delta/2 + cross(c, end-start)/2
        with delta the signed sweep; for a segment it is cross(p, q)/2.
        """
        total = 0.0
        for piece in self.pieces:
            if isinstance(piece, ArcSegment):
                delta = piece.sweep if piece.ccw else -piece.sweep
                s, e = piece.start, piece.end
                total += 0.5 * piece.radius ** 2 * delta
                total += 0.5 * cross(piece.center, sub(e, s))
            else:
                total += 0.5 * cross(piece.start, piece.end)
        return total

    def discretize(self, segments_per_arc: int = 64) -> np.ndarray:
        """Boundary polyline as an (N, 2) array; arc samples lie on the arcs."""
        pts = []
        for piece in self.pieces:
            if isinstance(piece, ArcSegment):
                ang = piece.angles(segments_per_arc + 1)[:-1]
                pts.append(np.stack([piece.center[0] + piece.radius * np.cos(ang),
                                     piece.center[1] + piece.radius * np.sin(ang)], axis=1))
            else:
                pts.append(np.array([piece.start], dtype=float))
        return np.concatenate(pts, axis=0)


def arcpolygon_area(p: ArcPolygon) -> float:
    """Area of an arc-polygon (positive for CCW boundaries)."""
    return p.area()


# ---------------------------------------------------------------------------
# Convex polygons and hulls


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon, vertices counterclockwise."""

    vertices: tuple

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=float)

    def area(self) -> float:
        return polygon_area(self)

    def contains(self, p, eps: float = CONTAIN_EPS) -> bool:
        """Point inside or on the boundary (within eps)."""
        v = self.array
        nxt = np.roll(v, -1, axis=0)
        crossv = (nxt[:, 0] - v[:, 0]) * (p[1] - v[:, 1]) - (nxt[:, 1] - v[:, 1]) * (p[0] - v[:, 0])
        return bool(np.all(crossv >= -eps))


def polygon_area(poly) -> float:
    """Shoelace area; accepts a ConvexPolygon or an (n,2) vertex array."""
    v = poly.array if isinstance(poly, ConvexPolygon) else np.asarray(poly, dtype=float)
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def _hull_indices(pts: np.ndarray) -> list:
    """Monotone chain on lexicographically sorted points; returns CCW indices."""
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    sorted_pts = pts[order]

    def build(indices):
        out = []
        for i in indices:
            while len(out) >= 2:
                o, a = sorted_pts[out[-2]], sorted_pts[out[-1]]
                b = sorted_pts[i]
                if (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]) <= 0.0:
                    out.pop()
                else:
                    break
            out.append(i)
        return out

    idx = list(range(len(sorted_pts)))
    lower = build(idx)
    upper = build(idx[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateHullError("all points collinear")
    return [order[i] for i in hull]


def convex_hull(points) -> ConvexPolygon:
    """Convex hull (monotone chain, O(n log n)); every hull vertex is an input point."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or len(pts) < 3:
        raise ValueError("need at least 3 points")
    pts = np.unique(pts, axis=0)
    if len(pts) < 3:
        raise DegenerateHullError("fewer than 3 distinct points")
    idx = _hull_indices(pts)
    return ConvexPolygon(tuple(Point2(*pts[i]) for i in idx))


def hull_area(points) -> float:
    """Area of the convex hull of a point set."""
    return convex_hull(points).area()


def diameter(points) -> float:
    """Supremum of pairwise distances of a point set."""
    pts = np.asarray(points, dtype=float)
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    if len(pts) > 16:
        try:
            pts = convex_hull(pts).array
        except DegenerateHullError:
            pass
    d2 = np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=2)
    return math.sqrt(float(d2.max()))


# ---------------------------------------------------------------------------
# Intersections


@dataclass(frozen=True)
class Intersections:
    points: tuple
    tangency: bool = False


def circle_circle(c1, r1: float, c2, r2: float, eps: float = GEOM_EPS) -> Intersections:
    """Intersection points of two circles, with tangency flagged."""
    d = dist(c1, c2)
    if d < eps and abs(r1 - r2) < eps:
        return Intersections((), False)  # coincident: not a point set
    if d > r1 + r2 + eps or d < abs(r1 - r2) - eps:
        return Intersections((), False)
    # distance from c1 along the center line to the chord
    a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d)
    h2 = r1 * r1 - a * a
    ux, uy = (c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d
    mx, my = c1[0] + a * ux, c1[1] + a * uy
    if h2 < eps * max(1.0, r1):
        return Intersections((Point2(mx, my),), True)
    h = math.sqrt(max(h2, 0.0))
    p1 = Point2(mx - h * uy, my + h * ux)
    p2 = Point2(mx + h * uy, my - h * ux)
    return Intersections((p1, p2), False)


def line_circle(p, q, center, r: float, eps: float = GEOM_EPS) -> Intersections:
    """Intersections of the infinite line through p,q with a circle."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    L = math.hypot(dx, dy)
    if L < eps:
        raise ValueError("degenerate line")
    ux, uy = dx / L, dy / L
    # foot of the perpendicular from center
    t0 = (center[0] - p[0]) * ux + (center[1] - p[1]) * uy
    fx, fy = p[0] + t0 * ux, p[1] + t0 * uy
    h = math.hypot(center[0] - fx, center[1] - fy)
    if h > r + eps:
        return Intersections((), False)
    if abs(h - r) <= eps:
        return Intersections((Point2(fx, fy),), True)
    s = math.sqrt(max(r * r - h * h, 0.0))
    return Intersections((Point2(fx - s * ux, fy - s * uy),
                          Point2(fx + s * ux, fy + s * uy)), False)


def line_line(p1, d1, p2, d2, eps: float = GEOM_EPS) -> Point2:
    """Intersection of two lines given as point + direction."""
    denom = cross(d1, d2)
    if abs(denom) < eps:
        raise ValueError("parallel lines")
    t = cross(sub(p2, p1), d2) / denom
    return add(p1, scale(d1, t))


def _on_arc(arc: ArcSegment, p, eps: float) -> bool:
    if abs(dist(p, arc.center) - arc.radius) > max(eps, 1e-9):
        return False
    a = norm_angle(angle_of(sub(p, arc.center)))
    a0, a1 = (arc.start_angle, arc.end_angle) if arc.ccw else (arc.end_angle, arc.start_angle)
    rel = (a - a0) % TWO_PI
    return rel <= ccw_sweep(a0, a1) + 1e-9


def _on_segment(seg: LineSegment, p, eps: float) -> bool:
    d = sub(seg.end, seg.start)
    L = math.hypot(*d)
    if L < eps:
        return dist(p, seg.start) <= eps
    t = dot(sub(p, seg.start), d) / (L * L)
    if t < -eps or t > 1.0 + eps:
        return False
    return abs(cross(d, sub(p, seg.start))) / L <= max(eps, 1e-9)


def intersect(a: Piece, b: Piece, eps: float = GEOM_EPS) -> Intersections:
    """Intersection points of two boundary pieces (0, 1, or 2 points).

    Tangency is reported as a single point with the tangency flag set.
    Results are clipped to the actual extent of both pieces.
    """
    if isinstance(a, LineSegment) and isinstance(b, LineSegment):
        try:
            p = line_line(a.start, sub(a.end, a.start), b.start, sub(b.end, b.start), eps)
        except ValueError:
            return Intersections((), False)
        ok = _on_segment(a, p, 1e-9) and _on_segment(b, p, 1e-9)
        return Intersections((p,) if ok else (), False)
    if isinstance(a, ArcSegment) and isinstance(b, ArcSegment):
        raw = circle_circle(a.center, a.radius, b.center, b.radius, eps)
        pts = tuple(p for p in raw.points if _on_arc(a, p, eps) and _on_arc(b, p, eps))
        return Intersections(pts, raw.tangency and len(pts) == 1)
    if isinstance(a, ArcSegment):
        a, b = b, a
    raw = line_circle(a.start, a.end, b.center, b.radius, eps)
    pts = tuple(p for p in raw.points if _on_segment(a, p, eps) and _on_arc(b, p, eps))
    return Intersections(pts, raw.tangency and len(pts) == 1)
