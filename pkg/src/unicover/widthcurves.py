"""Curves of constant width one: Reuleaux polygons and the circle.

A Reuleaux polygon with an odd number n of sides is built from n unit-radius
arcs whose centers sit on a closed star polygon with unit-length sides.  The
n angles between consecutive star sides (the "diameter angles") are each
strictly between 0 and 60 degrees and sum to 180 degrees; n-3 consecutive
angles determine the rest by triangulation of the two loose ends.

Support and offset functions are evaluated exactly from the star vertices,
never from a discretization.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import geom
from .geom import TWO_PI, ArcPolygon, ArcSegment, Point2

MAX_ANGLE = math.pi / 3.0


class InvalidSpecError(ValueError):
    """Spec violates the Reuleaux constraints (angle range, sum, diagonals)."""


@dataclass(frozen=True)
class ReuleauxSpec:
    """Odd n plus n-3 consecutive diameter angles (radians)."""

    n: int
    free_angles: tuple = ()

    def __post_init__(self):
        if self.n < 3 or self.n % 2 == 0:
            raise InvalidSpecError(f"n must be odd and >= 3, got {self.n}")
        if len(self.free_angles) != self.n - 3:
            raise InvalidSpecError(
                f"need n-3={self.n - 3} free angles, got {len(self.free_angles)}")


@dataclass(frozen=True, eq=False)
class ConstantWidthShape:
    """A curve of constant width one with exact support-function evaluation.

    vertices are the star-ordered arc centers, translated so the reference
    point C (the vertex centroid) is at the origin.  For the circle the
    vertex array is empty and the boundary is four arcs of radius 1/2.
    """

    kind: str  # "circle" | "reuleaux"
    spec: Optional[ReuleauxSpec]
    vertices: np.ndarray
    boundary: ArcPolygon
    center: Point2
    bilaterally_symmetric: bool
    angles: tuple = ()
    # support lookup tables: 2n cones tiling [0, 2pi)
    _cone_lo: np.ndarray = field(default=None, repr=False)
    _cone_vertex: np.ndarray = field(default=None, repr=False)
    _cone_add: np.ndarray = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return 0 if self.kind == "circle" else len(self.vertices)


# ---------------------------------------------------------------------------
# Construction


def _close_star(chain: np.ndarray) -> np.ndarray:
    """Append the last star vertex from the two loose ends (circle-circle)."""
    first, last = Point2(*chain[0]), Point2(*chain[-1])
    inter = geom.circle_circle(last, 1.0, first, 1.0)
    if not inter.points:
        raise InvalidSpecError("closure failed: loose ends farther than 2 apart")
    best = None
    for cand in inter.points:
        full = np.vstack([chain, [cand]])
        angles = _star_angles(full)
        if np.all(angles > 1e-12) and np.all(angles < MAX_ANGLE + 1e-12):
            best = full
            break
    if best is None:
        raise InvalidSpecError("closure failed: no solution with valid angles")
    return best


def _star_angles(star: np.ndarray) -> np.ndarray:
    """Diameter angle at every star vertex (angle between incident star sides)."""
    n = len(star)
    prev = star[np.arange(n) - 1]
    nxt = star[(np.arange(n) + 1) % n]
    u = prev - star
    v = nxt - star
    crossv = u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0]
    dotv = np.sum(u * v, axis=1)
    return np.abs(np.arctan2(crossv, dotv))


def _star_from_spec(spec: ReuleauxSpec) -> np.ndarray:
    if spec.n == 3:
        # the regular triangle is the n=3 limit case (all angles exactly 60 deg)
        return np.array([[0.0, 0.0], [1.0, 0.0], [0.5, math.sqrt(3.0) / 2.0]])
    chain = [np.zeros(2)]
    heading = 0.0
    chain.append(chain[-1] + np.array([math.cos(heading), math.sin(heading)]))
    for a in spec.free_angles:
        heading += math.pi - a
        chain.append(chain[-1] + np.array([math.cos(heading), math.sin(heading)]))
    return _close_star(np.array(chain))


def _convex_order(star: np.ndarray) -> np.ndarray:
    c = star.mean(axis=0)
    ang = np.arctan2(star[:, 1] - c[1], star[:, 0] - c[0])
    return np.argsort(ang)


def _build_boundary(star: np.ndarray, order: np.ndarray) -> ArcPolygon:
    n = len(star)
    pos = {int(order[i]): i for i in range(n)}
    pieces = []
    for i in range(n):
        a = int(order[i])
        b = int(order[(i + 1) % n])
        # the arc between convex-consecutive vertices is centered at their
        # common star neighbor
        na = {(a - 1) % n, (a + 1) % n}
        nb = {(b - 1) % n, (b + 1) % n}
        common = na & nb
        if len(common) != 1:
            raise InvalidSpecError("star adjacency inconsistent with convex order")
        c = common.pop()
        pieces.append(geom.arc_from_endpoints(Point2(*star[c]), 1.0,
                                              Point2(*star[a]), Point2(*star[b]), ccw=True))
    return ArcPolygon(tuple(pieces))


def _support_tables(star: np.ndarray):
    """Cones of outward normals: vertex cone of W_k plus the antipodal cone of
    the arc centered at W_k.  Together the 2n cones tile [0, 2pi)."""
    n = len(star)
    lo, vx, addc = [], [], []
    for k in range(n):
        p = star[(k - 1) % n]
        q = star[(k + 1) % n]
        d1 = math.atan2(star[k][1] - p[1], star[k][0] - p[0]) % TWO_PI
        d2 = math.atan2(star[k][1] - q[1], star[k][0] - q[0]) % TWO_PI
        if (d2 - d1) % TWO_PI <= math.pi:
            start, width = d1, (d2 - d1) % TWO_PI
        else:
            start, width = d2, (d1 - d2) % TWO_PI
        lo.append(start)
        vx.append(k)
        addc.append(0.0)
        lo.append((start + math.pi) % TWO_PI)  # arc cone (antipodal)
        vx.append(k)
        addc.append(1.0)
    order = np.argsort(lo)
    return np.array(lo)[order], np.array(vx)[order], np.array(addc)[order]


def _shape_from_star(star: np.ndarray, spec: Optional[ReuleauxSpec]) -> ConstantWidthShape:
    star = star - star.mean(axis=0)
    order = _convex_order(star)
    boundary = _build_boundary(star, order)
    angles = tuple(float(a) for a in _star_angles(star))
    lo, vx, addc = _support_tables(star)
    sym = _is_palindromic(np.array(angles))
    return ConstantWidthShape(
        kind="reuleaux", spec=spec, vertices=star, boundary=boundary,
        center=Point2(0.0, 0.0), bilaterally_symmetric=sym, angles=angles,
        _cone_lo=lo, _cone_vertex=vx, _cone_add=addc)


def _is_palindromic(angles: np.ndarray, tol: float = 1e-9) -> bool:
    n = len(angles)
    rev = angles[::-1]
    for shift in range(n):
        if np.all(np.abs(np.roll(rev, shift) - angles) < tol):
            return True
    return False


def build_reuleaux(spec: ReuleauxSpec) -> ConstantWidthShape:
    """Construct the Reuleaux polygon for a spec, or raise InvalidSpecError."""
    problems = validate_spec(spec)
    if problems:
        raise InvalidSpecError("; ".join(problems))
    return _shape_from_star(_star_from_spec(spec), spec)


def validate_spec(spec: ReuleauxSpec) -> list:
    """Return a list of violated constraints (empty when the spec is valid)."""
    if spec.n == 3:
        return []  # regular triangle limit case; all angles are exactly 60 deg
    problems = []
    for i, a in enumerate(spec.free_angles):
        if not (0.0 < a < MAX_ANGLE):
            problems.append(f"angle {i} = {math.degrees(a):.3f} deg outside (0, 60)")
    if problems:
        return problems
    if sum(spec.free_angles) >= math.pi:
        return ["free angles already sum to >= 180 deg"]
    try:
        star = _star_from_spec(spec)
    except InvalidSpecError as exc:
        return [str(exc)]
    angles = _star_angles(star)
    if abs(float(angles.sum()) - math.pi) > 1e-9:
        problems.append(f"angles sum to {math.degrees(angles.sum()):.6f} deg, not 180")
    for k, a in enumerate(angles):
        if not (1e-12 < a < MAX_ANGLE - 1e-12):
            problems.append(f"derived angle at vertex {k} = {math.degrees(a):.3f} deg outside (0, 60)")
    # all star diagonals at most one; star sides exactly one
    n = len(star)
    d = np.sqrt(np.sum((star[:, None, :] - star[None, :, :]) ** 2, axis=2))
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j - i == 1) or (i == 0 and j == n - 1)
            if adjacent:
                if abs(d[i, j] - 1.0) > 1e-9:
                    problems.append(f"star side {i}-{j} has length {d[i, j]:.12f}")
            elif d[i, j] > 1.0 + 1e-12:
                problems.append(f"diagonal {i}-{j} = {d[i, j]:.12f} exceeds 1")
    return problems


def circle_shape() -> ConstantWidthShape:
    """The circle of diameter one, centered at its reference point."""
    c = Point2(0.0, 0.0)
    quarters = [ArcSegment(c, 0.5, k * math.pi / 2.0, (k + 1) * math.pi / 2.0, True)
                for k in range(4)]
    return ConstantWidthShape(
        kind="circle", spec=None, vertices=np.zeros((0, 2)),
        boundary=ArcPolygon(tuple(quarters)), center=c,
        bilaterally_symmetric=True, angles=(),
        _cone_lo=None, _cone_vertex=None, _cone_add=None)


def random_spec(n: int, rng: np.random.Generator, max_tries: int = 2000) -> ReuleauxSpec:
    """Uniform rejection sampling from the simplex of diameter angles."""
    if n < 5 or n % 2 == 0:
        raise InvalidSpecError("random specs need odd n >= 5")
    for _ in range(max_tries):
        angles = rng.dirichlet(np.ones(n)) * math.pi
        spec = ReuleauxSpec(n, tuple(float(a) for a in angles[: n - 3]))
        if not validate_spec(spec):
            return spec
    raise InvalidSpecError(f"no valid spec found for n={n} in {max_tries} tries")


def mirror_shape(shape: ConstantWidthShape) -> ConstantWidthShape:
    """Reflection of the shape about the x axis through its reference point."""
    if shape.kind == "circle":
        return shape
    star = shape.vertices.copy()
    star[:, 1] *= -1.0
    return _shape_from_star(star, shape.spec)


# ---------------------------------------------------------------------------
# Support / offset evaluation


def support(shape: ConstantWidthShape, theta) -> np.ndarray:
    """Support function s(theta) relative to the reference point C.

    Exact for Reuleaux polygons: the active feature is found by binary search
    over the 2n support cones, so s is (V-C).n for a vertex cone and
    (V-C).n + 1 for an arc cone.
    """
    th = np.mod(np.asarray(theta, dtype=float), TWO_PI)
    scalar = th.ndim == 0
    th = np.atleast_1d(th)
    if shape.kind == "circle":
        out = np.full(th.shape, 0.5)
        return float(out[0]) if scalar else out
    idx = np.searchsorted(shape._cone_lo, th, side="right") - 1  # -1 wraps to last cone
    v = shape.vertices[shape._cone_vertex[idx]]
    s = v[:, 0] * np.cos(th) + v[:, 1] * np.sin(th) + shape._cone_add[idx]
    return float(s[0]) if scalar else s


def offset(shape: ConstantWidthShape, theta) -> np.ndarray:
    """Offset function o(theta) = (s(theta) - s(theta+pi))/2 = s(theta) - 1/2."""
    s = support(shape, theta)
    return s - 0.5


def support_point(shape: ConstantWidthShape, theta: float) -> Point2:
    """Boundary point attaining the support in direction theta."""
    if shape.kind == "circle":
        return Point2(0.5 * math.cos(theta), 0.5 * math.sin(theta))
    th = float(theta) % TWO_PI
    idx = int(np.searchsorted(shape._cone_lo, th, side="right")) - 1
    v = shape.vertices[shape._cone_vertex[idx]]
    if shape._cone_add[idx] > 0.5:  # arc cone: contact on the unit arc
        return Point2(v[0] + math.cos(th), v[1] + math.sin(th))
    return Point2(v[0], v[1])


def discretize(shape: ConstantWidthShape, segments_per_arc: int) -> np.ndarray:
    """Inscribed polygon: all vertices lie on the boundary arcs, so the
    diameter stays exactly one and the polygon is contained in the shape."""
    if segments_per_arc < 1:
        raise ValueError("segments_per_arc must be >= 1")
    return shape.boundary.discretize(segments_per_arc)


# ---------------------------------------------------------------------------
# Shape-pool files


def pool_to_json(shapes: Sequence) -> str:
    """Serialize a list of (label, spec-or-circle) entries.

    The file format is a JSON array of {"n": int, "freeAnglesDegrees": [...],
    "label": str}; the circle is encoded as {"n": 0}.
    """
    rows = []
    for label, spec in shapes:
        if spec is None:
            rows.append({"n": 0, "freeAnglesDegrees": [], "label": label})
        else:
            rows.append({"n": spec.n,
                         "freeAnglesDegrees": [math.degrees(a) for a in spec.free_angles],
                         "label": label})
    return json.dumps(rows, indent=2)


def pool_from_json(text: str) -> list:
    """Parse a shape-pool file into (label, ConstantWidthShape) pairs."""
    out = []
    for i, row in enumerate(json.loads(text)):
        label = row.get("label", f"shape{i}")
        if row["n"] == 0:
            out.append((label, circle_shape()))
        else:
            spec = ReuleauxSpec(int(row["n"]),
                                tuple(math.radians(a) for a in row["freeAnglesDegrees"]))
            out.append((label, build_reuleaux(spec)))
    return out


def regular_spec(n: int) -> ReuleauxSpec:
    """Spec of the regular Reuleaux n-gon."""
    return ReuleauxSpec(n, tuple([math.pi / n] * (n - 3)))


def symmetric_pentagon_spec(v: float) -> ReuleauxSpec:
    """Pentagon with two consecutive diameter angles set to v.

    Closure makes the remaining three angles a palindrome (b, a, b), so the
    result is the one-parameter bilaterally symmetric family through the
    regular pentagon (v = 36 deg).  Note that the superficially symmetric
    angle multiset {v, v, w, w, w} with w = (pi-2v)/3 does not satisfy star
    closure for v != 36 deg and is not a Reuleaux pentagon.
    """
    return ReuleauxSpec(5, (v, v))
