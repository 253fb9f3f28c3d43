"""Fitting constant-width curves into circumscribed parallel hexagons.

A parallel hexagon is tangent to the circle of diameter one with opposite
sides parallel and a distance one apart, so it is fixed by the two angles
between adjacent side lines (the third angle makes them sum to 180 degrees).
A shape rotated by theta fits after a translation iff the three offset
constraints x.n_i = o_i are simultaneously solvable, which happens exactly
at the roots of the cyclic determinant t(theta).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import geom, widthcurves
from .geom import CONTAIN_EPS, TWO_PI, Point2
from .widthcurves import ConstantWidthShape

# conservative bound on |t'(theta)|: each offset has |o| <= 1/2 and
# |o'| <= max vertex distance from C <= 1, each wedge factor is <= 1
LIPSCHITZ_T = 3.0

# canonical first side normal; the regular hexagon then has normals at
# 30/90/150 degrees, matching the frame used by unicover.bounds
BASE_NORMAL = math.pi / 6.0


@dataclass(frozen=True)
class ParallelHexagon:
    """Circumscribed parallel hexagon given by two side-line angles (radians)."""

    angle_a: float = math.pi / 3.0
    angle_b: float = math.pi / 3.0

    def __post_init__(self):
        angle_c = math.pi - self.angle_a - self.angle_b
        for a in (self.angle_a, self.angle_b, angle_c):
            if not (0.0 < a < math.pi):
                raise ValueError("hexagon angles must be in (0, pi) and sum to pi")

    @property
    def angle_c(self) -> float:
        return math.pi - self.angle_a - self.angle_b

    @property
    def normals(self) -> np.ndarray:
        """Angles of the three independent side normals."""
        return np.array([BASE_NORMAL,
                         BASE_NORMAL + self.angle_a,
                         BASE_NORMAL + self.angle_a + self.angle_b])

    @property
    def is_regular(self) -> bool:
        return (abs(self.angle_a - math.pi / 3) < 1e-12
                and abs(self.angle_b - math.pi / 3) < 1e-12)

    def corners(self) -> np.ndarray:
        """Six corner points, counterclockwise."""
        dirs = np.concatenate([self.normals, self.normals + math.pi]) % TWO_PI
        dirs = np.sort(dirs)
        pts = []
        for i in range(6):
            b1, b2 = dirs[i], dirs[(i + 1) % 6]
            half = ((b2 - b1) % TWO_PI) / 2.0
            mid = b1 + half
            r = 0.5 / math.cos(half)
            pts.append((r * math.cos(mid), r * math.sin(mid)))
        return np.array(pts)

    def area(self) -> float:
        return geom.polygon_area(self.corners())


def regular_hexagon() -> ParallelHexagon:
    return ParallelHexagon(math.pi / 3.0, math.pi / 3.0)


@dataclass(frozen=True)
class PalCut:
    """Two corner cuts tangent to the inscribed circle at slant sigma.

    The cut lines touch the circle at angles 60+sigma and 300+sigma degrees
    (the corners called C and E in the bounds frame) and stay mutually at
    120 degrees for every slant.
    """

    slant: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.slant < math.radians(9.0)):
            raise ValueError("slant must be in [0, 9 degrees)")

    @property
    def cut_normals(self) -> np.ndarray:
        return np.array([math.pi / 3.0 + self.slant,
                         5.0 * math.pi / 3.0 + self.slant])


@dataclass(frozen=True)
class Placement:
    """Rigid placement of a shape inside the hexagon.

    A shape point p maps to R(rotation) @ F(p) + translation, where F is a
    reflection about the x axis when reflected is True.
    """

    rotation: float
    translation: Point2
    reflected: bool = False


@dataclass(frozen=True)
class RootScan:
    roots: tuple
    always_fits: bool = False  # circle: t vanishes identically


# ---------------------------------------------------------------------------
# t(theta) and roots


def _offset_dirs(hexagon: ParallelHexagon, theta, reflected: bool) -> np.ndarray:
    """Directions at which the shape offset must be evaluated.

    Rotating the shape by theta means sampling its offset at phi - theta; a
    reflected shape has o_mirror(psi) = o(-psi).
    """
    phi = hexagon.normals.reshape(3, 1)
    psi = phi - np.atleast_1d(theta).reshape(1, -1)
    return -psi if reflected else psi


def t_value(shape: ConstantWidthShape, hexagon: ParallelHexagon, theta,
            reflected: bool = False):
    """Cyclic solvability determinant; zero exactly when the rotated shape fits."""
    phi = hexagon.normals
    w = np.array([math.sin(phi[2] - phi[1]),
                  math.sin(phi[0] - phi[2]),
                  math.sin(phi[1] - phi[0])])
    psi = _offset_dirs(hexagon, theta, reflected)
    o = widthcurves.offset(shape, psi.ravel()).reshape(psi.shape)
    t = w[0] * o[0] + w[1] * o[1] + w[2] * o[2]
    return float(t[0]) if np.isscalar(theta) or np.asarray(theta).ndim == 0 else t


def find_roots(shape: ConstantWidthShape, hexagon: ParallelHexagon,
               tolerance: float = 1e-12, reflected: bool = False) -> RootScan:
    """All roots of t(theta) in [0, 2*pi).

    Recursive interval bisection: an interval can be discarded once
    |t(midpoint)| > L * halfwidth with L a proven derivative bound, so no
    sign change or tangency is missed.  Roots closer than 1e-9 are merged.
    """
    if shape.kind == "circle":
        return RootScan(roots=(), always_fits=True)

    f = lambda th: t_value(shape, hexagon, th, reflected)
    lo = np.array([0.0])
    hi = np.array([TWO_PI])
    width = TWO_PI
    while width > tolerance:
        mid = 0.5 * (lo + hi)
        keep = np.abs(f(mid)) <= LIPSCHITZ_T * 0.5 * width + tolerance
        lo, hi, mid = lo[keep], hi[keep], mid[keep]
        lo = np.concatenate([lo, mid])
        hi = np.concatenate([mid, hi])
        width *= 0.5
        if len(lo) > 20000:  # defensive: t == 0 on an interval
            break
    if len(lo) == 0:
        return RootScan(roots=())
    cand = np.sort(0.5 * (lo + hi))
    # merge candidate clusters, then polish each by bisection when a sign
    # change brackets the cluster
    merged = []
    group = [cand[0]]
    for c in cand[1:]:
        if c - group[-1] < 1e-7:
            group.append(c)
        else:
            merged.append((group[0], group[-1]))
            group = [c]
    merged.append((group[0], group[-1]))
    roots = []
    for a, b in merged:
        a -= 10 * tolerance
        b += 10 * tolerance
        fa, fb = f(np.array([a]))[0], f(np.array([b]))[0]
        if fa * fb < 0.0:
            for _ in range(80):
                m = 0.5 * (a + b)
                fm = f(np.array([m]))[0]
                if fa * fm <= 0.0:
                    b, fb = m, fm
                else:
                    a, fa = m, fm
                if b - a < 1e-15:
                    break
            roots.append(0.5 * (a + b))
        else:
            roots.append(0.5 * (a + b))  # tangential root
    out = []
    for r in sorted(x % TWO_PI for x in roots):
        if not out or r - out[-1] > 1e-9:
            out.append(r)
    if len(out) >= 2 and (out[0] + TWO_PI) - out[-1] <= 1e-9:
        out.pop()
    return RootScan(roots=tuple(out))


def placement_from_root(shape: ConstantWidthShape, hexagon: ParallelHexagon,
                        theta: float, reflected: bool = False) -> Placement:
    """Solve the translation from two of the three offset constraints."""
    if shape.kind == "circle":
        return Placement(0.0, Point2(0.0, 0.0), False)
    phi = hexagon.normals
    psi = _offset_dirs(hexagon, theta, reflected).ravel()
    o = widthcurves.offset(shape, psi)
    det = math.sin(phi[1] - phi[0])
    if abs(det) < 1e-12:
        raise ValueError("degenerate hexagon: first two normals are parallel")
    n1, n2 = geom.unit(phi[0]), geom.unit(phi[1])
    # x . n_i = -o_i for i = 1, 2
    tx = (-o[0] * n2[1] + o[1] * n1[1]) / det
    ty = (-o[1] * n1[0] + o[0] * n2[0]) / det
    return Placement(float(theta), Point2(tx, ty), reflected)


def placement_residual(shape, hexagon, placement: Placement) -> float:
    """Worst violation of the six support-line constraints (exact, no points)."""
    worst = 0.0
    for phi in hexagon.normals:
        for sign in (1.0, -1.0):
            d = (phi if sign > 0 else phi + math.pi)
            s = _placed_support(shape, placement, d)
            worst = max(worst, s - 0.5)
    return worst


def _placed_support(shape, placement: Placement, direction: float) -> float:
    psi = direction - placement.rotation
    if placement.reflected:
        psi = -psi
    s = widthcurves.support(shape, psi)
    return float(s) + placement.translation[0] * math.cos(direction) \
        + placement.translation[1] * math.sin(direction)


def placed_support(shape, placement: Placement, direction: float) -> float:
    """Support of the placed shape in an arbitrary direction."""
    return _placed_support(shape, placement, direction)


def placed_support_touch(shape, placement: Placement, direction: float) -> Point2:
    """Boundary point of the placed shape extreme in `direction`."""
    psi = direction - placement.rotation
    if placement.reflected:
        psi = -psi
    p = widthcurves.support_point(shape, psi)
    if placement.reflected:
        p = Point2(p[0], -p[1])
    q = geom.rotate(p, placement.rotation)
    return geom.add(q, placement.translation)


def placed_points(shape, placement: Placement, segments_per_arc: int = 32,
                  base: Optional[np.ndarray] = None) -> np.ndarray:
    """Discretized boundary of the placed shape (inscribed points)."""
    pts = widthcurves.discretize(shape, segments_per_arc) if base is None else base
    if placement.reflected:
        pts = pts * np.array([1.0, -1.0])
    c, s = math.cos(placement.rotation), math.sin(placement.rotation)
    rot = np.array([[c, -s], [s, c]])
    return pts @ rot.T + np.array(placement.translation)


def enumerate_placements(shape: ConstantWidthShape, hexagon: ParallelHexagon,
                         allow_reflection: bool = True,
                         tolerance: float = 1e-12) -> list:
    """Every way the shape fits the hexagon: one Placement per root of t,
    plus the mirror image's roots when the shape is not bilaterally symmetric."""
    if shape.kind == "circle":
        return [Placement(0.0, Point2(0.0, 0.0), False)]
    out = []
    scans = [(False, find_roots(shape, hexagon, tolerance, reflected=False))]
    if allow_reflection and not shape.bilaterally_symmetric:
        scans.append((True, find_roots(shape, hexagon, tolerance, reflected=True)))
    for refl, scan in scans:
        for th in scan.roots:
            out.append(placement_from_root(shape, hexagon, th, refl))
    return out


# ---------------------------------------------------------------------------
# Pal-cut admissibility and containment


def admissible(placement: Placement, shape: ConstantWidthShape,
               hexagon: ParallelHexagon, cut: Optional[PalCut],
               eps: float = CONTAIN_EPS) -> bool:
    """True iff the placed shape avoids the interior of both cut triangles.

    For a shape already inside the hexagon the part beyond a cut line is
    exactly the sliced corner, so the test is the exact support value in the
    cut-normal direction.  Touching the line is admissible.
    """
    if cut is None:
        return True
    if not hexagon.is_regular:
        raise ValueError("Pal cuts are defined for the regular hexagon")
    for d in cut.cut_normals:
        if _placed_support(shape, placement, float(d)) > 0.5 + eps:
            return False
    return True


def verify_containment(shape: ConstantWidthShape, placement: Placement,
                       hexagon: ParallelHexagon, cut: Optional[PalCut] = None,
                       segments_per_arc: int = 64) -> float:
    """Max signed violation of the hexagon (and cut) by discretized boundary
    points; admissible placements give at most ~1e-9.  This is the oracle
    side of the fit machinery: it never consults the support function."""
    pts = placed_points(shape, placement, segments_per_arc)
    dirs = hexagon.normals
    proj = pts @ np.stack([np.cos(dirs), np.sin(dirs)], axis=0)
    worst = float(np.max(np.abs(proj) - 0.5))
    if cut is not None:
        for d in cut.cut_normals:
            worst = max(worst, float(np.max(pts @ np.array([math.cos(d), math.sin(d)])) - 0.5))
    return worst
