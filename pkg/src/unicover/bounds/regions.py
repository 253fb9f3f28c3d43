"""Removable regions and cover areas for the cut hexagon at slant sigma.

All regions are built from the constraints that define them (unit distances
from construction points, half planes of the frame) and carry both an exact
arc-polygon boundary and an exact membership predicate, so every area can be
cross-checked by Monte-Carlo point counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

import numpy as np

from .. import geom, widthcurves
from ..geom import ArcPolygon, ArcSegment, LineSegment, Point2
from . import frame
from .frame import (CORNER_RADIUS, HEX_AREA, INRADIUS, corner_triangle_area,
                    labeled_points, tangent_intersection, tangent_point)


@dataclass(frozen=True)
class RemovableRegion:
    """A region proven unreachable and removed from the cover."""

    name: str
    boundary: Optional[ArcPolygon]
    area: float
    justification: str
    inside: Callable = None  # inside(x, y) -> bool, strict interior test
    anchor: Point2 = Point2(0.0, 0.0)

    def bounding_box(self, pad: float = 0.0) -> tuple:
        pts = self.boundary.discretize(128)
        return (pts[:, 0].min() - pad, pts[:, 0].max() + pad,
                pts[:, 1].min() - pad, pts[:, 1].max() + pad)

    def inflate(self, factor: float) -> "RemovableRegion":
        """Scaled copy about the region centroid (for mutation testing)."""
        pts = self.boundary.discretize(128)
        c = pts.mean(axis=0)
        base = self.inside

        def inside_scaled(x, y):
            return base(c[0] + (x - c[0]) / factor, c[1] + (y - c[1]) / factor)

        pieces = []
        for piece in self.boundary.pieces:
            if isinstance(piece, ArcSegment):
                cc = Point2(c[0] + (piece.center[0] - c[0]) * factor,
                            c[1] + (piece.center[1] - c[1]) * factor)
                pieces.append(ArcSegment(cc, piece.radius * factor,
                                         piece.start_angle, piece.end_angle, piece.ccw))
            else:
                s = Point2(c[0] + (piece.start[0] - c[0]) * factor,
                           c[1] + (piece.start[1] - c[1]) * factor)
                e = Point2(c[0] + (piece.end[0] - c[0]) * factor,
                           c[1] + (piece.end[1] - c[1]) * factor)
                pieces.append(LineSegment(s, e))
        return RemovableRegion(self.name, ArcPolygon(tuple(pieces)),
                               self.area * factor * factor,
                               self.justification + " (inflated)",
                               inside_scaled, self.anchor)


def _orient_ccw(pieces: list) -> ArcPolygon:
    poly = ArcPolygon(tuple(pieces))
    if poly.area() >= 0.0:
        return poly
    rev = []
    for piece in reversed(pieces):
        if isinstance(piece, ArcSegment):
            rev.append(ArcSegment(piece.center, piece.radius,
                                  piece.end_angle, piece.start_angle, not piece.ccw))
        else:
            rev.append(LineSegment(piece.end, piece.start))
    return ArcPolygon(tuple(rev))


def _arc(center: Point2, a: Point2, b: Point2) -> ArcSegment:
    """Unit arc around center from a to b, short way."""
    a0 = geom.angle_of(geom.sub(a, center))
    a1 = geom.angle_of(geom.sub(b, center))
    ccw = geom.ccw_sweep(a0, a1) <= math.pi
    return ArcSegment(center, 1.0, a0, a1, ccw)


def _pick(points: Sequence[Point2], near: Point2) -> Point2:
    if not points:
        raise ValueError("no intersection point found")
    return min(points, key=lambda p: geom.dist(p, near))


def _side_segment(name_from: str, name_to: str) -> LineSegment:
    return LineSegment(frame.corner(name_from), frame.corner(name_to))


# ---------------------------------------------------------------------------
# Pal cut


def pal_hexagon_area() -> float:
    """Area of the regular hexagon circumscribing the unit-diameter circle."""
    return HEX_AREA


def pal_cut_area(sigma: float) -> float:
    """Hexagon minus the corner triangles at E and C, cut at slant sigma."""
    if not (0.0 <= sigma < math.radians(9.0)):
        raise ValueError("slant must be in [0, 9 degrees)")
    return HEX_AREA - 2.0 * corner_triangle_area(sigma)


def corner_cut_region(name: str, sigma: float) -> RemovableRegion:
    """The sliced corner triangle at a cut corner (E or C)."""
    p = labeled_points(sigma)
    x1, x2, x3 = p[name + "1"], p[name + "2"], p[name + "3"]
    boundary = _orient_ccw([LineSegment(x2, x1), LineSegment(x1, x3), LineSegment(x3, x2)])
    nbeta = frame.cut_normal(name, sigma)
    nx, ny = math.cos(nbeta), math.sin(nbeta)

    def inside(x, y):
        if x * nx + y * ny <= INRADIUS:
            return False
        return frame.point_in_hexagon((x, y))

    return RemovableRegion("corner" + name, boundary, boundary.area(),
                           "corner triangle beyond the tangent cut line",
                           inside, anchor=x1)


# ---------------------------------------------------------------------------
# The critical pentagon and the three slant regions


def _point_G(p, sigma: float) -> Point2:
    """G: on side DC at unit distance from F3, near C2."""
    side = _side_segment("D", "C")
    inter = geom.line_circle(side.start, side.end, p["F3"], 1.0)
    return _pick(inter.points, p["C2"])


def _point_K(p, sigma: float) -> Point2:
    """K: on the cut segment C2 C3 at unit distance from F3, near C2."""
    inter = geom.line_circle(p["C2"], p["C3"], p["F3"], 1.0)
    return _pick(inter.points, p["C2"])


def _point_H(p) -> Point2:
    """H: unit distance from both F3 and E3, near B2."""
    inter = geom.circle_circle(p["F3"], 1.0, p["E3"], 1.0)
    return _pick(inter.points, p["B2"])


def _point_J(p, g: Point2) -> Point2:
    """J: unit distance from both E3 and G, near A1."""
    inter = geom.circle_circle(p["E3"], 1.0, g, 1.0)
    return _pick(inter.points, p["A1"])


def critical_pentagon(sigma: float) -> widthcurves.ConstantWidthShape:
    """The Reuleaux pentagon F3 E3 G H J that pins the slant-sigma cover.

    Star order F3 -> G -> J -> E3 -> H (consecutive star vertices are the
    unit-distance pairs of the construction).
    """
    p = labeled_points(sigma)
    g = _point_G(p, sigma)
    h = _point_H(p)
    j = _point_J(p, g)
    star = np.array([p["F3"], g, j, p["E3"], h], dtype=float)
    d = np.sqrt(np.sum((star - np.roll(star, -1, axis=0)) ** 2, axis=1))
    if np.max(np.abs(d - 1.0)) > 1e-9:
        raise ValueError("pentagon construction failed to close")
    return widthcurves._shape_from_star(star, None)


def region_near_C2(sigma: float) -> RemovableRegion:
    """Triangle G C2 K minus the unit disk around F3.

    A curve avoiding corner C must reach the closed triangle at F (width-one
    support in the cut direction), so none of its points can be farther than
    one from that triangle; near C2 the binding feature is the vertex F3.
    Vanishes at zero slant, where |F3 C2| = 1 exactly.
    """
    p = labeled_points(sigma)
    f3 = p["F3"]
    if sigma <= 1e-15:
        return RemovableRegion("nearC2", None, 0.0,
                               "unit distance from the opposite corner triangle",
                               lambda x, y: False, anchor=p["C2"])
    g = _point_G(p, sigma)
    k = _point_K(p, sigma)
    boundary = _orient_ccw([LineSegment(g, p["C2"]), LineSegment(p["C2"], k),
                            _arc(f3, k, g)])
    tri = geom.ConvexPolygon((g, p["C2"], k)) if boundary.area() >= 0 else None
    gg, c2, kk = g, p["C2"], k

    def inside(x, y):
        if (x - f3[0]) ** 2 + (y - f3[1]) ** 2 <= 1.0:
            return False
        # inside the corner triangle G C2 K
        for a, b in ((gg, c2), (c2, kk), (kk, gg)):
            if (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) < 0:
                return False
        return True

    area = boundary.area()
    if area < 0:  # orientation of the tiny triangle flipped; rebuild
        boundary = _orient_ccw([LineSegment(k, p["C2"]), LineSegment(p["C2"], g),
                                _arc(f3, g, k)])
        area = boundary.area()

        def inside(x, y):  # noqa: F811 - mirrored vertex order
            if (x - f3[0]) ** 2 + (y - f3[1]) ** 2 <= 1.0:
                return False
            for a, b in ((kk, c2), (c2, gg), (gg, kk)):
                if (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) < 0:
                    return False
            return True

    return RemovableRegion("nearC2", boundary, area,
                           "unit distance from the opposite corner triangle",
                           inside, anchor=p["C2"])


def region_near_A1(sigma: float) -> RemovableRegion:
    """Corner region at A1 outside the unit arcs around E3 and G.

    A fitted curve touches side ED within [E3, D1] and side DC within
    [D1, G], so near the opposite corner all of its points stay within unit
    distance of E3 and of G.  At zero slant this is the classical corner
    region whose removal gives the historical cover value.
    """
    p = labeled_points(sigma)
    e3 = p["E3"]
    g = _point_G(p, sigma)
    j = _point_J(p, g)
    # tangency feet of the two unit circles on the far sides
    p_ba = geom.add(e3, geom.unit(math.radians(150.0)))
    p_af = geom.add(g, geom.unit(math.radians(210.0)))
    a1 = p["A1"]
    boundary = _orient_ccw([
        LineSegment(p_ba, a1),
        LineSegment(a1, p_af),
        _arc(g, p_af, j),
        _arc(e3, j, p_ba),
    ])

    def inside(x, y):
        # unreachable when farther than one from either far touch segment
        out_e3 = (x - e3[0]) ** 2 + (y - e3[1]) ** 2 > 1.0
        out_g = (x - g[0]) ** 2 + (y - g[1]) ** 2 > 1.0
        if not (out_e3 or out_g):
            return False
        if x > a1[0] + 0.25:  # keep only the component at the corner
            return False
        return frame.point_in_hexagon((x, y))

    return RemovableRegion("nearA1", boundary, boundary.area(),
                           "outside either unit arc about the far touch limits",
                           inside, anchor=a1)


def region_near_E2(sigma: float) -> RemovableRegion:
    """Boomerang at the cut corner E2, outside the unit disks around C3 and B3.

    A fitted curve touches the opposite side CB either on the main segment
    B2 C3 or inside the corner triangle at B, so points near E2 farther than
    one from both are unreachable.  Symmetric about the line E2 B2; vanishes
    at zero slant.
    """
    p = labeled_points(sigma)
    c3, b3, e2 = p["C3"], p["B3"], p["E2"]
    if sigma <= 1e-15:
        return RemovableRegion("nearE2", None, 0.0,
                               "unit distance from the opposite touch segment",
                               lambda x, y: False, anchor=e2)
    # corner of the wedge pieces
    side_fe = _side_segment("F", "E")
    w_fe = _pick(geom.line_circle(side_fe.start, side_fe.end, b3, 1.0).points, e2)
    cutline = LineSegment(p["E2"], p["E3"])
    p_cut = _pick(geom.line_circle(cutline.start, cutline.end, c3, 1.0).points, e2)
    v = _pick(geom.circle_circle(c3, 1.0, b3, 1.0).points, e2)
    boundary = _orient_ccw([
        LineSegment(w_fe, e2),
        LineSegment(e2, p_cut),
        _arc(c3, p_cut, v),
        _arc(b3, v, w_fe),
    ])
    cutn = frame.cut_normal("E", sigma)
    cn = (math.cos(cutn), math.sin(cutn))

    def inside(x, y):
        if (x - c3[0]) ** 2 + (y - c3[1]) ** 2 <= 1.0:
            return False
        if (x - b3[0]) ** 2 + (y - b3[1]) ** 2 <= 1.0:
            return False
        if x * cn[0] + y * cn[1] >= INRADIUS:
            return False
        return frame.point_in_hexagon((x, y))

    return RemovableRegion("nearE2", boundary, boundary.area(),
                           "unit distance from the opposite touch segment",
                           inside, anchor=e2)


# ---------------------------------------------------------------------------
# The reflection region at corner A


def reflection_axis_normal(sigma: float) -> Point2:
    """Unit normal of the chord line used by the convex truncation."""
    p = labeled_points(sigma)
    m, q = p["M"], p["Q"]
    d = geom.sub(q, m)
    n = Point2(-d[1] / math.hypot(*d), d[0] / math.hypot(*d))
    if geom.dot(n, geom.sub(p["A1"], m)) < 0:
        n = Point2(-n[0], -n[1])
    return n


def region_XYZW(sigma: float, convex_only: bool = False) -> RemovableRegion:
    """Region at corner A removable thanks to the reflection freedom.

    Bounded by four unit arcs: around M (midpoint of side ED; shapes that
    may be reflected are kept on the D1 half of that side), around Q (the
    inner corner of the reflected corner-C triangle, which blocks shapes
    entering the reflected corner-F triangle), and around E3 and G (the
    existing cover boundary near corner A).

    Removing the whole region leaves a reflex notch where the M and Q arcs
    cross; with convex_only the accounted area keeps the convex hull of the
    remaining cover (area = full region minus the hull patch).  The boundary
    and membership predicate always describe the full provably-empty region.
    """
    if not (0.0 < sigma < math.radians(9.0)):
        raise ValueError("reflection region needs slant in (0, 9 degrees)")
    p = labeled_points(sigma)
    m, q, e3 = p["M"], p["Q"], p["E3"]
    g = _point_G(p, sigma)
    j = _point_J(p, g)
    if geom.dist(j, m) <= 1.0 or geom.dist(j, q) <= 1.0:
        raise ValueError("arcs fail to bound a region at this slant")

    corners = xyzw_corner_points(sigma)
    y_pt, z_pt, w_pt = corners["Y"], corners["Z"], corners["W"]
    # sanity: the inner corner must lie inside the cover arcs and the outer
    # corners outside the other exclusion disk
    if geom.dist(z_pt, g) > 1.0 or geom.dist(z_pt, e3) > 1.0:
        raise ValueError("region corner configuration changed at this slant")
    if geom.dist(w_pt, q) < 1.0 or geom.dist(y_pt, m) < 1.0:
        raise ValueError("region corner configuration changed at this slant")
    boundary = _orient_ccw([
        _arc(e3, j, y_pt),
        _arc(q, y_pt, z_pt),
        _arc(m, z_pt, w_pt),
        _arc(g, w_pt, j),
    ])

    def inside(x, y):
        if (x - m[0]) ** 2 + (y - m[1]) ** 2 <= 1.0:
            return False
        if (x - q[0]) ** 2 + (y - q[1]) ** 2 <= 1.0:
            return False
        if (x - e3[0]) ** 2 + (y - e3[1]) ** 2 >= 1.0:
            return False
        if (x - g[0]) ** 2 + (y - g[1]) ** 2 >= 1.0:
            return False
        return frame.point_in_hexagon((x, y))

    area = boundary.area()
    note = "outside the unit circles about M and Q, inside the cover"
    if convex_only:
        area -= _convexity_patch(sigma)
        note += "; convex-hull patch at the notch retained"
    return RemovableRegion("XYZW", boundary, area, note, inside, anchor=j)


def _convexity_patch(sigma: float, n: int = 4000) -> float:
    """Area that must stay to keep the cover convex after removing XYZW.

    Computed as the difference between the convex hull of the remaining
    boundary near corner A and that boundary itself, sampled densely enough
    that the discretization error is far below 1e-10.
    """
    from scipy.spatial import ConvexHull

    p = labeled_points(sigma)
    m, q, e3 = p["M"], p["Q"], p["E3"]
    g = _point_G(p, sigma)
    corners = xyzw_corner_points(sigma)
    y_pt, z_pt, w_pt = corners["Y"], corners["Z"], corners["W"]
    p_ba = geom.add(e3, geom.unit(math.radians(150.0)))
    p_af = geom.add(g, geom.unit(math.radians(210.0)))
    b1, f1 = frame.corner("B"), frame.corner("F")
    db = geom.sub(b1, p_ba)
    start = geom.add(p_ba, geom.scale(db, 0.08 / math.hypot(*db)))
    df = geom.sub(f1, p_af)
    end = geom.add(p_af, geom.scale(df, 0.08 / math.hypot(*df)))
    pieces = [LineSegment(start, p_ba), _arc(e3, p_ba, y_pt), _arc(q, y_pt, z_pt),
              _arc(m, z_pt, w_pt), _arc(g, w_pt, p_af), LineSegment(p_af, end)]
    pts = []
    for pc in pieces:
        if isinstance(pc, ArcSegment):
            ang = pc.angles(n + 1)
            pts.append(np.stack([pc.center[0] + np.cos(ang),
                                 pc.center[1] + np.sin(ang)], axis=1))
        else:
            t = np.linspace(0.0, 1.0, 64).reshape(-1, 1)
            pts.append(np.array(pc.start) * (1 - t) + np.array(pc.end) * t)
    path = np.concatenate(pts, axis=0)
    loop = np.vstack([path, path[:1]])
    x, y = loop[:-1, 0], loop[:-1, 1]
    x2, y2 = loop[1:, 0], loop[1:, 1]
    enclosed = abs(0.5 * float(np.sum(x * y2 - y * x2)))
    return float(ConvexHull(path).volume) - enclosed


def xyzw_corner_points(sigma: float) -> dict:
    """The four labeled corners of the reflection region."""
    p = labeled_points(sigma)
    g = _point_G(p, sigma)
    j = _point_J(p, g)
    return {
        "X": j,
        "Y": _pick(geom.circle_circle(p["Q"], 1.0, p["E3"], 1.0).points, p["A1"]),
        "Z": _pick(geom.circle_circle(p["Q"], 1.0, p["M"], 1.0).points, p["A1"]),
        "W": _pick(geom.circle_circle(p["M"], 1.0, g, 1.0).points, p["A1"]),
    }


# ---------------------------------------------------------------------------
# Cover constructions


@dataclass(frozen=True)
class CoverConstruction:
    sigma: float
    use_reflections: bool
    convex_only: bool
    regions: tuple
    area: float


def slant_regions(sigma: float) -> List[RemovableRegion]:
    out = [region_near_C2(sigma), region_near_A1(sigma), region_near_E2(sigma)]
    return [r for r in out if r.area > 0.0]


def build_cover(sigma: float, use_reflections: bool = False,
                convex_only: bool = True) -> CoverConstruction:
    """Cut hexagon minus all removable regions, with disjointness asserted."""
    regions = [corner_cut_region("E", sigma), corner_cut_region("C", sigma)]
    regions += slant_regions(sigma)
    if use_reflections:
        regions.append(region_XYZW(sigma, convex_only=convex_only))
    _assert_disjoint(regions)
    area = HEX_AREA - sum(r.area for r in regions)
    return CoverConstruction(sigma, use_reflections, convex_only,
                             tuple(regions), area)


class RegionOverlapError(RuntimeError):
    pass


def _assert_disjoint(regions: Sequence[RemovableRegion]) -> None:
    """Cheap pairwise-disjointness check via interior samples.

    Candidate points come from pulling each region's boundary slightly
    inward; only candidates the source region itself claims are used, so
    thin curved slivers do not produce false positives.
    """
    for i, r1 in enumerate(regions):
        if r1.boundary is None or r1.inside is None:
            continue
        pts = r1.boundary.discretize(64)
        c = pts.mean(axis=0)
        inner = [(x, y) for x, y in pts + 1e-7 * (c - pts) if r1.inside(x, y)]
        for j, r2 in enumerate(regions):
            if i == j or r2.inside is None:
                continue
            for x, y in inner:
                if r2.inside(x, y):
                    raise RegionOverlapError(
                        f"regions {r1.name} and {r2.name} overlap near ({x:.4f},{y:.4f})")


def cover_area_basic(sigma: float) -> float:
    """Cover area without the reflection argument; equals the historical
    corner-region value at zero slant."""
    return pal_cut_area(sigma) - sum(r.area for r in slant_regions(sigma))


def cover_area_reflected(sigma: float, convex_only: bool = True) -> float:
    """Cover area including the reflection region at corner A."""
    return build_cover(sigma, use_reflections=True, convex_only=convex_only).area


def scan_cover_area(sigmas, convex_only: bool = True):
    """Rows (sigma, basic, reflected) over a slant grid."""
    rows = []
    for s in sigmas:
        basic = cover_area_basic(s)
        refl = cover_area_reflected(s, convex_only) if s > 0 else basic
        rows.append((float(s), basic, refl))
    return rows


def minimize_reflected(lo: float, hi: float, convex_only: bool = True,
                       tol: float = 1e-7) -> tuple:
    """Golden-section minimum of the reflected cover area on [lo, hi]."""
    gr = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - gr * (b - a)
    d = a + gr * (b - a)
    fc = cover_area_reflected(c, convex_only)
    fd = cover_area_reflected(d, convex_only)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - gr * (b - a)
            fc = cover_area_reflected(c, convex_only)
        else:
            a, c, fc = c, d, fd
            d = a + gr * (b - a)
            fd = cover_area_reflected(d, convex_only)
    x = 0.5 * (a + b)
    return x, cover_area_reflected(x, convex_only)
