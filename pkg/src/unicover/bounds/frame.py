"""Canonical labeled frame for the cut-hexagon constructions.

The regular hexagon is centered at the origin and circumscribes the circle
of diameter one (inradius 1/2).  Corners sit at distance 1/sqrt(3):

    D1 at 0 deg, C1 at 60, B1 at 120, A1 at 180, F1 at 240, E1 at 300,

so sides are tangent to the circle at 30, 90, ... 330 degrees.  Every corner
X carries a marked cut line tangent to the circle at (corner direction +
slant); only the corners C and E are actually removed from the cover.  The
cut meets the two adjacent sides at X2 (side tangent at corner-30) and X3
(side tangent at corner+30); the labeling is mirror symmetric about the x
axis with 2 <-> 3 and C<->E, B<->F swaps.

Positive slant is the orientation for which |A1 A3| > |A1 A2|.

Slant convention: a slant of sigma rotates the tangency points of the cut
lines by 2*sigma.  All slant values reported by this package (scan grids,
the location of the reflected-cover minimum near 0.5 degrees) use this
convention; the acceptance suite pins it via the published cover areas.
"""

from __future__ import annotations

import math
from typing import Dict

from .. import geom
from ..geom import Point2

INRADIUS = 0.5
CORNER_DIR = {"A": math.pi, "B": 2 * math.pi / 3, "C": math.pi / 3,
              "D": 0.0, "E": -math.pi / 3, "F": -2 * math.pi / 3}
CORNER_RADIUS = 1.0 / math.sqrt(3.0)
HEX_AREA = math.sqrt(3.0) / 2.0

CUT_CORNERS = ("E", "C")  # the two corners removed from the cover


def tangent_point(beta: float) -> Point2:
    """Point where the tangent line with outward normal angle beta touches."""
    return Point2(INRADIUS * math.cos(beta), INRADIUS * math.sin(beta))


def tangent_intersection(beta1: float, beta2: float) -> Point2:
    """Intersection of the tangent lines x.u(b1) = x.u(b2) = 1/2."""
    u1, u2 = geom.unit(beta1), geom.unit(beta2)
    det = geom.cross(u1, u2)
    if abs(det) < 1e-14:
        raise ValueError("parallel tangent lines")
    x = (INRADIUS * u2[1] - INRADIUS * u1[1]) / det
    y = (INRADIUS * u1[0] - INRADIUS * u2[0]) / det
    return Point2(x, y)


def corner(name: str) -> Point2:
    d = CORNER_DIR[name]
    return Point2(CORNER_RADIUS * math.cos(d), CORNER_RADIUS * math.sin(d))


def side_normal(name_from: str, name_to: str) -> float:
    """Outward normal angle of the side between two adjacent corners."""
    a, b = CORNER_DIR[name_from], CORNER_DIR[name_to]
    diff = (b - a) % (2 * math.pi)
    if abs(diff - math.pi / 3) > 1e-12 and abs(diff - 5 * math.pi / 3) > 1e-12:
        raise ValueError("corners are not adjacent")
    mid = a + (diff if diff < math.pi else diff - 2 * math.pi) / 2.0
    return mid % (2 * math.pi)


def cut_rotation(sigma: float) -> float:
    """Tangency-point rotation of the cut lines for a given slant."""
    return 2.0 * sigma


def cut_normal(name: str, sigma: float) -> float:
    """Outward normal of the marked cut at a corner, slanted by sigma."""
    return (CORNER_DIR[name] + cut_rotation(sigma)) % (2 * math.pi)


def labeled_points(sigma: float) -> Dict[str, Point2]:
    """All corner and cut labels of the frame, as functions of the slant."""
    rot = cut_rotation(sigma)
    pts: Dict[str, Point2] = {}
    for name, d in CORNER_DIR.items():
        pts[name + "1"] = corner(name)
        pts[name + "2"] = tangent_intersection(d - math.pi / 6, d + rot)
        pts[name + "3"] = tangent_intersection(d + math.pi / 6, d + rot)
    # S: tangency of the marked cut at D (midpoint of D2 D3)
    pts["S"] = tangent_point(rot)
    # M: midpoint of side ED, the foot of the reflection axis used by the
    # reflected construction
    pts["M"] = tangent_point(-math.pi / 6)
    # Q: corner of the reflected corner-C triangle (cut slanted the other way)
    pts["Q"] = tangent_intersection(math.pi / 6, math.pi / 3 - rot)
    return pts


def point_in_hexagon(p, eps: float = 0.0) -> bool:
    for k in range(6):
        beta = math.pi / 6 + k * math.pi / 3
        if p[0] * math.cos(beta) + p[1] * math.sin(beta) > INRADIUS + eps:
            return False
    return True


def corner_triangle_area(sigma: float) -> float:
    """Area of one marked corner triangle at slant sigma.

    With rot the tangency rotation: base on the cut line is
    r*(tan(15deg + rot/2) + tan(15deg - rot/2)), height from the hexagon
    corner is cos(rot)/sqrt(3) - 1/2.
    """
    rot = cut_rotation(sigma)
    half = rot / 2.0
    base = INRADIUS * (math.tan(math.pi / 12 + half) + math.tan(math.pi / 12 - half))
    height = CORNER_RADIUS * math.cos(rot) - INRADIUS
    return 0.5 * base * height


def cut_octagon(sigma: float):
    """Vertices of the hexagon with corners E and C cut, counterclockwise."""
    p = labeled_points(sigma)
    return [p["D1"], p["C2"], p["C3"], p["B1"], p["A1"], p["F1"], p["E2"], p["E3"]]
