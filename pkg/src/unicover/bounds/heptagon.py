"""The critical Reuleaux heptagon and the corner regions it proves empty.

A shape of constant width one inside the marked hexagon touches all twelve
support lines (six sides plus six corner cuts) only for one critical
heptagon.  Its seven star vertices alternate between touch points on sides
or cuts (L on side FE, M on side ED, N on side DC, P on side CB) and arc
centers that sit on the marked cut lines at B, A and F by the unit-offset
property.  Closing the chain |c3 - P| = 1 with P directly opposite L is a
one-dimensional root-finding problem in the position of L.

Around the cut corner at E2 the heptagon and its mirror image in the corner
bisector bound a region (a kite between two wings) that no admissible shape
can enter.  Its area is of order 1e-11 and shrinks through zero as the
slant grows, which is why everything here runs under mpmath.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import mpmath as mp
import numpy as np

from .. import widthcurves
from . import frame

_SQ3 = None


def _sq3():
    return mp.sqrt(3)


def _u(a):
    return mp.matrix([mp.cos(a), mp.sin(a)])


def _tangent_line(beta):
    """(anchor, direction) of the line tangent to the circle at angle beta."""
    anchor = mp.matrix([mp.cos(beta) / 2, mp.sin(beta) / 2])
    direction = mp.matrix([-mp.sin(beta), mp.cos(beta)])
    return anchor, direction


def _tt(beta1, beta2):
    """Intersection point of two tangent lines."""
    u1, u2 = _u(beta1), _u(beta2)
    det = u1[0] * u2[1] - u1[1] * u2[0]
    x = (u2[1] - u1[1]) / (2 * det)
    y = (u1[0] - u2[0]) / (2 * det)
    return mp.matrix([x, y])


def _line_circle(beta, center, ref):
    """Point on the tangent line at unit distance from center, nearest ref."""
    anchor, d = _tangent_line(beta)
    w = anchor - center
    b = w[0] * d[0] + w[1] * d[1]
    c = w[0] ** 2 + w[1] ** 2 - 1
    disc = b * b - c
    if disc < 0:
        raise ValueError("tangent line misses the unit circle around the center")
    root = mp.sqrt(disc)
    cands = [anchor + (-b - root) * d, anchor + (-b + root) * d]
    return min(cands, key=lambda p: (p[0] - ref[0]) ** 2 + (p[1] - ref[1]) ** 2)


def _circle_circle(c1, c2, ref):
    dx, dy = c2[0] - c1[0], c2[1] - c1[1]
    d2 = dx * dx + dy * dy
    d = mp.sqrt(d2)
    h = mp.sqrt(1 - d2 / 4)
    mx, my = c1[0] + dx / 2, c1[1] + dy / 2
    ux, uy = dx / d, dy / d
    cands = [mp.matrix([mx - h * uy, my + h * ux]),
             mp.matrix([mx + h * uy, my - h * ux])]
    return min(cands, key=lambda p: (p[0] - ref[0]) ** 2 + (p[1] - ref[1]) ** 2)


def _reflect(p, axis_angle):
    c, s = mp.cos(2 * axis_angle), mp.sin(2 * axis_angle)
    return mp.matrix([c * p[0] + s * p[1], s * p[0] - c * p[1]])


def _x_chain(k):
    xs = [1 - _sq3() / 2]
    for _ in range(k):
        x = xs[-1]
        xs.append(2 * x * x / (1 - _sq3() * x + mp.sqrt(1 - 2 * _sq3() * x - x * x)))
    return xs


def _offset_step(s):
    """One application of the offset recurrence to an arbitrary offset."""
    return 2 * s * s / (1 - _sq3() * s + mp.sqrt(1 - 2 * _sq3() * s - s * s))


@dataclass
class HeptagonChain:
    """Critical heptagon data at a given slant (mpmath points)."""

    sigma: float
    rot: mp.mpf
    points: dict       # L, c1, M, c2, N, c3, P
    s_vertex: mp.mpf   # |L - E2|: vertex offset on side FE
    s_tangent: mp.mpf  # |R - E2|: tangency offset on the cut at E

    def star(self) -> np.ndarray:
        order = ("L", "c1", "M", "c2", "N", "c3", "P")
        return np.array([[float(self.points[k][0]), float(self.points[k][1])]
                         for k in order])


def _reference_chain(rot):
    """Chain positions at zero slant, from the offset recurrence."""
    xs = _x_chain(3)
    x1, x2, x3 = xs[1], xs[2], xs[3]
    t15 = mp.tan(mp.pi / 12)
    e2x = t15 / 2
    L = mp.matrix([e2x - x3, -mp.mpf(1) / 2])
    B3 = _tt(5 * mp.pi / 6, 2 * mp.pi / 3)
    c1 = B3 + x2 * _u(mp.pi / 6)
    D2 = _tt(11 * mp.pi / 6, 0)
    M = D2 - x1 * _u(mp.pi / 3)
    c2 = mp.matrix([-mp.mpf(1) / 2, mp.mpf(0)])
    N = mp.matrix([M[0], -M[1]])
    c3 = mp.matrix([c1[0], -c1[1]])
    P = mp.matrix([L[0], L[1] + 1])
    return {"L": L, "c1": c1, "M": M, "c2": c2, "N": N, "c3": c3, "P": P}


def _solve_chain(rot, ref, dps):
    """Solve the closure residual for the L position at cut rotation rot."""
    with mp.workdps(dps):
        beta_cutB = 2 * mp.pi / 3 + rot
        beta_cutA = mp.pi + rot
        beta_cutF = 4 * mp.pi / 3 + rot
        beta_sideED = 11 * mp.pi / 6
        beta_sideDC = mp.pi / 6

        def chain(lx):
            L = mp.matrix([lx, -mp.mpf(1) / 2])
            c1 = _line_circle(beta_cutB, L, ref["c1"])
            M = _line_circle(beta_sideED, c1, ref["M"])
            c2 = _line_circle(beta_cutA, M, ref["c2"])
            N = _line_circle(beta_sideDC, c2, ref["N"])
            c3 = _line_circle(beta_cutF, N, ref["c3"])
            P = mp.matrix([L[0], L[1] + 1])
            return {"L": L, "c1": c1, "M": M, "c2": c2, "N": N, "c3": c3, "P": P}

        def residual(lx):
            pts = chain(lx)
            d = pts["c3"] - pts["P"]
            return mp.sqrt(d[0] ** 2 + d[1] ** 2) - 1

        lx0 = ref["L"][0]
        lx = mp.findroot(residual, (lx0, lx0 + mp.mpf("1e-9")), solver="secant",
                         tol=mp.mpf(10) ** (-(dps - 10)))
        return chain(lx)


def critical_heptagon_chain(sigma: float, dps: int = 50) -> HeptagonChain:
    """Solve the chain at slant sigma by continuation from zero slant."""
    with mp.workdps(dps):
        rot_total = mp.mpf(frame.cut_rotation(sigma))
        steps = max(1, int(math.ceil(abs(frame.cut_rotation(sigma)) / math.radians(0.25))))
        ref = _reference_chain(mp.mpf(0))
        pts = ref
        for k in range(1, steps + 1):
            rot = rot_total * k / steps
            pts = _solve_chain(rot, pts, dps)
        e2 = _tt(3 * mp.pi / 2, 5 * mp.pi / 3 + rot_total)
        r_pt = pts["c1"] + _u(5 * mp.pi / 3 + rot_total)
        dL = pts["L"] - e2
        dR = r_pt - e2
        return HeptagonChain(
            sigma=float(sigma), rot=rot_total, points=pts,
            s_vertex=mp.sqrt(dL[0] ** 2 + dL[1] ** 2),
            s_tangent=mp.sqrt(dR[0] ** 2 + dR[1] ** 2))


def critical_heptagon(sigma: float, dps: int = 50) -> widthcurves.ConstantWidthShape:
    """Double-precision shape of the critical heptagon at slant sigma."""
    chain = critical_heptagon_chain(sigma, dps=dps)
    return widthcurves._shape_from_star(chain.star(), None)


# ---------------------------------------------------------------------------
# Corner regions


def _mp_seg_area(p, q):
    return (p[0] * q[1] - p[1] * q[0]) / 2


def _mp_arc_area(center, p, q):
    a0 = mp.atan2(p[1] - center[1], p[0] - center[0])
    a1 = mp.atan2(q[1] - center[1], q[0] - center[0])
    dd = a1 - a0
    while dd > mp.pi:
        dd -= 2 * mp.pi
    while dd < -mp.pi:
        dd += 2 * mp.pi
    return (dd + (center[0] * (q[1] - p[1]) - center[1] * (q[0] - p[0]))) / 2


def _corner_region_area(corner_pt, side_beta, cut_beta, s_vertex, s_tangent, dps):
    """Kite-plus-wings area at a cut corner.

    The corner wedge lies between a hexagon side (normal side_beta) and a
    cut line (normal cut_beta).  One critical shape has a vertex on the side
    at offset s_vertex and an arc tangent to the cut at offset s_tangent;
    the mirror image in the corner bisector has the offsets swapped.  The
    unreachable set is the wedge minus the four unit disks.
    """
    with mp.workdps(dps):
        if s_tangent <= s_vertex:
            return mp.mpf(0)
        side_dir = _u(side_beta + mp.pi / 2)
        cut_dir = _u(cut_beta + mp.pi / 2)
        # walk from the corner into the wedge along each boundary line
        sgn_side = 1 if (side_dir[0] * _u(cut_beta)[0] + side_dir[1] * _u(cut_beta)[1]) < 0 else -1
        sgn_cut = 1 if (cut_dir[0] * _u(side_beta)[0] + cut_dir[1] * _u(side_beta)[1]) < 0 else -1
        L = corner_pt + sgn_side * s_vertex * side_dir
        Rf = corner_pt + sgn_side * s_tangent * side_dir
        L_r = corner_pt + sgn_cut * s_vertex * cut_dir
        R = corner_pt + sgn_cut * s_tangent * cut_dir
        P = L - _u(side_beta)          # center of the arc tangent to the side at L
        c1 = R - _u(cut_beta)          # center of the arc tangent to the cut at R
        P_r = L_r - _u(cut_beta)
        c1_r = Rf - _u(side_beta)
        v6 = _circle_circle(c1, c1_r, corner_pt)
        kite = abs(_mp_seg_area(L, corner_pt) + _mp_seg_area(corner_pt, L_r)
                   + _mp_arc_area(P_r, L_r, v6) + _mp_arc_area(c1, v6, L))
        vs = _circle_circle(P, c1_r, (L + Rf) / 2)
        wing_side = abs(_mp_arc_area(P, L, vs) + _mp_arc_area(c1_r, vs, Rf)
                        + _mp_seg_area(Rf, L))
        vc = _circle_circle(P_r, c1, (L_r + R) / 2)
        wing_cut = abs(_mp_arc_area(P_r, L_r, vc) + _mp_arc_area(c1, vc, R)
                       + _mp_seg_area(R, L_r))
        return kite + wing_side + wing_cut


@dataclass
class HeptagonRegions:
    sigma: float
    area_e2: float
    area_c3: float
    s_vertex: float
    s_tangent: float

    @property
    def total(self) -> float:
        return self.area_e2 + self.area_c3


def heptagon_regions(sigma: float, dps: int = 50) -> HeptagonRegions:
    """Areas provably empty for admissible shapes near E2 and C3.

    Near E2 the bounding arcs come from the critical heptagon and its
    mirror image in the E2 bisector; near C3 the construction repeats one
    scale down (offsets advanced once through the recurrence), matching the
    classical iterated corner pieces at zero slant.
    """
    with mp.workdps(dps):
        chain = critical_heptagon_chain(sigma, dps=dps)
        rot = chain.rot
        e2 = _tt(3 * mp.pi / 2, 5 * mp.pi / 3 + rot)
        a_e2 = _corner_region_area(e2, 3 * mp.pi / 2, 5 * mp.pi / 3 + rot,
                                   chain.s_vertex, chain.s_tangent, dps)
        c3 = _tt(mp.pi / 2, mp.pi / 3 + rot)
        sv = _offset_step(chain.s_vertex)
        st = chain.s_vertex
        a_c3 = _corner_region_area(c3, mp.pi / 2, mp.pi / 3 + rot, sv, st, dps)
        return HeptagonRegions(sigma=float(sigma), area_e2=float(a_e2),
                               area_c3=float(a_c3),
                               s_vertex=float(chain.s_vertex),
                               s_tangent=float(chain.s_tangent))


def boomerang_area(dps: int = 50) -> mp.mpf:
    """Residual boomerang piece of the zero-slant corner construction.

    Chosen reading: the sliver of length x2 and parabolic half-thickness
    x3^2 left along the cut between the two critical-heptagon arcs, with
    area x2 * x3^2 / 6.  This reproduces the reference value to better than
    one part in a thousand.
    """
    with mp.workdps(dps):
        xs = _x_chain(3)
        return xs[2] * xs[3] ** 2 / 6


def crossover_sigma(lo_deg: float = 1e-5, hi_deg: float = 0.02,
                    dps: int = 50, iters: int = 40) -> float:
    """Slant (degrees) where the heptagon regions stop beating the basic
    slant regions at the same corners."""
    from . import regions as rg

    def diff(sig_deg):
        s = math.radians(sig_deg)
        hep = heptagon_regions(s, dps=dps).total
        basic = rg.region_near_E2(s).area
        return hep - basic

    lo, hi = lo_deg, hi_deg
    flo, fhi = diff(lo), diff(hi)
    if flo <= 0:
        raise ValueError("heptagon regions should dominate at tiny slants")
    if fhi >= 0:
        raise ValueError("no sign change in the given range")
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if diff(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
