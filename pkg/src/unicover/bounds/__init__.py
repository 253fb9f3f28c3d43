"""Rigorous upper-bound constructions for the minimal convex universal cover."""

from .frame import labeled_points, corner_triangle_area  # noqa: F401
from .regions import (  # noqa: F401
    CoverConstruction, RegionOverlapError, RemovableRegion, build_cover,
    corner_cut_region, cover_area_basic, cover_area_reflected,
    critical_pentagon, minimize_reflected, pal_cut_area, pal_hexagon_area,
    region_XYZW, region_near_A1, region_near_C2, region_near_E2,
    scan_cover_area, slant_regions, xyzw_corner_points,
)
