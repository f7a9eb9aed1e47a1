"""Quadratic-map numerics: regions, boxes, Green's function, loop integral."""

from henonshoe.onedim.quad import (
    GreenEstimate,
    critical_green_h,
    escape_radius_1d,
    fixed_points_1d,
    region_member_1d,
    theta_loop_integral,
)
from henonshoe.onedim.boxes import (
    BoxSystem1D,
    box_gap_report,
    code_orbit_G_1d,
    estimate_epsilon,
    point_member_1d,
)

__all__ = [
    "GreenEstimate",
    "critical_green_h",
    "escape_radius_1d",
    "fixed_points_1d",
    "region_member_1d",
    "theta_loop_integral",
    "BoxSystem1D",
    "box_gap_report",
    "code_orbit_G_1d",
    "estimate_epsilon",
    "point_member_1d",
]
