"""Henon map numerics: stepping, periodic orbits, multipliers, codings."""

from henonshoe.henon.core import (
    HenonParams,
    filtration_radius,
    henon_step,
    region_member_2d,
)
from henonshoe.henon.orbits import (
    CyclicOrbit,
    SaddleInfo,
    orbit_multipliers,
    per_N,
    per_N_words,
    seed_orbit_1d,
    solve_periodic_orbit,
)
from henonshoe.henon.coding import (
    PseudoOrbit,
    RealTypeReport,
    classify_real_type,
    code_orbit,
)

__all__ = [
    "HenonParams",
    "filtration_radius",
    "henon_step",
    "region_member_2d",
    "CyclicOrbit",
    "SaddleInfo",
    "orbit_multipliers",
    "per_N",
    "per_N_words",
    "seed_orbit_1d",
    "solve_periodic_orbit",
    "PseudoOrbit",
    "RealTypeReport",
    "classify_real_type",
    "code_orbit",
]
