"""Parameter-path continuation of periodic orbits and loop monodromy."""

from henonshoe.continuation.engine import (
    COLLISION_TOL,
    JUMP_GUARD,
    MARGIN_FLOOR,
    CollisionError,
    ContinuationError,
    DivergenceError,
    MarginLossError,
    ParamPath,
    continue_orbit,
    walk_path,
)
from henonshoe.continuation.monodromy import (
    InvolutionReport,
    MonodromyResult,
    OrbitTrace,
    Theorem5Report,
    hat_loop_report,
    match_automorphism,
    monodromy,
    theorem5_check,
)

__all__ = [
    "COLLISION_TOL",
    "JUMP_GUARD",
    "MARGIN_FLOOR",
    "CollisionError",
    "ContinuationError",
    "DivergenceError",
    "InvolutionReport",
    "MarginLossError",
    "MonodromyResult",
    "OrbitTrace",
    "ParamPath",
    "Theorem5Report",
    "continue_orbit",
    "hat_loop_report",
    "match_automorphism",
    "monodromy",
    "theorem5_check",
    "walk_path",
]
