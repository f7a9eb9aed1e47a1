"""Orbit continuation along parameter paths.

The walker moves a set of orbits in lockstep along a polyline in the
(a, b) plane: first-order predictor (the previous solution), Newton
corrector at each accepted parameter, adaptive step halving on any
failure.  Every accepted step re-checks saddle structure, so a path
that drifts out of the hyperbolic regime fails loudly instead of
silently tracking a sink.
"""

import dataclasses
from dataclasses import dataclass

from henonshoe.henon import (
    CyclicOrbit,
    HenonParams,
    orbit_multipliers,
    region_member_2d,
    solve_periodic_orbit,
)

MARGIN_FLOOR = 1e-6
# matches the per_N merge threshold
COLLISION_TOL = 1e-6
# reject steps that move an orbit further than this many times the
# parameter displacement: a basin jump, not a continuation
JUMP_GUARD = 5.0


class ContinuationError(ArithmeticError):
    """Continuation failure, carrying the parameters where it occurred."""

    def __init__(self, message: str, params: HenonParams):
        super().__init__("%s at a=%s b=%s" % (message, params.a, params.b))
        self.params = params


class CollisionError(ContinuationError):
    pass


class MarginLossError(ContinuationError):
    pass


class DivergenceError(ContinuationError):
    pass


@dataclass(frozen=True)
class ParamPath:
    """Polyline in the (a, b) parameter plane with a refinement policy."""

    waypoints: tuple[tuple[complex, complex], ...]
    closed: bool = False
    max_step: float = 0.1
    min_step: float = 1e-5
    backoff: float = 0.5

    def __post_init__(self) -> None:
        pts = tuple((complex(a), complex(b)) for a, b in self.waypoints)
        if not pts:
            raise ValueError("path needs at least one waypoint")
        for p, q in zip(pts, pts[1:]):
            if p == q:
                raise ValueError("consecutive waypoints must be distinct")
        if self.closed and len(pts) > 1 and pts[0] != pts[-1]:
            raise ValueError("closed path must end where it starts")
        if not (0 < self.min_step <= self.max_step):
            raise ValueError("need 0 < min_step <= max_step")
        if not (0 < self.backoff < 1):
            raise ValueError("backoff must be in (0, 1)")
        object.__setattr__(self, "waypoints", pts)

    @property
    def start(self) -> HenonParams:
        return HenonParams(*self.waypoints[0])

    @property
    def end(self) -> HenonParams:
        return HenonParams(*self.waypoints[-1])

    def conjugate(self) -> "ParamPath":
        mirrored = tuple(
            (a.conjugate(), b.conjugate()) for a, b in self.waypoints
        )
        return dataclasses.replace(self, waypoints=mirrored)

    def refined(self, factor: float) -> "ParamPath":
        """Same polyline with the maximum step scaled by ``factor``."""
        if factor <= 0:
            raise ValueError("factor must be positive")
        return dataclasses.replace(
            self,
            max_step=self.max_step * factor,
            min_step=min(self.min_step, self.max_step * factor),
        )


def _saddle_state(orbit: CyclicOrbit) -> tuple[float, float, float]:
    info = orbit_multipliers(orbit)
    big, small = info.multipliers
    return info.margin, abs(big) - 1.0, abs(small) - 1.0


def _min_pair_distance(orbits: list[CyclicOrbit]) -> float:
    best = float("inf")
    for i, left in enumerate(orbits):
        for right in orbits[i + 1 :]:
            dist = max(abs(u - v) for u, v in zip(left.y, right.y))
            if dist < best:
                best = dist
    return best


def walk_path(
    orbits: list[CyclicOrbit],
    path: ParamPath,
    margin_floor: float = MARGIN_FLOOR,
    collision_tol: float | None = COLLISION_TOL,
) -> tuple[list[CyclicOrbit], int, list[float], bool]:
    """Continue all orbits to the path end in lockstep.

    Returns (final orbits, accepted step count, per-orbit minimum
    hyperbolicity margin, whether every accepted parameter was in HOV).
    """
    states = list(orbits)
    saddle = [_saddle_state(o) for o in states]
    min_margins = [s[0] for s in saddle]
    for m in min_margins:
        if m < margin_floor:
            raise MarginLossError(
                "margin below floor at the start", states[0].params
            )
    steps = 0
    hov_all = region_member_2d("HOV", states[0].params)
    for (pa, pb), (qa, qb) in zip(path.waypoints, path.waypoints[1:]):
        seg_len = max(abs(qa - pa), abs(qb - pb))
        t = 0.0
        dt = min(1.0, path.max_step / seg_len)
        while t < 1.0 - 1e-12:
            dt = min(dt, 1.0 - t)
            tn = t + dt
            if tn > 1.0 - 1e-12:
                tn = 1.0
            params = HenonParams(pa + (qa - pa) * tn, pb + (qb - pb) * tn)

            def _shrink(kind, message):
                nonlocal dt
                dt *= path.backoff
                if dt * seg_len < path.min_step:
                    raise kind(message + " at min step", params)

            try:
                candidates = [
                    solve_periodic_orbit(params, len(o.y), o.y)
                    for o in states
                ]
            except ArithmeticError:
                _shrink(DivergenceError, "no convergence")
                continue
            moved = max(
                max(abs(u - v) for u, v in zip(new.y, old.y))
                for new, old in zip(candidates, states)
            )
            if moved > JUMP_GUARD * max(dt * seg_len, 1e-12):
                _shrink(DivergenceError, "basin jump")
                continue
            if collision_tol is not None and len(candidates) > 1:
                if _min_pair_distance(candidates) < collision_tol:
                    _shrink(CollisionError, "orbit collision")
                    continue
            fresh = [_saddle_state(o) for o in candidates]
            for (margin, big, small), (_, pbig, psmall) in zip(fresh, saddle):
                crossed = big * pbig < 0 or small * psmall < 0
                if margin < margin_floor or crossed:
                    raise MarginLossError("hyperbolicity margin lost", params)
            states = candidates
            saddle = fresh
            min_margins = [
                min(held, s[0]) for held, s in zip(min_margins, saddle)
            ]
            steps += 1
            t = tn
            hov_all = hov_all and region_member_2d("HOV", params)
    return states, steps, min_margins, hov_all


def continue_orbit(
    orbit: CyclicOrbit,
    path: ParamPath,
    margin_floor: float = MARGIN_FLOOR,
) -> CyclicOrbit:
    """Continue one solved orbit from the path start to the path end."""
    if (orbit.params.a, orbit.params.b) != path.waypoints[0]:
        raise ValueError("orbit is not solved at the path start")
    finals, _, _, _ = walk_path(
        [orbit], path, margin_floor=margin_floor, collision_tol=None
    )
    return finals[0]
