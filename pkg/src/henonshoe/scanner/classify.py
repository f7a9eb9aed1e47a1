"""Three-tier horseshoe evidence classifier for single parameters.

Tier 1 is the proven inequality |a| > 2(|b|+1)^2 with b != 0.  Tier 2
excludes horseshoes by exhibiting an attracting periodic orbit, found by
direct iteration from a seed grid.  Tier 3 continues the full period-N
ensemble from an anchor placed on the ray through a, far enough out
that the horseshoe is certain; arriving with uniform hyperbolicity
margin counts as evidence, losing the margin or colliding en route is a
counter-witness, and every other failure is absorbed into "unknown".
Verdicts are deterministic functions of (params, options).
"""

import cmath
import functools
import math
from dataclasses import dataclass

import numpy as np

from henonshoe.continuation.engine import (
    COLLISION_TOL,
    JUMP_GUARD,
    MARGIN_FLOOR,
)
from henonshoe.henon import (
    HenonParams,
    filtration_radius,
    orbit_multipliers,
    per_N,
    region_member_2d,
    solve_periodic_orbit,
)

VERDICTS = ("horseshoe_hov", "horseshoe_evidence", "not_horseshoe", "unknown")
WITNESS_KINDS = ("attracting_orbit", "trapped_orbit", "margin_loss", "collision")


@dataclass(frozen=True)
class ScanOptions:
    """Budgets and knobs for the classifier tiers."""

    n_max: int = 5
    seed_grid: int = 8
    complex_seed_grid: int = 4
    attractor_iterations: int = 512
    period_scan: int = 24
    trapped_fraction: float = 0.25
    max_step: float = 0.25
    max_steps: int = 400
    anchor_margin: float = 1.2
    anchor_phases: int = 256

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if self.seed_grid < 2 or self.complex_seed_grid < 2:
            raise ValueError("seed grids need at least 2 points per axis")
        if self.attractor_iterations < 1 or self.period_scan < 1:
            raise ValueError("iteration budgets must be positive")
        if not 0.0 < self.trapped_fraction <= 1.0:
            raise ValueError("trapped_fraction must be in (0, 1]")
        if self.max_step <= 0 or self.max_steps < 1:
            raise ValueError("continuation budgets must be positive")
        if self.anchor_margin <= 1.0:
            raise ValueError("anchor must sit strictly outside the bound")
        if self.anchor_phases < 4:
            raise ValueError("anchor_phases too coarse")


@dataclass(frozen=True)
class Witness:
    kind: str
    a: complex
    b: complex
    cycle: tuple[complex, ...] = ()
    seed: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")


@dataclass(frozen=True)
class PixelClass:
    verdict: str
    witness: Witness | None = None

    def __post_init__(self) -> None:
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "not_horseshoe" and self.witness is None:
            raise ValueError("not_horseshoe needs a witness")


def classify_parameter(
    params: HenonParams, opts: ScanOptions | None = None
) -> PixelClass:
    """Classify one parameter; never raises, unknown absorbs failures."""
    if opts is None:
        opts = ScanOptions()
    if region_member_2d("HOV", params):
        return PixelClass("horseshoe_hov")
    witness = _find_attractor(params, opts)
    if witness is not None:
        return PixelClass("not_horseshoe", witness)
    return _continuation_audit(params, opts)


def _find_attractor(params: HenonParams, opts: ScanOptions) -> Witness | None:
    """Iterate a seed grid; polish any near-periodic survivor by Newton.

    Two detectors share the iteration: an attracting periodic orbit
    (polished and certified by its multipliers), and a trapped bulk of
    seeds that never escapes the filtration bail within the budget,
    which signals a bounded attracting set even when it is aperiodic.
    A horseshoe admits neither, so both yield a not_horseshoe witness.
    """
    a, b = complex(params.a), complex(params.b)
    radius = filtration_radius(params)
    line = np.linspace(-radius, radius, opts.seed_grid)
    gx, gy = np.meshgrid(line, line)
    cline = np.linspace(-radius, radius, opts.complex_seed_grid)
    cre, cim = np.meshgrid(cline, cline)
    x = np.concatenate(
        [gx.ravel(), np.zeros(cre.size)]
    ).astype(complex)
    y = np.concatenate([gy.ravel(), (cre + 1j * cim).ravel()]).astype(complex)
    seeds_x = x.copy()
    seeds_y = y.copy()
    bail = 2.0 * radius + 2.0
    alive = np.ones(x.shape, dtype=bool)
    for _ in range(opts.attractor_iterations):
        nx = x * x + a - b * y
        y = np.where(alive, x, y)
        x = np.where(alive, nx, x)
        alive &= (np.abs(x) <= bail) & (np.abs(y) <= bail)
        if not alive.any():
            return None
        # freeze escaped seeds so later squarings cannot overflow
        x = np.where(alive, x, 0)
        y = np.where(alive, y, 0)
    attempts = 0
    for i in np.nonzero(alive)[0]:
        px, py = complex(x[i]), complex(y[i])
        points = [(px, py)]
        for _ in range(opts.period_scan):
            px, py = px * px + a - b * py, px
            points.append((px, py))
        ranked = sorted(
            (
                max(
                    abs(points[k][0] - points[0][0]),
                    abs(points[k][1] - points[0][1]),
                ),
                k,
            )
            for k in range(1, opts.period_scan + 1)
        )
        for dist, k in ranked[:4]:
            if dist > 1e-2 * radius:
                break
            attempts += 1
            guesses = tuple(p[1] for p in points[:k])
            try:
                orbit = solve_periodic_orbit(params, k, guesses)
            except ArithmeticError:
                continue
            info = orbit_multipliers(orbit)
            if max(abs(m) for m in info.multipliers) < 1.0 - 1e-9:
                return Witness("attracting_orbit", a, b, orbit.y)
        if attempts >= 8:
            break
    if alive.mean() >= opts.trapped_fraction:
        first = int(np.flatnonzero(alive)[0])
        return Witness(
            "trapped_orbit",
            a,
            b,
            seed=(complex(seeds_x[first]), complex(seeds_y[first])),
        )
    return None


@functools.lru_cache(maxsize=512)
def _anchor_ensemble(
    anchor_a: complex, b: complex, n: int
) -> tuple[tuple[complex, ...], ...]:
    return tuple(o.y for o in per_N(HenonParams(anchor_a, b), n))


def _continuation_audit(params: HenonParams, opts: ScanOptions) -> PixelClass:
    a, b = complex(params.a), complex(params.b)
    hov_radius = 2.0 * (1.0 + abs(b)) ** 2 * opts.anchor_margin
    # math.atan2 handles subnormal components where cmath.phase overflows
    phase = math.atan2(a.imag, a.real)
    slot = round(phase * opts.anchor_phases / (2.0 * math.pi))
    anchor = hov_radius * cmath.exp(
        2j * math.pi * slot / opts.anchor_phases
    )
    try:
        start = _anchor_ensemble(anchor, b, opts.n_max)
    except ArithmeticError:
        return PixelClass("unknown")
    status, where, _ = _walk_batched(anchor, b, a, start, opts)
    if status == "ok":
        return PixelClass("horseshoe_evidence")
    if status in ("margin_loss", "collision"):
        return PixelClass("not_horseshoe", Witness(status, where, b))
    return PixelClass("unknown")


def _newton_batched(a, b, start, bail):
    """Newton on the stacked cyclic systems; returns (state, converged)."""
    state = start.copy()
    count, n = state.shape
    idx = np.arange(n)
    for _ in range(14):
        residual = (
            np.roll(state, -1, 1)
            - state * state
            - a
            + b * np.roll(state, 1, 1)
        )
        if np.abs(residual).max() < 1e-11:
            return state, True
        jac = np.zeros((count, n, n), dtype=complex)
        jac[:, idx, (idx + 1) % n] += 1.0
        jac[:, idx, idx] += -2.0 * state
        jac[:, idx, (idx - 1) % n] += b
        try:
            delta = np.linalg.solve(jac, residual[:, :, None])[:, :, 0]
        except np.linalg.LinAlgError:
            return state, False
        state = state - delta
        if np.abs(state).max() > bail:
            return state, False
    return state, False


def _saddle_batched(state, b):
    """Hyperbolicity margins and signed log-free offsets, per orbit."""
    count, n = state.shape
    x = np.roll(state, -1, 1)
    m00 = np.ones(count, dtype=complex)
    m01 = np.zeros(count, dtype=complex)
    m10 = np.zeros(count, dtype=complex)
    m11 = np.zeros(count, dtype=complex)
    for k in range(n):
        t = 2.0 * x[:, k]
        m00, m01, m10, m11 = (
            t * m00 - b * m10,
            t * m01 - b * m11,
            m00,
            m01,
        )
    trace = m00 + m11
    det = m00 * m11 - m01 * m10
    root = np.sqrt(trace * trace - 4.0 * det)
    lam1 = np.abs((trace + root) / 2.0)
    lam2 = np.abs((trace - root) / 2.0)
    big = np.maximum(lam1, lam2) - 1.0
    small = np.minimum(lam1, lam2) - 1.0
    margins = np.minimum(np.abs(big), np.abs(small))
    return margins, big, small


def _walk_batched(a0, b, a1, start, opts):
    """Continue the whole ensemble along the a-segment, lockstep."""
    state = np.array(start, dtype=complex)
    count = state.shape[0]
    margins, sbig, ssmall = _saddle_batched(state, b)
    if (margins < MARGIN_FLOOR).any():
        return "margin_loss", a0, state
    seg = abs(a1 - a0)
    if seg == 0:
        return "ok", a1, state
    t = 0.0
    dt = min(1.0, opts.max_step / seg)
    attempts = 0
    speed = 0.0
    while t < 1.0 - 1e-12:
        if attempts >= opts.max_steps:
            return "budget", a0 + (a1 - a0) * t, state
        attempts += 1
        step = min(dt, 1.0 - t)
        tn = t + step
        if tn > 1.0 - 1e-12:
            tn = 1.0
        a_t = a0 + (a1 - a0) * tn
        span = 1.0 + abs(b)
        bail = 10.0 * (span + math.sqrt(span * span + 4.0 * abs(a_t))) / 2.0
        fresh, converged = _newton_batched(a_t, b, state, bail)
        if not converged:
            dt *= 0.5
            if dt * seg < 1e-5:
                return "budget", a_t, state
            continue
        moved = np.abs(fresh - state).max()
        # a smooth branch scales with the step; a root jump does not,
        # so allow the observed branch speed with headroom
        allowed = max(JUMP_GUARD, 4.0 * speed) * max(step * seg, 1e-12)
        if moved > allowed:
            dt *= 0.5
            if dt * seg < 1e-5:
                return "budget", a_t, state
            continue
        if count > 1:
            gap = np.abs(fresh[:, None, :] - fresh[None, :, :]).max(axis=2)
            gap[np.arange(count), np.arange(count)] = np.inf
            if gap.min() < COLLISION_TOL:
                dt *= 0.5
                if dt * seg < 1e-5:
                    return "collision", a_t, fresh
                continue
        m, nb, ns = _saddle_batched(fresh, b)
        if (
            (m < MARGIN_FLOOR).any()
            or (nb * sbig < 0).any()
            or (ns * ssmall < 0).any()
        ):
            return "margin_loss", a_t, fresh
        state, margins, sbig, ssmall = fresh, m, nb, ns
        speed = moved / (step * seg)
        t = tn
    return "ok", a1, state
