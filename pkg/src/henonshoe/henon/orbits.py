"""Periodic orbits of the Henon map in sequence space.

A period-N orbit is stored as its cyclic y-sequence: the recurrence
y_{n+1} = y_n^2 + a - b*y_{n-1} encodes the full 2-d orbit through
p_n = (y_{n+1}, y_n).  Solving in the y variables keeps the system
well conditioned at b = 0, where the 2-d shooting formulation loses
rank, and lets every orbit be seeded from the quadratic family.
"""

import cmath
import itertools
from dataclasses import dataclass

import numpy as np

from henonshoe.henon.core import HenonParams, filtration_radius

NEWTON_TOL = 1e-12
MERGE_TOL = 1e-6


@dataclass(frozen=True)
class CyclicOrbit:
    """Cyclic y-sequence of a period-N orbit with its recurrence defect."""

    y: tuple[complex, ...]
    residual: float
    params: HenonParams

    def __post_init__(self) -> None:
        y = tuple(complex(v) for v in self.y)
        if not y:
            raise ValueError("orbit needs at least one point")
        if not all(cmath.isfinite(v) for v in y):
            raise ValueError("orbit points must be finite")
        object.__setattr__(self, "y", y)
        n = len(y)
        a, b = self.params.a, self.params.b
        defect = max(
            abs(y[(k + 1) % n] - y[k] * y[k] - a + b * y[k - 1])
            for k in range(n)
        )
        if defect > self.residual + 1e-12:
            raise ValueError("stated residual below actual defect")
        radius = filtration_radius(self.params)
        if max(abs(v) for v in y) > radius * (1.0 + 1e-9):
            raise ValueError("orbit leaves the filtration bidisk")

    def __len__(self) -> int:
        return len(self.y)

    def points(self) -> tuple[tuple[complex, complex], ...]:
        """The orbit as (x, y) pairs, p_n = (y_{n+1}, y_n)."""
        n = len(self.y)
        return tuple((self.y[(k + 1) % n], self.y[k]) for k in range(n))

    def exact_period(self, tol: float = 1e-8) -> int:
        n = len(self.y)
        for d in range(1, n):
            if n % d:
                continue
            if all(abs(self.y[(k + d) % n] - self.y[k]) < tol for k in range(n)):
                return d
        return n


@dataclass(frozen=True)
class SaddleInfo:
    orbit: CyclicOrbit
    multipliers: tuple[complex, complex]
    margin: float


def seed_orbit_1d(a: complex, word) -> tuple[complex, ...]:
    """Period-N orbit of z^2 + a with the given binary itinerary.

    Composes the symbol-selected inverse branches +-sqrt(z - a) around
    the cycle; the composite contracts on the escape disk for |a| > 2,
    so iteration from 0 converges to the unique orbit whose n-th point
    carries symbol word[n].  Preimages cluster in the half-plane around
    -a, so the square root is cut along the ray through +a; symbol 1 is
    the branch on the -a side (the principal branch when a < -2 real).
    """
    a = complex(a)
    if abs(a) <= 2.0:
        raise ValueError("seeding needs |a| > 2")
    word = tuple(int(s) for s in word)
    if not word or any(s not in (0, 1) for s in word):
        raise ValueError("word must be a nonempty 0/1 sequence")
    # arguments w - a stay within 90 degrees of the -a direction
    spin = cmath.exp(-1j * cmath.phase(-a))
    half = cmath.sqrt(1.0 / spin)
    z = 0j
    deltas = (1.0, 1.0)
    for _ in range(500):
        w = z
        for s in reversed(word):
            w = half * cmath.sqrt((w - a) * spin)
            if s == 0:
                w = -w
        deltas = (deltas[1], abs(w - z))
        z = w
        if deltas[1] < 1e-14:
            break
    else:
        rate = deltas[1] / deltas[0] if deltas[0] > 0 else float("nan")
        raise ArithmeticError(
            "branch iteration did not converge, contraction ~ %.3g" % rate
        )
    orbit = [z]
    for _ in range(len(word) - 1):
        orbit.append(orbit[-1] * orbit[-1] + a)
    return tuple(orbit)


def _cyclic_jacobian(y: np.ndarray, b: complex) -> np.ndarray:
    n = len(y)
    jac = np.zeros((n, n), dtype=complex)
    for k in range(n):
        # += so the N = 1 and N = 2 index collisions accumulate
        jac[k, (k + 1) % n] += 1.0
        jac[k, k] += -2.0 * y[k]
        jac[k, (k - 1) % n] += b
    return jac


def solve_periodic_orbit(
    params: HenonParams,
    N: int,
    seed,
    tol: float = NEWTON_TOL,
    max_iter: int = 60,
) -> CyclicOrbit:
    """Newton iteration on the cyclic recurrence system.

    Unknowns are the N cyclic y-values; the residual of the returned
    orbit is the maximum recurrence defect after convergence.
    """
    y = np.asarray(tuple(seed), dtype=complex)
    if y.shape != (N,):
        raise ValueError("seed must have length N")
    escape = 10.0 * filtration_radius(params)
    for _ in range(max_iter):
        res = np.roll(y, -1) - y * y - params.a + params.b * np.roll(y, 1)
        worst = float(np.max(np.abs(res)))
        if worst < tol:
            return CyclicOrbit(y=tuple(y), residual=worst, params=params)
        try:
            step = np.linalg.solve(_cyclic_jacobian(y, params.b), res)
        except np.linalg.LinAlgError:
            raise ArithmeticError("singular Jacobian, near a bifurcation")
        y = y - step
        if float(np.max(np.abs(y))) > escape:
            raise ArithmeticError("orbit solve diverged")
    raise ArithmeticError("orbit solve did not converge")


def orbit_multipliers(orbit: CyclicOrbit) -> SaddleInfo:
    """Eigenvalues of the period-N derivative and the hyperbolicity margin."""
    if orbit.residual > 1e-8:
        raise ValueError("orbit residual too large for multipliers")
    b = orbit.params.b
    n = len(orbit.y)
    prod = np.eye(2, dtype=complex)
    for k in range(n):
        x = orbit.y[(k + 1) % n]
        prod = np.array([[2.0 * x, -b], [1.0, 0.0]], dtype=complex) @ prod
    lams = sorted(np.linalg.eigvals(prod), key=abs, reverse=True)
    margin = min(abs(abs(lam) - 1.0) for lam in lams)
    return SaddleInfo(
        orbit=orbit,
        multipliers=(complex(lams[0]), complex(lams[1])),
        margin=float(margin),
    )


def _continue_in_b(
    params: HenonParams, word: tuple[int, ...], seed: tuple[complex, ...]
) -> CyclicOrbit:
    """Follow one seeded orbit from b = 0 to params.b, halving on failure."""
    n = len(seed)
    y = seed
    t = 0.0
    dt = 1.0
    while t < 1.0:
        stage = HenonParams(params.a, (t + dt) * params.b)
        try:
            orbit = solve_periodic_orbit(stage, n, y)
        except ArithmeticError:
            dt /= 2.0
            if dt < 1.0 / 4096.0:
                raise ArithmeticError(
                    "continuation failed for word %r" % (word,)
                )
            continue
        y = orbit.y
        t += dt
    return solve_periodic_orbit(params, n, y)


def per_N_words(
    params: HenonParams, N: int
) -> tuple[tuple[tuple[int, ...], CyclicOrbit], ...]:
    """(itinerary, orbit) pairs for all fixed points of f^N.

    Seeds every length-N itinerary in the quadratic family at (a, 0)
    and continues b from 0 to the target; results come back sorted by
    word, with coincident solutions merged at sup distance MERGE_TOL.
    The itinerary is the seeding word, a label that stays well defined
    even where a positional read-off of symbols would be ambiguous.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if abs(params.a) <= 2.0:
        raise ValueError("per_N needs |a| > 2 to seed from the quadratic map")
    solved: list[tuple[tuple[int, ...], CyclicOrbit]] = []
    for word in itertools.product((0, 1), repeat=N):
        seed = seed_orbit_1d(params.a, word)
        orbit = _continue_in_b(params, word, seed)
        solved.append((word, orbit))
    merged: list[tuple[tuple[int, ...], CyclicOrbit]] = []
    for word, orbit in solved:
        duplicate = any(
            max(abs(u - v) for u, v in zip(orbit.y, kept.y)) < MERGE_TOL
            for _, kept in merged
        )
        if not duplicate:
            merged.append((word, orbit))
    return tuple(merged)


def per_N(params: HenonParams, N: int) -> tuple[CyclicOrbit, ...]:
    """All fixed points of f^N as cyclic orbits, one per binary word."""
    return tuple(orbit for _, orbit in per_N_words(params, N))
