"""Orbit codings and real-type evidence for the Henon family.

Two coding schemes.  Scheme E is the binary itinerary relative to the
real basepoint convention: symbol 0 for the left partition piece, read
off the sign of Re y_n.  Scheme G applies the graph coding of the 1-d
box system to the orbit's y-sequence, which is a legitimate pseudo
orbit of the quadratic map whenever |b| is small against the sampled
inclusion margin.
"""

import cmath
from dataclasses import dataclass

from henonshoe.henon.core import HenonParams, filtration_radius, region_member_2d
from henonshoe.henon.orbits import CyclicOrbit, per_N
from henonshoe.onedim import code_orbit_G_1d

REALITY_TOL = 1e-8


@dataclass(frozen=True)
class PseudoOrbit:
    """Point list with a certified defect bound for z^2 + a."""

    a: complex
    points: tuple[complex, ...]
    epsilon: float
    cyclic: bool = False

    def __post_init__(self) -> None:
        points = tuple(complex(p) for p in self.points)
        if not points:
            raise ValueError("pseudo orbit needs at least one point")
        if not all(cmath.isfinite(p) for p in points):
            raise ValueError("pseudo orbit points must be finite")
        object.__setattr__(self, "points", points)
        if self.epsilon < 0:
            raise ValueError("defect bound must be nonnegative")
        n = len(points)
        last = n if self.cyclic else n - 1
        for k in range(last):
            defect = abs(points[(k + 1) % n] - points[k] * points[k] - self.a)
            if defect > self.epsilon:
                raise ValueError(
                    "defect %.3g exceeds the stated bound at index %d"
                    % (defect, k)
                )


@dataclass(frozen=True)
class RealTypeReport:
    label: str
    period: int
    real_flags: tuple[bool, ...]
    note: str


def code_orbit(params: HenonParams, orbit: CyclicOrbit, scheme: str):
    """Coding set of a solved orbit under scheme ``E`` or ``G``."""
    if orbit.params != params:
        raise ValueError("orbit was solved at different parameters")
    if scheme == "E":
        if abs(params.a.imag) > 1e-12:
            raise ValueError("E-coding needs a real basepoint")
        if abs(params.a) <= 2.0:
            raise ValueError("E-coding needs |a| > 2")
        cut = 1e-9 * filtration_radius(params)
        symbols = []
        for v in orbit.y:
            if abs(v.real) < cut:
                raise ValueError("ambiguous symbol on the dividing line")
            symbols.append(0 if v.real < 0 else 1)
        return frozenset({tuple(symbols)})
    if scheme == "G":
        if not region_member_2d("W2", params):
            raise ValueError("G-coding needs W2 membership")
        bound = filtration_radius(params) * abs(params.b) + orbit.residual
        # constructing the pseudo orbit certifies the defect bound
        pseudo = PseudoOrbit(
            a=params.a,
            points=orbit.y,
            epsilon=bound + 1e-12,
            cyclic=True,
        )
        # codings of a period-N point can have period 2N (box overlaps
        # pair at most two symbols per position), so read the doubled
        # cycle and fold words that are plain repeats
        n = len(pseudo.points)
        doubled = code_orbit_G_1d(
            params.a, list(pseudo.points) * 2, closed=True
        )
        folded = set()
        for word in doubled:
            folded.add(word[:n] if word[:n] == word[n:] else word)
        return frozenset(folded)
    raise ValueError("scheme must be 'E' or 'G'")


def classify_real_type(params: HenonParams, N: int) -> RealTypeReport:
    """Reality pattern of the period-N orbits at real parameters.

    Asks the parameter classifier for a horseshoe verdict first; only
    on a positive verdict are the orbits solved and their coordinates
    tested for reality.  The result is evidence at period <= N, not a
    proof: deeper orbits could still change a type1/type2 call to 3.
    """
    if not params.is_real:
        raise ValueError("real parameters required")
    from henonshoe.scanner import classify_parameter

    pixel = classify_parameter(params)
    if pixel.verdict not in ("horseshoe_hov", "horseshoe_evidence"):
        return RealTypeReport(
            label=pixel.verdict,
            period=N,
            real_flags=(),
            note="classifier verdict passed through",
        )
    tol = REALITY_TOL * filtration_radius(params)
    flags = tuple(
        max(abs(v.imag) for v in orbit.y) < tol for orbit in per_N(params, N)
    )
    if all(flags):
        label = "type1"
    elif not any(flags):
        label = "type2"
    else:
        label = "type3"
    return RealTypeReport(
        label=label,
        period=N,
        real_flags=flags,
        note="evidence at period <= %d" % N,
    )
