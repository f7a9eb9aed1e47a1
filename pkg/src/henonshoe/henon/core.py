"""Henon map basics: parameters, stepping, filtration, parameter regions.

The map is f(x, y) = (x^2 + a - b*y, x).  Its inverse exists exactly
when b != 0, and the degenerate b = 0 map projects onto the quadratic
family in the x coordinate.
"""

import cmath
import functools
import math
from dataclasses import dataclass

from henonshoe.onedim import estimate_epsilon, region_member_1d

# estimate_epsilon is sampled, not proven, so the W2 test discounts it
EPSILON_SAFETY = 0.5


@dataclass(frozen=True)
class HenonParams:
    a: complex
    b: complex

    def __post_init__(self) -> None:
        a = complex(self.a)
        b = complex(self.b)
        if not (cmath.isfinite(a) and cmath.isfinite(b)):
            raise ValueError("parameters must be finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def is_real(self) -> bool:
        return self.a.imag == 0.0 and self.b.imag == 0.0

    @property
    def b_nonzero(self) -> bool:
        return self.b != 0

    def conjugate(self) -> "HenonParams":
        return HenonParams(self.a.conjugate(), self.b.conjugate())


def henon_step(
    params: HenonParams,
    point: tuple[complex, complex],
    direction: str = "fwd",
) -> tuple[complex, complex]:
    """One application of the map (``fwd``) or its inverse (``inv``)."""
    x = complex(point[0])
    y = complex(point[1])
    if direction == "fwd":
        return (x * x + params.a - params.b * y, x)
    if direction == "inv":
        if params.b == 0:
            raise ValueError("inverse step needs b != 0")
        return (y, (y * y + params.a - x) / params.b)
    raise ValueError("direction must be 'fwd' or 'inv'")


def filtration_radius(params: HenonParams) -> float:
    """Bidisk radius confining every bounded orbit.

    The positive root of R^2 - (1+|b|)R - |a| = 0: once max(|x|, |y|)
    exceeds it, the forward or backward orbit escapes monotonically.
    """
    s = 1.0 + abs(params.b)
    return (s + math.sqrt(s * s + 4.0 * abs(params.a))) / 2.0


@functools.lru_cache(maxsize=4096)
def _cached_epsilon(a: complex) -> float:
    return estimate_epsilon(a)


def region_member_2d(region: str, params: HenonParams) -> bool:
    """Membership in the two parameter regions used by the classifier.

    ``HOV``: |a| > 2(|b|+1)^2 with b != 0, the unconditional horseshoe
    regime.  ``W2``: a in the 1-d arch region and |b| small against the
    sampled inclusion margin, |b| < EPSILON_SAFETY * eps(a) / R(a, b).
    """
    if region == "HOV":
        bound = 2.0 * (abs(params.b) + 1.0) ** 2
        return abs(params.a) > bound and params.b != 0
    if region == "W2":
        if params.a == 0 or not region_member_1d("W1", params.a):
            return False
        eps = _cached_epsilon(params.a)
        return abs(params.b) < EPSILON_SAFETY * eps / filtration_radius(params)
    raise ValueError("unknown region: " + repr(region))
