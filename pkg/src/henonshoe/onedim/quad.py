"""Numerics for the quadratic family g_a(z) = z^2 + a.

Parameter regions:

* ``HOV1``: |a| > 2, the 1-D horseshoe condition.
* ``W1``: the region where the 3-box construction works, bounded by a
  hyperbola arch through -1 with asymptote angles +-2pi/3.  Membership
  is evaluated in polar form, r > -sin(phi/2)/sin(3phi/2) together with
  |phi| > 2pi/3, which avoids square-root branch cuts entirely.
* ``M``: bounded critical orbit (connectedness-locus membership by
  iteration budget).

The escape-rate function h measures how fast the critical value a
escapes to infinity; it vanishes exactly on ``M`` (up to the iteration
budget) and approaches log|a| for large |a|.  Its circulation around a
circle |a| = R > 2, normalized so the field log|a| integrates to 2pi,
is computed by ``theta_loop_integral``.
"""

import cmath
import math
from dataclasses import dataclass
from typing import Callable

TWO_THIRDS_PI = 2.0 * math.pi / 3.0


def escape_radius_1d(a: complex) -> float:
    """Radius R with |z| > R forcing monotone escape under g_a.

    The positive root of R^2 - R = |a| guarantees |g_a(z)| - |z| >=
    |z|^2 - |z| - |a| > 0 outside; a 10% margin keeps later closure
    arguments strict.
    """
    return 1.1 * (1.0 + math.sqrt(1.0 + 4.0 * abs(a))) / 2.0


def _phi_upper(a: complex) -> float:
    """arg(a) taken in [0, 2pi): the branch that keeps the slit tip in
    the closure of the upper sector and mirrors conjugate parameters."""
    a = complex(a)
    # math.atan2 handles subnormal components where cmath.phase overflows
    phi = math.atan2(a.imag, a.real)
    return phi if phi >= 0.0 else phi + 2.0 * math.pi


def w1_boundary_radius(phi: float) -> float:
    """Radius of the W1 boundary curve at angle phi (radians, any branch).

    Defined for |phi mod 2pi - pi| < pi/3; the curve passes through
    r = 1 at phi = pi and blows up at the asymptote angles.
    """
    phi = phi % (2.0 * math.pi)
    if not (TWO_THIRDS_PI < phi < 2.0 * TWO_THIRDS_PI):
        raise ValueError("boundary curve undefined at this angle")
    return -math.sin(phi / 2.0) / math.sin(3.0 * phi / 2.0)


def region_member_1d(
    region: str,
    a: complex,
    budget: int = 1000,
    bailout: float = 4.0,
) -> bool:
    """Membership in one of the 1-D parameter regions {HOV1, W1, M}.

    ``budget`` and ``bailout`` only affect the M test; bailout compares
    the squared modulus, so the default 4 escapes at |z| > 2.
    """
    if region == "HOV1":
        return abs(a) > 2.0
    if region == "W1":
        if a == 0:
            raise ValueError("W1 membership needs a != 0")
        phi = _phi_upper(a)
        if not (TWO_THIRDS_PI < phi < 2.0 * TWO_THIRDS_PI):
            return False
        return abs(a) > w1_boundary_radius(phi)
    if region == "M":
        z = 0.0 + 0.0j
        for _ in range(budget):
            z = z * z + a
            if z.real * z.real + z.imag * z.imag > bailout:
                return False
        return True
    raise ValueError(f"unknown region {region!r}")


def fixed_points_1d(a: complex) -> tuple[complex, complex]:
    """The two fixed points of g_a as (alpha, beta).

    beta is the fixed point lying in the outer sector box D0 when the
    box system applies; otherwise the root of larger modulus (ties
    broken toward larger real part).  Raises on the double root at
    a = 1/4.
    """
    disc = 1.0 - 4.0 * a
    if disc == 0:
        raise ValueError("double fixed point at a = 1/4")
    root = cmath.sqrt(disc)
    z1 = (1.0 + root) / 2.0
    z2 = (1.0 - root) / 2.0
    if a != 0 and region_member_1d("W1", a):
        from henonshoe.onedim.boxes import BoxSystem1D

        box = BoxSystem1D.from_param(a)
        in_d0 = [box.member("D0", z) for z in (z1, z2)]
        if in_d0[0] != in_d0[1]:
            beta, alpha = (z1, z2) if in_d0[0] else (z2, z1)
            return alpha, beta
    if (abs(z1), z1.real) >= (abs(z2), z2.real):
        return z2, z1
    return z1, z2


@dataclass(frozen=True)
class GreenEstimate:
    """Escape-rate value with the budget actually spent and an error bound."""

    value: float
    iterations: int
    error: float


def critical_green_h(
    a: complex, budget: int = 1000, bailout: float = 1e8
) -> GreenEstimate:
    """Escape rate of the critical value: h = lim 2^-n log|g_a^n(a)|.

    The normalization starts the count at z_0 = a, so h approaches
    log|a| for large |a|.  Once |z_n| clears ``bailout`` two more steps
    sharpen the estimate; the remaining tail is bounded by
    2^-n |a| / |z_n|^2 and reported as the error.  A bounded orbit
    within the budget yields h = 0.
    """
    z = complex(a)
    n = 0
    while n <= budget:
        if abs(z) > bailout:
            # two extra squarings sharpen the tail; stop short of overflow
            for _ in range(2):
                if abs(z) > 1e100:
                    break
                z = z * z + a
                n += 1
            mag = abs(z)
            scale = 2.0 ** (-n)
            h = scale * math.log(mag)
            err = scale * (abs(a) / (mag * mag) + 1e-15)
            return GreenEstimate(value=h, iterations=n, error=err)
        z = z * z + a
        n += 1
    return GreenEstimate(value=0.0, iterations=budget, error=0.0)


def theta_loop_integral(
    radius: float,
    samples: int,
    delta: float | None = None,
    field: Callable[[complex], float] | None = None,
) -> float:
    """Circulation of the escape-rate gradient around |a| = radius.

    Computes the flux integral of the radial derivative, i.e.
    sum over theta of d(h)/dr * radius * dtheta, with centered finite
    differences.  The normalization makes the field log|a| integrate to
    exactly 2pi.  ``field`` substitutes a different scalar field for h
    (used by tests); ``radius`` must exceed 2 so every sample escapes.
    """
    if radius <= 2.0:
        raise ValueError("loop radius must exceed 2")
    if samples < 8:
        raise ValueError("too few samples")
    if delta is None:
        delta = radius * 1e-4
    if field is None:
        def field(a: complex) -> float:
            return critical_green_h(a).value

    total = 0.0
    dtheta = 2.0 * math.pi / samples
    for k in range(samples):
        theta = k * dtheta
        direction = cmath.exp(1j * theta)
        h_out = field((radius + delta) * direction)
        h_in = field((radius - delta) * direction)
        if not (math.isfinite(h_out) and math.isfinite(h_in)):
            raise ArithmeticError("non-finite escape-rate sample")
        total += (h_out - h_in) / (2.0 * delta)
    return total * radius * dtheta
