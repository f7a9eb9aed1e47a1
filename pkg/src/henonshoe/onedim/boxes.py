"""Sector and 3-box geometry for the quadratic family.

For a != 0 write a = |a| e^{i phi} with phi taken in [0, 2pi).  The
disk {|z| < R} splits along the diameter at angle phi/2 into two open
half disks: E1 on the side containing a, E0 opposite.  In the image
plane W0 is the disk {|w - a| < R^2} minus the radial slit from a in
direction e^{i phi}, and W1 is the part of the same disk on the E1 side
of the dividing line after pushing the line a distance ``offset``
toward E0.  The three boxes are D0 = E0, D2 = E1, and D1 = the
g_a-preimage of W1, which lies inside {|z| < R} automatically because
|g_a(z) - a| = |z|^2.

``estimate_epsilon`` measures the room the construction has: the
smaller of dist(D0-bar u D1-bar, bd W0) and dist(D2-bar, bd W1),
maximized over the line offset.  Orbits staying this deep inside the
boxes keep their symbolic codings under perturbation.
"""

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from henonshoe.onedim.quad import (
    TWO_THIRDS_PI,
    _phi_upper,
    escape_radius_1d,
    region_member_1d,
    w1_boundary_radius,
)
from henonshoe.symbolic import build_graph


@dataclass(frozen=True)
class BoxSystem1D:
    """Immutable sector and box geometry for one parameter value."""

    a: complex
    phi: float
    radius: float
    offset: float = 0.0

    def __post_init__(self):
        if self.a == 0:
            raise ValueError("box system needs a != 0")
        if self.radius <= 0.0:
            raise ValueError("radius must be positive")
        if self.offset < 0.0:
            raise ValueError("offset must be nonnegative")
        if abs(cmath.exp(1j * self.phi) - self.a / abs(self.a)) > 1e-9:
            raise ValueError("phi does not match arg(a)")

    @classmethod
    def from_param(
        cls,
        a: complex,
        offset: float = 0.0,
        radius: float | None = None,
    ) -> "BoxSystem1D":
        a = complex(a)
        r = escape_radius_1d(a) if radius is None else float(radius)
        return cls(a=a, phi=_phi_upper(a), radius=r, offset=float(offset))

    @property
    def _unit(self) -> complex:
        """e^{i phi} computed exactly as a/|a|."""
        return self.a / abs(self.a)

    @property
    def _half(self) -> complex:
        """e^{i phi/2}: the square root of _unit in the closed upper
        half plane, matching the phi branch in [0, 2pi)."""
        h = cmath.sqrt(self._unit)
        return -h if h.imag < 0.0 else h

    @property
    def slit(self) -> tuple[complex, complex]:
        """Endpoints of the radial slit removed from W0."""
        return (self.a, self.a + self.radius**2 * self._unit)

    def level(self, z: complex) -> float:
        """Signed offset from the dividing line; positive on the E1 side."""
        return (z * self._half.conjugate()).imag

    def slit_distance(self, z: complex) -> float:
        start, tip = self.slit
        d = tip - start
        t = ((z - start) * d.conjugate()).real / (d.real**2 + d.imag**2)
        t = min(1.0, max(0.0, t))
        return abs(z - (start + t * d))

    def member(self, region: str, z: complex) -> bool:
        z = complex(z)
        if region in ("E0", "E1", "D0", "D2"):
            if not 0.0 < abs(z) < self.radius:
                return False
            u = self.level(z)
            return u > 0.0 if region in ("E1", "D2") else u < 0.0
        if region == "W0":
            return (
                abs(z - self.a) < self.radius**2
                and self.slit_distance(z) > 0.0
            )
        if region == "W1":
            return (
                abs(z - self.a) < self.radius**2
                and self.level(z) > -self.offset
            )
        if region == "D1":
            return abs(z) < self.radius and self.member(
                "W1", z * z + self.a
            )
        raise ValueError(f"unknown region {region!r}")

    def sector_boundary(self, which: str, n: int) -> np.ndarray:
        """Samples of the closed half-disk boundary: diameter plus arc."""
        if which not in ("E0", "E1"):
            raise ValueError("sector must be E0 or E1")
        half = self._half
        diam = np.linspace(-self.radius, self.radius, n) * half
        lo, hi = (0.0, math.pi) if which == "E1" else (math.pi, 2.0 * math.pi)
        arc = self.radius * np.exp(1j * np.linspace(lo, hi, n)) * half
        return np.concatenate([diam, arc])

    def d1_boundary(self, n: int) -> np.ndarray:
        """Samples of the boundary of closure(D1).

        Two pieces: the preimage of the chord where the offset line
        crosses the disk {|w - a| < R^2}, and the part of the circle
        |z| = R where the preimage condition holds.
        """
        half = self._half
        pieces = []
        alpha = abs(self.a) * half
        r2 = self.radius**2
        rad2 = r2 * r2 - (alpha.imag + self.offset) ** 2
        if rad2 > 0.0:
            rho = math.sqrt(rad2)
            xs = np.linspace(alpha.real - rho, alpha.real + rho, 2 * n)
            w = (xs - 1j * self.offset) * half
            roots = np.sqrt(w - self.a)
            curve = np.concatenate([roots, -roots])
            pieces.append(curve[np.abs(curve) <= self.radius * (1 + 1e-12)])
        theta = np.linspace(0.0, 2.0 * math.pi, 4 * n, endpoint=False)
        ring = self.radius * np.exp(1j * theta)
        level = ((ring * ring + self.a) * half.conjugate()).imag
        pieces.append(ring[level >= -self.offset])
        return np.concatenate(pieces)


def point_member_1d(box: BoxSystem1D, region: str, z: complex) -> bool:
    """Whether z lies in the named region of the box system."""
    return box.member(region, z)


class BoxGapReport(NamedTuple):
    """Margins of the two box inclusions at one line offset."""

    epsilon: float
    gap_w0: float
    gap_w1: float
    offset: float
    ok: bool


def _gap_w0(box: BoxSystem1D, pts: np.ndarray, samples: int) -> float:
    """min over pts of distance to bd W0; negative once a point leaves.

    Boundary sampling alone can step over a thin slit crossing, so the
    slit itself is also scanned for points inside closure(D1); a hit is
    reported as minus the penetration depth.  The slit never meets
    closure(D0): its points sit at positive level (r+s)sin(phi/2).
    """
    start, tip = box.slit
    d = tip - start
    s = start + np.linspace(0.0, 1.0, 4 * samples) * d
    inside = np.abs(s) <= box.radius
    if np.any(inside):
        s_in = s[inside]
        depth = np.minimum(
            box.radius - np.abs(s_in),
            ((s_in * s_in + box.a) * box._half.conjugate()).imag
            + box.offset,
        )
        worst = float(depth.max())
        if worst >= 0.0:
            return -worst
    if pts.size == 0:
        return math.inf
    circle = box.radius**2 - np.abs(pts - box.a)
    t = ((pts - start) * d.conjugate()).real / (d.real**2 + d.imag**2)
    t = np.clip(t, 0.0, 1.0)
    slit = np.abs(pts - (start + t * d))
    return float(min(circle.min(), slit.min()))


def _gap_w1(box: BoxSystem1D, pts: np.ndarray) -> float:
    if pts.size == 0:
        return math.inf
    circle = box.radius**2 - np.abs(pts - box.a)
    line = (pts * box._half.conjugate()).imag + box.offset
    return float(min(circle.min(), line.min()))


def box_gap_report(
    a: complex, offset: float = 0.0, samples: int = 128
) -> BoxGapReport:
    """Inclusion margins for the box system at one line offset.

    gap_w0 bounds dist(closure(D0) u closure(D1), bd W0) and gap_w1
    bounds dist(closure(D2), bd W1), both from below by boundary
    sampling; distances to the dividing line and to the circles are
    exact at each sample.
    """
    box = BoxSystem1D.from_param(a, offset=offset)
    e0 = box.sector_boundary("E0", samples)
    e1 = box.sector_boundary("E1", samples)
    d1 = box.d1_boundary(samples)
    g0 = _gap_w0(box, np.concatenate([e0, d1]), samples)
    g1 = _gap_w1(box, e1)
    eps = min(g0, g1)
    return BoxGapReport(
        epsilon=max(eps, 0.0),
        gap_w0=g0,
        gap_w1=g1,
        offset=offset,
        ok=g0 > 0.0 and g1 > 0.0,
    )


def estimate_epsilon(a: complex, samples: int = 128, grid: int = 33) -> float:
    """Best inclusion margin over a sweep of the W1 line offset.

    The useful offsets run from 0 to the arc slack of closure(D2), the
    most the line gap can ever contribute; a coarse sweep is refined
    once around its maximizer.  Returns 0 when no offset makes both
    inclusions strict.
    """
    a = complex(a)
    if not region_member_1d("W1", a):
        # tolerate the boundary curve itself: the limiting case gives ~0
        phi = _phi_upper(a) if a != 0 else 0.0
        on_curve = (
            TWO_THIRDS_PI < phi < 2.0 * TWO_THIRDS_PI
            and abs(abs(a) - w1_boundary_radius(phi))
            <= 1e-9 * max(1.0, abs(a))
        )
        if not on_curve:
            raise ValueError("epsilon estimate needs a in the W1 region")
    box0 = BoxSystem1D.from_param(a)
    e1 = box0.sector_boundary("E1", samples)
    cmax = float((box0.radius**2 - np.abs(e1 - box0.a)).min())
    hi = max(cmax, 1e-9)
    if abs(box0.a) <= box0.radius:
        # the slit start enters closure(D1) once the offset reaches
        # -level(g(a)); stay below so near-boundary parameters resolve
        threshold = -box0.level(box0.a * box0.a + box0.a)
        if threshold > 0.0:
            hi = min(hi, 0.999 * threshold)
    best = 0.0
    lo = 0.0
    for _ in range(2):
        offsets = np.linspace(lo, hi, grid)
        vals = [
            box_gap_report(a, offset=float(c), samples=samples).epsilon
            for c in offsets
        ]
        i = int(np.argmax(vals))
        best = max(best, vals[i])
        lo = float(offsets[max(i - 1, 0)])
        hi = float(offsets[min(i + 1, grid - 1)])
    return best


def code_orbit_G_1d(
    a: complex,
    points: Sequence[complex],
    offset: float = 0.0,
    closed: bool = False,
) -> frozenset:
    """All 3-symbol codings of a finite orbit segment.

    A coding assigns each point a box index k with the point in D_k,
    consecutive indices joined by an edge of the 3-symbol graph; with
    ``closed`` the wrap-around pair must be an edge as well, the right
    reading for periodic segments.  Returns symbol tuples, empty when
    no assignment is admissible.  Raises when a point lies outside
    every box.
    """
    box = BoxSystem1D.from_param(a, offset=offset)
    pts = [complex(p) for p in points]
    if not pts:
        raise ValueError("empty orbit")
    allowed = []
    for p in pts:
        symbols = tuple(
            k for k in (0, 1, 2) if box.member(f"D{k}", p)
        )
        if not symbols:
            raise ValueError(f"orbit point {p} outside the box cover")
        allowed.append(symbols)

    graph = build_graph("G")
    n = len(pts)
    found = set()

    def extend(prefix: list) -> None:
        i = len(prefix)
        if i == n:
            if not closed or graph.is_edge(prefix[-1], prefix[0]):
                found.add(tuple(prefix))
            return
        for s in allowed[i]:
            if i == 0 or graph.is_edge(prefix[-1], s):
                prefix.append(s)
                extend(prefix)
                prefix.pop()

    extend([])
    return frozenset(found)
