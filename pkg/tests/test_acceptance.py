"""Acceptance gate: one end-to-end check per shipped guarantee, in order.

Each test is a single pass/fail line under pytest -v.  Runtime limits
are part of the contract and asserted with wall-clock budgets; exact
claims are asserted with equality, not tolerances, unless a tolerance
is stated.
"""

import cmath
import math
import time
from functools import lru_cache

from henonshoe.continuation import (
    ParamPath,
    hat_loop_report,
    monodromy,
    theorem5_check,
)
from henonshoe.henon import (
    HenonParams,
    code_orbit,
    orbit_multipliers,
    per_N,
    per_N_words,
)
from henonshoe.onedim import (
    critical_green_h,
    region_member_1d,
    theta_loop_integral,
)
from henonshoe.scanner import (
    ScanOptions,
    ScanWindow,
    classify_parameter,
    fig9_overlay,
    scan_window,
)
from henonshoe.symbolic import (
    CodePermutation,
    CyclicWord,
    apply_block_code,
    build_graph,
    code_bijectivity,
    code_C,
    code_F,
    theorem2_report,
)

BASE = HenonParams(-6.0, 0.2)

A_CIRCLE = ParamPath(
    waypoints=((-6.0, 0.2),)
    + tuple(
        (6.0 * cmath.exp(1j * math.pi * (1.0 + 2.0 * k / 48.0)), 0.2)
        for k in range(1, 48)
    )
    + ((-6.0, 0.2),),
    closed=True,
    max_step=0.2,
)

B_CIRCLE = ParamPath(
    waypoints=((-6.0, 0.2),)
    + tuple(
        (-6.0, 0.2 * cmath.exp(2j * math.pi * k / 24.0)) for k in range(1, 24)
    )
    + ((-6.0, 0.2),),
    closed=True,
    max_step=0.2,
)


@lru_cache(maxsize=None)
def rho(which: str) -> CodePermutation:
    loops = {"a": A_CIRCLE, "b": B_CIRCLE}
    result = monodromy(BASE, loops[which], N=4)
    assert result.status == "ok"
    return result.permutation


def test_brown_code_acts_on_period_four_words():
    graph = build_graph("E")
    code = code_F()
    apply_block_code(code, CyclicWord(graph, (0, 0, 0, 1)))
    start = time.perf_counter()
    first = apply_block_code(code, CyclicWord(graph, (0, 0, 0, 1)))
    second = apply_block_code(code, CyclicWord(graph, (0, 0, 1, 1)))
    elapsed = time.perf_counter() - start
    assert first.symbols == (0, 1, 0, 0)
    assert second.symbols == (1, 1, 0, 1)
    assert elapsed < 0.001


def test_period_four_coding_classes_report_passes():
    start = time.perf_counter()
    report = theorem2_report()
    elapsed = time.perf_counter() - start
    assert report.passed
    assert [name for name, ok in report.assertions if not ok] == []
    assert report.period4_count == 12
    assert len(report.class_x) == 6
    assert len(report.class_y) == 6
    assert report.pi_g_x == frozenset({"0012", "1200", "2121"})
    assert report.pi_g_y == frozenset({"0120", "1212", "2001"})
    assert elapsed < 1.0


def test_brown_code_is_bijective():
    start = time.perf_counter()
    report = code_bijectivity(code_F())
    elapsed = time.perf_counter() - start
    assert report.injective is True
    assert report.surjective is True
    assert elapsed < 10.0


def test_winding_integral_matches_full_turn():
    start = time.perf_counter()
    value = theta_loop_integral(3, 2048)
    elapsed = time.perf_counter() - start
    assert abs(value - 2.0 * math.pi) / (2.0 * math.pi) < 0.01
    assert elapsed < 5.0


def test_circle_loops_give_swap_and_identity():
    swap = CodePermutation.from_block_code(code_C(), 4)
    start = time.perf_counter()
    around_a = rho("a")
    elapsed_a = time.perf_counter() - start
    start = time.perf_counter()
    around_b = rho("b")
    elapsed_b = time.perf_counter() - start
    assert around_a == swap
    assert around_b.is_identity()
    assert elapsed_a < 60.0
    assert elapsed_b < 60.0


def test_loop_concatenation_reverses_composition():
    joined = ParamPath(
        waypoints=A_CIRCLE.waypoints + B_CIRCLE.waypoints[1:],
        closed=True,
        max_step=0.2,
    )
    result = monodromy(BASE, joined, N=4)
    assert result.status == "ok"
    assert result.permutation == rho("b").after(rho("a"))


def test_orbit_census_is_complete_and_hyperbolic():
    start = time.perf_counter()
    graph = build_graph("E")
    for n in range(1, 7):
        pairs = per_N_words(BASE, n)
        assert len(pairs) == 2**n
        read_off = []
        for word, orbit in pairs:
            assert orbit_multipliers(orbit).margin > 0.0
            codes = code_orbit(BASE, orbit, "E")
            assert codes == frozenset({word})
            read_off.append(word)
        assert len(set(read_off)) == 2**n
        assert all(graph.admits(w, cyclic=True) for w in read_off)
    assert time.perf_counter() - start < 60.0


def test_real_targets_split_into_identity_and_swap():
    segment = ParamPath(
        waypoints=((-6.0, 0.2), (-5.5, 0.2), (-5.0, 0.2)), closed=False
    )
    flat = hat_loop_report(BASE, segment, N=4)
    assert flat.permutation.is_identity()
    assert flat.order == 1
    assert flat.real_type == "type1"
    assert flat.consistent

    semicircle = ParamPath(
        waypoints=((-6.0, 0.2),)
        + tuple(
            (6.0 * cmath.exp(1j * math.pi * (1.0 - k / 24.0)), 0.2)
            for k in range(1, 25)
        ),
        closed=False,
        max_step=0.2,
    )
    crossed = hat_loop_report(BASE, semicircle, N=4)
    assert crossed.permutation == CodePermutation.from_block_code(code_C(), 4)
    assert crossed.order == 2
    assert crossed.real_type == "type2"
    assert crossed.consistent


def test_small_loop_near_tangency_is_trivial():
    mids = tuple(
        (-2.3 + 0.02 * cmath.exp(2j * math.pi * k / 24.0), 0.05)
        for k in range(1, 24)
    )
    loop = ParamPath(
        waypoints=((-2.28, 0.05),) + mids + ((-2.28, 0.05),), closed=True
    )
    report = theorem5_check(loop, N=4)
    assert report.passed
    assert report.permutation.is_identity()
    assert report.witness == ""


def test_real_axis_region_memberships():
    assert region_member_1d("W1", -2.0) is True
    assert region_member_1d("W1", -0.5) is False
    assert region_member_1d("W1", -1.0) is False
    assert fig9_overlay(-2.0, 0.0, 1e-9)
    assert not fig9_overlay(-1.0, 0.0, 0.02)


def test_parameter_plane_scan_properties():
    window = ScanWindow(0.2, -2.6, -1.0, -0.7, 0.7, 200, 175, ScanOptions())
    start = time.perf_counter()
    result = scan_window(window)
    elapsed = time.perf_counter() - start
    verdicts = result.verdicts()
    flat = {v for row in verdicts for v in row}
    assert "not_horseshoe" in flat
    assert "horseshoe_evidence" in flat
    # the hov bound 2(1.2)^2 = 2.88 exceeds every |a| in this window,
    # so the claim is checked pixelwise and holds without exceptions
    for row in range(175):
        for col in range(200):
            if abs(window.pixel_center(col, row)) > 2.88:
                assert verdicts[row][col] == "horseshoe_hov"
    for row in range(175):
        assert verdicts[row] == verdicts[174 - row]
    pixel = classify_parameter(HenonParams(-1.2, 0.05))
    assert pixel.verdict == "not_horseshoe"
    assert pixel.witness.kind == "attracting_orbit"
    assert elapsed < 600.0


def test_conjugation_equivariance():
    for region in ("HOV1", "W1", "M"):
        for a in (-2.5 + 0.3j, -1.1 - 0.2j, 0.25 + 0.1j):
            assert region_member_1d(region, a) == region_member_1d(
                region, a.conjugate()
            )
    for a in (-2.5 + 0.3j, -2.05 - 0.15j):
        direct = critical_green_h(a).value
        mirrored = critical_green_h(a.conjugate()).value
        assert abs(direct - mirrored) < 1e-8
    opts = ScanOptions(n_max=3)
    for a in (-2.4 + 0.2j, -1.5 + 0.4j, -2.1 - 0.3j):
        upper = classify_parameter(HenonParams(a, 0.2), opts)
        lower = classify_parameter(HenonParams(a.conjugate(), 0.2), opts)
        assert upper.verdict == lower.verdict
    plain = per_N(HenonParams(-2.5, 0.1 + 0.2j), 3)
    mirrored = per_N(HenonParams(-2.5, 0.1 - 0.2j), 3)
    assert len(plain) == len(mirrored) == 8
    for orbit in plain:
        flipped = tuple(v.conjugate() for v in orbit.y)
        nearest = min(
            max(abs(u - v) for u, v in zip(flipped, other.y))
            for other in mirrored
        )
        assert nearest < 1e-8
