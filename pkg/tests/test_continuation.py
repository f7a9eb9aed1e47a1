"""Tests for parameter-path continuation and loop monodromy on codes."""

import cmath
import math
import random

import pytest

from henonshoe.continuation import (
    CollisionError,
    MarginLossError,
    ParamPath,
    continue_orbit,
    hat_loop_report,
    match_automorphism,
    monodromy,
    theorem5_check,
    walk_path,
)
from henonshoe.henon import HenonParams, solve_periodic_orbit
from henonshoe.symbolic import CodePermutation, code_C, code_F

BASE = HenonParams(-6.0, 0.2)


def closed_loop(mids, start=(-6.0, 0.2), **kw):
    """Close a loop through exact copies of the start point."""
    return ParamPath(
        waypoints=(start,) + tuple(mids) + (start,), closed=True, **kw
    )


def a_circle(m=48, winding=1, b=0.2, **kw):
    mids = tuple(
        (6 * cmath.exp(1j * (math.pi + 2 * math.pi * winding * k / m)), b)
        for k in range(1, m)
    )
    return closed_loop(mids, start=(-6.0, b), **kw)


def b_circle(m=32, winding=1, radius=0.2, **kw):
    mids = tuple(
        (-6.0, radius * cmath.exp(2j * math.pi * winding * k / m))
        for k in range(1, m)
    )
    return closed_loop(mids, start=(-6.0, radius), **kw)


HOV_CIRCLE = monodromy(BASE, a_circle(m=48, max_step=0.2), N=4)


def test_param_path_validation():
    with pytest.raises(ValueError):
        ParamPath(waypoints=())
    with pytest.raises(ValueError):
        ParamPath(waypoints=((-6.0, 0.2), (-6.0, 0.2)))
    with pytest.raises(ValueError):
        ParamPath(waypoints=((-6.0, 0.2), (-5.0, 0.2)), closed=True)
    with pytest.raises(ValueError):
        ParamPath(waypoints=((-6.0, 0.2),), min_step=0.5, max_step=0.1)
    with pytest.raises(ValueError):
        ParamPath(waypoints=((-6.0, 0.2),), backoff=1.0)
    with pytest.raises(ValueError):
        ParamPath(waypoints=((-6.0, 0.2),)).refined(-1.0)


def test_param_path_endpoints_and_conjugate():
    path = ParamPath(waypoints=((-6.0, 0.2), (-5.0 + 1.0j, 0.2)))
    assert path.start == HenonParams(-6.0 + 0.0j, 0.2 + 0.0j)
    assert path.end.a == -5.0 + 1.0j
    mirror = path.conjugate()
    assert mirror.waypoints[1] == (-5.0 - 1.0j, 0.2 - 0.0j)
    finer = path.refined(0.5)
    assert finer.max_step == 0.05
    assert finer.waypoints == path.waypoints


def test_constant_loop_gives_identity():
    loop = ParamPath(waypoints=((-6.0, 0.2),), closed=True)
    res = monodromy(BASE, loop, N=3)
    assert res.status == "ok"
    assert res.permutation.is_identity()
    assert res.hov_certified
    assert len(res.traces) == 8
    assert all(t.steps == 0 for t in res.traces)
    assert all(t.min_margin > 0 for t in res.traces)


def test_line_continuation_hits_other_fixed_point():
    fp = solve_periodic_orbit(BASE, 1, (3.12,))
    path = ParamPath(waypoints=((-6.0, 0.2), (-5.0, 0.2)))
    moved = continue_orbit(fp, path)
    # largest root of x*x - 1.2*x - 5 = 0
    assert abs(moved.y[0] - 2.9151673805580454) < 1e-8
    assert moved.params.a == -5.0

    with pytest.raises(ValueError):
        continue_orbit(fp, ParamPath(waypoints=((-5.0, 0.2), (-4.0, 0.2))))


def test_margin_loss_on_the_way_to_a_period_doubling():
    start = HenonParams(-6.0, 0.05)
    two = solve_periodic_orbit(start, 2, (1.8, -2.8))
    path = ParamPath(waypoints=((-6.0, 0.05), (-1.2, 0.05)))
    with pytest.raises(MarginLossError) as info:
        continue_orbit(two, path)
    # the cycle loses hyperbolicity near a = -1.3, before the endpoint
    assert -1.45 < info.value.params.a.real < -1.25
    assert info.value.params.b == 0.05


def test_hov_circle_monodromy_is_the_symbol_swap():
    res = HOV_CIRCLE
    assert res.status == "ok"
    assert res.hov_certified
    swap = CodePermutation.from_block_code(code_C(), 4)
    assert res.permutation == swap
    assert res.permutation.order() == 2
    assert len(res.traces) == 16
    assert res.traces[0].steps == 192
    assert all(t.steps == 192 for t in res.traces)
    assert all(t.min_margin > 0.01 for t in res.traces)
    assert match_automorphism(res.permutation) == "C"


def test_b_circle_monodromy_is_trivial():
    res = monodromy(BASE, b_circle(m=32, max_step=0.2), N=4)
    assert res.status == "ok"
    assert res.permutation.is_identity()
    assert match_automorphism(res.permutation) == ""


def test_concatenation_composes_in_reverse_order():
    g1 = a_circle(m=32, max_step=0.2)
    g2 = b_circle(m=24, max_step=0.2)
    both = ParamPath(
        waypoints=g1.waypoints + g2.waypoints[1:], closed=True, max_step=0.2
    )
    r1 = monodromy(BASE, g1, N=3)
    r2 = monodromy(BASE, g2, N=3)
    r12 = monodromy(BASE, both, N=3)
    assert r12.permutation == r2.permutation.after(r1.permutation)
    assert not r1.permutation.is_identity()
    assert r12.permutation == r1.permutation


def test_concatenation_law_on_random_loop_pairs():
    rng = random.Random(31)

    def random_loop():
        if rng.random() < 0.5:
            return a_circle(
                m=12, winding=rng.choice((1, -1, 2)), max_step=0.3
            )
        return b_circle(
            m=12,
            winding=rng.choice((1, -1, 2)),
            radius=0.2,
            max_step=0.3,
        )

    for _ in range(10):
        g1 = random_loop()
        g2 = random_loop()
        both = ParamPath(
            waypoints=g1.waypoints + g2.waypoints[1:],
            closed=True,
            max_step=0.3,
        )
        r1 = monodromy(BASE, g1, N=2)
        r2 = monodromy(BASE, g2, N=2)
        r12 = monodromy(BASE, both, N=2)
        assert r12.permutation == r2.permutation.after(r1.permutation)


def test_conjugate_loop_has_equal_action_at_real_base():
    loop = a_circle(m=32, max_step=0.2)
    plain = monodromy(BASE, loop, N=3)
    mirror = monodromy(BASE, loop.conjugate(), N=3)
    assert plain.permutation == mirror.permutation


def test_refined_path_keeps_the_permutation():
    loop = a_circle(m=32, max_step=0.2)
    coarse = monodromy(BASE, loop, N=3)
    fine = monodromy(BASE, loop.refined(0.5), N=3)
    assert fine.permutation == coarse.permutation
    assert fine.traces[0].steps == 2 * coarse.traces[0].steps


def test_monodromy_input_validation():
    loop = ParamPath(waypoints=((-6.0, 0.2),), closed=True)
    with pytest.raises(ValueError):
        monodromy(HenonParams(-6.0 + 0.1j, 0.2), loop, N=2)
    with pytest.raises(ValueError):
        monodromy(HenonParams(6.0, 0.2), loop, N=2)
    with pytest.raises(ValueError):
        monodromy(HenonParams(-2.3, 0.2), loop, N=2)
    with pytest.raises(ValueError):
        monodromy(BASE, ParamPath(waypoints=((-6.0, 0.2), (-5.0, 0.2))), N=2)
    with pytest.raises(ValueError):
        monodromy(
            BASE,
            ParamPath(waypoints=((-5.0, 0.2),), closed=True),
            N=2,
        )


def test_leaving_the_horseshoe_is_reported_not_raised():
    start = HenonParams(-6.0, 0.05)
    dip = closed_loop(((-0.9, 0.05),), start=(-6.0, 0.05))
    res = monodromy(start, dip, N=2)
    assert res.status == "left_horseshoe_evidence"
    assert res.permutation is None
    assert res.traces == ()
    assert not res.hov_certified
    assert "margin" in res.note


def test_walk_path_rejects_colliding_orbits():
    start = HenonParams(-6.0, 0.05)
    fp = solve_periodic_orbit(start, 1, (3.0,))
    seg = ParamPath(waypoints=((-6.0, 0.05), (-5.5, 0.05)))
    with pytest.raises(CollisionError):
        walk_path([fp, fp], seg)


def test_match_automorphism_names():
    swap = CodePermutation.from_block_code(code_C(), 4)
    assert match_automorphism(swap) == "C"
    assert match_automorphism(CodePermutation.identity(swap.domain)) == ""
    wave = CodePermutation.from_block_code(code_F(), 4)
    assert match_automorphism(wave) == "F"


def test_match_automorphism_rejects_alien_permutation():
    words = list(CodePermutation.from_block_code(code_C(), 4).domain)
    mapping = {w: w for w in words}
    mapping[(0, 0, 0, 0)] = (0, 0, 0, 1)
    mapping[(0, 0, 0, 1)] = (0, 0, 0, 0)
    alien = CodePermutation.from_mapping(mapping)
    assert match_automorphism(alien, generator_budget=3) is None


def test_theorem5_on_a_small_interior_circle():
    mids = tuple(
        (-2.3 + 0.02 * cmath.exp(2j * math.pi * k / 24), 0.05)
        for k in range(1, 24)
    )
    loop = closed_loop(mids, start=(-2.28, 0.05))
    report = theorem5_check(loop, N=4)
    assert report.passed
    assert report.permutation.is_identity()
    assert report.witness == ""


def test_theorem5_constant_loop_passes():
    loop = ParamPath(waypoints=((-2.3, 0.05),), closed=True)
    report = theorem5_check(loop, N=3)
    assert report.passed
    assert report.permutation.is_identity()


def test_theorem5_requires_w2_waypoints():
    with pytest.raises(ValueError):
        theorem5_check(a_circle(m=24), N=2)
    with pytest.raises(ValueError):
        theorem5_check(
            ParamPath(waypoints=((-2.3, 0.05), (-2.31, 0.05))), N=2
        )


def test_hat_report_for_a_real_segment_is_trivial():
    path = ParamPath(waypoints=((-6.0, 0.2), (-5.5, 0.2), (-5.0, 0.2)))
    report = hat_loop_report(BASE, path, N=4)
    assert report.order == 1
    assert report.permutation.is_identity()
    assert report.real_type == "type1"
    assert report.consistent
    assert report.target == HenonParams(-5.0, 0.2)


def test_hat_report_for_the_upper_semicircle_is_the_swap():
    mids = tuple(
        (6.0 * cmath.exp(1j * math.pi * (1.0 - k / 24)), 0.2)
        for k in range(1, 24)
    )
    path = ParamPath(
        waypoints=((-6.0, 0.2),) + mids + ((6.0, 0.2),), max_step=0.2
    )
    report = hat_loop_report(BASE, path, N=4)
    assert report.permutation == CodePermutation.from_block_code(code_C(), 4)
    assert report.order == 2
    assert report.real_type == "type2"
    assert report.consistent


def test_hat_report_validation():
    with pytest.raises(ValueError):
        hat_loop_report(
            BASE,
            ParamPath(waypoints=((-6.0, 0.2), (-5.0 + 0.3j, 0.2))),
            N=2,
        )
    with pytest.raises(ValueError):
        hat_loop_report(
            HenonParams(-5.9, 0.2),
            ParamPath(waypoints=((-6.0, 0.2), (-5.0, 0.2))),
            N=2,
        )
