"""Loop monodromy on period-N codes, involution and coding-constancy checks.

Continuing every period-N orbit around a closed parameter loop permutes
the orbit set; reading orbits through their codes turns that into a
permutation of code words.  Concatenating loops composes permutations
in reversed order (the action is by conjugacy changes, not by maps on
parameters), which the tests pin directly.
"""

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from henonshoe.continuation.engine import (
    COLLISION_TOL,
    MARGIN_FLOOR,
    CollisionError,
    MarginLossError,
    ParamPath,
    walk_path,
)
from henonshoe.henon import (
    HenonParams,
    code_orbit,
    per_N,
    region_member_2d,
)
from henonshoe.symbolic import (
    CodePermutation,
    build_graph,
    code_C,
    code_F,
    code_sigma,
)


class OrbitTrace(NamedTuple):
    word: tuple
    steps: int
    min_margin: float


@dataclass(frozen=True)
class MonodromyResult:
    base: HenonParams
    N: int
    permutation: CodePermutation | None
    traces: tuple[OrbitTrace, ...]
    status: str
    hov_certified: bool
    note: str = ""


@dataclass(frozen=True)
class InvolutionReport:
    target: HenonParams
    permutation: CodePermutation
    order: int
    real_type: str
    consistent: bool


@dataclass(frozen=True)
class Theorem5Report:
    passed: bool
    permutation: CodePermutation | None
    witness: str


def _validate_base(base: HenonParams) -> None:
    if not base.is_real or base.a.real >= 0:
        raise ValueError("canonical basepoint needs real a < 0 and real b")
    if not region_member_2d("HOV", base):
        raise ValueError("basepoint must lie in HOV")


def _land(finals, orbits, labels):
    """Match continued orbits to base orbits, nearest with 2x rejection."""
    mapping = {}
    for source_label, final in zip(labels, finals):
        ranked = sorted(
            (max(abs(u - v) for u, v in zip(final.y, orbit.y)), k)
            for k, orbit in enumerate(orbits)
        )
        best, index = ranked[0]
        runner = ranked[1][0] if len(ranked) > 1 else float("inf")
        if runner < 2.0 * best:
            raise ValueError(
                "internal inconsistency: ambiguous landing for %r"
                % (source_label,)
            )
        mapping[source_label] = labels[index]
    if len(set(mapping.values())) != len(mapping):
        raise ValueError("internal inconsistency: landing is not bijective")
    return mapping


def monodromy(
    base: HenonParams,
    loop: ParamPath,
    N: int = 6,
    margin_floor: float = MARGIN_FLOOR,
) -> MonodromyResult:
    """Continue Per_N around a closed loop and read off the code action."""
    _validate_base(base)
    if not loop.closed:
        raise ValueError("monodromy needs a closed loop")
    if loop.waypoints[0] != (base.a, base.b):
        raise ValueError("loop must start at the base parameters")
    orbits = per_N(base, N)
    if len(orbits) != 2**N:
        raise ValueError("base orbits are not in general position")
    codes = [next(iter(code_orbit(base, o, "E"))) for o in orbits]
    try:
        finals, steps, margins, hov = walk_path(
            list(orbits),
            loop,
            margin_floor=margin_floor,
            collision_tol=COLLISION_TOL,
        )
    except CollisionError as exc:
        return MonodromyResult(
            base=base,
            N=N,
            permutation=None,
            traces=(),
            status="collision",
            hov_certified=False,
            note=str(exc),
        )
    except MarginLossError as exc:
        return MonodromyResult(
            base=base,
            N=N,
            permutation=None,
            traces=(),
            status="left_horseshoe_evidence",
            hov_certified=False,
            note=str(exc),
        )
    permutation = CodePermutation.from_mapping(_land(finals, orbits, codes))
    if not permutation.commutes_with_shift():
        raise ValueError("internal inconsistency: action breaks shift")
    if not permutation.preserves_primitive_period():
        raise ValueError("internal inconsistency: primitive period changed")
    traces = tuple(
        OrbitTrace(word=code, steps=steps, min_margin=margin)
        for code, margin in zip(codes, margins)
    )
    return MonodromyResult(
        base=base,
        N=N,
        permutation=permutation,
        traces=traces,
        status="ok",
        hov_certified=hov,
    )


def _require_horseshoe_waypoints(path: ParamPath) -> None:
    for wa, wb in path.waypoints:
        params = HenonParams(wa, wb)
        if region_member_2d("HOV", params):
            continue
        from henonshoe.scanner import classify_parameter

        if not classify_parameter(params).verdict.startswith("horseshoe"):
            raise ValueError(
                "waypoint a=%s b=%s is not certified horseshoe" % (wa, wb)
            )


def hat_loop_report(
    base: HenonParams,
    path: ParamPath,
    N: int = 6,
    margin_floor: float = MARGIN_FLOOR,
) -> InvolutionReport:
    """Monodromy of path * conjugate(path reversed), with type cross-check."""
    _validate_base(base)
    if path.waypoints[0] != (base.a, base.b):
        raise ValueError("path must start at the base parameters")
    target = path.end
    if not target.is_real:
        raise ValueError("path must end at real parameters")
    _require_horseshoe_waypoints(path)
    mirrored = tuple(
        (a.conjugate(), b.conjugate()) for a, b in reversed(path.waypoints)
    )
    hat = ParamPath(
        waypoints=path.waypoints + mirrored[1:],
        closed=True,
        max_step=path.max_step,
        min_step=path.min_step,
        backoff=path.backoff,
    )
    result = monodromy(base, hat, N, margin_floor=margin_floor)
    if result.status != "ok":
        raise ArithmeticError(
            "hat loop continuation failed: %s (%s)"
            % (result.status, result.note)
        )
    order = result.permutation.order()
    if order > 2:
        raise ValueError("contract violation: hat monodromy has order > 2")
    from henonshoe.henon import classify_real_type

    real_type = classify_real_type(target, N).label
    consistent = (order == 1) == (real_type == "type1")
    return InvolutionReport(
        target=target,
        permutation=result.permutation,
        order=order,
        real_type=real_type,
        consistent=consistent,
    )


def match_automorphism(
    perm: CodePermutation, generator_budget: int = 4
) -> str | None:
    """Shortest word in {C, F, s} inducing the given period-N action.

    Letters apply left to right; ``s`` is the shift.  Returns the empty
    string for the identity and None when no word within the budget
    matches.
    """
    n = len(perm.domain[0])
    graph = build_graph("E")
    generators = {
        "C": CodePermutation.from_block_code(code_C(), n),
        "F": CodePermutation.from_block_code(code_F(), n),
        "s": CodePermutation.from_block_code(code_sigma(graph), n),
    }
    identity = CodePermutation.identity(perm.domain)
    frontier = [("", identity)]
    seen = {identity.pairs}
    for _ in range(generator_budget):
        grown = []
        for name, current in frontier:
            if current == perm:
                return name
            for letter, gen in generators.items():
                nxt = gen.after(current)
                if nxt.pairs in seen:
                    continue
                seen.add(nxt.pairs)
                grown.append((name + letter, nxt))
        frontier = grown
    for name, current in frontier:
        if current == perm:
            return name
    return None


def theorem5_check(
    loop: ParamPath,
    N: int = 6,
    margin_floor: float = MARGIN_FLOOR,
) -> Theorem5Report:
    """Coding constancy around a loop inside the W2 region.

    Every waypoint must be a W2 member; there the box inclusions hold
    with positive margin, so each continued orbit must keep its graph
    coding set and the landing permutation must preserve codings
    fiberwise.  Any change is reported as a failure witness.
    """
    if not loop.closed:
        raise ValueError("theorem5_check needs a closed loop")
    for wa, wb in loop.waypoints:
        if not region_member_2d("W2", HenonParams(wa, wb)):
            raise ValueError(
                "waypoint a=%s b=%s is outside W2" % (wa, wb)
            )
    base = loop.start
    orbits = per_N(base, N)
    if len(orbits) != 2**N:
        raise ValueError("base orbits are not in general position")
    words = list(itertools.product((0, 1), repeat=N))
    start_codes = [code_orbit(base, o, "G") for o in orbits]
    finals, _, _, _ = walk_path(
        list(orbits),
        loop,
        margin_floor=margin_floor,
        collision_tol=COLLISION_TOL,
    )
    mapping = _land(finals, orbits, words)
    permutation = CodePermutation.from_mapping(mapping)
    by_word = dict(zip(words, start_codes))
    for word, final, codes in zip(words, finals, start_codes):
        end_codes = code_orbit(base, final, "G")
        if end_codes != codes:
            return Theorem5Report(
                passed=False,
                permutation=permutation,
                witness="coding of word %r changed: %r -> %r"
                % (word, sorted(codes), sorted(end_codes)),
            )
        landed = by_word[mapping[word]]
        if landed != codes:
            return Theorem5Report(
                passed=False,
                permutation=permutation,
                witness="landing of word %r does not preserve codings"
                % (word,),
            )
    return Theorem5Report(passed=True, permutation=permutation, witness="")
