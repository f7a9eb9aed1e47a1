"""The mechanized period-4 class argument.

``theorem2_report`` lifts the twelve period-4 points of the 2-shift to
their joint codings, splits them into the two classes that every
partition-respecting automorphism must preserve or swap, and then
verifies that the window-4 automorphism F straddles the classes.  The
conclusion: F is outside the subgroup generated by the shift, the
symbol swap, and any automorphism acting along the bottom codings.

The two classes are not quoted constants.  They are derived as the
transitive closure of two forced relations on the lifted paths:

* equal bottom words (an automorphism preserving bottom codings cannot
  separate them);
* the symbol-swap image (the swap arises from a loop fixing bottom
  data, so it cannot separate them either).

The class containing the lift of word 0001 is reported first.  Both the
closure and every claimed property are checked independently, and the
test suite pins the resulting class contents against frozen values.
"""

from dataclasses import dataclass

from henonshoe.symbolic.block_codes import apply_block_code, code_C, code_F
from henonshoe.symbolic.graphs import build_graph
from henonshoe.symbolic.lifting import lift_codings, project
from henonshoe.symbolic.words import CyclicWord, periodic_points


@dataclass(frozen=True)
class Theorem2Report:
    period4_count: int
    class_x: frozenset[CyclicWord]
    class_y: frozenset[CyclicWord]
    pi_g_x: frozenset[str]
    pi_g_y: frozenset[str]
    assertions: tuple[tuple[str, bool], ...]
    witnesses: tuple[str, ...]
    passed: bool

    def assertion(self, name: str) -> bool:
        for key, value in self.assertions:
            if key == name:
                return value
        raise KeyError(name)


def _unique_lift(word: CyclicWord) -> CyclicWord:
    lifts = lift_codings(word)
    if len(lifts) != 1:
        raise RuntimeError(f"expected a unique lift for {word.as_string()}")
    (lift,) = lifts
    return lift


def theorem2_report() -> Theorem2Report:
    e_graph = build_graph("E")
    p4 = periodic_points(e_graph, 4, exact=True)
    lifts = {word.symbols: _unique_lift(word) for word in p4}
    paths = sorted(lifts.values(), key=lambda p: p.symbols)

    swap = code_C()
    f_code = code_F()

    def swap_lift(path: CyclicWord) -> CyclicWord:
        top = project(path, "E")
        return lifts[apply_block_code(swap, top).symbols]

    # Union-find over the 12 paths under the two forced relations.
    parent = {p.symbols: p.symbols for p in paths}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    by_bottom: dict[tuple, list[CyclicWord]] = {}
    for p in paths:
        by_bottom.setdefault(project(p, "G").symbols, []).append(p)
    for group in by_bottom.values():
        for p in group[1:]:
            union(group[0].symbols, p.symbols)
    for p in paths:
        union(p.symbols, swap_lift(p).symbols)

    classes: dict[tuple, list[CyclicWord]] = {}
    for p in paths:
        classes.setdefault(find(p.symbols), []).append(p)

    assertions: list[tuple[str, bool]] = []
    witnesses: list[str] = []

    def record(name: str, value: bool, witness: str = "") -> None:
        assertions.append((name, value))
        if not value and witness:
            witnesses.append(f"{name}: {witness}")

    record("two_classes", len(classes) == 2, f"found {len(classes)} classes")
    if len(classes) != 2:
        return Theorem2Report(
            period4_count=len(p4),
            class_x=frozenset(paths),
            class_y=frozenset(),
            pi_g_x=frozenset(),
            pi_g_y=frozenset(),
            assertions=tuple(assertions),
            witnesses=tuple(witnesses),
            passed=False,
        )

    anchor = lifts[(0, 0, 0, 1)].symbols
    roots = sorted(classes, key=lambda r: r != find(anchor))
    class_x = frozenset(classes[roots[0]])
    class_y = frozenset(classes[roots[1]])
    tops_x = {project(p, "E").symbols for p in class_x}
    tops_y = {project(p, "E").symbols for p in class_y}
    pi_g_x = frozenset(project(p, "G").as_string() for p in class_x)
    pi_g_y = frozenset(project(p, "G").as_string() for p in class_y)

    shift_ok = all(p.shift() in class_y for p in class_x) and all(
        p.shift() in class_x for p in class_y
    )
    record(
        "shift_swaps_classes",
        shift_ok,
        next(
            (p.as_string() for p in class_x if p.shift() not in class_y),
            "",
        ),
    )

    swap_ok = all(swap_lift(p) in class_x for p in class_x) and all(
        swap_lift(p) in class_y for p in class_y
    )
    record("symbol_swap_preserves_classes", swap_ok)

    record("bottom_words_distinguish_classes", not (pi_g_x & pi_g_y))

    f_images_of_x = {
        apply_block_code(f_code, CyclicWord(e_graph, t)).symbols for t in tops_x
    }
    record("f_image_meets_first_class", bool(f_images_of_x & tops_x))
    record("f_image_meets_second_class", bool(f_images_of_x & tops_y))

    passed = all(v for _, v in assertions)
    return Theorem2Report(
        period4_count=len(p4),
        class_x=class_x,
        class_y=class_y,
        pi_g_x=pi_g_x,
        pi_g_y=pi_g_y,
        assertions=tuple(assertions),
        witnesses=tuple(witnesses),
        passed=passed,
    )
