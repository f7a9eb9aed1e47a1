"""Sliding block codes: local rules on shift spaces, and exact
injectivity/surjectivity decisions for codes on full shifts.

The package's working codes on the 2-shift are:

* ``code_sigma``: the shift itself (window 1, anticipation 1).
* ``code_C``: the symbol swap 0 <-> 1 (window 1).
* ``code_F``: the window-4 automorphism with local rule
  y = x2 + x0 * (1 + x1) * x3 over the two-element field
  (indices x0..x3 are the window contents, bar(x) = 1 + x).
"""

import itertools
from dataclasses import dataclass
from typing import Mapping, NamedTuple

from henonshoe.symbolic.graphs import Symbol, TransitionGraph, build_graph
from henonshoe.symbolic.words import CyclicWord


@dataclass(frozen=True, eq=False)
class SlidingBlockCode:
    """A local rule y_n = rule[(x_{n+m}, ..., x_{n+m+w-1})].

    ``window`` is w, ``offset`` is the anticipation m.  The rule table
    must be total over window-tuples of the input alphabet.  Treat
    instances as immutable; the rule mapping is never mutated after
    construction.
    """

    in_graph: TransitionGraph
    out_graph: TransitionGraph
    window: int
    offset: int
    rule: Mapping[tuple[Symbol, ...], Symbol]

    def __post_init__(self) -> None:
        if self.window < 1:
            raise ValueError("window must be at least 1")
        alphabet = self.in_graph.vertices
        out_alphabet = set(self.out_graph.vertices)
        for block in itertools.product(alphabet, repeat=self.window):
            if block not in self.rule:
                raise ValueError(f"rule table missing block {block!r}")
            if self.rule[block] not in out_alphabet:
                raise ValueError(f"rule output {self.rule[block]!r} not a symbol")

    def local(self, block: tuple[Symbol, ...]) -> Symbol:
        return self.rule[block]


def apply_block_code(code: SlidingBlockCode, word: CyclicWord) -> CyclicWord:
    """Apply the code to a cyclic word, indices wrapping cyclically."""
    if set(word.graph.vertices) != set(code.in_graph.vertices):
        raise ValueError("word alphabet does not match the code's input alphabet")
    if not code.in_graph.admits(word.symbols, cyclic=True):
        raise ValueError("word not admissible for the code's input graph")
    n = len(word.symbols)
    out = tuple(
        code.local(
            tuple(word.symbols[(i + code.offset + j) % n] for j in range(code.window))
        )
        for i in range(n)
    )
    return CyclicWord(code.out_graph, out)


def compose_block_codes(
    outer: SlidingBlockCode, inner: SlidingBlockCode
) -> SlidingBlockCode:
    """The code acting as outer-after-inner.

    Window is the sum of windows minus 1 and anticipations add.
    """
    if set(inner.out_graph.vertices) != set(outer.in_graph.vertices):
        raise ValueError("inner output alphabet does not match outer input alphabet")
    window = outer.window + inner.window - 1
    rule: dict[tuple[Symbol, ...], Symbol] = {}
    for block in itertools.product(inner.in_graph.vertices, repeat=window):
        mids = tuple(
            inner.local(block[j : j + inner.window]) for j in range(outer.window)
        )
        rule[block] = outer.local(mids)
    return SlidingBlockCode(
        in_graph=inner.in_graph,
        out_graph=outer.out_graph,
        window=window,
        offset=outer.offset + inner.offset,
        rule=rule,
    )


def code_identity(graph: TransitionGraph) -> SlidingBlockCode:
    rule = {(v,): v for v in graph.vertices}
    return SlidingBlockCode(graph, graph, 1, 0, rule)


def code_sigma(graph: TransitionGraph, power: int = 1) -> SlidingBlockCode:
    """The shift (or its inverse for negative ``power``) as a block code."""
    rule = {(v,): v for v in graph.vertices}
    return SlidingBlockCode(graph, graph, 1, power, rule)


def code_C() -> SlidingBlockCode:
    """Symbol swap 0 <-> 1 on the full 2-shift."""
    e = build_graph("E")
    return SlidingBlockCode(e, e, 1, 0, {(0,): 1, (1,): 0})


def code_F() -> SlidingBlockCode:
    """The window-4 automorphism y = x2 + x0*(1+x1)*x3 over GF(2)."""
    e = build_graph("E")
    rule = {}
    for block in itertools.product((0, 1), repeat=4):
        x0, x1, x2, x3 = block
        rule[block] = (x2 + x0 * (1 + x1) * x3) % 2
    return SlidingBlockCode(e, e, 4, 0, rule)


class BijectivityReport(NamedTuple):
    injective: bool
    surjective: bool


def code_bijectivity(code: SlidingBlockCode) -> BijectivityReport:
    """Decide injectivity and surjectivity of the code on the full shift.

    Injectivity: build the pair graph on ordered pairs of (w-1)-blocks,
    with an edge for every pair of single-symbol extensions producing
    equal rule outputs.  The code is non-injective exactly when an
    off-diagonal pair node lies on a bi-infinite path, i.e. survives
    both the iterated deletion of out-degree-0 nodes and the iterated
    deletion of in-degree-0 nodes.

    Surjectivity: exact preimage counting.  On a full shift the code is
    surjective iff every output word of length n has exactly
    |alphabet|^(w-1) preimage words of length n+w-1; imbalance always
    shows at word lengths up to 2w, so those are checked exhaustively.
    """
    return BijectivityReport(
        injective=_pair_graph_injective(code),
        surjective=_balanced_preimages(code),
    )


def _pair_graph_injective(code: SlidingBlockCode) -> bool:
    alphabet = code.in_graph.vertices
    # Window-1 codes have empty history blocks, which hides
    # off-diagonality; view them through an equivalent window-2 rule.
    w = max(code.window, 2)

    def local(block: tuple[Symbol, ...]) -> Symbol:
        return code.local(block[: code.window])

    blocks = list(itertools.product(alphabet, repeat=w - 1))
    nodes = [(u, v) for u in blocks for v in blocks]
    succ: dict[tuple, list[tuple]] = {n: [] for n in nodes}
    pred: dict[tuple, list[tuple]] = {n: [] for n in nodes}
    for u, v in nodes:
        for s in alphabet:
            for t in alphabet:
                if local(u + (s,)) != local(v + (t,)):
                    continue
                nxt = ((u + (s,))[1:], (v + (t,))[1:])
                succ[(u, v)].append(nxt)
                pred[nxt].append((u, v))
    forward = _essential(nodes, succ)
    backward = _essential(nodes, pred)
    return all(u == v for (u, v) in forward & backward)


def _essential(nodes: list[tuple], out_edges: dict[tuple, list[tuple]]) -> set[tuple]:
    """Nodes from which an infinite walk exists: iteratively drop dead ends."""
    alive = set(nodes)
    changed = True
    while changed:
        changed = False
        for n in list(alive):
            if not any(m in alive for m in out_edges[n]):
                alive.discard(n)
                changed = True
    return alive


def _balanced_preimages(code: SlidingBlockCode) -> bool:
    alphabet = code.in_graph.vertices
    w = code.window
    expected = len(alphabet) ** (w - 1)
    out_alphabet = code.out_graph.vertices
    for n in range(1, 2 * w + 1):
        counts: dict[tuple[Symbol, ...], int] = {}
        for x in itertools.product(alphabet, repeat=n + w - 1):
            out = tuple(code.local(x[i : i + w]) for i in range(n))
            counts[out] = counts.get(out, 0) + 1
        if len(counts) != len(out_alphabet) ** n:
            return False
        if any(c != expected for c in counts.values()):
            return False
    return True
