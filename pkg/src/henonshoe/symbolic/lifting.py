"""Lifting 2-shift words to joint codings and projecting back down.

A cyclic word on ``E`` lifts to the closed paths of ``Ghat`` with that
top row.  Every word has exactly one or exactly two lifts; two occur
precisely for the all-1s words, whose lifts alternate between (1,1) and
(1,2) and therefore need even length.  When no closed lift of the
word's own length exists, the doubled word is lifted instead.
"""

from henonshoe.symbolic.graphs import Symbol, build_graph
from henonshoe.symbolic.words import CyclicWord


def lift_codings(top_word: CyclicWord) -> frozenset[CyclicWord]:
    """All closed Ghat paths (length N or 2N) projecting onto ``top_word``."""
    if top_word.graph.name != "E":
        raise ValueError("lift_codings expects a word on graph E")
    ghat = build_graph("Ghat")
    paths = _closed_lifts(ghat, top_word.symbols)
    if not paths:
        paths = _closed_lifts(ghat, top_word.symbols * 2)
    if not paths:
        raise RuntimeError(
            f"no closed lift for {top_word.as_string()}: contract violation"
        )
    return frozenset(CyclicWord(ghat, p) for p in paths)


def project(path: CyclicWord, which: str) -> CyclicWord:
    """Project a Ghat path to its top (``E``) or bottom (``G``) word."""
    if path.graph.name != "Ghat":
        raise ValueError("project expects a word on graph Ghat")
    if which == "E":
        coord = 0
    elif which == "G":
        coord = 1
    else:
        raise ValueError(f"unknown projection {which!r}")
    return CyclicWord(build_graph(which), tuple(s[coord] for s in path.symbols))


def _closed_lifts(ghat, tops: tuple[Symbol, ...]) -> list[tuple]:
    n = len(tops)
    levels = [tuple(v for v in ghat.vertices if v[0] == tops[i]) for i in range(n)]
    paths: list[tuple] = []
    for start in levels[0]:
        # Forward reachability pruning, then backtrack over survivors.
        reach = [{start}]
        for i in range(1, n):
            reach.append(
                {
                    v
                    for v in levels[i]
                    if any(ghat.is_edge(u, v) for u in reach[i - 1])
                }
            )
        stack = [(start,)]
        while stack:
            path = stack.pop()
            i = len(path)
            if i == n:
                if ghat.is_edge(path[-1], start):
                    paths.append(path)
                continue
            for v in reach[i]:
                if ghat.is_edge(path[-1], v):
                    stack.append(path + (v,))
    return paths
