"""Cyclic words: phase-marked periodic points of a transition graph."""

from dataclasses import dataclass

from henonshoe.symbolic.graphs import Symbol, TransitionGraph


@dataclass(frozen=True)
class CyclicWord:
    """A closed path in a transition graph, with a marked phase.

    The stored tuple begins at the distinguished phase, so two
    rotations of the same cycle are distinct values (points, not
    orbits).  Admissibility, including the wrap-around edge, is checked
    at construction.
    """

    graph: TransitionGraph
    symbols: tuple[Symbol, ...]

    def __post_init__(self) -> None:
        if len(self.symbols) < 1:
            raise ValueError("empty cyclic word")
        if not self.graph.admits(self.symbols, cyclic=True):
            raise ValueError(
                f"word {self.symbols!r} is not a closed path of graph {self.graph.name}"
            )

    def __len__(self) -> int:
        return len(self.symbols)

    @property
    def primitive_period(self) -> int:
        """Smallest d dividing len(self) with rotation by d the identity."""
        n = len(self.symbols)
        for d in range(1, n + 1):
            if n % d == 0 and self.symbols == self.symbols[d:] + self.symbols[:d]:
                return d
        return n

    def shift(self, k: int = 1) -> "CyclicWord":
        """Rotate left by k: phase moves one step along the sequence."""
        n = len(self.symbols)
        k %= n
        return CyclicWord(self.graph, self.symbols[k:] + self.symbols[:k])

    def repeat(self, times: int) -> "CyclicWord":
        return CyclicWord(self.graph, self.symbols * times)

    def as_string(self) -> str:
        return "".join(str(s) for s in self.symbols)


def periodic_points(
    graph: TransitionGraph, n: int, exact: bool = False
) -> frozenset[CyclicWord]:
    """All closed paths of length ``n``, phase-distinct.

    With ``exact`` the result is filtered to primitive period exactly
    ``n``.  The returned set is closed under the shift.
    """
    if n < 1:
        raise ValueError("period must be at least 1")
    found: list[CyclicWord] = []
    for start in graph.vertices:
        stack: list[tuple[Symbol, ...]] = [(start,)]
        while stack:
            path = stack.pop()
            if len(path) == n:
                if graph.is_edge(path[-1], start):
                    found.append(CyclicWord(graph, path))
                continue
            for nxt in graph.successors(path[-1]):
                stack.append(path + (nxt,))
    if exact:
        found = [w for w in found if w.primitive_period == n]
    return frozenset(found)
