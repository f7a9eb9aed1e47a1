"""Finite transition graphs underlying the package's shift spaces.

Four graphs are built by name:

* ``E``: the complete graph on {0, 1}; its shift space is the full
  2-shift.
* ``G``: the 3-box transition graph on {0, 1, 2} with edges
  0->0, 0->1, 1->2, 2->0, 2->1.  The only edge out of 1 is 1->2.
* ``G0``: the graph on {0, 1} with edges 0->0, 0->1, 1->0; its 2-block
  extension is edge-isomorphic to ``G`` under 00->0, 01->1, 10->2.
* ``Ghat``: the joint graph whose vertices are the compatible
  (E-symbol, G-symbol) pairs (0,0), (0,1), (1,1), (1,2), and whose two
  coordinate projections are graph morphisms onto ``E`` and ``G``.

The ``Ghat`` edge set is not free data: it is the unique 8-edge set for
which both projections are morphisms onto their targets and which is
consistent with the joint codings of all period-4 points.  The test
suite re-derives it from those constraints rather than trusting the
constant below.
"""

from dataclasses import dataclass
from typing import Hashable

Symbol = Hashable

_E_EDGES = ((0, 0), (0, 1), (1, 0), (1, 1))
_G_EDGES = ((0, 0), (0, 1), (1, 2), (2, 0), (2, 1))
_G0_EDGES = ((0, 0), (0, 1), (1, 0))

GHAT_VERTICES = ((0, 0), (0, 1), (1, 1), (1, 2))

# Derived, not quoted: forced by the morphism conditions (see module
# docstring). Sources (0,0) and (1,2) fan out to every non-(1,2) vertex;
# (0,1) and (1,1) feed only (1,2).
_GHAT_EDGES = (
    ((0, 0), (0, 0)),
    ((0, 0), (0, 1)),
    ((0, 0), (1, 1)),
    ((1, 2), (0, 0)),
    ((1, 2), (0, 1)),
    ((1, 2), (1, 1)),
    ((0, 1), (1, 2)),
    ((1, 1), (1, 2)),
)


@dataclass(frozen=True)
class TransitionGraph:
    """Directed graph on a finite symbol alphabet.

    Invariants enforced at construction: edge endpoints are declared
    vertices, there are no duplicate vertices, and every vertex has
    in-degree and out-degree at least 1 (no stranded symbols).
    """

    name: str
    vertices: tuple[Symbol, ...]
    edges: frozenset[tuple[Symbol, Symbol]]

    def __post_init__(self) -> None:
        declared = set(self.vertices)
        if len(declared) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        for u, v in self.edges:
            if u not in declared or v not in declared:
                raise ValueError(f"edge ({u!r}, {v!r}) uses an undeclared vertex")
        for v in self.vertices:
            if not any(e[0] == v for e in self.edges):
                raise ValueError(f"vertex {v!r} has no outgoing edge")
            if not any(e[1] == v for e in self.edges):
                raise ValueError(f"vertex {v!r} has no incoming edge")

    def is_edge(self, u: Symbol, v: Symbol) -> bool:
        return (u, v) in self.edges

    def successors(self, u: Symbol) -> tuple[Symbol, ...]:
        """Out-neighbors of ``u`` in declared vertex order."""
        return tuple(v for v in self.vertices if (u, v) in self.edges)

    def predecessors(self, v: Symbol) -> tuple[Symbol, ...]:
        return tuple(u for u in self.vertices if (u, v) in self.edges)

    def admits(self, symbols: tuple[Symbol, ...], cyclic: bool = True) -> bool:
        """Whether consecutive symbol pairs are all edges.

        A length-1 word is admissible as a path; cyclically it needs a
        self-loop.
        """
        for i in range(len(symbols) - 1):
            if (symbols[i], symbols[i + 1]) not in self.edges:
                return False
        if cyclic and symbols:
            return (symbols[-1], symbols[0]) in self.edges
        return True


def build_graph(tag: str) -> TransitionGraph:
    """Return one of the named graphs ``E``, ``G``, ``G0``, ``Ghat``."""
    if tag == "E":
        return TransitionGraph("E", (0, 1), frozenset(_E_EDGES))
    if tag == "G":
        return TransitionGraph("G", (0, 1, 2), frozenset(_G_EDGES))
    if tag == "G0":
        return TransitionGraph("G0", (0, 1), frozenset(_G0_EDGES))
    if tag == "Ghat":
        return TransitionGraph("Ghat", GHAT_VERTICES, frozenset(_GHAT_EDGES))
    raise ValueError(f"unknown graph tag {tag!r}")


def two_block_extension(graph: TransitionGraph) -> TransitionGraph:
    """The 2-block recoding: vertices are edges, edges are length-2 paths."""
    vertices = tuple(sorted(graph.edges))
    edges = frozenset(
        ((u, v), (v, w))
        for (u, v) in graph.edges
        for (x, w) in graph.edges
        if x == v
    )
    return TransitionGraph(f"{graph.name}^2", vertices, edges)


def projection_is_morphism(
    joint: TransitionGraph, target: TransitionGraph, coord: int
) -> bool:
    """Check that the ``coord`` projection maps ``joint`` onto ``target``.

    Requires every projected edge to be a target edge and every target
    edge to be hit by some joint edge.
    """
    projected = {(u[coord], v[coord]) for (u, v) in joint.edges}
    return projected <= target.edges and target.edges <= projected
