"""Permutations of period-N code words, as produced by loop monodromy.

A ``CodePermutation`` acts on phase-marked words (plain symbol tuples).
Useful laws live here: composition, order, cycle notation, and the
structural checks that a monodromy action must satisfy (commuting with
the cyclic shift, preserving primitive period).
"""

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping

from henonshoe.symbolic.block_codes import SlidingBlockCode, apply_block_code
from henonshoe.symbolic.graphs import Symbol
from henonshoe.symbolic.words import CyclicWord

Word = tuple


@dataclass(frozen=True)
class CodePermutation:
    """A bijection on a finite set of equal-length symbol tuples."""

    pairs: tuple[tuple[Word, Word], ...]

    def __post_init__(self) -> None:
        sources = [p[0] for p in self.pairs]
        targets = [p[1] for p in self.pairs]
        if len(set(sources)) != len(sources):
            raise ValueError("duplicate source words")
        if set(sources) != set(targets):
            raise ValueError("mapping is not a permutation of its domain")
        if tuple(sorted(self.pairs)) != self.pairs:
            raise ValueError("pairs must be sorted by source word")

    @staticmethod
    def from_mapping(mapping: Mapping[Word, Word]) -> "CodePermutation":
        return CodePermutation(tuple(sorted(mapping.items())))

    @staticmethod
    def identity(domain: Iterable[Word]) -> "CodePermutation":
        return CodePermutation.from_mapping({w: w for w in domain})

    @staticmethod
    def from_block_code(code: SlidingBlockCode, n: int) -> "CodePermutation":
        """The induced action on all length-n words of the code's shift."""
        mapping = {}
        for symbols in product(code.in_graph.vertices, repeat=n):
            word = CyclicWord(code.in_graph, symbols)
            mapping[symbols] = apply_block_code(code, word).symbols
        return CodePermutation.from_mapping(mapping)

    @property
    def domain(self) -> tuple[Word, ...]:
        return tuple(p[0] for p in self.pairs)

    def __call__(self, word: Word) -> Word:
        for src, dst in self.pairs:
            if src == word:
                return dst
        raise KeyError(f"word {word!r} not in permutation domain")

    def as_dict(self) -> dict[Word, Word]:
        return dict(self.pairs)

    def after(self, other: "CodePermutation") -> "CodePermutation":
        """self composed after other: (self.after(other))(w) = self(other(w))."""
        d_other = other.as_dict()
        d_self = self.as_dict()
        if set(d_other) != set(d_self):
            raise ValueError("permutation domains differ")
        return CodePermutation.from_mapping({w: d_self[d_other[w]] for w in d_other})

    def is_identity(self) -> bool:
        return all(src == dst for src, dst in self.pairs)

    def cycles(self) -> tuple[tuple[Word, ...], ...]:
        """Nontrivial cycles, each starting at its least word, sorted."""
        d = self.as_dict()
        seen: set[Word] = set()
        out = []
        for start in sorted(d):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            w = d[start]
            while w != start:
                cyc.append(w)
                seen.add(w)
                w = d[w]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return tuple(sorted(out))

    def order(self) -> int:
        cyc = self.cycles()
        if not cyc:
            return 1
        return math.lcm(*(len(c) for c in cyc))

    def cycles_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "identity"
        return "".join(
            "(" + " ".join("".join(str(s) for s in w) for w in c) + ")" for c in cyc
        )

    def commutes_with_shift(self) -> bool:
        d = self.as_dict()
        for src, dst in self.pairs:
            rot_src = src[1:] + src[:1]
            rot_dst = dst[1:] + dst[:1]
            if d.get(rot_src) != rot_dst:
                return False
        return True

    def preserves_primitive_period(self) -> bool:
        for src, dst in self.pairs:
            if _primitive_period(src) != _primitive_period(dst):
                return False
        return True


def _primitive_period(symbols: tuple[Symbol, ...]) -> int:
    n = len(symbols)
    for d in range(1, n + 1):
        if n % d == 0 and symbols == symbols[d:] + symbols[:d]:
            return d
    return n
