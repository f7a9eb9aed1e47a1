"""Exact shift-space combinatorics: graphs, words, block codes, lifts."""

from henonshoe.symbolic.graphs import TransitionGraph, build_graph, two_block_extension
from henonshoe.symbolic.words import CyclicWord, periodic_points
from henonshoe.symbolic.block_codes import (
    SlidingBlockCode,
    apply_block_code,
    code_C,
    code_F,
    code_bijectivity,
    code_identity,
    code_sigma,
    compose_block_codes,
)
from henonshoe.symbolic.lifting import lift_codings, project
from henonshoe.symbolic.permutations import CodePermutation
from henonshoe.symbolic.report import Theorem2Report, theorem2_report

__all__ = [
    "TransitionGraph",
    "build_graph",
    "two_block_extension",
    "CyclicWord",
    "periodic_points",
    "SlidingBlockCode",
    "apply_block_code",
    "code_C",
    "code_F",
    "code_bijectivity",
    "code_identity",
    "code_sigma",
    "compose_block_codes",
    "lift_codings",
    "project",
    "CodePermutation",
    "Theorem2Report",
    "theorem2_report",
]
