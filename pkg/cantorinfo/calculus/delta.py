"""Information efficiency of arithmetic and of whole computations.

The efficiency of a function is the information in its output minus the
information in its input.  For binary operations the calculus has two
rules that differ only when both operands are equal:

``two-arg``
    Always log(x op y) - log x - log y.
``collapse``
    Equal operands count once, so x + x costs log 2 = 1 and x * x gains
    log x.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..errors import SizeLimitError
from ..limits import SPECTRUM_MAX_LEAVES, TOTAL_DECIMALS
from ..plane import info, info_tuple
from .tree import (
    MODES,
    CompTree,
    Leaf,
    Mode,
    Op,
    Tree,
    enumerate_trees,
    parse_expression,
    unordered_tree_count,
)


def _require_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown delta mode: {mode}")


def delta_add(x: int, y: int, mode: Mode = "two-arg") -> float:
    _require_mode(mode)
    if mode == "collapse" and x == y:
        return 1.0
    return info(x + y) - (info(x) + info(y))


def delta_mul(x: int, y: int, mode: Mode = "two-arg") -> float:
    _require_mode(mode)
    if mode == "collapse" and x == y:
        return info(x)
    return info(x * y) - (info(x) + info(y))


_DELTAS = {"add": delta_add, "mul": delta_mul}


def flat_delta(values: Sequence[int], op: Op) -> float:
    """Efficiency of ``op`` applied to all values at once as one n-ary function."""
    if op == "add":
        result = sum(values)
    elif op == "mul":
        result = math.prod(values)
    else:
        raise ValueError(f"unknown operator: {op}")
    return info(result) - info_tuple(values)


@dataclass(frozen=True)
class DeltaReport:
    per_node: tuple[float, ...]
    """One δ per internal node, post-order."""

    total: float
    result: int


def tree_delta(tree: CompTree) -> DeltaReport:
    """Evaluate ``tree`` bottom-up, recording the δ of every operation."""
    _require_mode(tree.mode)
    per_node: list[float] = []

    def walk(node: Tree) -> int:
        if isinstance(node, Leaf):
            return node.value
        left = walk(node.left)
        right = walk(node.right)
        per_node.append(_DELTAS[node.op](left, right, tree.mode))
        return left + right if node.op == "add" else left * right

    result = walk(tree.root)
    return DeltaReport(per_node=tuple(per_node), total=sum(per_node), result=result)


@dataclass(frozen=True)
class SpectrumEntry:
    total: float
    multiplicity: int


def delta_spectrum(
    values: Sequence[int], op: Op, mode: Mode = "two-arg"
) -> tuple[SpectrumEntry, ...]:
    """Distinct δ totals over every unordered bracketing of ``values``.

    Sorted totals closer than ``10 ** -TOTAL_DECIMALS`` to their neighbour
    are one total.  Entries are sorted by total; multiplicities add up to the
    number of distinct trees, which is (2n - 3)!! for n distinct values.
    """
    _require_mode(mode)
    if len(values) > SPECTRUM_MAX_LEAVES:
        raise SizeLimitError(
            f"spectrum enumeration is limited to {SPECTRUM_MAX_LEAVES} values, got {len(values)}"
        )
    trees = tuple(enumerate_trees(values, op))
    if len(set(values)) == len(values) and len(trees) != unordered_tree_count(len(values)):
        raise RuntimeError(f"enumerated {len(trees)} trees over {len(values)} distinct values")
    totals = np.sort(
        np.fromiter((tree_delta(CompTree(tree, mode)).total for tree in trees), dtype=np.float64)
    )
    gaps = ~np.isclose(totals[1:], totals[:-1], rtol=0.0, atol=10.0**-TOTAL_DECIMALS)
    starts = np.concatenate(([0], np.flatnonzero(gaps) + 1))
    counts = np.diff(np.append(starts, totals.size))
    # + 0.0 folds -0.0 into 0.0.
    return tuple(
        SpectrumEntry(total=round(float(totals[start]), TOTAL_DECIMALS) + 0.0, multiplicity=int(n))
        for start, n in zip(starts, counts)
    )


@dataclass(frozen=True)
class Successor:
    x: int


@dataclass(frozen=True)
class Constant:
    pass


@dataclass(frozen=True)
class Projection:
    """P_i(values); ``i`` counts from 1."""

    i: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class Composition:
    """outer(inner(x)) given the three observed values."""

    x: int
    inner: int
    outer: int


@dataclass(frozen=True)
class PrimRecursion:
    """One recursion step f(x, y) = result."""

    x: int
    y: int
    result: int


Primitive = Successor | Constant | Projection | Composition | PrimRecursion


def primitive_delta(kind: Primitive) -> float:
    """Efficiency of one primitive recursive building block."""
    match kind:
        case Successor(x=x):
            return info(x + 1) - info(x)
        case Constant():
            return 0.0
        case Projection(i=i, values=values):
            if not 1 <= i <= len(values):
                raise ValueError(f"projection index {i} outside 1..{len(values)}")
            return info(values[i - 1]) - info(i) - info_tuple(values)
        case Composition(x=x, inner=inner, outer=outer):
            # Neutral: the inner output is the outer input, so the steps telescope.
            return (info(outer) - info(inner)) + (info(inner) - info(x))
        case PrimRecursion(x=x, y=y, result=result):
            return info(result) - info(x) - info(y)
    raise ValueError(f"unknown primitive: {kind!r}")


@dataclass(frozen=True)
class WorkedMethod:
    """One long-hand way of adding 2, 47, 53 and 98."""

    label: str
    expression: str
    mode: Mode
    printed_total: float
    """Total as printed in the long-hand tables, rounded and partly mis-added."""

    total: float


WORKED_VALUES = (2, 47, 53, 98)

_WORKED = (
    ("composed", "2+47+53+98", "two-arg", -12.17),
    ("stored-1", "(2+47)+(53+98)", "two-arg", -10.26),
    ("stored-2", "(2+98)+(47+53)", "two-arg", -11.31),
    ("stored-2-collapse", "(2+98)+(47+53)", "collapse", -4.67),
)


def worked_methods() -> tuple[WorkedMethod, ...]:
    """The four long-hand totals next to their exact values."""
    methods = []
    for label, expression, mode, printed in _WORKED:
        if label == "composed":
            total = flat_delta(WORKED_VALUES, "add")
        else:
            total = tree_delta(CompTree(parse_expression(expression), mode)).total
        methods.append(WorkedMethod(label, expression, mode, printed, total))
    return tuple(methods)
