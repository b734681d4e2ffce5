"""Exact Cantor pairing between N and N^2 and the efficiency of the pairing.

Indices and codes are Python integers throughout, so nothing overflows and
nothing rounds.  Only information amounts - binary logarithms - are
floats.  The logarithm convention is ``log 0 = log 1 = 0``: neither number
carries information, which makes every efficiency in this package total.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import DivergentLimitError


@dataclass(frozen=True, order=True)
class Cell:
    """One position (x, y) of the discrete plane; x is the column."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError(f"cell coordinates must be non-negative: ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y


def triangular(w: int) -> int:
    """Return w(w+1)/2, the code of the first cell on counter-diagonal w."""
    return w * (w + 1) // 2


def pair(cell: Cell) -> int:
    """Cantor packing function: (x+y)(x+y+1)/2 + y."""
    return triangular(cell.x + cell.y) + cell.y


def counter_diagonal(z: int) -> int:
    """Index w of the counter-diagonal x + y = w holding code ``z``.

    ``w = floor((sqrt(8z + 1) - 1) / 2)`` evaluated with an exact integer
    square root; a float root misplaces codes once they pass 2**50.
    """
    if z < 0:
        raise ValueError(f"code must be non-negative: {z}")
    return (math.isqrt(8 * z + 1) - 1) // 2


def unpair(z: int) -> Cell:
    """Inverse of :func:`pair`."""
    w = counter_diagonal(z)
    y = z - triangular(w)
    return Cell(w - y, y)


def info(n: int) -> float:
    """Information in a natural number, ``log2 n`` bits; 0 and 1 carry none."""
    if n < 0:
        raise ValueError(f"information is defined on naturals only: {n}")
    if n <= 1:
        return 0.0
    return math.log2(n)


def info_tuple(values: Iterable[int]) -> float:
    """Input information of a k-ary function: the sum over its arguments."""
    return sum(info(value) for value in values)


def delta_pi(cell: Cell) -> float:
    """Information efficiency of the pairing at ``cell``."""
    return info(pair(cell)) - info(cell.x) - info(cell.y)


@dataclass(frozen=True)
class Diagonal:
    """The line y = x."""


@dataclass(frozen=True)
class OriginLine:
    """The line y = h*x through the origin."""

    h: float


@dataclass(frozen=True)
class ConstLine:
    """The line y = c, on which the efficiency grows without bound."""

    c: int


@dataclass(frozen=True)
class ElasticDiagonal:
    """The diagonal after an elastic translation by the constant c."""

    c: int


@dataclass(frozen=True)
class Ratio:
    """Growth ratio of the reference translation by c along y = h*x.

    A pure number, not an amount of bits.
    """

    c: int
    h: float


@dataclass(frozen=True)
class ConstShift:
    """Lift of the diagonal under a constant shift, in its three-term form."""

    c: int


Limit = Diagonal | OriginLine | ConstLine | ElasticDiagonal | Ratio | ConstShift


def _require_stretch(c: float) -> None:
    if c < 1:
        raise ValueError(f"stretch constant must be at least 1: {c}")


def _require_slope(h: float) -> None:
    if not h > 0:
        raise ValueError(f"slope must be positive: {h}")


def asymptote(limit: Limit) -> float:
    """Closed-form limit of the pairing efficiency along ``limit``."""
    match limit:
        case Diagonal():
            return 1.0
        case OriginLine(h=h):
            _require_slope(h)
            return math.log2((h + 1) ** 2 / 2) - math.log2(h)
        case ConstLine(c=c):
            raise DivergentLimitError(f"efficiency on the line y = {c} is unbounded")
        case ElasticDiagonal(c=c):
            _require_stretch(c)
            return math.log2((c + 1 / c) ** 2 / 2)
        case Ratio(c=c, h=h):
            _require_stretch(c)
            _require_slope(h)
            return (c * c + h) ** 2 / (c * c * (1 + h) ** 2)
        case ConstShift(c=c):
            _require_stretch(c)
            return -math.log2(2 / c) - math.log2(c) + math.log2(2 + 1 / c**2 + c**2)
    raise ValueError(f"unknown limit: {limit!r}")
