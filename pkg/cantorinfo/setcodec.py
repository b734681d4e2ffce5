"""Codes for the finite sets of naturals.

Two modes share the pairing and the combinatorial number system:

``canonical``
    A set of cardinality k sits in column k - 1 at row sigma_k(s).  Every
    natural is the code of exactly one non-empty set, and the first set of
    column k is {0, ..., k} on row 0.

``appendix``
    Every element is shifted up by one and the set sits in column k at row
    sigma_k(s + 1).  This reproduces the long-hand worked example (the set
    {0, 3, 5, 7, 9, 10} has code 334964) but is only an injection: column 0
    and every row whose decode contains 0 are outside the image.

Downstream enumeration always uses the canonical mode.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Literal

from .combinadics import FinSet, sigma_decode, sigma_encode, sigma_terms
from .errors import EmptySetError, NotInImageError
from .plane import Cell, counter_diagonal, pair, triangular, unpair

Mode = Literal["canonical", "appendix"]
MODES: tuple[Mode, ...] = ("canonical", "appendix")


def _require_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown set-codec mode: {mode}")


def set_cell(s: FinSet, mode: Mode = "canonical") -> Cell:
    """The plane cell a set is stored at before pairing."""
    _require_mode(mode)
    if not s:
        raise EmptySetError("the empty set has no code")
    if mode == "canonical":
        return Cell(len(s) - 1, sigma_encode(s))
    return Cell(len(s), sigma_encode(tuple(element + 1 for element in s)))


def set_encode(s: FinSet, mode: Mode = "canonical") -> int:
    """Code of the non-empty set ``s``."""
    return pair(set_cell(s, mode))


def set_decode(n: int, mode: Mode = "canonical") -> FinSet:
    """Set whose code is ``n``."""
    _require_mode(mode)
    cell = unpair(n)
    if mode == "canonical":
        return sigma_decode(cell.x + 1, cell.y)
    if cell.x == 0:
        raise NotInImageError(f"code {n} lies in column 0, which holds no set")
    shifted = sigma_decode(cell.x, cell.y)
    if shifted[0] == 0:
        raise NotInImageError(f"code {n} decodes to a set containing 0 before the shift")
    return tuple(element - 1 for element in shifted)


@lru_cache(maxsize=1 << 16)
def canonical_set(n: int) -> FinSet:
    """Memoized canonical decode for enumeration-heavy callers."""
    return set_decode(n, "canonical")


def enumerate_sets(limit: int | None) -> Iterator[FinSet]:
    """Canonical sets in code order; unbounded when ``limit`` is None."""
    if limit is not None and limit < 0:
        raise ValueError(f"limit must be non-negative: {limit}")
    codes = count() if limit is None else range(limit)
    for n in codes:
        yield canonical_set(n)


@dataclass(frozen=True)
class AppendixTrace:
    """Every intermediate value of an appendix-mode encode."""

    original: FinSet
    shifted: FinSet
    terms: tuple[int, ...]
    """Binomial terms, largest element first."""

    sigma: int
    cell: Cell
    code: int
    w: int
    """Counter-diagonal of the code."""

    t: int
    """Triangular number w(w+1)/2 the decode subtracts from the code."""


def explain_appendix(s: FinSet) -> AppendixTrace:
    """Work an appendix-mode encode long-hand."""
    if not s:
        raise EmptySetError("the empty set has no code")
    shifted = tuple(element + 1 for element in s)
    sigma = sigma_encode(shifted)
    cell = Cell(len(s), sigma)
    code = pair(cell)
    w = counter_diagonal(code)
    return AppendixTrace(
        original=s,
        shifted=shifted,
        terms=sigma_terms(shifted),
        sigma=sigma,
        cell=cell,
        code=code,
        w=w,
        t=triangular(w),
    )
