"""Sorted injections of the finite sets into N.

A sort key zeta assigns each finite set a column; the set's row theta is its
rank among the earlier sets of that column in canonical code order, and the
set is stored at pair(zeta(s), theta(s)).  The ranking has no shortcut: it
is computed by walking the canonical enumeration, either literally for every
query or once with per-column counters.
"""

from __future__ import annotations

import math
import threading
from bisect import bisect_right
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations
from typing import Literal

from .combinadics import FinSet
from .errors import EmptySetError, GroundViolationError, InfiniteColumnError
from .plane import Cell, pair
from .setcodec import canonical_set, set_encode

KeyKind = Literal["cardinality", "sum", "product", "sum-under-f"]
Ground = Literal["naturals", "positive"]
KEY_KINDS: tuple[KeyKind, ...] = ("cardinality", "sum", "product", "sum-under-f")


@dataclass(frozen=True)
class SortKey:
    """The sort key zeta and the ground its sets are drawn from.

    ``sum-under-f`` reads ``table`` as the strictly increasing enumeration
    f of an infinite set, truncated; its sets are sets of indices into f,
    counted from 1 over the positive ground and from 0 over the naturals.
    """

    kind: KeyKind
    ground: Ground = "naturals"
    table: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in KEY_KINDS:
            raise ValueError(f"unknown sort key: {self.kind}")
        if self.ground not in ("naturals", "positive"):
            raise ValueError(f"unknown ground: {self.ground}")
        if self.kind == "product" and self.ground == "naturals":
            raise InfiniteColumnError(
                "product over a ground containing 0 puts infinitely many sets in column 0"
            )
        if self.kind != "sum-under-f":
            if self.table:
                raise ValueError(f"{self.kind} takes no function table")
            return
        if not self.table:
            raise ValueError("sum-under-f needs a function table")
        if self.table[0] < 0:
            raise ValueError(f"function values must be naturals: {self.table[0]}")
        for previous, current in zip(self.table, self.table[1:]):
            if current <= previous:
                raise ValueError(f"function table must be strictly increasing at {current}")

    @classmethod
    def cardinality(cls, ground: Ground = "naturals") -> SortKey:
        return cls("cardinality", ground)

    @classmethod
    def sum(cls, ground: Ground = "naturals") -> SortKey:
        return cls("sum", ground)

    @classmethod
    def product(cls) -> SortKey:
        return cls("product", "positive")

    @classmethod
    def sum_under(cls, table: Iterable[int], ground: Ground = "positive") -> SortKey:
        return cls("sum-under-f", ground, tuple(table))

    @property
    def first_index(self) -> int:
        return 1 if self.ground == "positive" else 0

    def f(self, index: int) -> int:
        """Table value at ``index`` in the key's own counting."""
        return self.table[index - self.first_index]

    def contains(self, element: int) -> bool:
        if element < self.first_index:
            return False
        if self.kind == "sum-under-f":
            return element - self.first_index < len(self.table)
        return True


def in_ground(key: SortKey, s: FinSet) -> bool:
    """Whether every element of ``s`` lies in the key's ground."""
    return bool(s) and key.contains(s[0]) and key.contains(s[-1])


def _require_ground(key: SortKey, s: FinSet) -> None:
    if not s:
        raise EmptySetError("the empty set has no sort key")
    if not in_ground(key, s):
        raise GroundViolationError(f"{set(s)} is not a set of the {key.kind} key's ground")


def zeta(key: SortKey, s: FinSet) -> int:
    """The key's value on ``s``: |s|, its sum, its product or its sum under f."""
    _require_ground(key, s)
    if key.kind == "cardinality":
        return len(s)
    if key.kind == "sum":
        return sum(s)
    if key.kind == "product":
        return math.prod(s)
    return sum(key.f(index) for index in s)


def column(key: SortKey, s: FinSet) -> int:
    """Grid column of ``s``; cardinality k sits in column k - 1 as in the set codec."""
    value = zeta(key, s)
    return value - 1 if key.kind == "cardinality" else value


def _column_or_none(key: SortKey, s: FinSet) -> int | None:
    return column(key, s) if in_ground(key, s) else None


def theta_alg1(key: SortKey, s: FinSet, raw: bool = False) -> int:
    """Row of ``s`` by the literal enumeration: decode every code up to its own.

    The loop counts ``s`` itself, so the raw count starts at 1; the row is
    the count less one.  Sets outside the ground are skipped.  Time grows
    with the code of ``s``, i.e. exponentially in its description.
    """
    _require_ground(key, s)
    target = column(key, s)
    matches = 0
    for k in range(set_encode(s) + 1):
        if _column_or_none(key, canonical_set(k)) == target:
            matches += 1
    return matches if raw else matches - 1


class ColumnSurvey:
    """Rows for a prefix of the canonical enumeration in a single pass.

    Every surveyed set takes the current height of its column as its row.
    The survey extends itself on demand and is safe to share between
    threads.
    """

    def __init__(self, key: SortKey):
        self.key = key
        self.heights: Counter[int] = Counter()
        self._rows: list[int | None] = []
        self._lock = threading.Lock()

    @property
    def surveyed(self) -> int:
        return len(self._rows)

    def extend_to(self, limit: int) -> None:
        """Survey canonical codes below ``limit``."""
        with self._lock:
            for n in range(len(self._rows), limit):
                value = _column_or_none(self.key, canonical_set(n))
                if value is None:
                    self._rows.append(None)
                    continue
                self._rows.append(self.heights[value])
                self.heights[value] += 1

    def theta(self, n: int) -> int:
        """Row of the canonical set with code ``n``."""
        self.extend_to(n + 1)
        row = self._rows[n]
        if row is None:
            raise GroundViolationError(
                f"canonical set {n} is not a set of the {self.key.kind} key's ground"
            )
        return row

    def cells(self) -> Iterator[tuple[int, SortedCell]]:
        """(canonical code, sorted cell) for every surveyed ground set."""
        for n, row in enumerate(self._rows):
            if row is None:
                continue
            value = column(self.key, canonical_set(n))
            yield n, SortedCell(value, row, pair(Cell(value, row)))


@dataclass(frozen=True)
class SortedCell:
    key: int
    """Grid column, the key value."""

    theta: int
    code: int


def _survey_for(key: SortKey, survey: ColumnSurvey | None) -> ColumnSurvey:
    if survey is None:
        return ColumnSurvey(key)
    if survey.key != key:
        raise ValueError(f"survey is for the {survey.key.kind} key, not {key.kind}")
    return survey


def theta_bucketed(key: SortKey, s: FinSet, survey: ColumnSurvey | None = None) -> int:
    """Same row as :func:`theta_alg1` from a (reusable) column survey."""
    _require_ground(key, s)
    return _survey_for(key, survey).theta(set_encode(s))


def phi_sorted(key: SortKey, s: FinSet, survey: ColumnSurvey | None = None) -> SortedCell:
    value = column(key, s)
    theta = theta_bucketed(key, s, survey)
    return SortedCell(value, theta, pair(Cell(value, theta)))


def _distinct_parts(total: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Distinct positive parts, descending, summing to ``total``."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        # The remaining parts are all below ``part``; stop when they cannot reach.
        if part * (part + 1) // 2 < total:
            break
        for rest in _distinct_parts(total - part, part - 1):
            yield (part, *rest)


def _distinct_factors(value: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Distinct factors above 1, descending, multiplying to ``value``."""
    if value == 1:
        yield ()
        return
    for factor in range(min(value, largest), 1, -1):
        if value % factor == 0:
            for rest in _distinct_factors(value // factor, factor - 1):
                yield (factor, *rest)


def _indices_under(key: SortKey, total: int, below: int) -> Iterator[tuple[int, ...]]:
    """Distinct table positions below ``below`` whose values sum to ``total``."""
    if total == 0:
        yield ()
    for position in range(below - 1, -1, -1):
        value = key.table[position]
        if value > total:
            continue
        if value == 0:
            # Only position 0 can hold the value 0; sets with and without it both count.
            if total == 0:
                yield (position,)
            continue
        for rest in _indices_under(key, total - value, position):
            yield (position, *rest)


def column_members(key: SortKey, value: int, bound: int | None = None) -> Iterator[FinSet]:
    """Every ground set with zeta equal to ``value``, in canonical code order.

    ``bound`` caps the elements.  Cardinality columns are infinite and need
    one.
    """
    if value < 0:
        raise ValueError(f"column must be non-negative: {value}")
    members: list[FinSet] = []
    if key.kind == "cardinality":
        if bound is None:
            raise InfiniteColumnError(f"cardinality column {value} holds infinitely many sets")
        if value > 0:
            members.extend(combinations(range(key.first_index, bound + 1), value))
    elif key.kind == "sum":
        for core in _distinct_parts(value, value):
            if core:
                members.append(tuple(sorted(core)))
            if key.ground == "naturals":
                members.append((0, *sorted(core)))
    elif key.kind == "product":
        if value > 0:
            for core in _distinct_factors(value, value):
                if core:
                    members.append(tuple(sorted(core)))
                members.append((1, *sorted(core)))
    else:
        for positions in _indices_under(key, value, len(key.table)):
            if positions:
                members.append(tuple(sorted(p + key.first_index for p in positions)))
    if bound is not None:
        members = [s for s in members if s[-1] <= bound]
    yield from sorted(members, key=set_encode)


def column_height(key: SortKey, value: int, bound: int | None = None) -> int:
    """How many ground sets have zeta equal to ``value``."""
    return sum(1 for _ in column_members(key, value, bound))


def density_profile(
    key: SortKey, survey_limit: int, prefixes: Iterable[int] | None = None
) -> list[tuple[int, int]]:
    """For each n, how many codes at most n the first ``survey_limit`` sets realize."""
    if survey_limit < 0:
        raise ValueError(f"survey limit must be non-negative: {survey_limit}")
    survey = ColumnSurvey(key)
    survey.extend_to(survey_limit)
    codes = sorted(cell.code for _, cell in survey.cells())
    if prefixes is None:
        prefixes = range(survey_limit + 1)
    return [(n, bisect_right(codes, n)) for n in prefixes]
