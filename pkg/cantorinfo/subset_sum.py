"""Subset sum by enumeration.

Subsets of a finite ground set are named by the set of positions they take
from it, and the n-th subset with a given sum is counted in canonical code
order of those position sets, the same order the sorted injections walk.
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations, islice

from .combinadics import FinSet
from .injections import SortKey, column_members
from .setcodec import set_encode


def _position_sets(size: int) -> Iterator[tuple[int, ...]]:
    for cardinality in range(1, size + 1):
        yield from combinations(range(size), cardinality)


@lru_cache(maxsize=256)
def _subset_sums(ground: FinSet) -> frozenset[int]:
    """Every sum a non-empty subset of ``ground`` reaches."""
    return frozenset(sum(ground[i] for i in chosen) for chosen in _position_sets(len(ground)))


def subset_sum_witnesses(ground: FinSet, target: int) -> Iterator[FinSet]:
    """Non-empty subsets of ``ground`` adding up to ``target``, in canonical order."""
    positions = sorted(
        (
            chosen
            for chosen in _position_sets(len(ground))
            if sum(ground[i] for i in chosen) == target
        ),
        key=set_encode,
    )
    for chosen in positions:
        yield tuple(ground[i] for i in chosen)


def subset_sum_decide(ground: FinSet | SortKey, target: int) -> bool:
    """Whether some non-empty subset adds up to ``target``.

    A ``sum-under-f`` key stands for the ground {f(i)}; its subsets are the
    members of column ``target``.
    """
    if isinstance(ground, SortKey):
        if ground.kind != "sum-under-f":
            raise ValueError(f"subset sum needs a sum-under-f key, not {ground.kind}")
        return next(column_members(ground, target), None) is not None
    return target in _subset_sums(tuple(ground))


def nth_subset_with_sum(ground: FinSet, target: int, n: int) -> FinSet | None:
    """The n-th (from 1) subset adding up to ``target``, or None if there are fewer."""
    if n < 1:
        raise ValueError(f"n counts from 1: {n}")
    return next(islice(subset_sum_witnesses(ground, target), n - 1, None), None)
