"""Binomials, the combinatorial number system, and the counting numbers.

A :data:`FinSet` is a tuple of naturals in strictly ascending order.  The
combinatorial number system ranks the k-element sets of N::

    sigma_k(s) = C(s_k, k) + ... + C(s_2, 2) + C(s_1, 1),   s_k > ... > s_1 >= 0

and that rank does not depend on any ambient set the elements are drawn
from, so sigma_k is a bijection from k-sets onto N.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from functools import cache
from typing import Literal

from .errors import EmptySetError

FinSet = tuple[int, ...]

Structure = Literal["noncomm-nonassoc", "comm-nonassoc-lower-bound", "comm-assoc"]
STRUCTURES: tuple[Structure, ...] = (
    "noncomm-nonassoc",
    "comm-nonassoc-lower-bound",
    "comm-assoc",
)


def finset(values: Iterable[int]) -> FinSet:
    """Canonicalize ``values`` into an ascending FinSet."""
    elements = tuple(sorted(values))
    if elements and elements[0] < 0:
        raise ValueError(f"set elements must be naturals: {elements[0]}")
    for previous, current in zip(elements, elements[1:]):
        if previous == current:
            raise ValueError(f"set contains {current} twice")
    return elements


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 when n < k, so C(0, 1) = 0."""
    return math.comb(n, k)


def _largest_below(remainder: int, k: int) -> int:
    """Largest m with C(m, k) <= remainder."""
    # C(k - 1, k) = 0, so the answer is never below k - 1.
    low, high = k - 1, max(k, 1)
    while math.comb(high, k) <= remainder:
        low, high = high, high * 2
    while high - low > 1:
        middle = (low + high) // 2
        if math.comb(middle, k) <= remainder:
            low = middle
        else:
            high = middle
    return low


def sigma_encode(s: FinSet) -> int:
    """Index of ``s`` among the sets of its cardinality."""
    if not s:
        raise EmptySetError("the empty set has no combinatorial index")
    return sum(math.comb(element, position) for position, element in enumerate(s, start=1))


def sigma_terms(s: FinSet) -> tuple[int, ...]:
    """The binomial terms of :func:`sigma_encode`, largest element first."""
    if not s:
        raise EmptySetError("the empty set has no combinatorial index")
    return tuple(
        math.comb(element, position)
        for position, element in reversed(tuple(enumerate(s, start=1)))
    )


def sigma_decode(k: int, index: int) -> FinSet:
    """The k-set at ``index``, extracting the largest binomial each step."""
    if k < 1:
        raise ValueError(f"cardinality must be at least 1: {k}")
    if index < 0:
        raise ValueError(f"index must be non-negative: {index}")
    elements = []
    remainder = index
    for position in range(k, 0, -1):
        element = _largest_below(remainder, position)
        elements.append(element)
        remainder -= math.comb(element, position)
    return tuple(reversed(elements))


def catalan(n: int) -> int:
    """Number of bracketings of n + 1 leaves, C(2n, n) / (n + 1)."""
    return math.comb(2 * n, n) // (n + 1)


def stirling2(n: int, k: int) -> int:
    """Partitions of an n-set into k non-empty blocks (alternating sum)."""
    if k < 0 or n < 0:
        raise ValueError(f"stirling2 needs naturals: ({n}, {k})")
    total = sum((-1) ** i * math.comb(k, i) * (k - i) ** n for i in range(k + 1))
    return total // math.factorial(k)


@cache
def stirling2_recurrence(n: int, k: int) -> int:
    """Same count as :func:`stirling2` by S(n, k) = k S(n-1, k) + S(n-1, k-1)."""
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2_recurrence(n - 1, k) + stirling2_recurrence(n - 1, k - 1)


def bell(n: int) -> int:
    """Number of partitions of an n-set."""
    return sum(stirling2(n, k) for k in range(n + 1))


def computation_count(n: int, structure: Structure) -> int:
    """How many different computations one binary operator has over n operands.

    Commutative non-associative operators have no known closed form; the
    Bell number is reported as the lower bound it is.
    """
    if n < 1:
        raise ValueError(f"a computation needs at least one operand: {n}")
    if structure == "noncomm-nonassoc":
        return math.factorial(n) * catalan(n - 1)
    if structure == "comm-nonassoc-lower-bound":
        return bell(n)
    if structure == "comm-assoc":
        return 1
    raise ValueError(f"unknown operator structure: {structure}")


def segment_sum(n: int) -> int:
    """Sum of the initial segment {1, ..., n}."""
    return n * (n + 1) // 2


def segment_product(n: int) -> int:
    """Product of the initial segment {1, ..., n}."""
    return math.factorial(n)


def distinct_partition_count(n: int) -> int:
    """Partitions of n into distinct positive parts."""
    if n < 0:
        raise ValueError(f"cannot partition a negative number: {n}")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]
