"""Binomials, the combinatorial number system and the counting numbers."""

import math
from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorinfo.combinadics import (
    bell,
    binom,
    catalan,
    computation_count,
    distinct_partition_count,
    finset,
    segment_product,
    segment_sum,
    sigma_decode,
    sigma_encode,
    sigma_terms,
    stirling2,
    stirling2_recurrence,
)
from cantorinfo.errors import EmptySetError


def set_partitions(elements: list[int]):
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in set_partitions(rest):
        yield [[first], *partition]
        for i in range(len(partition)):
            yield [*partition[:i], [first, *partition[i]], *partition[i + 1 :]]


def bracketings(leaves: int) -> int:
    if leaves == 1:
        return 1
    return sum(bracketings(left) * bracketings(leaves - left) for left in range(1, leaves))


@pytest.mark.parametrize(("n", "k", "expected"), ((11, 6, 462), (0, 1, 0), (5, 0, 1), (3, 5, 0)))
def test_binom(n, k, expected):
    assert binom(n, k) == expected


@pytest.mark.parametrize(
    ("s", "index"),
    (
        ((1, 4, 6, 8, 10, 11), 811),
        ((0, 1), 0),
        ((0, 3), 3),
        ((1, 2), 2),
        ((7,), 7),
    ),
)
def test_sigma_encode_and_decode_worked_indices(s, index):
    assert sigma_encode(s) == index
    assert sigma_decode(len(s), index) == s


def test_sigma_terms_are_the_long_hand_binomials():
    assert sigma_terms((1, 4, 6, 8, 10, 11)) == (462, 252, 70, 20, 6, 1)


def test_sigma_rejects_the_empty_set():
    with pytest.raises(EmptySetError, match="empty set"):
        sigma_encode(())


def test_sigma_decode_rejects_cardinality_zero():
    with pytest.raises(ValueError, match="at least 1"):
        sigma_decode(0, 4)


@given(x=st.integers(min_value=0, max_value=10**30))
def test_one_element_sets_are_their_own_index(x: int):
    assert sigma_decode(1, x) == (x,)


def test_sigma_round_trips_every_subset_of_a_small_ground():
    for k in range(1, 7):
        for s in combinations(range(13), k):
            assert sigma_decode(k, sigma_encode(s)) == s


@pytest.mark.parametrize("k", range(1, 6))
def test_sigma_ranks_sets_by_their_descending_elements(k: int):
    ordered = sorted(combinations(range(11), k), key=lambda s: s[::-1])

    assert [sigma_encode(s) for s in ordered] == list(range(math.comb(11, k)))


@given(
    k=st.integers(min_value=1, max_value=40),
    index=st.integers(min_value=0, max_value=2**256),
)
@settings(max_examples=200, deadline=None)
def test_sigma_decode_inverts_encode_on_huge_indices(k: int, index: int):
    s = sigma_decode(k, index)

    assert len(s) == k
    assert all(a < b for a, b in zip(s, s[1:]))
    assert sigma_encode(s) == index


def test_finset_sorts_and_validates():
    assert finset([10, 0, 3]) == (0, 3, 10)
    with pytest.raises(ValueError, match="twice"):
        finset([1, 2, 1])
    with pytest.raises(ValueError, match="naturals"):
        finset([-1, 2])


@pytest.mark.parametrize(("n", "expected"), ((0, 1), (3, 5), (4, 14)))
def test_catalan(n, expected):
    assert catalan(n) == expected


@pytest.mark.parametrize("n", range(1, 10))
def test_catalan_counts_bracketings(n: int):
    assert catalan(n - 1) == bracketings(n)


def test_stirling_and_bell_match_partition_enumeration():
    for n in range(9):
        blocks = Counter(len(partition) for partition in set_partitions(list(range(n))))
        assert bell(n) == sum(blocks.values())
        for k in range(n + 1):
            assert stirling2(n, k) == blocks[k]


@pytest.mark.parametrize(("n", "k", "expected"), ((4, 2, 7), (6, 6, 1), (3, 1, 1), (5, 0, 0)))
def test_stirling2(n, k, expected):
    assert stirling2(n, k) == expected


def test_stirling2_formulas_agree():
    for n in range(11):
        for k in range(n + 1):
            assert stirling2(n, k) == stirling2_recurrence(n, k)


@pytest.mark.parametrize(("n", "expected"), ((0, 1), (3, 5), (5, 52)))
def test_bell(n, expected):
    assert bell(n) == expected


@pytest.mark.parametrize(
    ("n", "structure", "expected"),
    (
        (3, "noncomm-nonassoc", 12),
        (4, "noncomm-nonassoc", 120),
        (4, "comm-nonassoc-lower-bound", 15),
        (9, "comm-assoc", 1),
    ),
)
def test_computation_count(n, structure, expected):
    assert computation_count(n, structure) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_noncommutative_count_matches_labelled_bracketings(n: int):
    assert computation_count(n, "noncomm-nonassoc") == math.factorial(n) * bracketings(n)


@pytest.mark.parametrize("n", range(5, 9))
def test_counting_chain_is_strict(n: int):
    assert computation_count(n, "noncomm-nonassoc") > bell(n) > 2**n > 1


def test_bell_falls_below_the_power_set_at_four_operands():
    assert bell(4) == 15 < 2**4
    assert computation_count(4, "noncomm-nonassoc") > 2**4


def test_computation_count_rejects_bad_arguments():
    with pytest.raises(ValueError, match="at least one operand"):
        computation_count(0, "comm-assoc")
    with pytest.raises(ValueError, match="unknown operator structure"):
        computation_count(3, "lattice")


def test_segments():
    assert segment_sum(10) == 55
    assert segment_product(5) == 120
    assert segment_sum(0) == 0


def test_distinct_partition_count_matches_enumeration():
    for n in range(25):
        brute = sum(
            1
            for size in range(n + 1)
            if size * (size + 1) // 2 <= n
            for parts in combinations(range(1, n + 1), size)
            if sum(parts) == n
        )
        assert distinct_partition_count(n) == brute
