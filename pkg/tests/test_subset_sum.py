"""Subset sum by enumeration in canonical order."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorinfo.injections import SortKey
from cantorinfo.subset_sum import nth_subset_with_sum, subset_sum_decide, subset_sum_witnesses

grounds = st.frozensets(st.integers(min_value=1, max_value=60), min_size=1, max_size=10).map(
    lambda s: tuple(sorted(s))
)


def bitmask_sums(ground: tuple[int, ...]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for mask in range(1, 1 << len(ground)):
        total = sum(value for i, value in enumerate(ground) if mask >> i & 1)
        counts[total] = counts.get(total, 0) + 1
    return counts


@pytest.mark.parametrize(
    ("ground", "target", "expected"),
    (
        ((3, 4, 6, 7), 20, True),
        ((2, 5, 6, 7), 20, True),
        ((2, 5, 6, 7), 1, False),
        ((3, 4, 6, 7), 0, False),
        ((0, 4), 0, True),
    ),
)
def test_decide(ground, target, expected):
    assert subset_sum_decide(ground, target) is expected


@pytest.mark.parametrize(
    ("n", "expected"),
    ((1, (4, 6)), (2, (3, 7)), (3, None)),
)
def test_nth_subset_follows_canonical_order_of_positions(n, expected):
    assert nth_subset_with_sum((3, 4, 6, 7), 10, n) == expected


def test_witnesses_stream_every_subset_once():
    assert list(subset_sum_witnesses((3, 4, 6, 7), 10)) == [(4, 6), (3, 7)]
    assert list(subset_sum_witnesses((3, 4, 6, 7), 2)) == []


def test_tenth_subset_adding_to_two_does_not_exist():
    assert nth_subset_with_sum((1, 2, 3), 2, 10) is None


def test_nth_counts_from_one():
    with pytest.raises(ValueError, match="n counts from 1"):
        nth_subset_with_sum((1, 2), 3, 0)


def test_decide_over_a_sum_under_f_key():
    key = SortKey.sum_under((2, 5, 100))

    assert subset_sum_decide(key, 105)
    assert subset_sum_decide(key, 7)
    assert not subset_sum_decide(key, 6)


def test_decide_refuses_other_keys():
    with pytest.raises(ValueError, match="sum-under-f key"):
        subset_sum_decide(SortKey.sum(), 3)


@given(ground=grounds, target=st.integers(min_value=0, max_value=400))
@settings(max_examples=150, deadline=None)
def test_enumeration_agrees_with_bitmask_subsets(ground, target: int):
    counts = bitmask_sums(ground)
    witnesses = list(subset_sum_witnesses(ground, target))

    assert subset_sum_decide(ground, target) is (target in counts)
    assert len(witnesses) == counts.get(target, 0)
    assert all(sum(w) == target for w in witnesses)
    assert len(set(witnesses)) == len(witnesses)


@pytest.mark.slow
def test_bitmask_agreement_over_twelve_element_grounds():
    ground = (1, 3, 4, 9, 11, 17, 20, 23, 31, 38, 44, 50)
    counts = bitmask_sums(ground)

    for target in range(sum(ground) + 2):
        assert subset_sum_decide(ground, target) is (target in counts)
