"""The information-efficiency calculus over add, mul and computation trees."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantorinfo.calculus import (
    Composition,
    CompTree,
    Constant,
    Leaf,
    Node,
    PrimRecursion,
    Projection,
    SpectrumEntry,
    Successor,
    canonical_key,
    delta_add,
    delta_mul,
    delta_spectrum,
    enumerate_trees,
    evaluate,
    flat_delta,
    leaves,
    parse_expression,
    primitive_delta,
    render,
    tree_delta,
    unordered_tree_count,
    worked_methods,
)
from cantorinfo.calculus import delta as delta_module
from cantorinfo.errors import SizeLimitError

WORKED = (2, 47, 53, 98)
SUM_TOTAL = math.log2(200) - sum(math.log2(v) for v in WORKED)

naturals = st.integers(min_value=0, max_value=10**9)


def test_adding_two_and_ninety_eight():
    assert delta_add(2, 98) == pytest.approx(-0.9708, abs=1e-4)


@pytest.mark.parametrize(("x", "expected"), ((2, 1.0), (9, 1.0), (0, 1.0)))
def test_collapsed_addition_costs_one_bit(x, expected):
    assert delta_add(x, x, "collapse") == expected


def test_collapsed_multiplication_gains_the_operand():
    assert delta_mul(8, 8, "collapse") == 3.0
    assert delta_mul(8, 8) == 0.0


@given(x=naturals, y=naturals)
@settings(max_examples=300, deadline=None)
def test_binary_efficiencies_are_commutative(x: int, y: int):
    for mode in ("two-arg", "collapse"):
        assert delta_add(x, y, mode) == delta_add(y, x, mode)
        assert delta_mul(x, y, mode) == delta_mul(y, x, mode)


@given(x=st.integers(min_value=2, max_value=10**6), y=st.integers(min_value=2, max_value=10**6))
def test_multiplication_conserves_information(x: int, y: int):
    assert delta_mul(x, y) == pytest.approx(0.0, abs=1e-9)


def test_addition_never_gains_more_than_a_bit():
    for x in range(2, 60):
        for y in range(2, 60):
            assert delta_add(x, y) <= 1.0


def test_unknown_mode_is_rejected():
    with pytest.raises(ValueError, match="unknown delta mode"):
        delta_add(1, 2, "single")


@pytest.mark.parametrize(
    ("text", "rendered", "value"),
    (
        ("2+3*4", "(2+(3*4))", 14),
        ("2*3+4", "((2*3)+4)", 10),
        ("1+2+3", "((1+2)+3)", 6),
        (" (2 + 98) + (47 + 53) ", "((2+98)+(47+53))", 200),
        ("(2+3)*(4)", "((2+3)*4)", 20),
        ("7", "7", 7),
    ),
)
def test_parse_expression(text, rendered, value):
    tree = parse_expression(text)

    assert render(tree) == rendered
    assert evaluate(tree) == value


@pytest.mark.parametrize(
    ("text", "message"),
    (
        ("", "expression is empty"),
        ("   ", "expression is empty"),
        ("2+", "ends early"),
        ("2+3)", "unexpected"),
        ("((2+3)4", "unbalanced parentheses"),
        ("2-3", "unexpected character"),
        ("+2", "unexpected"),
    ),
)
def test_malformed_expressions(text, message):
    with pytest.raises(ValueError, match=message):
        parse_expression(text)


def test_leaves_and_canonical_key_ignore_child_order():
    left = Node("add", Leaf(2), Node("add", Leaf(47), Leaf(53)))
    right = Node("add", Node("add", Leaf(53), Leaf(47)), Leaf(2))

    assert leaves(left) == (2, 47, 53)
    assert leaves(right) == (53, 47, 2)
    assert canonical_key(left) == canonical_key(right)


def test_leaves_reject_negative_values():
    with pytest.raises(ValueError, match="naturals"):
        Leaf(-1)


@pytest.mark.parametrize(("n", "expected"), ((1, 1), (2, 1), (3, 3), (4, 15), (8, 135135)))
def test_unordered_tree_count(n, expected):
    assert unordered_tree_count(n) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_enumerated_trees_match_their_counts(n: int):
    values = tuple(range(2, n + 2))
    unordered = list(enumerate_trees(values, "add"))
    ordered = list(enumerate_trees(values, "add", ordered=True))

    assert len(unordered) == unordered_tree_count(n)
    assert len({canonical_key(tree) for tree in unordered}) == len(unordered)
    assert len(ordered) == math.factorial(n) * math.comb(2 * n - 2, n - 1) // n
    assert all(sorted(leaves(tree)) == list(values) for tree in ordered)


def test_repeated_leaves_give_each_tree_once():
    assert len(list(enumerate_trees((2, 2), "add", ordered=True))) == 1
    assert len(list(enumerate_trees((2, 2, 4), "add"))) == 2


def test_enumeration_rejects_empty_input_and_unknown_operators():
    with pytest.raises(ValueError, match="at least one leaf"):
        list(enumerate_trees((), "add"))
    with pytest.raises(ValueError, match="unknown operator"):
        list(enumerate_trees((1, 2), "sub"))


def test_tree_delta_reports_every_operation_post_order():
    report = tree_delta(CompTree(parse_expression("(2+98)+(47+53)")))

    assert report.result == 200
    assert report.per_node == pytest.approx(
        (delta_add(2, 98), delta_add(47, 53), delta_add(100, 100))
    )
    assert report.total == pytest.approx(-11.2534, abs=1e-4)


def test_collapse_mode_changes_only_the_equal_operands():
    report = tree_delta(CompTree(parse_expression("(2+98)+(47+53)"), "collapse"))

    assert report.per_node[2] == 1.0
    assert report.total == pytest.approx(-4.6095, abs=1e-4)


def test_every_bracketing_of_the_worked_sum_telescopes():
    for tree in enumerate_trees(WORKED, "add"):
        assert tree_delta(CompTree(tree)).total == pytest.approx(SUM_TOTAL, abs=1e-9)


def test_flat_delta_is_the_composed_total():
    assert flat_delta(WORKED, "add") == pytest.approx(SUM_TOTAL)
    assert flat_delta((2, 3, 5), "mul") == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError, match="unknown operator"):
        flat_delta((1, 2), "pow")


def test_two_arg_spectrum_of_the_worked_sum_is_a_single_total():
    (entry,) = delta_spectrum(WORKED, "add")

    assert entry.total == pytest.approx(SUM_TOTAL, abs=1e-8)
    assert entry.multiplicity == 15


def test_collapse_spectrum_separates_bracketings():
    assert delta_spectrum((2, 2, 4), "add", "collapse") == (
        SpectrumEntry(total=-1.0, multiplicity=1),
        SpectrumEntry(total=2.0, multiplicity=1),
    )


def test_collapse_spectrum_of_the_worked_sum_holds_both_totals():
    spectrum = delta_spectrum(WORKED, "add", "collapse")
    totals = [entry.total for entry in spectrum]

    assert sum(entry.multiplicity for entry in spectrum) == 15
    assert any(total == pytest.approx(SUM_TOTAL, abs=1e-8) for total in totals)
    assert any(total == pytest.approx(-4.6095, abs=1e-4) for total in totals)


def test_multiplication_spectrum_is_zero():
    assert delta_spectrum((2, 3, 5, 7), "mul") == (SpectrumEntry(total=0.0, multiplicity=15),)


@pytest.mark.parametrize("n", range(1, 7))
def test_spectrum_multiplicities_count_every_unordered_tree(n):
    values = tuple(range(2, n + 2))

    for op in ("add", "mul"):
        spectrum = delta_spectrum(values, op)
        assert sum(entry.multiplicity for entry in spectrum) == unordered_tree_count(n)


def test_telescoping_totals_merge_despite_float_noise():
    values = (3, 5, 7, 11, 13, 17)
    exact = math.log2(sum(values)) - sum(math.log2(v) for v in values)

    (entry,) = delta_spectrum(values, "add")

    assert entry.multiplicity == 945
    assert entry.total == pytest.approx(exact, abs=1e-9)


def test_spectrum_rejects_an_incomplete_tree_enumeration(monkeypatch):
    full = delta_module.enumerate_trees
    monkeypatch.setattr(
        delta_module, "enumerate_trees", lambda values, op: list(full(values, op))[1:]
    )

    with pytest.raises(RuntimeError, match="enumerated 2 trees over 3 distinct values"):
        delta_spectrum((2, 3, 5), "add")


def test_spectrum_refuses_more_than_eight_values():
    with pytest.raises(SizeLimitError, match="limited to 8"):
        delta_spectrum(tuple(range(1, 10)), "add")


@pytest.mark.parametrize(
    ("primitive", "expected"),
    (
        (Successor(1), 1.0),
        (Successor(0), 0.0),
        (Constant(), 0.0),
        (Projection(2, (4, 8)), -3.0),
        (Composition(2, 4, 16), 3.0),
        (PrimRecursion(4, 8, 32), 0.0),
    ),
)
def test_primitive_deltas(primitive, expected):
    assert primitive_delta(primitive) == pytest.approx(expected)


def test_projection_index_counts_from_one():
    with pytest.raises(ValueError, match="projection index 3 outside"):
        primitive_delta(Projection(3, (1, 2)))
    with pytest.raises(ValueError, match="projection index 0 outside"):
        primitive_delta(Projection(0, (1, 2)))


def test_worked_methods_keep_printed_and_exact_totals_apart():
    methods = {method.label: method for method in worked_methods()}

    assert list(methods) == ["composed", "stored-1", "stored-2", "stored-2-collapse"]
    assert [m.printed_total for m in methods.values()] == [-12.17, -10.26, -11.31, -4.67]
    for label in ("composed", "stored-1", "stored-2"):
        assert methods[label].total == pytest.approx(SUM_TOTAL, abs=1e-9)
    assert methods["composed"].total - methods["composed"].printed_total > 0.9
    assert methods["stored-2-collapse"].total == pytest.approx(-4.6095, abs=1e-4)
