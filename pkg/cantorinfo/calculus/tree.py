"""Binary computation trees over add and mul, their parser and enumerator."""

from __future__ import annotations

import math
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations, product
from typing import Literal

Op = Literal["add", "mul"]
Mode = Literal["two-arg", "collapse"]
OPS: tuple[Op, ...] = ("add", "mul")
MODES: tuple[Mode, ...] = ("two-arg", "collapse")

_SYMBOLS: dict[Op, str] = {"add": "+", "mul": "*"}
_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<symbol>[+*()]))")


@dataclass(frozen=True)
class Leaf:
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"leaf values must be naturals: {self.value}")


@dataclass(frozen=True)
class Node:
    op: Op
    left: Tree
    right: Tree


Tree = Leaf | Node


@dataclass(frozen=True)
class CompTree:
    """A computation tree together with the rule its δ is evaluated under."""

    root: Tree
    mode: Mode = "two-arg"


def evaluate(tree: Tree) -> int:
    """Arithmetic value of ``tree``."""
    match tree:
        case Leaf(value=value):
            return value
        case Node(op="add", left=left, right=right):
            return evaluate(left) + evaluate(right)
        case Node(op="mul", left=left, right=right):
            return evaluate(left) * evaluate(right)
    raise ValueError(f"unknown tree node: {tree!r}")


def leaves(tree: Tree) -> tuple[int, ...]:
    """Leaf values left to right."""
    if isinstance(tree, Leaf):
        return (tree.value,)
    return leaves(tree.left) + leaves(tree.right)


def render(tree: Tree) -> str:
    """Fully bracketed infix form, e.g. ``((2+98)+(47+53))``."""
    if isinstance(tree, Leaf):
        return str(tree.value)
    return f"({render(tree.left)}{_SYMBOLS[tree.op]}{render(tree.right)})"


def canonical_key(tree: Tree) -> str:
    """Form shared by every tree equal up to swapping children."""
    if isinstance(tree, Leaf):
        return str(tree.value)
    children = sorted((canonical_key(tree.left), canonical_key(tree.right)))
    return f"{tree.op}({children[0]},{children[1]})"


def _tokenize(text: str) -> list[str]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None:
            raise ValueError(f"unexpected character in expression at {position}: {text!r}")
        tokens.append(match.group("number") or match.group("symbol"))
        position = match.end()
    return tokens


class _Parser:
    """Recursive descent; ``*`` binds tighter than ``+``, both left-associative."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.position = 0

    def peek(self) -> str | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def take(self) -> str:
        token = self.peek()
        if token is None:
            raise ValueError(f"expression ends early: {self.text!r}")
        self.position += 1
        return token

    def parse(self) -> Tree:
        tree = self.sum()
        if self.peek() is not None:
            raise ValueError(f"unexpected {self.peek()!r} in expression: {self.text!r}")
        return tree

    def sum(self) -> Tree:
        tree = self.term()
        while self.peek() == "+":
            self.take()
            tree = Node("add", tree, self.term())
        return tree

    def term(self) -> Tree:
        tree = self.atom()
        while self.peek() == "*":
            self.take()
            tree = Node("mul", tree, self.atom())
        return tree

    def atom(self) -> Tree:
        token = self.take()
        if token == "(":
            tree = self.sum()
            if self.take() != ")":
                raise ValueError(f"unbalanced parentheses in expression: {self.text!r}")
            return tree
        if token.isdigit():
            return Leaf(int(token))
        raise ValueError(f"unexpected {token!r} in expression: {self.text!r}")


def parse_expression(text: str) -> Tree:
    """Parse integers, ``+``, ``*`` and parentheses into a tree."""
    if not text.strip():
        raise ValueError("expression is empty")
    return _Parser(text).parse()


def _splits(indices: tuple[int, ...], ordered: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    if ordered:
        for size in range(1, len(indices)):
            for left in combinations(indices, size):
                yield left, tuple(i for i in indices if i not in left)
        return
    # The first index always goes left, so each unordered split appears once.
    first, rest = indices[0], indices[1:]
    for size in range(len(rest)):
        for chosen in combinations(rest, size):
            left = (first, *chosen)
            yield left, tuple(i for i in rest if i not in chosen)


def enumerate_trees(values: Sequence[int], op: Op, ordered: bool = False) -> Iterator[Tree]:
    """Every distinct binary tree combining ``values`` with ``op``.

    Ordered trees distinguish left from right and number n! C(n-1) for n
    distinct leaves; unordered trees number (2n-3)!!.  Repeated values
    yield each distinct tree once.
    """
    if op not in OPS:
        raise ValueError(f"unknown operator: {op}")
    if not values:
        raise ValueError("a computation tree needs at least one leaf")
    memo: dict[tuple[int, ...], list[Tree]] = {}

    def build(indices: tuple[int, ...]) -> list[Tree]:
        if indices in memo:
            return memo[indices]
        if len(indices) == 1:
            trees: list[Tree] = [Leaf(values[indices[0]])]
        else:
            trees = [
                Node(op, left, right)
                for left_indices, right_indices in _splits(indices, ordered)
                for left, right in product(build(left_indices), build(right_indices))
            ]
        memo[indices] = trees
        return trees

    seen: set[object] = set()
    for tree in build(tuple(range(len(values)))):
        key = tree if ordered else canonical_key(tree)
        if key in seen:
            continue
        seen.add(key)
        yield tree


def unordered_tree_count(n: int) -> int:
    """(2n - 3)!!, the number of unordered trees over n distinct leaves."""
    if n < 1:
        raise ValueError(f"a computation tree needs at least one leaf: {n}")
    return math.prod(range(1, 2 * n - 2, 2))
