"""Elastic translations of the plane and the bijection chains they induce.

An elastic translation by the stretch r widens column x into r(x) columns
and shrinks it by the same factor::

    e_r(x, y) = (x * r(x) + y mod r(x), y // r(x))

A constant stretch permutes the plane.  A growing stretch leaves empty
columns between the widened ones, so its inverse is partial.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import NotInImageError
from .plane import Cell, info, pair, unpair

SpecKind = Literal["constant", "polynomial", "custom"]


@dataclass(frozen=True)
class ElasticSpec:
    """Parameters of a stretch function r; build one with the classmethods."""

    kind: SpecKind
    c: int = 1
    k: int = 0
    r: Callable[[int], int] | None = field(default=None, compare=False, repr=False)
    name: str = ""

    def __post_init__(self) -> None:
        if self.kind == "custom":
            if self.r is None:
                raise ValueError("a custom stretch needs a function")
            return
        if self.kind not in ("constant", "polynomial"):
            raise ValueError(f"unknown stretch kind: {self.kind}")
        if self.c < 1:
            raise ValueError(f"stretch constant must be at least 1: {self.c}")
        if self.kind == "polynomial" and self.k < 1:
            raise ValueError(f"polynomial degree must be at least 1: {self.k}")

    @classmethod
    def constant(cls, c: int) -> ElasticSpec:
        return cls("constant", c=c, name=f"constant({c})")

    @classmethod
    def polynomial(cls, c: int, k: int) -> ElasticSpec:
        return cls("polynomial", c=c, k=k, name=f"polynomial({c},{k})")

    @classmethod
    def custom(cls, r: Callable[[int], int], name: str = "custom") -> ElasticSpec:
        """Wrap a monotone non-decreasing ``r``; monotonicity is not checked."""
        return cls("custom", r=r, name=name)

    def stretch(self, x: int) -> int:
        """r(x), clamped to at least 1 so column 0 keeps a modulus."""
        if self.kind == "constant":
            raw = self.c
        elif self.kind == "polynomial":
            raw = self.c * x**self.k
        else:
            raw = self.r(x)
        return max(1, raw)

    def column_start(self, u: int) -> int:
        """First image column of source column ``u``: u * r(u)."""
        return u * self.stretch(u)


def elastic_apply(spec: ElasticSpec, cell: Cell) -> Cell:
    r = spec.stretch(cell.x)
    return Cell(cell.x * r + cell.y % r, cell.y // r)


def _source_column(spec: ElasticSpec, x: int) -> int:
    """Largest u with u * r(u) <= x; u * r(u) is strictly increasing."""
    low, high = 0, 1
    while spec.column_start(high) <= x:
        low, high = high, high * 2
    while high - low > 1:
        middle = (low + high) // 2
        if spec.column_start(middle) <= x:
            low = middle
        else:
            high = middle
    return low


def elastic_invert(spec: ElasticSpec, cell: Cell) -> Cell:
    """Preimage of ``cell``; raises NotInImageError in a gap column."""
    u = _source_column(spec, cell.x)
    r = spec.stretch(u)
    d = cell.x - u * r
    if d >= r:
        raise NotInImageError(f"column {cell.x} is not in the image of {spec.name}")
    return Cell(u, cell.y * r + d)


def chain_forward(spec: ElasticSpec, n: int) -> int:
    """N -> N^2 -> N^2 -> N through the pairing."""
    return pair(elastic_apply(spec, unpair(n)))


def chain_backward(spec: ElasticSpec, n: int) -> int:
    return pair(elastic_invert(spec, unpair(n)))


def elastic_delta(spec: ElasticSpec | None, cell: Cell) -> float:
    """Pairing efficiency of the translated cell against the original inputs."""
    image = cell if spec is None else elastic_apply(spec, cell)
    return info(pair(image)) - info(cell.x) - info(cell.y)


@dataclass(frozen=True)
class Surface:
    """Sampled efficiency surface, cells in pairing order."""

    cells: tuple[Cell, ...]
    delta: np.ndarray


def surface_grid(
    spec: ElasticSpec | None,
    x_range: tuple[int, int],
    y_range: tuple[int, int],
    stride: int = 1,
) -> Surface:
    """Efficiency over the half-open window ``x_range`` by ``y_range``.

    ``spec`` None samples the plain pairing.  Cells are ordered by their
    own pairing code, i.e. counter-diagonal by counter-diagonal.
    """
    if stride < 1:
        raise ValueError(f"stride must be positive: {stride}")
    xs = range(x_range[0], x_range[1], stride)
    ys = range(y_range[0], y_range[1], stride)
    if not xs or not ys:
        raise ValueError(f"surface window is empty: x {x_range}, y {y_range}")
    cells = tuple(sorted((Cell(x, y) for x in xs for y in ys), key=pair))
    delta = np.fromiter((elastic_delta(spec, cell) for cell in cells), dtype=np.float64)
    return Surface(cells=cells, delta=delta)


def reference_apply(spec: ElasticSpec, x: int, y: int) -> tuple[float, float]:
    """Real-valued translation (r(x) x, y / r(x)), without the modulus."""
    r = spec.stretch(x)
    return float(r * x), y / r


def _real_pair(x: float, y: float) -> float:
    return (x + y) * (x + y + 1) / 2 + y


def reference_ratio(c: int, h: float, x: int) -> float:
    """Growth of the pairing code under the reference stretch by ``c`` on y = h x."""
    if c < 1:
        raise ValueError(f"stretch constant must be at least 1: {c}")
    if not h > 0:
        raise ValueError(f"slope must be positive: {h}")
    if x < 1:
        raise ValueError(f"x must be positive: {x}")
    y = h * x
    return _real_pair(*reference_apply(ElasticSpec.constant(c), x, y)) / _real_pair(x, y)


def occupied_columns(spec: ElasticSpec, width: int) -> tuple[int, ...]:
    """Image columns within [0, width] hit from the window [0, width]^2."""
    if width < 0:
        raise ValueError(f"width must be non-negative: {width}")
    occupied = np.zeros(width + 1, dtype=bool)
    for x in range(width + 1):
        start = spec.column_start(x)
        if start > width:
            continue
        residues = np.arange(min(spec.stretch(x), width + 1))
        columns = start + residues
        occupied[columns[columns <= width]] = True
    return tuple(int(column) for column in np.flatnonzero(occupied))


def interleaving_families(c: int, width: int, height: int) -> dict[int, np.ndarray]:
    """Efficiency of the constant-c translation split by row residue.

    Family ``d`` holds, at ``[x, q]``, the efficiency of the image of
    (x, q c + d).  Rows are those with q c + d < height.
    """
    spec = ElasticSpec.constant(c)
    if width < 1 or height < c:
        raise ValueError(f"window {width}x{height} is too small for stretch {c}")
    rows = height // c
    return {
        d: np.array(
            [[elastic_delta(spec, Cell(x, q * c + d)) for q in range(rows)] for x in range(width)],
            dtype=np.float64,
        )
        for d in range(c)
    }
