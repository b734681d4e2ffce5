"""Invariant suites: every machine-checkable property, checked by brute force.

Each property is a function of a :class:`VerifyProfile` that raises
:class:`PropertyFailure` with a one-line detail on the first violation.
The oracles here are written independently of the code they check.
"""

from __future__ import annotations

import math
import time
from collections import Counter, defaultdict
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .calculus import (
    CompTree,
    delta_add,
    delta_mul,
    delta_spectrum,
    enumerate_trees,
    tree_delta,
    worked_methods,
)
from .combinadics import (
    bell,
    catalan,
    computation_count,
    distinct_partition_count,
    sigma_decode,
    sigma_encode,
    stirling2,
    stirling2_recurrence,
)
from .elastic import (
    ElasticSpec,
    chain_backward,
    chain_forward,
    elastic_apply,
    elastic_delta,
    interleaving_families,
    occupied_columns,
    reference_ratio,
    surface_grid,
)
from .errors import NotInImageError
from .injections import (
    ColumnSurvey,
    SortKey,
    column_height,
    phi_sorted,
    theta_alg1,
)
from .plane import (
    Cell,
    ElasticDiagonal,
    OriginLine,
    asymptote,
    delta_pi,
    pair,
    triangular,
    unpair,
)
from .profiles import VerifyProfile
from .setcodec import canonical_set, explain_appendix, set_decode, set_encode
from .subset_sum import nth_subset_with_sum, subset_sum_decide

WORKED_SUM_TOTAL = math.log2(200) - sum(math.log2(v) for v in (2, 47, 53, 98))
WORKED_COLLAPSE_TOTAL = (
    math.log2(100) - 1 - math.log2(98) + math.log2(100) - math.log2(47) - math.log2(53) + 1
)


class PropertyFailure(Exception):
    """A property was violated; the message names the counterexample."""


def _expect(condition: bool, detail: str) -> None:
    if not condition:
        raise PropertyFailure(detail)


@dataclass(frozen=True)
class Property:
    name: str
    module: str
    check: Callable[[VerifyProfile], None]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str
    seconds: float


REGISTRY: dict[str, Property] = {}


def _property(name: str, module: str):
    def register(check: Callable[[VerifyProfile], None]) -> Callable[[VerifyProfile], None]:
        if name in REGISTRY:
            raise ValueError(f"property registered twice: {name}")
        REGISTRY[name] = Property(name, module, check)
        return check

    return register


# cantor-plane


@_property("pairing-round-trip", "cantor-plane")
def _pairing_round_trip(profile: VerifyProfile) -> None:
    for n in range(profile.pair_codes):
        _expect(pair(unpair(n)) == n, f"pair(unpair({n})) != {n}")
    for x in range(profile.pair_window):
        for y in range(profile.pair_window):
            _expect(unpair(pair(Cell(x, y))) == Cell(x, y), f"unpair(pair({x}, {y})) differs")


@_property("counter-diagonal-contiguity", "cantor-plane")
def _counter_diagonals(profile: VerifyProfile) -> None:
    for w in range(profile.diagonals):
        codes = sorted(pair(Cell(x, w - x)) for x in range(w + 1))
        start = triangular(w)
        _expect(codes == list(range(start, start + w + 1)), f"diagonal {w} is not contiguous")


@_property("origin-line-convergence", "cantor-plane")
def _origin_lines(profile: VerifyProfile) -> None:
    x = 10**6
    for h in (1, 2, 3, 10):
        gap = abs(delta_pi(Cell(x, h * x)) - asymptote(OriginLine(h)))
        _expect(gap < 1e-4, f"y = {h}x is {gap} from its limit at x = {x}")
    _expect(abs(delta_pi(Cell(x, x)) - 1) < 1e-5, "diagonal efficiency is not near 1")


@_property("const-line-divergence", "cantor-plane")
def _const_lines(profile: VerifyProfile) -> None:
    for c in (1, 2, 5):
        values = [delta_pi(Cell(2**k, c)) for k in range(4, 41)]
        _expect(
            all(a < b for a, b in zip(values, values[1:])),
            f"efficiency on y = {c} is not increasing",
        )


# combinadics


@_property("sigma-round-trip", "combinadics")
def _sigma_round_trip(profile: VerifyProfile) -> None:
    ground = range(profile.sigma_ground + 1)
    for k in range(1, profile.sigma_max_size + 1):
        for s in combinations(ground, k):
            _expect(sigma_decode(k, sigma_encode(s)) == s, f"sigma round trip fails on {s}")


@_property("sigma-ordering", "combinadics")
def _sigma_ordering(profile: VerifyProfile) -> None:
    ground = range(profile.sigma_ground + 1)
    for k in range(1, profile.sigma_max_size + 1):
        ordered = sorted(combinations(ground, k), key=lambda s: s[::-1])
        indices = [sigma_encode(s) for s in ordered]
        _expect(indices == list(range(len(ordered))), f"sigma_{k} is not the colex rank")


def _set_partitions(n: int) -> Iterator[list[list[int]]]:
    if n == 0:
        yield []
        return
    for partition in _set_partitions(n - 1):
        for block in range(len(partition)):
            yield [[*b, n - 1] if i == block else b for i, b in enumerate(partition)]
        yield [*partition, [n - 1]]


@_property("partition-oracles", "combinadics")
def _partition_oracles(profile: VerifyProfile) -> None:
    for n in range(profile.partition_max + 1):
        blocks = Counter(len(partition) for partition in _set_partitions(n))
        _expect(bell(n) == sum(blocks.values()), f"bell({n}) disagrees with enumeration")
        for k in range(n + 1):
            _expect(stirling2(n, k) == blocks[k], f"stirling2({n}, {k}) disagrees")


@_property("stirling-agreement", "combinadics")
def _stirling_agreement(profile: VerifyProfile) -> None:
    for n in range(11):
        for k in range(n + 1):
            _expect(
                stirling2(n, k) == stirling2_recurrence(n, k),
                f"stirling2({n}, {k}) formulas disagree",
            )


@_property("counting-chain", "combinadics")
def _counting_chain(profile: VerifyProfile) -> None:
    # B_4 = 15 < 2^4, so the middle inequality starts at five operands.
    for n in range(5, 9):
        ordered = math.factorial(n) * catalan(n - 1)
        _expect(ordered > bell(n) > 2**n > 1, f"counting chain breaks at n = {n}")


@_property("ordered-tree-count", "combinadics")
def _ordered_tree_count(profile: VerifyProfile) -> None:
    for n in range(1, profile.tree_max_leaves + 1):
        values = tuple(range(2, n + 2))
        enumerated = sum(1 for _ in enumerate_trees(values, "add", ordered=True))
        expected = computation_count(n, "noncomm-nonassoc")
        _expect(enumerated == expected, f"{enumerated} ordered trees over {n} leaves")


# set-codec


@_property("codec-round-trip", "set-codec")
def _codec_round_trip(profile: VerifyProfile) -> None:
    ground = range(profile.codec_ground + 1)
    for k in range(1, len(ground) + 1):
        for s in combinations(ground, k):
            _expect(set_decode(set_encode(s)) == s, f"codec round trip fails on {s}")
    for n in range(profile.codec_codes):
        _expect(set_encode(set_decode(n)) == n, f"set_encode(set_decode({n})) != {n}")


@_property("codec-grid-anchor", "set-codec")
def _codec_grid_anchor(profile: VerifyProfile) -> None:
    for k in range(9):
        s = tuple(range(k + 1))
        _expect(set_encode(s) == pair(Cell(k, 0)), f"{{0..{k}}} is not at ({k}, 0)")


@_property("codec-column-partition", "set-codec")
def _codec_columns(profile: VerifyProfile) -> None:
    seen: set[tuple[int, ...]] = set()
    for x in range(profile.codec_window):
        for y in range(profile.codec_window):
            s = set_decode(pair(Cell(x, y)))
            _expect(len(s) == x + 1, f"cell ({x}, {y}) holds a set of size {len(s)}")
            _expect(s not in seen, f"{s} appears twice")
            seen.add(s)


@_property("appendix-agreement", "set-codec")
def _appendix_agreement(profile: VerifyProfile) -> None:
    rng = np.random.default_rng(profile.seed)
    for k, sigma in zip(
        rng.integers(1, 9, profile.appendix_samples),
        rng.integers(0, 10**6, profile.appendix_samples),
    ):
        code = pair(Cell(int(k), int(sigma)))
        shifted = sigma_decode(int(k), int(sigma))
        try:
            decoded = set_decode(code, "appendix")
        except NotInImageError:
            _expect(shifted[0] == 0, f"appendix decode rejected {code}")
            continue
        _expect(shifted[0] > 0, f"appendix decode accepted {code}")
        _expect(decoded == tuple(e - 1 for e in shifted), f"appendix decode of {code}")
        _expect(set_encode(decoded, "appendix") == code, f"appendix re-encode of {code}")


@_property("appendix-worked-example", "set-codec")
def _appendix_worked(profile: VerifyProfile) -> None:
    trace = explain_appendix((0, 3, 5, 7, 9, 10))
    _expect(trace.sigma == 811, f"sigma is {trace.sigma}")
    _expect(trace.code == 334964, f"code is {trace.code}")
    _expect(set_decode(334964, "appendix") == (0, 3, 5, 7, 9, 10), "decode of 334964")


# info-calculus

_WORKED_LEAVES = (2, 47, 53, 98)


@_property("delta-telescoping", "info-calculus")
def _delta_telescoping(profile: VerifyProfile) -> None:
    trees = list(enumerate_trees(_WORKED_LEAVES, "add"))
    _expect(len(trees) == 15, f"{len(trees)} unordered trees over four leaves")
    per_node = set()
    for tree in trees:
        report = tree_delta(CompTree(tree))
        _expect(abs(report.total - WORKED_SUM_TOTAL) < 1e-9, f"total {report.total}")
        per_node.add(tuple(sorted(round(value, 9) for value in report.per_node)))
    _expect(len(per_node) > 1, "every tree has the same per-node efficiencies")


@_property("delta-collapse-spectrum", "info-calculus")
def _delta_collapse(profile: VerifyProfile) -> None:
    totals = [entry.total for entry in delta_spectrum(_WORKED_LEAVES, "add", "collapse")]
    _expect(len(totals) >= 2, "collapse mode left a single total")
    for expected in (WORKED_COLLAPSE_TOTAL, WORKED_SUM_TOTAL):
        _expect(any(abs(t - expected) < 1e-6 for t in totals), f"{expected} missing")


@_property("delta-mul-associativity", "info-calculus")
def _delta_mul(profile: VerifyProfile) -> None:
    for values in ((2, 3, 5, 7), (2, 2, 9, 4, 11), (13, 6, 8)):
        for tree in enumerate_trees(values, "mul"):
            report = tree_delta(CompTree(tree))
            _expect(all(abs(v) < 1e-9 for v in report.per_node), f"{values} lost information")


@_property("delta-commutativity", "info-calculus")
def _delta_commutativity(profile: VerifyProfile) -> None:
    for x in range(40):
        for y in range(40):
            for mode in ("two-arg", "collapse"):
                _expect(delta_add(x, y, mode) == delta_add(y, x, mode), f"add({x}, {y})")
                _expect(delta_mul(x, y, mode) == delta_mul(y, x, mode), f"mul({x}, {y})")


@_property("worked-discrepancy", "info-calculus")
def _worked_discrepancy(profile: VerifyProfile) -> None:
    for method in worked_methods():
        expected = WORKED_COLLAPSE_TOTAL if method.mode == "collapse" else WORKED_SUM_TOTAL
        _expect(abs(method.total - expected) < 1e-9, f"{method.label} total {method.total}")
        if method.mode == "collapse":
            _expect(
                abs(method.total - method.printed_total) < 0.15,
                f"{method.label} is far from its printed total",
            )


# elastic


@_property("elastic-chain-bijectivity", "elastic")
def _chain_bijectivity(profile: VerifyProfile) -> None:
    for c in (2, 3, 100):
        spec = ElasticSpec.constant(c)
        for n in range(profile.chain_codes):
            _expect(
                chain_backward(spec, chain_forward(spec, n)) == n,
                f"chain round trip fails for c = {c} at {n}",
            )


@_property("elastic-gap-structure", "elastic")
def _gap_structure(profile: VerifyProfile) -> None:
    spec = ElasticSpec.custom(lambda x: x, "r(x)=x")
    expected = (0, 1, 4, 5, 9, 10, 11, 16, 17, 18, 19, 25, 26, 27, 28, 29)
    _expect(occupied_columns(spec, 32) == expected, "occupied columns of r(x) = x differ")
    for empty in (12, 13, 14, 15):
        try:
            chain_backward(spec, pair(Cell(empty, 0)))
        except NotInImageError:
            continue
        raise PropertyFailure(f"column {empty} has a preimage")


@_property("elastic-interleaving", "elastic")
def _interleaving(profile: VerifyProfile) -> None:
    for c in (2, 3, 5):
        spec = ElasticSpec.constant(c)
        families = interleaving_families(c, 20, 4 * c)
        _expect(sorted(families) == list(range(c)), f"constant({c}) does not split by residue")
        for d, e in combinations(range(c), 2):
            _expect(
                not np.allclose(families[d][1:], families[e][1:]),
                f"constant({c}) residue families {d} and {e} coincide",
            )
        for x in range(20):
            for q in range(4):
                images = {elastic_apply(spec, Cell(x, q * c + d)) for d in range(c)}
                _expect(len(images) == c, f"constant({c}) merges the residues of ({x}, {q})")


@_property("elastic-no-compression", "elastic")
def _no_compression(profile: VerifyProfile) -> None:
    for c in (2, 10, 100):
        spec = ElasticSpec.constant(c)
        for k in range(10, 41):
            x = 2**k
            _expect(elastic_delta(spec, Cell(x, x)) > 0, f"c = {c} compresses at x = 2^{k}")


@_property("elastic-polynomial-growth", "elastic")
def _polynomial_growth(profile: VerifyProfile) -> None:
    spec = ElasticSpec.custom(lambda x: x, "r(x)=x")
    for k in range(8, 21):
        x = 2**k
        _expect(elastic_delta(spec, Cell(x, x)) >= 2 * k - 2, f"growth too small at x = 2^{k}")


@_property("elastic-limits", "elastic")
def _elastic_limits(profile: VerifyProfile) -> None:
    x = 10**6
    _expect(abs(reference_ratio(3, 2, x) - 121 / 81) < 1e-3, "reference ratio for c = 3, h = 2")
    surface = surface_grid(ElasticSpec.constant(2), (x, x + 1), (x, x + 1))
    gap = abs(float(surface.delta[0]) - asymptote(ElasticDiagonal(2)))
    _expect(gap < 1e-3, f"constant(2) diagonal is {gap} from its limit")


# sorted-injections

_SURVEYED_KEYS = (SortKey.sum(), SortKey.product())


@_property("theta-oracle-agreement", "sorted-injections")
def _theta_agreement(profile: VerifyProfile) -> None:
    for key in _SURVEYED_KEYS:
        survey = ColumnSurvey(key)
        survey.extend_to(profile.theta_sets)
        for n, cell in survey.cells():
            alg1 = theta_alg1(key, canonical_set(n))
            _expect(alg1 == cell.theta, f"{key.kind} rows differ at canonical set {n}")


@_property("sorted-injectivity", "sorted-injections")
def _injectivity(profile: VerifyProfile) -> None:
    for key in (SortKey.cardinality(), *_SURVEYED_KEYS):
        survey = ColumnSurvey(key)
        survey.extend_to(profile.injective_sets)
        codes = [cell.code for _, cell in survey.cells()]
        _expect(len(codes) == len(set(codes)), f"{key.kind} codes collide")


@_property("theta-compactness", "sorted-injections")
def _compactness(profile: VerifyProfile) -> None:
    for key in _SURVEYED_KEYS:
        survey = ColumnSurvey(key)
        survey.extend_to(profile.injective_sets)
        rows: defaultdict[int, list[int]] = defaultdict(list)
        for _, cell in survey.cells():
            rows[cell.key].append(cell.theta)
        for value, thetas in rows.items():
            _expect(thetas == list(range(len(thetas))), f"{key.kind} column {value} has holes")


@_property("column-height-oracle", "sorted-injections")
def _column_heights(profile: VerifyProfile) -> None:
    key = SortKey.sum()
    for n in range(1, profile.height_max + 1):
        expected = 2 * distinct_partition_count(n)
        _expect(column_height(key, n) == expected, f"sum column {n} height")


@_property("cardinality-calibration", "sorted-injections")
def _calibration(profile: VerifyProfile) -> None:
    key = SortKey.cardinality()
    survey = ColumnSurvey(key)
    for n in range(profile.calibration_sets):
        s = canonical_set(n)
        _expect(phi_sorted(key, s, survey).code == n, f"cardinality code of {s} is not {n}")


@_property("subset-sum-bitmask", "sorted-injections")
def _subset_sum_bitmask(profile: VerifyProfile) -> None:
    rng = np.random.default_rng(profile.seed)
    for _ in range(profile.subset_instances):
        size = int(rng.integers(1, profile.subset_ground_size + 1))
        ground = tuple(sorted(int(v) for v in rng.choice(np.arange(1, 51), size, replace=False)))
        sums: defaultdict[int, list[int]] = defaultdict(list)
        for mask in range(1, 1 << size):
            sums[sum(ground[i] for i in range(size) if mask >> i & 1)].append(mask)
        for target in range(sum(ground) + 2):
            _expect(
                subset_sum_decide(ground, target) == (target in sums),
                f"decide({ground}, {target})",
            )
        target = int(rng.choice(list(sums)))
        found = nth_subset_with_sum(ground, target, len(sums[target]))
        _expect(found is not None, f"fewer witnesses than masks for {ground}, {target}")
        _expect(
            nth_subset_with_sum(ground, target, len(sums[target]) + 1) is None,
            f"more witnesses than masks for {ground}, {target}",
        )


def run_suites(profile: VerifyProfile, only: str | None = None) -> Iterator[PropertyResult]:
    """Check each registered property, optionally just ``only``, in order."""
    if only is not None and only not in REGISTRY:
        raise ValueError(f"unknown property: {only}")
    for prop in REGISTRY.values():
        if only is not None and prop.name != only:
            continue
        start = time.perf_counter()
        try:
            prop.check(profile)
        except PropertyFailure as failure:
            yield PropertyResult(prop.name, False, str(failure), time.perf_counter() - start)
            continue
        yield PropertyResult(prop.name, True, "", time.perf_counter() - start)
