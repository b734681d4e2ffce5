"""Command-line interface for cantorinfo.

Results go to standard output, diagnostics to standard error.  Exit status
is 0 on success, 1 when the answer does not exist in the domain (or a
verification property fails), and 2 for usage errors.
"""

from __future__ import annotations

import sys
from collections.abc import Callable, Sequence
from functools import wraps

import click

from .calculus import (
    CompTree,
    delta_spectrum,
    parse_expression,
    render,
    tree_delta,
    worked_methods,
)
from .combinadics import finset, sigma_decode, sigma_encode
from .elastic import (
    ElasticSpec,
    chain_backward,
    chain_forward,
    elastic_apply,
    elastic_invert,
    surface_grid,
)
from .errors import DomainError
from .injections import (
    ColumnSurvey,
    SortKey,
    column_height,
    density_profile,
    theta_alg1,
    theta_bucketed,
)
from .plane import (
    Cell,
    ConstLine,
    ConstShift,
    Diagonal,
    ElasticDiagonal,
    Limit,
    OriginLine,
    Ratio,
    asymptote,
    delta_pi,
    pair,
    unpair,
)
from .profiles import PROFILES
from .setcodec import MODES, enumerate_sets, explain_appendix, set_decode, set_encode
from .stdio import CSVOutput, JSONLOutput, format_bits, format_set
from .subset_sum import nth_subset_with_sum, subset_sum_decide
from .verify import REGISTRY, run_suites

NAT = click.IntRange(min=0)
POSITIVE = click.IntRange(min=1)


class IntListParam(click.ParamType):
    """Comma-separated decimal naturals, optionally in braces."""

    name = "values"

    def parse(self, value: str) -> tuple[int, ...]:
        text = value.strip().removeprefix("{").removesuffix("}").strip()
        if not text:
            return ()
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            self.fail(f"not a comma-separated list of integers: {value!r}")
        if any(v < 0 for v in values):
            self.fail(f"values must be naturals: {value!r}")
        return values

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        return self.parse(value)


class FinSetParam(IntListParam):
    """Comma-separated distinct naturals; order does not matter."""

    name = "set"

    def convert(self, value, param, ctx):
        values = super().convert(value, param, ctx)
        try:
            return finset(values)
        except ValueError as error:
            self.fail(str(error), param, ctx)


VALUES = IntListParam()
SET = FinSetParam()


@click.group()
def cli():
    """Exact Cantor pairing, set codes, information efficiency and sorted injections."""


# Pairing


@cli.command("pair")
@click.argument("x", type=NAT)
@click.argument("y", type=NAT)
def pair_command(x: int, y: int):
    """Print the Cantor code of the cell (X, Y)."""
    click.echo(pair(Cell(x, y)))


@cli.command("unpair")
@click.argument("n", type=NAT)
def unpair_command(n: int):
    """Print the cell whose Cantor code is N."""
    cell = unpair(n)
    click.echo(f"{cell.x} {cell.y}")


# Set codes


@cli.group("set")
def set_group():
    """Codes of the finite sets of naturals."""


_mode_option = click.option(
    "--mode", type=click.Choice(MODES), default="canonical", show_default=True
)


@set_group.command("encode")
@click.argument("s", metavar="SET", type=SET)
@_mode_option
def set_encode_command(s, mode: str):
    """Print the code of SET."""
    click.echo(set_encode(s, mode))


@set_group.command("decode")
@click.argument("n", type=NAT)
@_mode_option
def set_decode_command(n: int, mode: str):
    """Print the set whose code is N."""
    click.echo(format_set(set_decode(n, mode)))


@set_group.command("explain")
@click.argument("s", metavar="SET", type=SET)
def set_explain_command(s):
    """Work the appendix-mode encode of SET long-hand."""
    trace = explain_appendix(s)
    click.echo(f"shifted {format_set(trace.shifted)}")
    click.echo(f"terms {' + '.join(str(term) for term in trace.terms)}")
    click.echo(f"sigma {trace.sigma}")
    click.echo(f"cell {trace.cell.x} {trace.cell.y}")
    click.echo(f"code {trace.code}")
    click.echo(f"w {trace.w}")
    click.echo(f"t {trace.t}")


@set_group.command("list")
@click.option("--limit", type=NAT, required=True, help="Number of codes to decode from 0.")
def set_list_command(limit: int):
    """Print the canonical sets with codes below LIMIT, one per line."""
    for s in enumerate_sets(limit):
        click.echo(format_set(s))


# Combinatorial number system


@cli.group("sigma")
def sigma_group():
    """The combinatorial number system."""


@sigma_group.command("encode")
@click.argument("s", metavar="SET", type=SET)
def sigma_encode_command(s):
    """Print the index of SET among the sets of its cardinality."""
    click.echo(sigma_encode(s))


@sigma_group.command("decode")
@click.argument("k", type=POSITIVE)
@click.argument("index", type=NAT)
def sigma_decode_command(k: int, index: int):
    """Print the K-set at INDEX."""
    click.echo(format_set(sigma_decode(k, index)))


# Information efficiency


@cli.group("delta")
def delta_group():
    """Information efficiency of the pairing and of computations."""


@delta_group.command("pair")
@click.argument("x", type=NAT)
@click.argument("y", type=NAT)
def delta_pair_command(x: int, y: int):
    """Print the pairing efficiency at (X, Y) in bits."""
    click.echo(format_bits(delta_pi(Cell(x, y))))


_LIMITS: dict[str, Callable[[int, float], Limit]] = {
    "diag": lambda c, h: Diagonal(),
    "origin-line": lambda c, h: OriginLine(h),
    "const-line": lambda c, h: ConstLine(c),
    "elastic-diag": lambda c, h: ElasticDiagonal(c),
    "ratio": lambda c, h: Ratio(c, h),
    "const-shift": lambda c, h: ConstShift(c),
}


@delta_group.command("limit")
@click.argument("kind", type=click.Choice(tuple(_LIMITS)))
@click.option("--c", "c", type=NAT, default=2, show_default=True, help="Stretch constant.")
@click.option("--h", "h", type=float, default=1.0, show_default=True, help="Slope of y = hx.")
def delta_limit_command(kind: str, c: int, h: float):
    """Print the closed-form limit of the pairing efficiency along KIND."""
    click.echo(format_bits(asymptote(_LIMITS[kind](c, h))))


@delta_group.command("tree")
@click.option("--expr", required=True, help="Integers, +, * and parentheses.")
@click.option(
    "--mode", type=click.Choice(("two-arg", "collapse")), default="two-arg", show_default=True
)
def delta_tree_command(expr: str, mode: str):
    """Print the efficiency of every operation in EXPR and their total."""
    tree = parse_expression(expr)
    report = tree_delta(CompTree(tree, mode))
    click.echo(f"tree {render(tree)}")
    click.echo(f"result {report.result}")
    for position, value in enumerate(report.per_node, start=1):
        click.echo(f"node {position} {format_bits(value)}")
    click.echo(f"total {format_bits(report.total)}")


@delta_group.command("worked")
def delta_worked_command():
    """Print the long-hand totals for 2 + 47 + 53 + 98 against exact evaluation."""
    output = CSVOutput(sys.stdout, ("label", "expression", "mode", "printed_total", "total"))
    for method in worked_methods():
        output.row(method.label, method.expression, method.mode, method.printed_total, method.total)


@cli.command("spectrum")
@click.option("--values", "values", type=VALUES, required=True, help="Comma-separated leaves.")
@click.option("--op", type=click.Choice(("add", "mul")), default="add", show_default=True)
@click.option(
    "--mode", type=click.Choice(("two-arg", "collapse")), default="two-arg", show_default=True
)
def spectrum_command(values, op: str, mode: str):
    """Print the distinct totals over every bracketing of VALUES as CSV."""
    spectrum = delta_spectrum(values, op, mode)
    output = CSVOutput(sys.stdout, ("total", "multiplicity"))
    for entry in spectrum:
        output.row(entry.total, entry.multiplicity)


# Elastic translations


def _spec_options(identity: bool = False):
    kinds = ("identity", "constant", "polynomial") if identity else ("constant", "polynomial")

    def decorate(command):
        @click.option("--kind", type=click.Choice(kinds), default="constant", show_default=True)
        @click.option("--c", "c", type=POSITIVE, default=2, show_default=True)
        @click.option("--k", "k", type=POSITIVE, default=1, show_default=True)
        @wraps(command)
        def build(*args, kind: str, c: int, k: int, **kwargs):
            if kind == "identity":
                spec = None
            elif kind == "constant":
                spec = ElasticSpec.constant(c)
            else:
                spec = ElasticSpec.polynomial(c, k)
            return command(*args, spec=spec, **kwargs)

        return build

    return decorate


@cli.group("elastic")
def elastic_group():
    """Elastic translations of the plane."""


@elastic_group.command("apply")
@click.argument("x", type=NAT)
@click.argument("y", type=NAT)
@_spec_options()
def elastic_apply_command(x: int, y: int, spec: ElasticSpec):
    """Print the image of the cell (X, Y)."""
    cell = elastic_apply(spec, Cell(x, y))
    click.echo(f"{cell.x} {cell.y}")


@elastic_group.command("invert")
@click.argument("x", type=NAT)
@click.argument("y", type=NAT)
@_spec_options()
def elastic_invert_command(x: int, y: int, spec: ElasticSpec):
    """Print the preimage of the cell (X, Y)."""
    cell = elastic_invert(spec, Cell(x, y))
    click.echo(f"{cell.x} {cell.y}")


@cli.group("chain")
def chain_group():
    """The bijections of N induced through the pairing."""


@chain_group.command("forward")
@click.argument("n", type=NAT)
@_spec_options()
def chain_forward_command(n: int, spec: ElasticSpec):
    click.echo(chain_forward(spec, n))


@chain_group.command("backward")
@click.argument("n", type=NAT)
@_spec_options()
def chain_backward_command(n: int, spec: ElasticSpec):
    click.echo(chain_backward(spec, n))


@cli.command("surface")
@click.option("--x", "x_range", type=(NAT, NAT), default=(0, 16), show_default=True)
@click.option("--y", "y_range", type=(NAT, NAT), default=(0, 16), show_default=True)
@click.option("--stride", type=POSITIVE, default=1, show_default=True)
@_spec_options(identity=True)
def surface_command(x_range, y_range, stride: int, spec: ElasticSpec | None):
    """Print the efficiency surface over the half-open window as CSV."""
    surface = surface_grid(spec, x_range, y_range, stride)
    output = CSVOutput(sys.stdout, ("x", "y", "delta_bits"))
    for cell, value in zip(surface.cells, surface.delta):
        output.row(cell.x, cell.y, float(value))


# Sorted injections


def _key_options(command):
    @click.option(
        "--key",
        "kind",
        type=click.Choice(("cardinality", "sum", "product", "sum-under-f")),
        default="sum",
        show_default=True,
    )
    @click.option("--ground", type=click.Choice(("naturals", "positive")), default=None)
    @click.option("--table", type=VALUES, default=None, help="f(1), f(2), ... for sum-under-f.")
    @wraps(command)
    def build(*args, kind: str, ground: str | None, table, **kwargs):
        if ground is None:
            ground = "positive" if kind in ("product", "sum-under-f") else "naturals"
        if kind == "sum-under-f" and not table:
            raise click.UsageError("--key sum-under-f needs --table")
        return command(*args, key=SortKey(kind, ground, table or ()), **kwargs)

    return build


@cli.group("sorted")
def sorted_group():
    """Sorted injections of the finite sets."""


@sorted_group.command("grid")
@click.option("--cells", type=NAT, required=True, help="Canonical sets to survey.")
@_key_options
def sorted_grid_command(cells: int, key: SortKey):
    """Print the sorted cell of each surveyed ground set as CSV."""
    survey = ColumnSurvey(key)
    survey.extend_to(cells)
    output = CSVOutput(sys.stdout, ("key", "theta", "code", "set"))
    for n, cell in survey.cells():
        output.row(cell.key, cell.theta, cell.code, format_set(set_decode(n)))


@sorted_group.command("theta")
@click.argument("s", metavar="SET", type=SET)
@click.option(
    "--method", type=click.Choice(("alg1", "bucketed")), default="bucketed", show_default=True
)
@_key_options
def sorted_theta_command(s, method: str, key: SortKey):
    """Print the row of SET in its column."""
    theta = theta_alg1(key, s) if method == "alg1" else theta_bucketed(key, s)
    click.echo(theta)


@sorted_group.command("height")
@click.argument("value", type=NAT)
@click.option("--bound", type=NAT, default=None, help="Largest element to count.")
@_key_options
def sorted_height_command(value: int, bound: int | None, key: SortKey):
    """Print how many ground sets have key value VALUE."""
    click.echo(column_height(key, value, bound))


@cli.command("density")
@click.option("--survey", "survey_limit", type=NAT, required=True)
@click.option("--step", type=POSITIVE, default=1, show_default=True)
@_key_options
def density_command(survey_limit: int, step: int, key: SortKey):
    """Print occupied codes per prefix of N as CSV."""
    profile = density_profile(key, survey_limit, range(0, survey_limit + 1, step))
    output = CSVOutput(sys.stdout, ("n", "occupied"))
    for n, occupied in profile:
        output.row(n, occupied)


@cli.command("subset-sum")
@click.option("--set", "ground", type=SET, required=True, help="Comma-separated ground set.")
@click.option("--target", type=NAT, required=True)
@click.option("--nth", type=POSITIVE, default=None, help="Print the n-th witness instead.")
def subset_sum_command(ground, target: int, nth: int | None):
    """Decide whether a subset of the ground set adds up to TARGET."""
    if nth is None:
        click.echo("true" if subset_sum_decide(ground, target) else "false")
        return
    found = nth_subset_with_sum(ground, target, nth)
    click.echo("not-found" if found is None else format_set(found))


# Verification


@cli.command("verify")
@click.option("--profile", type=click.Choice(tuple(PROFILES)), default="quick", show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(("text", "jsonl")), default="text", show_default=True
)
@click.option("--only", type=click.Choice(tuple(REGISTRY)), default=None)
@click.option("--timings", is_flag=True, help="Report seconds per property on stderr.")
def verify_command(profile: str, fmt: str, only: str | None, timings: bool) -> int:
    """Run the invariant suites and report each property."""
    jsonl = JSONLOutput(sys.stdout) if fmt == "jsonl" else None
    failures = 0
    for result in run_suites(PROFILES[profile], only):
        failures += not result.passed
        if jsonl is not None:
            jsonl.emit(property=result.name, passed=result.passed, detail=result.detail)
        elif result.passed:
            click.echo(f"PASS {result.name}")
        else:
            click.echo(f"FAIL {result.name}: {result.detail}")
        if timings:
            click.echo(f"{result.name} {result.seconds:.3f}s", err=True)
    return 1 if failures else 0


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit status instead of exiting."""
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = cli.main(args=args, prog_name="cantorinfo", standalone_mode=False)
    except click.ClickException as error:
        error.show()
        return error.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except DomainError as error:
        click.echo(f"error: {error}", err=True)
        return 1
    except ValueError as error:
        click.echo(f"usage error: {error}", err=True)
        return 2
    return result if isinstance(result, int) else 0


def main(argv: Sequence[str] | None = None) -> None:
    """CLI entry point."""
    sys.exit(run(argv))
