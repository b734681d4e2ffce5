"""Time the literal row enumeration against the bucketed survey.

Writes one CSV row per (survey size, key): the seconds theta_alg1 needs to
rank every ground set of the prefix one at a time, next to the seconds a
single ColumnSurvey needs for the same prefix.
"""

import sys
import time
from pathlib import Path

import click

sys.path.insert(0, str(Path(__file__).parent.parent))

from cantorinfo.injections import ColumnSurvey, SortKey, in_ground, theta_alg1
from cantorinfo.setcodec import canonical_set
from cantorinfo.stdio import CSVOutput

KEYS = {
    "sum": SortKey.sum(),
    "product": SortKey.product(),
    "cardinality": SortKey.cardinality(),
}


def time_alg1(key: SortKey, sets: int) -> float:
    start = time.perf_counter()
    for n in range(sets):
        s = canonical_set(n)
        if in_ground(key, s):
            theta_alg1(key, s)
    return time.perf_counter() - start


def time_bucketed(key: SortKey, sets: int) -> float:
    start = time.perf_counter()
    ColumnSurvey(key).extend_to(sets)
    return time.perf_counter() - start


@click.command()
@click.option(
    "--sizes",
    default="100,200,400,800",
    show_default=True,
    help="Comma-separated survey sizes.",
)
@click.option(
    "--key",
    "keys",
    type=click.Choice(tuple(KEYS)),
    multiple=True,
    default=("sum", "product"),
    show_default=True,
)
@click.option(
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="CSV file to write (default: stdout).",
)
def main(sizes: str, keys: tuple[str, ...], output: Path | None):
    """Benchmark theta_alg1 against theta_bucketed over growing prefixes."""
    try:
        counts = [int(size) for size in sizes.split(",")]
    except ValueError as error:
        raise click.BadParameter(f"not a list of sizes: {sizes!r}") from error

    stream = output.open("w", encoding="utf-8", newline="") if output else sys.stdout
    try:
        writer = CSVOutput(stream, ("sets", "key", "alg1_seconds", "bucketed_seconds"))
        for count in counts:
            for name in keys:
                key = KEYS[name]
                alg1 = time_alg1(key, count)
                bucketed = time_bucketed(key, count)
                writer.row(count, name, f"{alg1:.6f}", f"{bucketed:.6f}")
                click.echo(f"{name} x{count}: {alg1 / max(bucketed, 1e-9):.0f}x", err=True)
    finally:
        if output:
            stream.close()


if __name__ == "__main__":
    main()
