"""Line-oriented result writers for the command line."""

from __future__ import annotations

import csv
import json
import threading
from collections.abc import Sequence
from typing import TextIO

from .combinadics import FinSet
from .limits import BITS_DECIMALS


def format_bits(amount: float) -> str:
    """Fixed-point rendering of an information amount."""
    text = f"{amount:.{BITS_DECIMALS}f}"
    # -0.000000 and 0.000000 are the same amount.
    return text[1:] if text.startswith("-") and not text.strip("-0.") else text


def format_set(s: FinSet) -> str:
    """Comma-joined ascending elements, the form sets are read in."""
    return ",".join(str(element) for element in s)


def _format_fields(row: Sequence[object]) -> list[str]:
    return [format_bits(value) if isinstance(value, float) else str(value) for value in row]


class JSONLOutput:
    """Write atomic, immediately flushed JSON Lines records."""

    def __init__(self, stream: TextIO):
        self._stream = stream
        self._lock = threading.Lock()

    def emit(self, **record: object) -> None:
        """Write one record without interleaving concurrent producers."""
        line = json.dumps(record, ensure_ascii=False, separators=(",", ":"))
        with self._lock:
            self._stream.write(f"{line}\n")
            self._stream.flush()


class CSVOutput:
    """Write a header row then data rows with LF endings.

    Floats in a row are information amounts and are printed with
    ``BITS_DECIMALS`` places; integers are printed in full.
    """

    def __init__(self, stream: TextIO, header: Sequence[str]):
        self._writer = csv.writer(stream, lineterminator="\n")
        self._width = len(header)
        self._writer.writerow(header)

    def row(self, *values: object) -> None:
        if len(values) != self._width:
            raise ValueError(f"row has {len(values)} fields, header has {self._width}")
        self._writer.writerow(_format_fields(values))
