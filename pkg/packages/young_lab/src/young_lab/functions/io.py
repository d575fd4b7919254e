"""
young_lab/functions/io.py

CSV (``x,value``) and JSON (``{lo, hi, n, values}``) function files.
JSON round-trips bit-exactly: floats are written in shortest
round-trip form.
"""

import csv
import io
import logging
from pathlib import Path

import numpy as np
from pydantic import BaseModel, Field, ValidationError

from young_lab.errors import FunctionFormatError
from young_lab.functions.grid import STEP_RTOL, Grid, GridFunction

logger = logging.getLogger(__name__)

CSV_HEADER = ("x", "value")


class GridFunctionPayload(BaseModel):
    """JSON form of a GridFunction."""

    lo: float
    hi: float
    n: int = Field(ge=2)
    values: list[float]

    @classmethod
    def from_function(cls, f: GridFunction) -> "GridFunctionPayload":
        return cls(
            lo=f.grid.lo, hi=f.grid.hi, n=f.grid.n, values=f.values.tolist()
        )

    def to_function(self) -> GridFunction:
        return GridFunction(
            grid=Grid(lo=self.lo, hi=self.hi, n=self.n), values=self.values
        )


def to_json(f: GridFunction) -> str:
    return GridFunctionPayload.from_function(f).model_dump_json()


def from_json(text: str) -> GridFunction:
    try:
        return GridFunctionPayload.model_validate_json(text).to_function()
    except ValidationError as exc:
        raise FunctionFormatError(f"invalid function JSON: {exc}") from exc


def to_csv(f: GridFunction) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for x, v in zip(f.points.tolist(), f.values.tolist(), strict=True):
        writer.writerow((repr(x), repr(v)))
    return buffer.getvalue()


def from_csv(text: str) -> GridFunction:
    """
    Parse ``x,value`` rows into a GridFunction.

    Raises:
        FunctionFormatError: Missing header, non-numeric cells, fewer than
            two rows, or x not strictly increasing on a uniform step.
    """
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(h.strip() for h in header) != CSV_HEADER:
        raise FunctionFormatError(f"expected header 'x,value', got {header!r}")

    try:
        rows = [(float(x), float(v)) for x, v in reader]
    except ValueError as exc:
        raise FunctionFormatError(f"bad CSV row: {exc}") from exc
    if len(rows) < 2:
        raise FunctionFormatError("need at least two samples")

    x = np.array([row[0] for row in rows])
    values = np.array([row[1] for row in rows])
    steps = np.diff(x)
    if np.any(steps <= 0.0):
        raise FunctionFormatError("x must be strictly increasing")
    step = (x[-1] - x[0]) / (len(x) - 1)
    if np.max(np.abs(steps - step)) > 1e3 * STEP_RTOL * step:
        raise FunctionFormatError("x must be uniformly spaced")

    try:
        return GridFunction(grid=Grid(lo=x[0], hi=x[-1], n=len(x)), values=values)
    except ValidationError as exc:
        raise FunctionFormatError(f"invalid samples: {exc}") from exc


def read_function(path: Path | str) -> GridFunction:
    """Load a function file, choosing the format from the suffix."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FunctionFormatError(f"cannot read {path}: {exc}") from exc
    logger.debug("reading function from %s", path)
    if path.suffix.lower() == ".json":
        return from_json(text)
    return from_csv(text)


def write_function(f: GridFunction, path: Path | str) -> None:
    path = Path(path)
    text = to_json(f) if path.suffix.lower() == ".json" else to_csv(f)
    path.write_text(text, encoding="utf-8")
