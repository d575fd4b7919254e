"""
young_lab/utils

Pure helpers for the CLI: exponent parsing and output rendering.
"""

import argparse
import csv
import io
import json
from fractions import Fraction
from typing import Annotated, Any

from pydantic import BaseModel

from young_common.models import OutputFormat


def parse_exponent(text: str) -> float:
    """
    Parse an exponent given as a decimal or a fraction (``4/3``).

    Fractions are reduced exactly before conversion, so 4/3 reaches the
    triple check as the nearest double to 4/3.
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid exponent {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"exponent must be positive, got {text}")
    return float(value)


# CLI exponent flag: decimal or fraction
Exponent = Annotated[float, parse_exponent]


class Table(BaseModel):
    """Plot-ready rows with named columns."""

    columns: list[str]
    rows: list[list[Any]]

    def records(self) -> list[dict[str, Any]]:
        return [dict(zip(self.columns, row, strict=True)) for row in self.rows]


def _flatten(data: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}_"))
        elif isinstance(value, (list, tuple)):
            flat.update({f"{name}_{i}": item for i, item in enumerate(value)})
        else:
            flat[name] = value
    return flat


def _csv(columns: list[str], rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if v is None else repr(v) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def _as_records(data: Any) -> list[dict[str, Any]]:
    if isinstance(data, Table):
        return data.records()
    if isinstance(data, BaseModel):
        return [data.model_dump(mode="json")]
    return [item.model_dump(mode="json") for item in data]


def render(data: Any, fmt: OutputFormat | None = None) -> str:
    """
    Encode a command payload.

    Tables default to CSV, models and model lists to JSON (one object
    per line).
    """
    if fmt is None:
        fmt = OutputFormat.CSV if isinstance(data, Table) else OutputFormat.JSON

    if fmt is OutputFormat.CSV:
        if isinstance(data, Table):
            return _csv(data.columns, data.rows)
        flat = [_flatten(record) for record in _as_records(data)]
        columns = list(flat[0]) if flat else []
        return _csv(columns, [[record.get(c) for c in columns] for record in flat])

    if isinstance(data, BaseModel) and not isinstance(data, Table):
        return data.model_dump_json() + "\n"
    if isinstance(data, list) and all(isinstance(item, BaseModel) for item in data):
        return "".join(item.model_dump_json() + "\n" for item in data)
    return "".join(json.dumps(record) + "\n" for record in _as_records(data))


__all__ = ["Exponent", "Table", "parse_exponent", "render"]
