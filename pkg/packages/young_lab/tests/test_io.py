"""CSV and JSON function files."""

from pathlib import Path

import numpy as np
import pytest

from young_lab.errors import FunctionFormatError
from young_lab.functions import (
    Grid,
    GridFunction,
    from_csv,
    from_json,
    read_function,
    to_csv,
    to_json,
    write_function,
)


def test_json_is_bit_exact(random_pair: tuple[GridFunction, GridFunction]) -> None:
    f, _ = random_pair
    again = from_json(to_json(f))
    assert again.grid == f.grid
    assert np.array_equal(again.values, f.values)


def test_csv_is_exact(random_pair: tuple[GridFunction, GridFunction]) -> None:
    f, _ = random_pair
    again = from_csv(to_csv(f))
    assert again.grid.n == f.grid.n
    assert np.array_equal(again.values, f.values)
    np.testing.assert_allclose(again.points, f.points, rtol=0, atol=1e-12)


def test_csv_layout() -> None:
    f = GridFunction(grid=Grid(lo=0.0, hi=1.0, n=3), values=[0.0, 0.25, 1.0])
    assert to_csv(f) == "x,value\n0.0,0.0\n0.5,0.25\n1.0,1.0\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "t,value\n0,1\n1,1\n",
        "x,value\n0,1\n",
        "x,value\n0,1\n1,abc\n",
        "x,value\n0,1\n2,1\n1,1\n",
        "x,value\n0,1\n1,1\n3,1\n",
        "x,value\n0,1\n1,-1\n2,1\n",
        "x,value\n0,1,2\n1,1,2\n",
    ],
    ids=["empty", "header", "one-row", "non-numeric", "decreasing", "non-uniform", "negative", "columns"],
)
def test_csv_rejects(text: str) -> None:
    with pytest.raises(FunctionFormatError):
        from_csv(text)


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"lo": 0, "hi": 1, "n": 3, "values": [1, 2]}',
        '{"lo": 1, "hi": 0, "n": 2, "values": [1, 2]}',
        '{"lo": 0, "hi": 1, "n": 2, "values": [1, -2]}',
    ],
)
def test_json_rejects(text: str) -> None:
    with pytest.raises(FunctionFormatError):
        from_json(text)


@pytest.mark.parametrize("suffix", [".csv", ".json"])
def test_files(tmp_path: Path, suffix: str, random_pair: tuple[GridFunction, GridFunction]) -> None:
    f, _ = random_pair
    path = tmp_path / f"f{suffix}"
    write_function(f, path)
    assert np.array_equal(read_function(path).values, f.values)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(FunctionFormatError):
        read_function(tmp_path / "missing.csv")
