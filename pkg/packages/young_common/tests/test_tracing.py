import json

import pytest

from young_common.tracing import span, traced, truncate_json


class _Samples:
    shape = (3, 4)
    dtype = "float64"


class TestTruncateJson:
    def test_plain(self) -> None:
        assert json.loads(truncate_json({"p": 1.5, "check": "young"})) == {"p": 1.5, "check": "young"}

    def test_arrays_are_summarized(self) -> None:
        assert json.loads(truncate_json({"values": _Samples()})) == {
            "values": {"shape": [3, 4], "dtype": "float64"}
        }

    def test_cut(self) -> None:
        text = truncate_json(list(range(1000)), max_chars=50)
        assert text.startswith("[0, 1, 2")
        assert text.endswith("chars]")


class TestTraced:
    def test_passes_through(self) -> None:
        @traced("double")
        def double(x: int) -> int:
            return 2 * x

        assert double(21) == 42
        assert double.__name__ == "double"

    def test_reraises(self) -> None:
        @traced("boom")
        def boom() -> None:
            raise ValueError("bad exponent")

        with pytest.raises(ValueError, match="bad exponent"):
            boom()

    def test_span_accepts_any_attribute(self) -> None:
        with span("quadrature", n=64, window=(-1.0, 1.0), label=None) as current:
            assert current is not None
