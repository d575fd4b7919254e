"""
young_common/tracing/__init__.py

OpenTelemetry spans for the sharp-young CLI and library.
Spans always go through the OTel API; an exporting provider is only
installed by ``init_tracing(enabled=True)``, so library calls made
without it hit the no-op provider.
"""

import json
import logging
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from functools import wraps
from typing import Any, ParamSpec, TypeVar

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import SpanProcessor, TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor
from opentelemetry.trace import StatusCode

from young_common import __version__

logger = logging.getLogger(__name__)

P = ParamSpec("P")
R = TypeVar("R")

LIBRARY_TRACER = "young-lab"

_provider: TracerProvider | None = None


def _otlp_processor(endpoint: str) -> SpanProcessor | None:
    """Batch processor on an OTLP/gRPC exporter, or None if the exporter is unavailable."""
    try:
        from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import (
            OTLPSpanExporter,
        )

        return BatchSpanProcessor(OTLPSpanExporter(endpoint=endpoint, insecure=True))
    except Exception as exc:
        logger.warning("OTLP exporter unavailable (%s), spans stay local", exc)
        return None


def init_tracing(
    service_name: str = LIBRARY_TRACER,
    otlp_endpoint: str = "http://localhost:4317",
    enabled: bool = True,
) -> trace.Tracer:
    """
    Install the exporting tracer provider, once per process.

    Args:
        service_name: ``service.name`` of the exported resource.
        otlp_endpoint: OTLP gRPC collector (the Jaeger compose file listens on 4317).
        enabled: With False nothing is installed and spans stay no-op.

    Returns:
        Tracer for ``service_name``.
    """
    global _provider

    if _provider is None and enabled:
        provider = TracerProvider(
            resource=Resource.create(
                {"service.name": service_name, "service.version": __version__}
            )
        )
        processor = _otlp_processor(otlp_endpoint)
        if processor is not None:
            provider.add_span_processor(processor)
            logger.info("exporting spans of %s to %s", service_name, otlp_endpoint)
        trace.set_tracer_provider(provider)
        _provider = provider

    return trace.get_tracer(service_name)


def get_tracer(name: str = LIBRARY_TRACER) -> trace.Tracer:
    return trace.get_tracer(name)


def _attribute(value: Any) -> bool | int | float | str:
    if isinstance(value, (bool, int, float, str)):
        return value
    return truncate_json(value)


@contextmanager
def span(name: str, **attributes: Any) -> Iterator[trace.Span]:
    """Open a span on the library tracer; non-scalar attributes are JSON-encoded."""
    with get_tracer().start_as_current_span(name) as current:
        for key, value in attributes.items():
            current.set_attribute(key, _attribute(value))
        yield current


def traced(name: str) -> Callable[[Callable[P, R]], Callable[P, R]]:
    """Run the decorated function inside ``span(name)``, recording exceptions."""

    def decorate(func: Callable[P, R]) -> Callable[P, R]:
        @wraps(func)
        def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
            with span(name) as current:
                try:
                    return func(*args, **kwargs)
                except Exception as exc:
                    record_error(current, exc)
                    raise

        return wrapper

    return decorate


def _summary(obj: Any) -> Any:
    # Sampled arrays are summarized by shape, never dumped
    shape = getattr(obj, "shape", None)
    if shape is not None:
        return {"shape": list(shape), "dtype": str(getattr(obj, "dtype", ""))}
    return str(obj)


def truncate_json(data: Any, max_chars: int = 4000) -> str:
    """JSON text of ``data`` cut to ``max_chars`` for a span attribute."""
    try:
        text = json.dumps(data, ensure_ascii=False, default=_summary)
    except (TypeError, ValueError):
        text = str(data)
    if len(text) <= max_chars:
        return text
    return f"{text[:max_chars]}... [{len(text)} chars]"


def record_error(current: trace.Span, exc: Exception) -> None:
    current.set_status(StatusCode.ERROR, str(exc))
    current.record_exception(exc)


__all__ = [
    "get_tracer",
    "init_tracing",
    "record_error",
    "span",
    "traced",
    "truncate_json",
]
