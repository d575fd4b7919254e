"""
young_common

Shared models, command registry, and tracing utilities for the
sharp-young packages.
"""

__version__ = "0.1.0"


from . import tracing

__all__ = ["tracing"]
