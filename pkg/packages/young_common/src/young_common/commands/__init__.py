"""
young_common/commands

Command registry shared by CLI front ends.
"""

from young_common.commands.registry import CommandRegistry

__all__ = ["CommandRegistry"]
