"""
young_lab/commands

CLI commands: constants, verify, transport, extremize, sweep.
"""

from young_lab.commands.constants import register_constants_commands
from young_lab.commands.extremize import register_extremize_commands
from young_lab.commands.sweep import register_sweep_commands
from young_lab.commands.transport import register_transport_commands
from young_lab.commands.verify import register_verify_commands

__all__ = [
    "register_constants_commands",
    "register_extremize_commands",
    "register_sweep_commands",
    "register_transport_commands",
    "register_verify_commands",
]
