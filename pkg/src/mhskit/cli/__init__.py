"""
Command line verbs and their dispatch.
"""

from mhskit.cli.command_manager import Command, CommandManager
from mhskit.cli.commands import COMMANDS, CommandOptions, FixtureCommand, default_manager, parse_point

__all__ = ["Command", "CommandManager", "COMMANDS", "CommandOptions", "FixtureCommand", "default_manager",
           "parse_point"]
