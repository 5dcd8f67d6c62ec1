"""
Command Manager Module

This module implements the Command Pattern for the command line: each verb is
a Command whose execute() returns a report, and the CommandManager keeps the
verb registry and the history of executed commands.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List

from mhskit.errors import InputError

logger = logging.getLogger(__name__)


class Command(ABC):
    """
    Abstract base class for all commands.
    Follows the Command Pattern for encapsulating one operation and its inputs.
    """

    verb: str = ""

    @abstractmethod
    def execute(self) -> Any:
        """Execute the command and return its report."""
        pass

    def describe(self) -> str:
        return self.verb


CommandFactory = Callable[..., Command]


class CommandManager:
    """
    Maps verbs to command factories and records executed commands.
    """

    def __init__(self, max_history: int = 100):
        """
        Initialize the command manager.

        Args:
            max_history: Maximum number of commands to keep in history.
        """
        self.max_history = max_history
        self.registry: Dict[str, CommandFactory] = {}
        self.command_history: List[Command] = []

    def register(self, verb: str, factory: CommandFactory) -> None:
        if verb in self.registry:
            raise ValueError(f"Verb {verb!r} is already registered")
        self.registry[verb] = factory

    @property
    def verbs(self) -> List[str]:
        return sorted(self.registry)

    def create(self, verb: str, *args: Any, **kwargs: Any) -> Command:
        """
        Build the command for a verb.

        Raises:
            InputError: For an unknown verb
        """
        factory = self.registry.get(verb)
        if factory is None:
            raise InputError(f"Unknown verb {verb!r}; expected one of {', '.join(self.verbs)}")
        return factory(*args, **kwargs)

    def execute_command(self, command: Command) -> Any:
        """
        Execute a command and add it to the command history.

        Args:
            command: Command to execute

        Returns:
            The command's report
        """
        logger.info("executing %s", command.describe())
        report = command.execute()

        self.command_history.append(command)
        if len(self.command_history) > self.max_history:
            self.command_history.pop(0)
        return report
