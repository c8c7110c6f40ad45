# ---------------------------------------------------------------------------
# File: commands.py
# ---------------------------------------------------------------------------
# Description:
#	Command model + CommandRegistry for the hacover CLI.
#
# Notes:
#	Every subcommand is a Command registered by id. The CLI:
#	- asks each command to add its own flags (configure)
#	- parses argv
#	- routes the chosen subcommand to registry.execute
#	Handlers return an exit code (None means 0).
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/19/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional

from hacover.core.config import AppConfig
from hacover.core.errors import HacoverError


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------
CommandId = str
Tags = tuple[str, ...]


@dataclass(frozen=True, slots=True)
class CommandContext:
	"""
	CommandContext

	Context passed to command handlers.

	args:		parsed argparse namespace
	config:		AppConfig view over the parsed flags
	services:	shared helpers (registry, ...)
	extra:		free-form per-invocation values
	"""
	args: argparse.Namespace
	config: AppConfig = field(default_factory=AppConfig)
	services: Mapping[str, Any] = field(default_factory=dict)
	extra: Mapping[str, Any] = field(default_factory=dict)


Handler = Callable[[CommandContext], Optional[int]]
Configure = Callable[[argparse.ArgumentParser], None]


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------
class CommandError(HacoverError):
	pass


class CommandNotFound(CommandError):
	pass


class CommandAlreadyRegistered(CommandError):
	pass


class UsageError(CommandError):
	"""
	Raised by the CLI parser instead of exiting.
	"""

	def __init__(self, message: str, usage: str = "") -> None:
		super().__init__(message)
		self.usage = usage


# ---------------------------------------------------------------------------
# Command
# ---------------------------------------------------------------------------
@dataclass(slots=True)
class Command:
	"""
	Command

	- id:			subcommand name (required).
	- label:		one-line help (required).
	- handler:		handler(ctx) -> exit code or None.
	- configure:	adds the subcommand's flags to its parser.
	- description:	longer help text.
	- tags:			grouping hints (e.g. "experiment").
	- order:		listing order in --help.
	"""
	id: CommandId
	label: str
	handler: Handler
	configure: Optional[Configure] = None

	description: str = ""
	tags: Tags = ()

	order: int = 1000


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------
class CommandRegistry:
	"""
	CommandRegistry

	Stores commands by id and invokes them.
	"""

	def __init__(self) -> None:
		self._commands: dict[CommandId, Command] = {}

	# ----------------------------
	# Registration
	# ----------------------------
	def register(self, command: Command, *, replace: bool = False) -> None:
		if not command.id:
			raise CommandError("Command id must be a non-empty string")

		if command.id in self._commands and not replace:
			raise CommandAlreadyRegistered(f"Duplicate command id: {command.id!r}")

		self._commands[command.id] = command

	def unregister(self, command_id: CommandId) -> None:
		if command_id not in self._commands:
			raise CommandNotFound(f"Unknown command id: {command_id!r}")
		del self._commands[command_id]

	def has(self, command_id: CommandId) -> bool:
		return command_id in self._commands

	def get(self, command_id: CommandId) -> Command:
		try:
			return self._commands[command_id]
		except KeyError as ex:
			raise CommandNotFound(f"Unknown command id: {command_id!r}") from ex

	def ids(self) -> list[CommandId]:
		return list(self._commands.keys())

	def all(self) -> tuple[Command, ...]:
		return tuple(sorted(self._commands.values(), key=lambda c: (c.order, c.id)))

	def tagged(self, tag: str) -> list[Command]:
		return [c for c in self.all() if tag in c.tags]

	# ----------------------------
	# Invocation
	# ----------------------------
	def execute(self, command_id: CommandId, ctx: CommandContext) -> int:
		cmd = self.get(command_id)
		rc = cmd.handler(ctx)
		return 0 if rc is None else int(rc)
