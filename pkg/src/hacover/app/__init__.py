# ---------------------------------------------------------------------------
# File: app/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Command-line front end.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .cli import EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, build_parser, cli_dispatch
from .commands import Command, CommandContext, CommandRegistry

__all__ = [
	"Command",
	"CommandContext",
	"CommandRegistry",
	"EXIT_INTERNAL",
	"EXIT_OK",
	"EXIT_USAGE",
	"build_parser",
	"cli_dispatch",
]
