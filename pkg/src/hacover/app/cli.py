# ---------------------------------------------------------------------------
# File: cli.py
# ---------------------------------------------------------------------------
# Description:
#	Argument parsing and dispatch for the hacover command line.
#
# Notes:
#	- Exit codes: 0 success, 1 usage / validation / parameter errors,
#	  2 anything unexpected.
#	- The parser raises UsageError instead of calling sys.exit(), so
#	  cli_dispatch() is safe to call from tests.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/19/2026	Initial coding / release
# 02/20/2026	HACOVER_DEBUG forces DEBUG logging
# ---------------------------------------------------------------------------

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import NoReturn, Optional, Sequence

from hacover.app.commands import CommandContext, CommandError, CommandRegistry, UsageError
from hacover.app.default_commands import register_default_commands
from hacover.core.config import DEBUG_ENV, AppConfig, truthy_env
from hacover.core.errors import EmptySubgroup, FitError, MissingFitType, ParameterError, ValidationError
from hacover.core.logging import get_component_logger, init_logging
from hacover.core.telemetry import init_telemetry
from hacover.coverage.params import DEFAULT_GAMMA, DEFAULT_RADIUS_DB
from hacover.models.transfer import DEFAULT_RANGE_DB, DEFAULT_STEP_DB


log = get_component_logger("app.cli")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2

USER_ERRORS = (CommandError, ValidationError, ParameterError, FitError, MissingFitType, EmptySubgroup)


class _Parser(argparse.ArgumentParser):
	def error(self, message: str) -> NoReturn:
		raise UsageError(message, self.format_usage())


def build_parser(registry: CommandRegistry) -> argparse.ArgumentParser:
	experiments = ", ".join(c.id for c in registry.tagged("experiment"))
	parser = _Parser(
		prog="hacover",
		description="Population coverage of hearing-aid preset sets.",
		epilog=f"experiment commands: {experiments}",
	)

	g = parser.add_argument_group("coverage model")
	g.add_argument("--radius", type=float, default=DEFAULT_RADIUS_DB, help="coverage ball radius, dB")
	g.add_argument("--gamma", type=float, default=DEFAULT_GAMMA, help="covered-mass threshold")
	g.add_argument("--tf-range", type=float, default=DEFAULT_RANGE_DB, help="transfer anchor range, +/- dB")
	g.add_argument("--tf-step", type=float, default=DEFAULT_STEP_DB, help="transfer anchor step, dB")
	g.add_argument("--deviations", type=Path, default=None, help="deviations.csv (low_dev,high_dev)")
	g.add_argument("--variance-scale", type=float, default=1.0, help="multiplier on the deviation std")

	r = parser.add_argument_group("runtime")
	r.add_argument("--out", type=Path, default=Path("results"), help="results directory")
	r.add_argument("--threads", type=int, default=None, help="worker threads (default: $HACOVER_THREADS or 1)")
	r.add_argument("--log-level", default="WARNING")
	r.add_argument("--log-file", type=Path, default=None)
	r.add_argument("--telemetry", action="store_true", help="log telemetry events and metrics")

	sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
	for cmd in registry.all():
		p = sub.add_parser(cmd.id, help=cmd.label, description=cmd.description or cmd.label)
		if cmd.configure is not None:
			cmd.configure(p)
	return parser


def _init_runtime(args: argparse.Namespace) -> AppConfig:
	level = "DEBUG" if truthy_env(DEBUG_ENV) else args.log_level
	cfg = AppConfig(
		{
			"log_level": level,
			"log_file": str(args.log_file) if args.log_file else None,
			"telemetry_enabled": bool(args.telemetry),
			"telemetry_sink": "log",
		}
	)
	init_logging(cfg)
	init_telemetry(cfg, get_component_logger("telemetry"))
	return cfg


def cli_dispatch(argv: Optional[Sequence[str]] = None) -> int:
	registry = CommandRegistry()
	register_default_commands(registry)
	parser = build_parser(registry)

	try:
		args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
	except UsageError as ex:
		sys.stderr.write(ex.usage)
		sys.stderr.write(f"hacover: error: {ex}\n")
		return EXIT_USAGE
	except SystemExit as ex:
		# --help / --version
		return int(ex.code or 0)

	if not args.command:
		sys.stderr.write(parser.format_usage())
		sys.stderr.write("hacover: error: a command is required\n")
		return EXIT_USAGE

	cfg = _init_runtime(args)
	ctx = CommandContext(args=args, config=cfg, services={"registry": registry})

	try:
		return registry.execute(args.command, ctx)
	except USER_ERRORS as ex:
		log.debug("command %s failed", args.command, exc_info=True)
		sys.stderr.write(f"hacover {args.command}: error: {ex}\n")
		return EXIT_USAGE
	except Exception as ex:
		log.exception("command %s crashed", args.command)
		sys.stderr.write(f"hacover {args.command}: internal error: {ex}\n")
		return EXIT_INTERNAL
