# ---------------------------------------------------------------------------
# File: test_commands.py
# ---------------------------------------------------------------------------
# Description:
#	Unit tests for the command registry and the default command set.
#
# Notes:
#	- Handlers are not run here; test_cli.py drives them end to end.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 01/20/2026	Initial tests
# 02/12/2026	Default command set
# ---------------------------------------------------------------------------

from __future__ import annotations

import argparse

import pytest

from hacover.app.commands import (
	Command,
	CommandAlreadyRegistered,
	CommandContext,
	CommandError,
	CommandNotFound,
	CommandRegistry,
)
from hacover.app.default_commands import register_default_commands


def _ctx() -> CommandContext:
	return CommandContext(args=argparse.Namespace())


# ----------------------------
# Registry
# ----------------------------

def test_register_and_get_command():
	registry = CommandRegistry()
	cmd = Command(id="synth", label="Synth", handler=lambda ctx: 0)

	registry.register(cmd)

	assert registry.has("synth") is True
	assert registry.get("synth") is cmd
	assert registry.ids() == ["synth"]


def test_register_duplicate_id_raises():
	registry = CommandRegistry()
	registry.register(Command(id="x", label="X", handler=lambda ctx: 1))

	with pytest.raises(CommandAlreadyRegistered):
		registry.register(Command(id="x", label="X2", handler=lambda ctx: 2))


def test_register_replace_overwrites():
	registry = CommandRegistry()
	registry.register(Command(id="x", label="X", handler=lambda ctx: 1))
	second = Command(id="x", label="X2", handler=lambda ctx: 2)

	registry.register(second, replace=True)

	assert registry.get("x") is second
	assert registry.execute("x", _ctx()) == 2


def test_empty_id_rejected():
	with pytest.raises(CommandError):
		CommandRegistry().register(Command(id="", label="?", handler=lambda ctx: 0))


def test_execute_returns_handler_exit_code():
	registry = CommandRegistry()
	calls: list[CommandContext] = []

	def handler(ctx: CommandContext) -> int:
		calls.append(ctx)
		return 3

	registry.register(Command(id="do", label="Do", handler=handler))
	ctx = _ctx()

	assert registry.execute("do", ctx) == 3
	assert calls == [ctx]


def test_execute_none_means_success():
	registry = CommandRegistry()
	registry.register(Command(id="quiet", label="Quiet", handler=lambda ctx: None))

	assert registry.execute("quiet", _ctx()) == 0


def test_unknown_command_raises():
	registry = CommandRegistry()

	with pytest.raises(CommandNotFound):
		registry.get("nope")
	with pytest.raises(CommandNotFound):
		registry.execute("nope", _ctx())
	with pytest.raises(CommandNotFound):
		registry.unregister("nope")


def test_unregister_removes():
	registry = CommandRegistry()
	registry.register(Command(id="x", label="X", handler=lambda ctx: 0))

	registry.unregister("x")

	assert registry.has("x") is False


def test_all_orders_by_order_then_id():
	registry = CommandRegistry()
	registry.register(Command(id="b", label="B", handler=lambda ctx: 0, order=20))
	registry.register(Command(id="c", label="C", handler=lambda ctx: 0, order=10))
	registry.register(Command(id="a", label="A", handler=lambda ctx: 0, order=20))

	assert [c.id for c in registry.all()] == ["c", "a", "b"]


def test_tagged_filters_in_listing_order():
	registry = CommandRegistry()
	registry.register(Command(id="late", label="L", handler=lambda ctx: 0, tags=("experiment",), order=5))
	registry.register(Command(id="core", label="C", handler=lambda ctx: 0, tags=("core",)))
	registry.register(Command(id="early", label="E", handler=lambda ctx: 0, tags=("experiment",), order=1))

	assert [c.id for c in registry.tagged("experiment")] == ["early", "late"]
	assert registry.tagged("missing") == []


# ----------------------------
# Default command set
# ----------------------------

def test_default_commands_registered_in_order():
	registry = CommandRegistry()
	register_default_commands(registry)

	assert [c.id for c in registry.all()] == [
		"synth",
		"pca",
		"grid",
		"optimize",
		"coverage",
		"slider",
		"sweep",
		"bootstrap",
		"variance-scale",
		"subgroup",
		"plot-data",
		"run",
	]


def test_default_commands_have_labels_and_parsers():
	registry = CommandRegistry()
	register_default_commands(registry)

	for cmd in registry.all():
		assert cmd.label
		assert cmd.configure is not None


def test_experiment_tag_groups_the_studies():
	registry = CommandRegistry()
	register_default_commands(registry)

	assert {c.id for c in registry.tagged("experiment")} == {
		"sweep",
		"bootstrap",
		"variance-scale",
		"subgroup",
		"plot-data",
		"run",
	}


def test_registering_defaults_twice_raises():
	registry = CommandRegistry()
	register_default_commands(registry)

	with pytest.raises(CommandAlreadyRegistered):
		register_default_commands(registry)
