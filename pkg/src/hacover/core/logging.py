# ---------------------------------------------------------------------------
# File: logging.py
# ---------------------------------------------------------------------------
# Description:
#	Logging setup for hacover (stdlib logging).
#
# Notes:
#	- Library modules only ever call get_component_logger(); handlers are
#	  installed once by the CLI (or a test) through init_logging().
#	- Idempotent: re-init with an identical configuration is a no-op, so
#	  repeated CLI invocations in one process do not stack handlers.
#
#	Supported cfg keys (dotted key first, flat key second):
#	- "logging.level"		/ "log_level"		(default: "INFO")
#	- "logging.console"		/ "log_console"		(default: True)
#	- "logging.file"		/ "log_file"		(default: None)
#	- "logging.file_mode"	/ "log_file_mode"	(default: "a")
#	- "logging.reset_root"	/ "log_reset_root"	(default: True)
#	- "logging.format"		/ "log_format"
#	- "logging.datefmt"		/ "log_datefmt"		(default: "%Y-%m-%d %H:%M:%S")
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/05/2026	Console handler writes to stderr so CLI stdout stays parseable
# ---------------------------------------------------------------------------

from __future__ import annotations

from pathlib import Path
from typing import Any
import logging
import sys


ROOT_LOGGER_NAME = "hacover"

DEFAULT_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DEFAULT_DATEFMT = "%Y-%m-%d %H:%M:%S"


# ---------------------------------------------------------------------------
# Module-scoped state (idempotent init)
# ---------------------------------------------------------------------------

_INITIALIZED: bool = False
_CONFIG_SIGNATURE: tuple[Any, ...] | None = None


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def get_component_logger(component: str | None = None) -> logging.Logger:
	"""
	Return a hacover-scoped logger.

	Examples:
		get_component_logger()					-> hacover
		get_component_logger("coverage")		-> hacover.coverage
		get_component_logger("optimize.ga")	-> hacover.optimize.ga
	"""
	if component:
		return logging.getLogger(f"{ROOT_LOGGER_NAME}.{component}")
	return logging.getLogger(ROOT_LOGGER_NAME)


def init_logging(cfg: Any | None = None) -> None:
	"""
	Configure the hacover logger tree from cfg.

	Args:
		cfg:
			Anything with cfg.get(key, default) (AppConfig, dict) or None.
	"""
	global _INITIALIZED, _CONFIG_SIGNATURE

	level = _coerce_level(_lookup(cfg, "level", "INFO"))
	console_enabled = bool(_lookup(cfg, "console", True))
	log_file = _lookup(cfg, "file", None)
	file_mode = _coerce_file_mode(_lookup(cfg, "file_mode", "a"))
	reset_root = bool(_lookup(cfg, "reset_root", True))
	fmt = str(_lookup(cfg, "format", None) or DEFAULT_FORMAT)
	datefmt = str(_lookup(cfg, "datefmt", DEFAULT_DATEFMT))

	signature: tuple[Any, ...] = (
		level,
		console_enabled,
		str(log_file) if log_file else None,
		file_mode,
		reset_root,
		fmt,
		datefmt,
	)

	if _INITIALIZED and _CONFIG_SIGNATURE == signature:
		return

	logger = logging.getLogger(ROOT_LOGGER_NAME)
	logger.setLevel(level)

	if reset_root:
		for h in list(logger.handlers):
			logger.removeHandler(h)
			h.close()

	formatter = logging.Formatter(fmt=fmt, datefmt=datefmt)

	if console_enabled:
		ch = logging.StreamHandler(sys.stderr)
		ch.setLevel(level)
		ch.setFormatter(formatter)
		logger.addHandler(ch)

	if log_file:
		path = Path(str(log_file))
		path.parent.mkdir(parents=True, exist_ok=True)
		fh = logging.FileHandler(path, mode=file_mode, encoding="utf-8")
		fh.setLevel(level)
		fh.setFormatter(formatter)
		logger.addHandler(fh)

	_INITIALIZED = True
	_CONFIG_SIGNATURE = signature


# ---------------------------------------------------------------------------
# Internals
# ---------------------------------------------------------------------------

def _lookup(cfg: Any | None, name: str, default: Any) -> Any:
	value = _cfg_get(cfg, f"logging.{name}", None)
	if value is None:
		value = _cfg_get(cfg, f"log_{name}", default)
	return value


def _cfg_get(cfg: Any | None, key: str, default: Any = None) -> Any:
	"""
	Best-effort config getter for cfg.get(key, default) or dict-like objects.
	"""
	if cfg is None:
		return default

	getter = getattr(cfg, "get", None)
	if callable(getter):
		try:
			return getter(key, default)
		except Exception:
			return default

	try:
		return cfg[key]  # type: ignore[index]
	except Exception:
		return default


def _coerce_level(level: Any) -> int:
	if isinstance(level, int):
		return level

	if isinstance(level, str):
		val = level.strip().upper()
		if val.isdigit():
			return int(val)
		resolved = logging.getLevelName(val)
		if isinstance(resolved, int):
			return resolved

	return logging.INFO


def _coerce_file_mode(mode: Any) -> str:
	if isinstance(mode, str) and mode.strip().lower() in ("a", "w"):
		return mode.strip().lower()
	return "a"


# ---------------------------------------------------------------------------
# Test helper
# ---------------------------------------------------------------------------

def _reset_logging_for_tests() -> None:
	global _INITIALIZED, _CONFIG_SIGNATURE
	_INITIALIZED = False
	_CONFIG_SIGNATURE = None
