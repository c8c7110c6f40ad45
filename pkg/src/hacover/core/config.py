# ---------------------------------------------------------------------------
# File: config.py
# ---------------------------------------------------------------------------
# Description:
#	Runtime configuration helpers: AppConfig, environment flags, worker pool.
#
# Notes:
#	- AppConfig wraps a (possibly nested) mapping and supports dotted keys,
#	  so cfg.get("logging.level") reads {"logging": {"level": ...}} as well as
#	  a flat {"logging.level": ...}.
#	- HACOVER_THREADS caps worker parallelism; unset means sequential.
#	- ordered_map() always returns results in input order, so parallel and
#	  sequential runs are bit-identical.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/10/2026	Add resolve_workers + ordered_map
# ---------------------------------------------------------------------------

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping, TypeVar
import os

from hacover.core.errors import ParameterError


THREADS_ENV = "HACOVER_THREADS"
DEBUG_ENV = "HACOVER_DEBUG"

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True, slots=True)
class AppConfig:
	"""
	Read-only view over a config mapping with dotted-key lookup.
	"""
	options: Mapping[str, Any] | None = None

	def get(self, key: str, default: Any = None) -> Any:
		if not self.options:
			return default

		if key in self.options:
			return self.options[key]

		node: Any = self.options
		for part in key.split("."):
			if not isinstance(node, Mapping) or part not in node:
				return default
			node = node[part]
		return node

	def section(self, key: str) -> "AppConfig":
		value = self.get(key, None)
		return AppConfig(value if isinstance(value, Mapping) else {})


def truthy_env(name: str, default: str = "0") -> bool:
	val = os.getenv(name, default).strip().lower()
	return val in ("1", "true", "t", "yes", "y", "on")


def resolve_workers(workers: int | None = None) -> int:
	"""
	Number of worker threads to use.

	Explicit values win; otherwise HACOVER_THREADS; otherwise 1.
	"""
	if workers is None:
		raw = os.getenv(THREADS_ENV, "").strip()
		if not raw:
			return 1
		try:
			workers = int(raw)
		except ValueError as ex:
			raise ParameterError(f"{THREADS_ENV} must be an integer, got {raw!r}") from ex

	if workers < 1:
		raise ParameterError(f"worker count must be >= 1, got {workers}")
	return workers


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
	"""
	Map fn over items, optionally on a thread pool; output keeps input order.
	"""
	n = resolve_workers(workers)
	if n == 1:
		return [fn(item) for item in items]

	with ThreadPoolExecutor(max_workers=n) as pool:
		return list(pool.map(fn, items))
