# ---------------------------------------------------------------------------
# File: telemetry.py
# Description:
#	Lightweight run telemetry for hacover.
#
#	Provides a small facade for emitting:
#	  - events		(run started/finished, replicate skipped, ...)
#	  - counters	(fitness evaluations, cache hits, ...)
#	  - timers		(optimizer and experiment wall time)
#
# Notes:
#	- Safe to call when disabled; the default sink is NullSink.
#	- Timers always measure, even when disabled, so callers can read
#	  elapsed_s for result tables (SweepRow.wall_time).
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/12/2026	Timer exposes elapsed_s for experiment tables
# ---------------------------------------------------------------------------

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict, Mapping, Optional, Protocol


# ---------------------------------------------------------------------------
# Telemetry data models
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class TelemetryEvent:
	name: str
	timestamp: float
	attrs: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True, slots=True)
class TelemetryMetric:
	name: str
	value: float
	attrs: Dict[str, Any] = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Sink protocol + implementations
# ---------------------------------------------------------------------------

class TelemetrySink(Protocol):
	def emit_event(self, event: TelemetryEvent) -> None: ...
	def emit_metric(self, metric: TelemetryMetric) -> None: ...


class NullSink:
	def emit_event(self, event: TelemetryEvent) -> None:
		return

	def emit_metric(self, metric: TelemetryMetric) -> None:
		return


class LogSink:
	"""
	Emits events and metrics through a logger at INFO.
	"""

	def __init__(self, logger: logging.Logger) -> None:
		self._log = logger

	def emit_event(self, event: TelemetryEvent) -> None:
		self._log.info("telemetry.event name=%s attrs=%s", event.name, event.attrs)

	def emit_metric(self, metric: TelemetryMetric) -> None:
		self._log.info(
			"telemetry.metric name=%s value=%s attrs=%s",
			metric.name,
			metric.value,
			metric.attrs,
		)


class MemorySink:
	"""
	In-memory sink for tests.
	"""

	def __init__(self) -> None:
		self.events: list[TelemetryEvent] = []
		self.metrics: list[TelemetryMetric] = []

	def emit_event(self, event: TelemetryEvent) -> None:
		self.events.append(event)

	def emit_metric(self, metric: TelemetryMetric) -> None:
		self.metrics.append(metric)

	def event_names(self) -> list[str]:
		return [e.name for e in self.events]

	def clear(self) -> None:
		self.events.clear()
		self.metrics.clear()


# ---------------------------------------------------------------------------
# Facade
# ---------------------------------------------------------------------------

class Telemetry:
	def __init__(self, enabled: bool, sink: TelemetrySink) -> None:
		self._enabled = enabled
		self._sink = sink

	@property
	def enabled(self) -> bool:
		return self._enabled

	def event(self, name: str, attrs: Optional[Mapping[str, Any]] = None) -> None:
		if not self._enabled:
			return
		self._sink.emit_event(TelemetryEvent(name=name, timestamp=time.time(), attrs=dict(attrs or {})))

	def counter(
		self,
		name: str,
		value: float = 1,
		attrs: Optional[Mapping[str, Any]] = None,
	) -> None:
		if not self._enabled:
			return
		self._sink.emit_metric(TelemetryMetric(name=name, value=float(value), attrs=dict(attrs or {})))

	def timer(self, name: str, attrs: Optional[Mapping[str, Any]] = None) -> "TelemetryTimer":
		return TelemetryTimer(self, name, dict(attrs or {}))


class TelemetryTimer:
	"""
	Context manager timing a block; reports <name> in milliseconds on exit.
	"""

	def __init__(self, telemetry: Telemetry, name: str, attrs: Dict[str, Any]) -> None:
		self._telemetry = telemetry
		self._name = name
		self._attrs = attrs
		self._start: float = 0.0
		self.elapsed_s: float = 0.0

	def __enter__(self) -> "TelemetryTimer":
		self._start = time.perf_counter()
		return self

	def __exit__(self, exc_type, exc, tb) -> None:
		self.elapsed_s = time.perf_counter() - self._start
		self._telemetry.counter(self._name, value=self.elapsed_s * 1000.0, attrs=self._attrs)


# ---------------------------------------------------------------------------
# Global helpers
# ---------------------------------------------------------------------------

_telemetry: Optional[Telemetry] = None


def init_telemetry(cfg: Mapping[str, Any], logger: Optional[logging.Logger] = None) -> Telemetry:
	"""
	Initialize the global telemetry instance.

	Expected cfg keys:
		telemetry_enabled: bool
		telemetry_sink: "null" | "log"
	"""
	global _telemetry

	enabled = bool(cfg.get("telemetry_enabled", False))
	sink_name = cfg.get("telemetry_sink", "null")

	if enabled and sink_name == "log" and logger is not None:
		_telemetry = Telemetry(True, LogSink(logger))
	elif enabled:
		_telemetry = Telemetry(True, NullSink())
	else:
		_telemetry = Telemetry(False, NullSink())

	return _telemetry


def set_telemetry(telemetry: Telemetry) -> None:
	"""
	Install a prepared instance (tests use this with a MemorySink).
	"""
	global _telemetry
	_telemetry = telemetry


def get_telemetry() -> Telemetry:
	"""
	Return the global instance; disabled until init_telemetry() runs.
	"""
	global _telemetry

	if _telemetry is None:
		_telemetry = Telemetry(False, NullSink())

	return _telemetry
