# ---------------------------------------------------------------------------
# File: __init__.py
# ---------------------------------------------------------------------------
# Description:
#	Core package for hacover (logging, telemetry, config, errors).
#
# Notes:
#	Keep this lightweight. Re-export stable public helpers.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from .config import AppConfig, ordered_map, resolve_workers, truthy_env
from .errors import (
	BruteForceRefused,
	CoverageMismatch,
	DegenerateBoundingBox,
	EmptySubgroup,
	FitError,
	HacoverError,
	MissingFitType,
	ParameterError,
	ValidationError,
)
from .logging import get_component_logger, init_logging
from .telemetry import get_telemetry, init_telemetry, set_telemetry

__all__ = [
	"AppConfig",
	"BruteForceRefused",
	"CoverageMismatch",
	"DegenerateBoundingBox",
	"EmptySubgroup",
	"FitError",
	"HacoverError",
	"MissingFitType",
	"ParameterError",
	"ValidationError",
	"get_component_logger",
	"get_telemetry",
	"init_logging",
	"init_telemetry",
	"ordered_map",
	"resolve_workers",
	"set_telemetry",
	"truthy_env",
]
