# ---------------------------------------------------------------------------
# File: io/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Dataset ingestion, result files and synthetic inputs.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .dataset import COLUMNS, load_dataset, save_dataset
from .files import (
	load_deviation_points,
	load_pca,
	load_presets,
	read_json,
	save_deviation_points,
	save_pca,
	save_presets,
	save_report,
	save_selection,
	write_json,
)
from .synth import SynthSpec, synth_dataset, synth_deviation_points

__all__ = [
	"COLUMNS",
	"SynthSpec",
	"load_dataset",
	"load_deviation_points",
	"load_pca",
	"load_presets",
	"read_json",
	"save_dataset",
	"save_deviation_points",
	"save_pca",
	"save_presets",
	"save_report",
	"save_selection",
	"synth_dataset",
	"synth_deviation_points",
	"write_json",
]
