# ---------------------------------------------------------------------------
# File: files.py
# ---------------------------------------------------------------------------
# Description:
#	JSON / CSV result files: presets.json, selection.json, report.json,
#	pca.json and deviations.csv.
#
# Notes:
#	- Readers raise ValidationError for missing or malformed files.
#	- JSON is written with indent=2 and a trailing newline.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/12/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from hacover.core.errors import HacoverError, ValidationError
from hacover.coverage.params import PresetSet
from hacover.coverage.population import CoverageReport
from hacover.models.configuration import FREQUENCIES, Configuration
from hacover.optimize.result import SelectionResult
from hacover.reduce.pca import PcaModel


DEVIATION_COLUMNS: tuple[str, str] = ("low_dev", "high_dev")


def write_json(data: Any, path: str | Path) -> Path:
	p = Path(path)
	p.parent.mkdir(parents=True, exist_ok=True)
	p.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
	return p


def read_json(path: str | Path) -> Any:
	p = Path(path)
	if not p.is_file():
		raise ValidationError(f"file not found: {p}")
	try:
		return json.loads(p.read_text(encoding="utf-8"))
	except (OSError, UnicodeDecodeError, json.JSONDecodeError) as ex:
		raise ValidationError(f"cannot parse {p}: {ex}") from ex


# ---------------------------------------------------------------------------
# Presets
# ---------------------------------------------------------------------------

def _preset_from_json(entry: Any, index: int) -> Configuration:
	try:
		if isinstance(entry, dict):
			return Configuration(tuple(float(entry[f"g{f}"]) for f in FREQUENCIES))
		return Configuration(tuple(float(v) for v in entry))
	except (KeyError, TypeError, ValueError, HacoverError) as ex:
		raise ValidationError(f"preset {index} is malformed: {ex}") from ex


def save_presets(presets: PresetSet | Sequence[Configuration], path: str | Path) -> Path:
	return write_json({"presets": [c.as_dict() for c in presets]}, path)


def load_presets(path: str | Path) -> PresetSet:
	"""
	Read presets from {"presets": [...]} (selection.json also qualifies) or a
	bare list; entries are {g500: ...} objects or 6-element lists.
	"""
	data = read_json(path)
	entries = data.get("presets") if isinstance(data, dict) else data
	if not isinstance(entries, list) or not entries:
		raise ValidationError(f"{path}: expected a nonempty preset list")
	configs = [_preset_from_json(e, i) for i, e in enumerate(entries)]
	try:
		return PresetSet(tuple(configs))
	except HacoverError as ex:
		raise ValidationError(f"{path}: {ex}") from ex


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------

def save_selection(result: SelectionResult, path: str | Path) -> Path:
	return write_json(result.as_dict(), path)


def save_report(report: CoverageReport, path: str | Path) -> Path:
	return write_json(report.as_dict(), path)


def save_pca(model: PcaModel, path: str | Path) -> Path:
	return write_json(model.as_dict(), path)


def load_pca(path: str | Path) -> PcaModel:
	data = read_json(path)
	if not isinstance(data, dict):
		raise ValidationError(f"{path}: expected a PCA model object")
	try:
		return PcaModel.from_dict(data)
	except HacoverError as ex:
		raise ValidationError(f"{path}: {ex}") from ex


# ---------------------------------------------------------------------------
# Deviation points
# ---------------------------------------------------------------------------

def load_deviation_points(path: str | Path) -> np.ndarray:
	"""
	(n, 2) array of (low_dev, high_dev) rows from a CSV with that header.
	"""
	p = Path(path)
	if not p.is_file():
		raise ValidationError(f"deviations file not found: {p}")

	points: list[tuple[float, float]] = []
	try:
		with p.open(newline="", encoding="utf-8") as fh:
			reader = csv.DictReader(fh)
			if any(c not in (reader.fieldnames or ()) for c in DEVIATION_COLUMNS):
				raise ValidationError(f"{p.name}: expected columns {list(DEVIATION_COLUMNS)}", line=1)
			for row in reader:
				try:
					points.append((float(row["low_dev"]), float(row["high_dev"])))
				except (TypeError, ValueError):
					raise ValidationError(f"malformed deviation row {row}", line=reader.line_num) from None
	except (OSError, UnicodeDecodeError, csv.Error) as ex:
		raise ValidationError(f"cannot read deviations {p}: {ex}") from ex

	if not points:
		raise ValidationError(f"{p.name}: no deviation points")
	return np.asarray(points, dtype=float)


def save_deviation_points(points: Iterable[Sequence[float]], path: str | Path) -> Path:
	p = Path(path)
	p.parent.mkdir(parents=True, exist_ok=True)
	with p.open("w", newline="", encoding="utf-8") as fh:
		writer = csv.writer(fh, lineterminator="\n")
		writer.writerow(DEVIATION_COLUMNS)
		for low, high in points:
			writer.writerow([repr(float(low)), repr(float(high))])
	return p
