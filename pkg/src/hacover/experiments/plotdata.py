# ---------------------------------------------------------------------------
# File: plotdata.py
# ---------------------------------------------------------------------------
# Description:
#	CSV emission of experiment results, one file per figure kind.
#
# Notes:
#	- Column order per kind is fixed by PLOT_KINDS.
#	- Rows may be mappings, objects with as_row(), or dataclasses.
#	- Empty input writes the header only.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/17/2026	Initial coding / release
# 02/18/2026	Add coverage_example and pca_scatter row builders
# ---------------------------------------------------------------------------

from __future__ import annotations

import csv
from dataclasses import asdict, dataclass, is_dataclass
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional

import numpy as np

from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.coverage.ball import covered_mask
from hacover.coverage.params import CoverageParams, PresetSet
from hacover.coverage.population import VariationTable
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.reduce.pca import PcaModel, transform


log = get_component_logger("experiments.plotdata")

_GAINS = ("g500", "g1000", "g2000", "g3000", "g4000", "g6000")

PLOT_KINDS: dict[str, tuple[str, ...]] = {
	"coverage_vs_n": ("method", "N", "coverage"),
	"sweep": ("method", "N", "coverage", "wall_time", "seed"),
	"pca_scatter": ("kind", "pc1", "pc2", "covered"),
	"coverage_example": ("user_id", "fit_type", "pc1", "pc2", *_GAINS, "covered"),
	"bootstrap": ("N", "mean", "std", "min", "max", "replicates", "skipped"),
	"variance_scaling": ("scale", "N", "coverage"),
	"slider": ("steps_x", "steps_y", "presets", "coverage"),
	"subgroup": (
		"subgroup",
		"N",
		"method",
		"users",
		"weight_share",
		"global_coverage",
		"subgroup_coverage",
		"improvement",
	),
}


def _as_mapping(row: Any) -> Mapping[str, Any]:
	if isinstance(row, Mapping):
		return row
	if hasattr(row, "as_row"):
		return row.as_row()
	if is_dataclass(row):
		return asdict(row)
	raise ParameterError(f"cannot emit row of type {type(row).__name__}")


def emit_plot_data(rows: Iterable[Any], kind: str, path: str | Path) -> Path:
	if kind not in PLOT_KINDS:
		raise ParameterError(f"unknown plot kind {kind!r}; expected one of {sorted(PLOT_KINDS)}")
	columns = PLOT_KINDS[kind]

	p = Path(path)
	p.parent.mkdir(parents=True, exist_ok=True)
	count = 0
	with p.open("w", newline="", encoding="utf-8") as fh:
		writer = csv.writer(fh, lineterminator="\n")
		writer.writerow(columns)
		for row in rows:
			data = _as_mapping(row)
			missing = [c for c in columns if c not in data]
			if missing:
				raise ParameterError(f"{kind} row lacks columns {missing}")
			writer.writerow([data[c] for c in columns])
			count += 1

	log.debug("wrote %d %s rows to %s", count, kind, p)
	return p


# ---------------------------------------------------------------------------
# Row builders
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ExampleRow:
	user_id: str
	fit_type: str
	pc1: float
	pc2: float
	gains: tuple[float, ...]
	covered: bool

	def as_row(self) -> dict[str, object]:
		row: dict[str, object] = {
			"user_id": self.user_id,
			"fit_type": self.fit_type,
			"pc1": self.pc1,
			"pc2": self.pc2,
			"covered": int(self.covered),
		}
		row.update(zip(_GAINS, self.gains))
		return row


def coverage_example_rows(
	dataset: Dataset,
	presets: PresetSet,
	model: PcaModel,
	params: CoverageParams,
) -> list[ExampleRow]:
	"""
	Every prescription with its reduced coordinates, flagged covered when it
	lies within the radius of at least one preset.
	"""
	rows = dataset.prescriptions()
	base = np.asarray([cfg.gains for _, _, cfg in rows], dtype=float).reshape(len(rows), -1)
	covered = covered_mask(base, presets.as_array(), params.radius)
	coords = transform(model, base).reshape(len(rows), -1)
	return [
		ExampleRow(
			user_id=dataset.users[ui].id,
			fit_type=str(ft),
			pc1=float(coords[i, 0]),
			pc2=float(coords[i, 1]) if coords.shape[1] > 1 else 0.0,
			gains=cfg.gains,
			covered=bool(covered[i]),
		)
		for i, (ui, ft, cfg) in enumerate(rows)
	]


def pca_scatter_rows(
	model: PcaModel,
	dataset: Dataset,
	bank: TransferFunctionBank,
	presets: Optional[PresetSet] = None,
	params: Optional[CoverageParams] = None,
	*,
	include_variations: bool = True,
) -> list[dict[str, object]]:
	"""
	Prescriptions, variations and presets in component space; covered flags
	are filled when presets and params are both given.
	"""
	table = VariationTable.build(dataset, bank)
	groups: list[tuple[str, np.ndarray]] = [("prescription", table.base)]
	if include_variations:
		groups.append(("variation", table.variations()))
	if presets is not None:
		groups.append(("preset", presets.as_array()))

	out: list[dict[str, object]] = []
	for kind, configs in groups:
		coords = transform(model, configs).reshape(configs.shape[0], -1)
		if presets is not None and params is not None:
			flags: list[object] = [int(c) for c in covered_mask(configs, presets.as_array(), params.radius)]
		else:
			flags = [""] * configs.shape[0]
		for i in range(configs.shape[0]):
			out.append(
				{
					"kind": kind,
					"pc1": float(coords[i, 0]),
					"pc2": float(coords[i, 1]) if coords.shape[1] > 1 else 0.0,
					"covered": flags[i],
				}
			)
	return out
