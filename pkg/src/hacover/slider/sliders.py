# ---------------------------------------------------------------------------
# File: sliders.py
# ---------------------------------------------------------------------------
# Description:
#	Two-slider interface model.
#
#	Each slider moves along one principal component; a slider increment is a
#	vertex of the closed steps_x x steps_y grid over the bounding box, and the
#	slider position (ix, iy) selects the lifted configuration at that vertex.
#	Every reachable position is a preset.
#
# Notes:
#	- steps = vertex count per axis, both extremes included.
#	- Default bounding-box source is the variations (reachable preferences).
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/11/2026	Initial coding / release
# 02/13/2026	Add slider_sweep
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.coverage.params import CoverageParams, PresetSet
from hacover.coverage.population import CoverageReport, population_coverage
from hacover.models.configuration import Configuration
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.reduce.grid import CandidateGrid, build_grid
from hacover.reduce.pca import PcaModel
from hacover.reduce.sources import BBoxSource, source_points


log = get_component_logger("slider")

MIN_STEPS = 2
MAX_STEPS = 200
DEFAULT_FIXED_STEPS = 10


@dataclass(frozen=True, slots=True)
class SliderSpec:
	steps_x: int
	steps_y: int
	bbox_source: BBoxSource = BBoxSource.VARIATIONS

	def __post_init__(self) -> None:
		for name in ("steps_x", "steps_y"):
			value = getattr(self, name)
			if int(value) != value or not MIN_STEPS <= value <= MAX_STEPS:
				raise ParameterError(f"{name} must be an integer in [{MIN_STEPS}, {MAX_STEPS}], got {value}")
		try:
			object.__setattr__(self, "bbox_source", BBoxSource(self.bbox_source))
		except ValueError as ex:
			raise ParameterError(
				f"bbox_source must be one of {[s.value for s in BBoxSource]}, got {self.bbox_source!r}"
			) from ex

	@property
	def preset_count(self) -> int:
		return self.steps_x * self.steps_y

	def as_dict(self) -> dict[str, object]:
		return {"steps_x": self.steps_x, "steps_y": self.steps_y, "bbox_source": str(self.bbox_source)}


@dataclass(frozen=True, slots=True)
class SliderRow:
	steps_x: int
	steps_y: int
	presets: int
	coverage: float


def slider_grid(
	model: PcaModel,
	spec: SliderSpec,
	dataset: Dataset,
	bank: TransferFunctionBank,
	*,
	points: Optional[np.ndarray] = None,
) -> CandidateGrid:
	"""
	Closed slider lattice; points overrides the bounding-box source.
	"""
	if points is None:
		points = source_points(model, dataset, bank, spec.bbox_source)
	return build_grid(model, points, spec.steps_x, spec.steps_y)


def slider_presets(
	model: PcaModel,
	spec: SliderSpec,
	dataset: Dataset,
	bank: TransferFunctionBank,
) -> PresetSet:
	return PresetSet(slider_grid(model, spec, dataset, bank).lifted)


def position_to_config(grid: CandidateGrid, ix: int, iy: int) -> Configuration:
	"""
	Configuration selected by slider position (ix, iy); (0, 0) is the box origin.
	"""
	return grid.lifted[grid.index(ix, iy)]


def slider_coverage(
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	model: PcaModel,
	spec: SliderSpec,
	*,
	workers: int | None = None,
) -> CoverageReport:
	presets = slider_presets(model, spec, dataset, bank)
	report = population_coverage(dataset, presets, bank, params, workers=workers)
	log.info(
		"slider %dx%d (%d presets): coverage %.6f",
		spec.steps_x,
		spec.steps_y,
		len(presets),
		report.population_coverage,
	)
	return report


def slider_sweep(
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	model: PcaModel,
	*,
	vary: str = "x",
	fixed: int = DEFAULT_FIXED_STEPS,
	steps: Iterable[int] = range(MIN_STEPS, 21),
	bbox_source: BBoxSource | str = BBoxSource.VARIATIONS,
	workers: int | None = None,
) -> list[SliderRow]:
	"""
	Coverage while one slider's increment count varies and the other stays fixed.
	"""
	if vary not in ("x", "y"):
		raise ParameterError(f"vary must be 'x' or 'y', got {vary!r}")

	points = source_points(model, dataset, bank, bbox_source)
	rows: list[SliderRow] = []
	for s in steps:
		sx, sy = (s, fixed) if vary == "x" else (fixed, s)
		spec = SliderSpec(sx, sy, BBoxSource(bbox_source))
		presets = PresetSet(slider_grid(model, spec, dataset, bank, points=points).lifted)
		coverage = population_coverage(dataset, presets, bank, params, workers=workers).population_coverage
		rows.append(SliderRow(steps_x=sx, steps_y=sy, presets=len(presets), coverage=coverage))
		log.debug("slider sweep %dx%d -> %.6f", sx, sy, coverage)
	return rows
