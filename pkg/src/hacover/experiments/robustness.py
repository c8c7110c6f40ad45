# ---------------------------------------------------------------------------
# File: robustness.py
# ---------------------------------------------------------------------------
# Description:
#	Robustness of greedy coverage to the deviation-likelihood model.
#
#	bootstrap_coverage():	resample the empirical deviation points, refit
#							the Gaussian, reweight the transfer bank and rerun
#							greedy per replicate.
#	variance_scaling():		multiply the Gaussian std by each scale and rerun
#							greedy.
#
# Notes:
#	- The coverage matrix depends on geometry only; replicates and scales
#	  reuse it through CoverageMatrix.reweighted().
#	- Greedy runs once to max(N); coverage at smaller N is the trace prefix.
#	- Resample indices for every replicate are drawn up front from the
#	  seeded rng, so results do not depend on worker count.
#	- A replicate whose refit fails (e.g. zero variance) is skipped and
#	  counted.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/16/2026	Initial coding / release
# 02/17/2026	Share one greedy run per replicate across N
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Optional, Sequence

import numpy as np

from hacover.core.config import ordered_map
from hacover.core.errors import FitError, ParameterError
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.matrix import CoverageMatrix, precompute_matrix
from hacover.coverage.params import CoverageParams
from hacover.experiments.sweep import check_ns
from hacover.models.deviation import DEFAULT_DEVIATION_MODEL, DeviationModel, fit_deviation_model, variation_weights
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.greedy import greedy_select
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("experiments.robustness")

DEFAULT_REPLICATES = 50
DEFAULT_SCALES: tuple[float, ...] = (0.5, 1.0, 1.5)


@dataclass(frozen=True, slots=True)
class BootstrapSummary:
	n: int
	mean: float
	std: float
	min: float
	max: float
	replicates: int
	skipped: int

	def as_row(self) -> dict[str, object]:
		return {
			"N": self.n,
			"mean": self.mean,
			"std": self.std,
			"min": self.min,
			"max": self.max,
			"replicates": self.replicates,
			"skipped": self.skipped,
		}


@dataclass(frozen=True, slots=True)
class BootstrapResult:
	"""
	coverages:	N -> coverage of each completed replicate, replicate order
	replicates:	replicates requested
	skipped:	replicates whose refit failed
	"""
	coverages: dict[int, tuple[float, ...]]
	replicates: int
	skipped: int
	seed: Optional[int] = None

	@property
	def completed(self) -> int:
		return self.replicates - self.skipped

	def summary(self) -> list[BootstrapSummary]:
		out: list[BootstrapSummary] = []
		for n in sorted(self.coverages):
			values = np.asarray(self.coverages[n], dtype=float)
			count = int(values.size)
			out.append(
				BootstrapSummary(
					n=n,
					mean=float(values.mean()) if count else math.nan,
					std=float(values.std(ddof=1)) if count > 1 else math.nan,
					min=float(values.min()) if count else math.nan,
					max=float(values.max()) if count else math.nan,
					replicates=count,
					skipped=self.skipped,
				)
			)
		return out


@dataclass(frozen=True, slots=True)
class VarianceRow:
	scale: float
	n: int
	coverage: float

	def as_row(self) -> dict[str, object]:
		return {"scale": self.scale, "N": self.n, "coverage": self.coverage}


def _greedy_trace(
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	matrix: CoverageMatrix,
	max_n: int,
	workers: int | None,
) -> tuple[float, ...]:
	return greedy_select(
		grid, dataset, bank, params, max_n, matrix=matrix.reweighted(bank), workers=workers
	).trace


def bootstrap_coverage(
	deviation_points: np.ndarray,
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	ns: Sequence[int],
	*,
	b: int = DEFAULT_REPLICATES,
	seed: Optional[int] = None,
	matrix: CoverageMatrix | None = None,
	workers: int | None = None,
) -> BootstrapResult:
	if b < 2:
		raise ParameterError(f"bootstrap needs B >= 2 replicates, got {b}")
	ns = check_ns(ns)
	points = np.asarray(deviation_points, dtype=float)
	if points.ndim != 2 or points.shape[1] != 2 or points.shape[0] < 1:
		raise ParameterError(f"deviation points must be an (n, 2) array, got shape {points.shape}")

	max_n = max(ns)
	if matrix is None:
		matrix = precompute_matrix(grid.lifted, dataset, bank, params, workers=workers)

	rng = np.random.default_rng(seed)
	draws = [rng.integers(0, points.shape[0], size=points.shape[0]) for _ in range(b)]

	def _replicate(idx: np.ndarray) -> tuple[float, ...] | None:
		try:
			model = fit_deviation_model(points[idx])
		except FitError as ex:
			log.info("bootstrap replicate skipped: %s", ex)
			return None
		return _greedy_trace(grid, dataset, variation_weights(bank, model), params, matrix, max_n, 1)

	telemetry = get_telemetry()
	with telemetry.timer("experiments.bootstrap.duration_ms", {"replicates": b}):
		traces = ordered_map(_replicate, draws, workers)

	done = [t for t in traces if t is not None]
	skipped = len(traces) - len(done)
	coverages = {n: tuple(t[n - 1] for t in done) for n in sorted(set(ns))}
	telemetry.event("experiments.bootstrap.done", {"replicates": b, "skipped": skipped})
	log.info("bootstrap: %d replicates, %d skipped", b, skipped)
	return BootstrapResult(coverages=coverages, replicates=b, skipped=skipped, seed=seed)


def variance_scaling(
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	ns: Sequence[int],
	*,
	scales: Sequence[float] = DEFAULT_SCALES,
	model: DeviationModel = DEFAULT_DEVIATION_MODEL,
	matrix: CoverageMatrix | None = None,
	workers: int | None = None,
) -> list[VarianceRow]:
	"""
	Greedy coverage per (scale, N) with the Gaussian std multiplied by scale.
	"""
	if not scales:
		raise ParameterError("no variance scales given")
	for s in scales:
		if not (s > 0 and math.isfinite(s)):
			raise ParameterError(f"variance scales must be > 0, got {s}")
	ns = check_ns(ns)
	max_n = max(ns)
	if matrix is None:
		matrix = precompute_matrix(grid.lifted, dataset, bank, params, workers=workers)

	rows: list[VarianceRow] = []
	for scale in scales:
		scaled = variation_weights(bank, model.with_scale(float(scale)))
		trace = _greedy_trace(grid, dataset, scaled, params, matrix, max_n, workers)
		for n in sorted(set(ns)):
			rows.append(VarianceRow(scale=float(scale), n=n, coverage=trace[n - 1]))
		log.info("variance scale %.3g: coverage at N=%d is %.6f", scale, max_n, trace[-1])
	return rows
