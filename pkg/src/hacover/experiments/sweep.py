# ---------------------------------------------------------------------------
# File: sweep.py
# ---------------------------------------------------------------------------
# Description:
#	Preset-count / coverage tradeoff sweep across selection methods.
#
# Notes:
#	- One coverage matrix is shared by every grid method and N.
#	- Every row is revalidated against population_coverage() recomputed
#	  from the raw inputs; disagreement beyond 1e-12 raises CoverageMismatch.
#	- Rows come back sorted by (method, N).
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/14/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from hacover.core.errors import CoverageMismatch, ParameterError
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.matrix import CoverageMatrix, precompute_matrix
from hacover.coverage.params import CoverageParams
from hacover.coverage.population import population_coverage
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.genetic import GaParams
from hacover.optimize.result import METHODS, SelectionResult
from hacover.optimize.select import select_presets
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("experiments.sweep")

REVALIDATE_TOL = 1e-12


@dataclass(frozen=True, slots=True)
class SweepRow:
	method: str
	n: int
	coverage: float
	wall_time: float
	seed: Optional[int] = None

	def as_row(self) -> dict[str, object]:
		return {
			"method": self.method,
			"N": self.n,
			"coverage": self.coverage,
			"wall_time": self.wall_time,
			"seed": "" if self.seed is None else self.seed,
		}


def check_ns(ns: Sequence[int]) -> list[int]:
	values = list(ns)
	if not values:
		raise ParameterError("N list is empty")
	for n in values:
		if int(n) != n or n < 1:
			raise ParameterError(f"preset count N must be an integer >= 1, got {n}")
	return [int(n) for n in values]


def revalidate(
	result: SelectionResult,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	*,
	workers: int | None = None,
) -> float:
	"""
	Recompute a result's coverage from scratch; raise if it disagrees.
	"""
	fresh = population_coverage(dataset, result.presets, bank, params, workers=workers).population_coverage
	if abs(fresh - result.coverage) > REVALIDATE_TOL:
		raise CoverageMismatch(
			f"{result.method} N={result.n}: reported coverage {result.coverage!r}, recomputed {fresh!r}"
		)
	return fresh


def sweep(
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	grid: CandidateGrid,
	ns: Sequence[int],
	methods: Sequence[str],
	*,
	seed: Optional[int] = None,
	ga: GaParams | None = None,
	matrix: CoverageMatrix | None = None,
	greedy_strategy: str = "exact",
	workers: int | None = None,
) -> list[SweepRow]:
	if not methods:
		raise ParameterError("sweep needs at least one method")
	unknown = [m for m in methods if m not in METHODS]
	if unknown:
		raise ParameterError(f"unknown methods {unknown}; expected some of {METHODS}")
	ns = check_ns(ns)

	if matrix is None and any(m != "kmeans" for m in methods):
		matrix = precompute_matrix(grid.lifted, dataset, bank, params, workers=workers)

	telemetry = get_telemetry()
	rows: list[SweepRow] = []
	for method in sorted(set(methods)):
		for n in sorted(set(ns)):
			with telemetry.timer("experiments.sweep.row_ms", {"method": method, "n": n}) as t:
				result = select_presets(
					method, grid, dataset, bank, params, n,
					seed=seed, ga=ga, matrix=matrix, greedy_strategy=greedy_strategy, workers=workers,
				)
			revalidate(result, dataset, bank, params, workers=workers)
			row_seed = result.seed if method in ("ga", "kmeans") else None
			rows.append(SweepRow(method, n, result.coverage, t.elapsed_s, row_seed))
			log.info("sweep %s N=%d coverage %.6f (%.2fs)", method, n, result.coverage, t.elapsed_s)
	return rows
