# ---------------------------------------------------------------------------
# File: greedy.py
# ---------------------------------------------------------------------------
# Description:
#	Greedy preset selection over a candidate grid.
#
# Notes:
#	- strategy="exact": each step adds the candidate whose addition gives the
#	  largest population coverage, evaluated from the coverage matrix.
#	- strategy="point_removal": each step adds the candidate covering the most
#	  still-uncovered variation mass, then marks those variations covered.
#	- Ties go to the lowest candidate index.
#	- A step where no candidate adds coverage logs one WARNING per run. This
#	  happens when gamma is above the mass a single ball can reach for every
#	  still-uncovered fit type.
#	- trace[i] is the coverage of the first i + 1 picks, so one run to N
#	  also answers every smaller N.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/08/2026	Initial coding / release
# 02/12/2026	Add point_removal strategy
# 10/18/2026	Warn when a greedy step gains nothing
# ---------------------------------------------------------------------------

from __future__ import annotations

import numpy as np

from hacover.core.config import ordered_map
from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.matrix import CoverageMatrix
from hacover.coverage.params import CoverageParams
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.result import SelectionResult, check_n, ensure_matrix, grid_selection
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("optimize.greedy")

STRATEGIES: tuple[str, ...] = ("exact", "point_removal")


def greedy_select(
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	n: int,
	*,
	matrix: CoverageMatrix | None = None,
	strategy: str = "exact",
	workers: int | None = None,
) -> SelectionResult:
	if strategy not in STRATEGIES:
		raise ParameterError(f"unknown greedy strategy {strategy!r}; expected one of {STRATEGIES}")
	check_n(n, len(grid))
	matrix = ensure_matrix(grid, dataset, bank, params, matrix, workers)

	telemetry = get_telemetry()
	with telemetry.timer("optimize.greedy.duration_ms", {"n": n, "strategy": strategy}):
		if strategy == "exact":
			selected, trace = _exact(matrix, params.gamma, n, workers)
		else:
			selected, trace = _point_removal(matrix, params.gamma, n, workers)

	telemetry.event("optimize.greedy.done", {"n": n, "coverage": trace[-1]})
	log.info("greedy (%s) N=%d coverage %.6f", strategy, n, trace[-1])
	return grid_selection("greedy", grid, selected, trace[-1], trace)


def _exact(matrix: CoverageMatrix, gamma: float, n: int, workers: int | None) -> tuple[list[int], list[float]]:
	current = matrix.union(())
	chosen = np.zeros(len(matrix), dtype=bool)
	selected: list[int] = []
	trace: list[float] = []
	previous = matrix.coverage_of_packed(current, gamma)
	stalled = False

	for _ in range(n):
		remaining = np.flatnonzero(~chosen).tolist()
		scores = ordered_map(
			lambda k: matrix.coverage_of_packed(current | matrix.bits[k], gamma),
			remaining,
			workers,
		)
		best_k, best_score = _first_max(remaining, scores)
		if best_score <= previous < 1.0 and not stalled:
			log.warning(
				"greedy step %d: no candidate raises coverage above %.6f at gamma %.3g; taking the lowest free index",
				len(selected) + 1,
				previous,
				gamma,
			)
			stalled = True
		previous = best_score
		chosen[best_k] = True
		selected.append(best_k)
		current = current | matrix.bits[best_k]
		trace.append(best_score)
		log.debug("greedy step %d: candidate %d -> %.6f", len(selected), best_k, best_score)

	return selected, trace


def _point_removal(
	matrix: CoverageMatrix,
	gamma: float,
	n: int,
	workers: int | None,
) -> tuple[list[int], list[float]]:
	masses = matrix.table.variation_masses()
	uncovered = np.ones(matrix.n_variations, dtype=bool)
	current = matrix.union(())
	chosen = np.zeros(len(matrix), dtype=bool)
	selected: list[int] = []
	trace: list[float] = []

	for _ in range(n):
		remaining = np.flatnonzero(~chosen).tolist()
		gains = ordered_map(
			lambda k: float(np.where(matrix.row_mask(k) & uncovered, masses, 0.0).sum()),
			remaining,
			workers,
		)
		best_k, _ = _first_max(remaining, gains)
		chosen[best_k] = True
		selected.append(best_k)
		uncovered &= ~matrix.row_mask(best_k)
		current = current | matrix.bits[best_k]
		trace.append(matrix.coverage_of_packed(current, gamma))

	return selected, trace


def _first_max(keys: list[int], scores: list[float]) -> tuple[int, float]:
	best_k, best_score = keys[0], scores[0]
	for k, s in zip(keys[1:], scores[1:]):
		if s > best_score:
			best_k, best_score = k, s
	return int(best_k), float(best_score)
