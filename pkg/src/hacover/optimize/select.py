# ---------------------------------------------------------------------------
# File: select.py
# ---------------------------------------------------------------------------
# Description:
#	select_presets(): run any selection method by name.
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/14/2026	Initial coding / release
# 10/18/2026	k-means is snapped to the candidate grid
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import replace
from typing import Optional

from hacover.core.errors import ParameterError
from hacover.coverage.matrix import CoverageMatrix
from hacover.coverage.params import CoverageParams
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.brute import DEFAULT_COMBINATION_LIMIT, brute_force_select
from hacover.optimize.genetic import GaParams, ga_select
from hacover.optimize.greedy import greedy_select
from hacover.optimize.kmeans import kmeans_select
from hacover.optimize.result import METHODS, SelectionResult
from hacover.reduce.grid import CandidateGrid


def select_presets(
	method: str,
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	n: int,
	*,
	seed: Optional[int] = None,
	ga: GaParams | None = None,
	matrix: CoverageMatrix | None = None,
	greedy_strategy: str = "exact",
	combination_limit: int = DEFAULT_COMBINATION_LIMIT,
	workers: int | None = None,
) -> SelectionResult:
	"""
	seed overrides ga.seed for the genetic algorithm and seeds k-means.
	"""
	if method == "greedy":
		return greedy_select(
			grid, dataset, bank, params, n, matrix=matrix, strategy=greedy_strategy, workers=workers
		)
	if method == "ga":
		ga = ga or GaParams()
		if seed is not None:
			ga = replace(ga, seed=seed)
		return ga_select(grid, dataset, bank, params, n, ga, matrix=matrix, workers=workers)
	if method == "kmeans":
		return kmeans_select(dataset, bank, params, n, seed, grid=grid)
	if method == "brute":
		return brute_force_select(
			grid, dataset, bank, params, n,
			combination_limit=combination_limit, matrix=matrix, workers=workers,
		)
	raise ParameterError(f"unknown method {method!r}; expected one of {METHODS}")
