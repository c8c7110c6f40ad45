# ---------------------------------------------------------------------------
# File: brute.py
# ---------------------------------------------------------------------------
# Description:
#	Exhaustive optimum over all N-subsets of the candidate grid. Reference
#	for tiny grids; refuses anything above combination_limit.
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/10/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from itertools import combinations
import math

import numpy as np

from hacover.core.errors import BruteForceRefused
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.matrix import CoverageMatrix
from hacover.coverage.params import CoverageParams
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.result import SelectionResult, check_n, ensure_matrix, grid_selection
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("optimize.brute")

DEFAULT_COMBINATION_LIMIT = 2_000_000


def brute_force_select(
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	n: int,
	*,
	combination_limit: int = DEFAULT_COMBINATION_LIMIT,
	matrix: CoverageMatrix | None = None,
	workers: int | None = None,
) -> SelectionResult:
	check_n(n, len(grid))
	count = math.comb(len(grid), n)
	if count > combination_limit:
		raise BruteForceRefused(count, combination_limit)
	matrix = ensure_matrix(grid, dataset, bank, params, matrix, workers)

	best: tuple[int, ...] = ()
	best_score = -1.0
	with get_telemetry().timer("optimize.brute.duration_ms", {"n": n, "combinations": count}):
		for combo in combinations(range(len(grid)), n):
			packed = np.bitwise_or.reduce(matrix.bits[list(combo)], axis=0)
			score = matrix.coverage_of_packed(packed, params.gamma)
			if score > best_score:
				best, best_score = combo, score

	log.info("brute force N=%d over %d subsets: coverage %.6f", n, count, best_score)
	return grid_selection("brute", grid, best, best_score, (best_score,))
