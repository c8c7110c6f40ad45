# ---------------------------------------------------------------------------
# File: result.py
# ---------------------------------------------------------------------------
# Description:
#	SelectionResult and helpers shared by the preset-selection algorithms.
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/08/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from hacover.core.errors import ParameterError
from hacover.coverage.matrix import CoverageMatrix, precompute_matrix
from hacover.coverage.params import CoverageParams, PresetSet
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.reduce.grid import CandidateGrid


METHODS: tuple[str, ...] = ("greedy", "ga", "kmeans", "brute")


@dataclass(frozen=True, slots=True)
class SelectionResult:
	"""
	SelectionResult

	method:		greedy | ga | kmeans | brute
	n:			requested preset count
	presets:	chosen presets
	indices:	chosen candidate indices (empty for unsnapped k-means)
	coverage:	population coverage of presets
	trace:		best coverage per step / generation
	seed:		seed of randomized methods
	"""
	method: str
	n: int
	presets: PresetSet
	indices: tuple[int, ...]
	coverage: float
	trace: tuple[float, ...] = field(default_factory=tuple)
	seed: Optional[int] = None

	def as_dict(self) -> dict[str, object]:
		return {
			"method": self.method,
			"N": self.n,
			"seed": self.seed,
			"coverage": self.coverage,
			"preset_indices": list(self.indices),
			"presets": [p.as_dict() for p in self.presets],
			"trace": list(self.trace),
		}


def check_n(n: int, available: int) -> None:
	if int(n) != n or n < 1:
		raise ParameterError(f"preset count N must be an integer >= 1, got {n}")
	if n > available:
		raise ParameterError(f"preset count N={n} exceeds the {available} available candidates")


def ensure_matrix(
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	matrix: CoverageMatrix | None,
	workers: int | None = None,
) -> CoverageMatrix:
	"""
	Reuse a matrix built for this grid, or precompute one.
	"""
	if matrix is None:
		return precompute_matrix(grid.lifted, dataset, bank, params, workers=workers)
	if len(matrix) != len(grid):
		raise ParameterError(f"matrix has {len(matrix)} candidates, grid has {len(grid)}")
	if matrix.table.n_users != len(dataset):
		raise ParameterError(
			f"matrix was built for {matrix.table.n_users} users, dataset has {len(dataset)}"
		)
	if matrix.radius != params.radius:
		raise ParameterError(f"matrix radius {matrix.radius} differs from {params.radius}")
	return matrix


def grid_selection(
	method: str,
	grid: CandidateGrid,
	indices: Sequence[int],
	coverage: float,
	trace: Sequence[float] = (),
	seed: Optional[int] = None,
) -> SelectionResult:
	return SelectionResult(
		method=method,
		n=len(indices),
		presets=PresetSet(tuple(grid.lifted[k] for k in indices)),
		indices=tuple(int(k) for k in indices),
		coverage=float(coverage),
		trace=tuple(float(t) for t in trace),
		seed=seed,
	)
