# ---------------------------------------------------------------------------
# File: matrix.py
# ---------------------------------------------------------------------------
# Description:
#	Precomputed candidate -> covered-variation bitsets.
#
# Notes:
#	- Row k is a packed bitset (np.packbits, big bit order) over the
#	  variation index of VariationTable: bit v is set iff candidate k lies
#	  within radius of variation v.
#	- Bitsets depend only on geometry (candidates, prescriptions, transfer
#	  values, radius). Transfer weights can be swapped with reweighted().
#	- Evaluating a selection = OR of its rows + the shared summarize()
#	  reduction, so the result equals population_coverage() exactly.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/06/2026	Initial coding / release
# 02/14/2026	Add reweighted() for bootstrap / variance scaling
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from hacover.core.config import ordered_map
from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.ball import chebyshev_to_point
from hacover.coverage.params import COVER_TOL, CoverageParams
from hacover.coverage.population import VariationTable, summarize
from hacover.models.configuration import Configuration, configs_to_array
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank


log = get_component_logger("coverage.matrix")


@dataclass(frozen=True, slots=True, eq=False)
class CoverageMatrix:
	"""
	CoverageMatrix

	candidates:	(K, 6) candidate configurations
	bits:		(K, ceil(V / 8)) packed covered-variation bitsets
	table:		variation index table (user / fit type / transfer layout + weights)
	radius:		ball radius the bits were computed with
	"""
	candidates: np.ndarray
	bits: np.ndarray
	table: VariationTable
	radius: float

	def __len__(self) -> int:
		return int(self.bits.shape[0])

	@property
	def n_variations(self) -> int:
		return self.table.n_variations

	# ----------------------------
	# Bit access
	# ----------------------------
	def row_mask(self, k: int) -> np.ndarray:
		self._check_index(k)
		return np.unpackbits(self.bits[k], count=self.n_variations).astype(bool)

	def covered_count(self, k: int) -> int:
		return int(self.row_mask(k).sum())

	def union(self, selected: Iterable[int]) -> np.ndarray:
		"""
		Packed OR of the selected rows (all zeros for an empty selection).
		"""
		idx = self._check_indices(selected)
		if idx.size == 0:
			return np.zeros(self.bits.shape[1], dtype=np.uint8)
		return np.bitwise_or.reduce(self.bits[idx], axis=0)

	def unpack(self, packed: np.ndarray) -> np.ndarray:
		"""
		(G, J) boolean covered mask of a packed union.
		"""
		flat = np.unpackbits(packed, count=self.n_variations).astype(bool)
		return flat.reshape(self.table.n_groups, self.table.n_tf)

	# ----------------------------
	# Evaluation
	# ----------------------------
	def coverage_of_packed(self, packed: np.ndarray, gamma: float) -> float:
		return summarize(self.unpack(packed), self.table, gamma).coverage

	def coverage_of(self, selected: Iterable[int], gamma: float) -> float:
		return self.coverage_of_packed(self.union(selected), gamma)

	def reweighted(self, bank: TransferFunctionBank) -> "CoverageMatrix":
		if len(bank) != self.table.n_tf:
			raise ParameterError(
				f"bank has {len(bank)} functions, matrix was built with {self.table.n_tf}"
			)
		return replace(self, table=self.table.reweighted(bank))

	def lifted(self, selected: Sequence[int]) -> list[Configuration]:
		idx = self._check_indices(selected)
		return [Configuration.from_array(self.candidates[k]) for k in idx]

	# ----------------------------
	# Internals
	# ----------------------------
	def _check_index(self, k: int) -> None:
		if not 0 <= int(k) < len(self):
			raise ParameterError(f"candidate index {k} out of range [0, {len(self)})")

	def _check_indices(self, selected: Iterable[int]) -> np.ndarray:
		idx = np.asarray(list(selected), dtype=np.int64)
		if idx.size and (idx.min() < 0 or idx.max() >= len(self)):
			raise ParameterError(f"candidate indices out of range [0, {len(self)}): {idx.tolist()}")
		return idx


def precompute_matrix(
	candidates: Sequence[Configuration],
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	*,
	workers: int | None = None,
) -> CoverageMatrix:
	"""
	Compute, for every candidate, which variations fall inside its ball.
	"""
	if not candidates:
		raise ParameterError("candidate list is empty")

	table = VariationTable.build(dataset, bank)
	cand = configs_to_array(list(candidates))
	variations = table.variations()
	limit = params.radius + COVER_TOL

	def _row(k: int) -> np.ndarray:
		return np.packbits(chebyshev_to_point(variations, cand[k]) <= limit)

	telemetry = get_telemetry()
	with telemetry.timer("coverage.precompute.duration_ms", {"candidates": len(cand)}) as t:
		rows = ordered_map(_row, range(cand.shape[0]), workers)

	bits = np.vstack(rows) if rows else np.zeros((0, 0), dtype=np.uint8)
	log.info(
		"precomputed coverage matrix: %d candidates x %d variations in %.2fs",
		cand.shape[0],
		table.n_variations,
		t.elapsed_s,
	)
	return CoverageMatrix(candidates=cand, bits=bits, table=table, radius=params.radius)


def incremental_pc(
	matrix: CoverageMatrix,
	selected: Iterable[int],
	dataset: Dataset,
	params: CoverageParams,
) -> float:
	"""
	Population coverage of the selected candidates, from the bitsets.
	"""
	if len(dataset) != matrix.table.n_users:
		raise ParameterError(
			f"dataset has {len(dataset)} users, matrix was built for {matrix.table.n_users}"
		)
	if params.radius != matrix.radius:
		raise ParameterError(f"radius {params.radius} differs from matrix radius {matrix.radius}")
	return matrix.coverage_of(selected, params.gamma)
