# ---------------------------------------------------------------------------
# File: population.py
# ---------------------------------------------------------------------------
# Description:
#	Population coverage of a preset set.
#
#	For each user and fit type, the preferred-configuration variations are
#	prescription + T_j for every transfer function j. A fit type is covered
#	when the transfer weights of its covered variations reach gamma. A user
#	is covered when every one of their fit types is covered, and population
#	coverage is the summed weight of covered users.
#
# Notes:
#	- VariationTable lays variations out group-major: one group per
#	  (user, fit type) row of Dataset.prescriptions(), J variations per group.
#	- summarize() is the single reduction from a (groups, J) covered mask to
#	  masses / flags / coverage. The precomputed matrix uses it too, so both
#	  paths agree exactly.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/05/2026	Initial coding / release
# 02/06/2026	Share summarize() with the coverage matrix
# 02/11/2026	Optional worker threads over prescription groups
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, replace
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from hacover.core.config import ordered_map
from hacover.core.errors import MissingFitType
from hacover.core.logging import get_component_logger
from hacover.coverage.ball import covered_mask
from hacover.coverage.params import MASS_TOL, CoverageParams, PresetSet, require_presets
from hacover.models.configuration import Configuration
from hacover.models.population import Dataset, FitType, User
from hacover.models.transfer import TransferFunctionBank


log = get_component_logger("coverage")

_GROUP_CHUNK = 512


# ---------------------------------------------------------------------------
# Variation layout
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True, eq=False)
class VariationTable:
	"""
	VariationTable

	base:			(G, 6) prescriptions, one row per (user, fit type) group
	offsets:		(J, 6) transfer deviations
	group_user:		(G,) user index of each group
	group_fit:		fit type of each group
	user_starts:	(U,) first group index of each user
	user_ids:		user ids in dataset order
	user_weights:	(U,) normalized population weights
	tf_weights:		(J,) transfer likelihood weights
	"""
	base: np.ndarray
	offsets: np.ndarray
	group_user: np.ndarray
	group_fit: tuple[FitType, ...]
	user_starts: np.ndarray
	user_ids: tuple[str, ...]
	user_weights: np.ndarray
	tf_weights: np.ndarray

	@classmethod
	def build(cls, dataset: Dataset, bank: TransferFunctionBank) -> "VariationTable":
		rows = dataset.prescriptions()
		base = np.asarray([cfg.gains for _, _, cfg in rows], dtype=float).reshape(len(rows), -1)
		group_user = np.asarray([ui for ui, _, _ in rows], dtype=np.int64)
		starts = np.searchsorted(group_user, np.arange(len(dataset)), side="left")
		return cls(
			base=base,
			offsets=bank.values_array(),
			group_user=group_user,
			group_fit=tuple(ft for _, ft, _ in rows),
			user_starts=starts.astype(np.int64),
			user_ids=tuple(u.id for u in dataset.users),
			user_weights=np.asarray([u.weight for u in dataset.users], dtype=float),
			tf_weights=bank.weights_array(),
		)

	@property
	def n_groups(self) -> int:
		return int(self.base.shape[0])

	@property
	def n_tf(self) -> int:
		return int(self.offsets.shape[0])

	@property
	def n_users(self) -> int:
		return int(self.user_weights.shape[0])

	@property
	def n_variations(self) -> int:
		return self.n_groups * self.n_tf

	def variations(self, groups: slice | None = None) -> np.ndarray:
		"""
		(g * J, 6) variation configurations for a slice of groups.
		"""
		base = self.base if groups is None else self.base[groups]
		return (base[:, None, :] + self.offsets[None, :, :]).reshape(-1, self.base.shape[1])

	def variation_masses(self) -> np.ndarray:
		"""
		(V,) population mass w_u * cl_j of each variation.
		"""
		w = self.user_weights[self.group_user]
		return (w[:, None] * self.tf_weights[None, :]).reshape(-1)

	def reweighted(self, bank: TransferFunctionBank) -> "VariationTable":
		return replace(self, tf_weights=bank.weights_array())


# ---------------------------------------------------------------------------
# Shared reduction
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True, eq=False)
class CoverageSummary:
	fit_masses: np.ndarray		# (G,)
	user_covered: np.ndarray	# (U,) bool
	coverage: float


def summarize(covered: np.ndarray, table: VariationTable, gamma: float) -> CoverageSummary:
	"""
	Reduce a (G, J) covered mask to per-group masses, user flags and coverage.
	"""
	fit_masses = np.where(covered, table.tf_weights[None, :], 0.0).sum(axis=1)
	group_ok = fit_masses + MASS_TOL >= gamma
	user_covered = np.logical_and.reduceat(group_ok, table.user_starts)
	coverage = float(np.where(user_covered, table.user_weights, 0.0).sum())
	return CoverageSummary(fit_masses=fit_masses, user_covered=user_covered, coverage=coverage)


# ---------------------------------------------------------------------------
# Report
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class UserCoverage:
	covered: bool
	masses: Mapping[FitType, float]


@dataclass(frozen=True, slots=True)
class CoverageReport:
	"""
	population_coverage:	summed weight of covered users
	per_user:				user id -> covered flag and mass per fit type
	params:					parameters used
	"""
	population_coverage: float
	per_user: Mapping[str, UserCoverage]
	params: CoverageParams

	def covered_ids(self) -> list[str]:
		return [uid for uid, uc in self.per_user.items() if uc.covered]

	def as_dict(self) -> dict[str, object]:
		return {
			"population_coverage": self.population_coverage,
			"params": self.params.as_dict(),
			"per_user": [
				{
					"user_id": uid,
					"covered": uc.covered,
					"masses": {str(ft): m for ft, m in uc.masses.items()},
				}
				for uid, uc in self.per_user.items()
			],
		}


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def user_covered_mass(
	user: User,
	fit_type: FitType | str,
	presets: PresetSet | Sequence[Configuration],
	bank: TransferFunctionBank,
	params: CoverageParams,
) -> float:
	"""
	Transfer weight of the user's variations (for one fit type) that are
	covered by the presets.
	"""
	try:
		config = user.configs[FitType(fit_type)]
	except (KeyError, ValueError) as ex:
		raise MissingFitType(user.id, fit_type) from ex

	variations = config.as_array()[None, :] + bank.values_array()
	covered = covered_mask(variations, require_presets(presets), params.radius)
	return float(np.where(covered[None, :], bank.weights_array()[None, :], 0.0).sum(axis=1)[0])


def covered_variations(
	table: VariationTable,
	presets: np.ndarray,
	radius: float,
	workers: int | None = None,
) -> np.ndarray:
	"""
	(G, J) mask of variations inside some preset ball.
	"""
	chunks = [
		slice(start, min(start + _GROUP_CHUNK, table.n_groups))
		for start in range(0, table.n_groups, _GROUP_CHUNK)
	]

	def _chunk(groups: slice) -> np.ndarray:
		return covered_mask(table.variations(groups), presets, radius)

	parts = ordered_map(_chunk, chunks, workers)
	if not parts:
		return np.zeros((0, table.n_tf), dtype=bool)
	return np.concatenate(parts).reshape(table.n_groups, table.n_tf)


def population_coverage(
	dataset: Dataset,
	presets: PresetSet | Sequence[Configuration],
	bank: TransferFunctionBank,
	params: CoverageParams,
	*,
	workers: int | None = None,
) -> CoverageReport:
	table = VariationTable.build(dataset, bank)
	covered = covered_variations(table, require_presets(presets), params.radius, workers)
	summary = summarize(covered, table, params.gamma)

	per_user: dict[str, UserCoverage] = {}
	for ui, user in enumerate(dataset.users):
		start = int(table.user_starts[ui])
		masses = {
			ft: float(summary.fit_masses[start + k])
			for k, ft in enumerate(user.fit_types)
		}
		per_user[user.id] = UserCoverage(
			covered=bool(summary.user_covered[ui]),
			masses=MappingProxyType(masses),
		)

	log.debug(
		"population coverage %.6f (%d presets, %d users)",
		summary.coverage,
		len(presets),
		len(dataset),
	)
	return CoverageReport(
		population_coverage=summary.coverage,
		per_user=MappingProxyType(per_user),
		params=params,
	)
