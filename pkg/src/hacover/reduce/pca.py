# ---------------------------------------------------------------------------
# File: pca.py
# ---------------------------------------------------------------------------
# Description:
#	Linear reduction of configurations to k principal components.
#
# Notes:
#	- Covariance PCA (centered, no per-band standardization; all bands are dB).
#	- SVD of the centered data; components are the leading right singular
#	  vectors, sign-fixed so the largest-magnitude coefficient is positive.
#	- Fit on prescriptions only; variations are transformed with the model.
#	- Input with 1 <= rank < k is accepted (trailing ratios are 0.0) with a
#	  warning; rank 0 is a FitError.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/07/2026	Initial coding / release
# 02/08/2026	Deterministic sign convention
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from hacover.core.errors import FitError, ParameterError
from hacover.core.logging import get_component_logger
from hacover.models.configuration import N_BANDS, Configuration, configs_to_array


log = get_component_logger("reduce.pca")


@dataclass(frozen=True, slots=True, eq=False)
class PcaModel:
	"""
	PcaModel

	mean:						(6,) mean configuration
	components:					(k, 6) orthonormal rows
	explained_variance_ratio:	(k,) non-increasing
	"""
	mean: np.ndarray
	components: np.ndarray
	explained_variance_ratio: np.ndarray

	def __post_init__(self) -> None:
		mean = np.array(self.mean, dtype=float).reshape(N_BANDS)
		components = np.array(self.components, dtype=float).reshape(-1, N_BANDS)
		ratio = np.array(self.explained_variance_ratio, dtype=float).reshape(-1)
		if components.shape[0] != ratio.shape[0]:
			raise ParameterError(
				f"{components.shape[0]} components but {ratio.shape[0]} explained-variance ratios"
			)
		for arr in (mean, components, ratio):
			arr.setflags(write=False)
		object.__setattr__(self, "mean", mean)
		object.__setattr__(self, "components", components)
		object.__setattr__(self, "explained_variance_ratio", ratio)

	@property
	def n_components(self) -> int:
		return int(self.components.shape[0])

	def as_dict(self) -> dict[str, list]:
		return {
			"mean": self.mean.tolist(),
			"components": self.components.tolist(),
			"explained_variance_ratio": self.explained_variance_ratio.tolist(),
		}

	@classmethod
	def from_dict(cls, data: dict) -> "PcaModel":
		try:
			return cls(
				mean=np.asarray(data["mean"], dtype=float),
				components=np.asarray(data["components"], dtype=float),
				explained_variance_ratio=np.asarray(data["explained_variance_ratio"], dtype=float),
			)
		except (KeyError, TypeError, ValueError) as ex:
			raise ParameterError(f"malformed PCA model: {ex}") from ex


def fit_pca(configs: Sequence[Configuration] | np.ndarray, k: int = 2) -> PcaModel:
	if not 1 <= k <= N_BANDS:
		raise ParameterError(f"k must be in 1..{N_BANDS}, got {k}")

	X = configs if isinstance(configs, np.ndarray) else configs_to_array(list(configs))
	X = np.asarray(X, dtype=float)
	n = X.shape[0]
	if n < k + 1:
		raise FitError(f"PCA with k={k} needs at least {k + 1} configurations, got {n}")

	mean = X.mean(axis=0)
	_, s, vt = np.linalg.svd(X - mean, full_matrices=False)

	tol = s[0] * max(X.shape) * np.finfo(float).eps if s.size else 0.0
	rank = int(np.sum(s > tol))
	if rank == 0:
		raise FitError(f"rank-deficient input: 0 of {k} requested directions carry variance")
	if rank < k:
		log.warning("rank-deficient input: only %d of %d directions carry variance", rank, k)

	var = s ** 2
	ratio = var[:k] / var.sum()
	ratio[rank:] = 0.0

	components = vt[:k].copy()
	for row in components:
		if row[np.argmax(np.abs(row))] < 0:
			row *= -1.0

	log.debug("PCA fit on %d configurations: ratios %s", n, np.round(ratio, 6).tolist())
	return PcaModel(mean=mean, components=components, explained_variance_ratio=ratio)


def transform(model: PcaModel, config: Configuration | np.ndarray) -> np.ndarray:
	"""
	Project a configuration (or an (n, 6) array) into component space.
	"""
	X = config.as_array() if isinstance(config, Configuration) else np.asarray(config, dtype=float)
	return (X - model.mean) @ model.components.T


def inverse_transform_many(model: PcaModel, points: np.ndarray) -> np.ndarray:
	"""
	Lift (n, k) reduced points back to (n, 6) configurations.
	"""
	P = np.asarray(points, dtype=float).reshape(-1, model.n_components)
	return P @ model.components + model.mean


def inverse_transform(model: PcaModel, point: Sequence[float] | np.ndarray) -> Configuration:
	return Configuration.from_array(inverse_transform_many(model, np.asarray(point))[0])
