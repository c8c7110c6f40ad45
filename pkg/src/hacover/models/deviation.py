# ---------------------------------------------------------------------------
# File: deviation.py
# ---------------------------------------------------------------------------
# Description:
#	Gaussian model of how far users' preferred settings drift from their
#	prescription, in (low_dev, high_dev) feature space, and the transfer
#	weights it induces.
#
# Notes:
#	- Diagonal covariance; std uses the sample (n-1) convention.
#	- scale multiplies both std components (variance-scaling experiments).
#	- Weights are shared by every user and normalized over the bank.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/13/2026	Add with_scale + synthetic default flag
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Sequence
import math

import numpy as np

from hacover.core.errors import FitError, ParameterError
from hacover.models.transfer import TransferFunctionBank, deviation_features


@dataclass(frozen=True, slots=True)
class DeviationModel:
	"""
	DeviationModel

	mean:		(low_dev, high_dev) in dB
	std:		(low_std, high_std) in dB, strictly positive
	scale:		multiplier applied to std
	synthetic:	True when the parameters are the bundled default rather than
				fitted to empirical points
	"""
	mean: tuple[float, float]
	std: tuple[float, float]
	scale: float = 1.0
	synthetic: bool = False

	def __post_init__(self) -> None:
		mean = tuple(float(m) for m in self.mean)
		std = tuple(float(s) for s in self.std)
		if len(mean) != 2 or len(std) != 2:
			raise ParameterError("deviation model mean and std must be 2-vectors")
		if not all(math.isfinite(v) for v in (*mean, *std)):
			raise ParameterError("deviation model parameters must be finite")
		if min(std) <= 0.0:
			raise ParameterError(f"deviation std must be strictly positive, got {std}")
		if not (self.scale > 0.0 and math.isfinite(self.scale)):
			raise ParameterError(f"deviation scale must be > 0, got {self.scale}")
		object.__setattr__(self, "mean", mean)
		object.__setattr__(self, "std", std)
		object.__setattr__(self, "scale", float(self.scale))

	def with_scale(self, scale: float) -> "DeviationModel":
		return replace(self, scale=scale)

	def mahalanobis_sq(self, low_dev: float, high_dev: float) -> float:
		zl = (low_dev - self.mean[0]) / (self.scale * self.std[0])
		zh = (high_dev - self.mean[1]) / (self.scale * self.std[1])
		return zl * zl + zh * zh

	def as_dict(self) -> dict[str, object]:
		return {
			"mean": list(self.mean),
			"std": list(self.std),
			"scale": self.scale,
			"synthetic": self.synthetic,
		}


# Used when no empirical deviations file is supplied.
DEFAULT_DEVIATION_MODEL = DeviationModel(mean=(0.0, 0.0), std=(5.0, 5.0), synthetic=True)


def fit_deviation_model(points: Iterable[Sequence[float]]) -> DeviationModel:
	"""
	Fit mean and per-coordinate sample std to (low_dev, high_dev) points.
	"""
	arr = np.asarray(list(points), dtype=float)
	if arr.ndim != 2 or arr.shape[1] != 2:
		raise FitError(f"deviation points must be (low_dev, high_dev) pairs, got shape {arr.shape}")
	if arr.shape[0] < 2:
		raise FitError(f"need at least 2 deviation points, got {arr.shape[0]}")
	if not np.all(np.isfinite(arr)):
		raise FitError("deviation points must be finite")

	std = arr.std(axis=0, ddof=1)
	if np.any(std <= 0.0):
		raise FitError(f"deviation points have zero variance (std={tuple(std.tolist())})")

	mean = arr.mean(axis=0)
	return DeviationModel(mean=(float(mean[0]), float(mean[1])), std=(float(std[0]), float(std[1])))


def variation_weights(bank: TransferFunctionBank, model: DeviationModel) -> TransferFunctionBank:
	"""
	Weight every transfer function by the Gaussian density at its deviation
	features, normalized over the bank.
	"""
	d2 = np.asarray(
		[model.mahalanobis_sq(*deviation_features(tf)) for tf in bank.functions],
		dtype=float,
	)
	# shift by the minimum so the largest term is exp(0) = 1
	raw = np.exp(-0.5 * (d2 - d2.min()))
	weights = raw / raw.sum()
	return bank.with_weights(weights)
