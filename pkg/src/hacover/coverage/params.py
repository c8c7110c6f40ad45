# ---------------------------------------------------------------------------
# File: params.py
# ---------------------------------------------------------------------------
# Description:
#	Coverage parameters and preset sets.
#
# Notes:
#	- COVER_TOL absorbs float noise on the "distance <= radius" boundary;
#	  every coverage path uses it.
#	- MASS_TOL does the same for the "mass >= gamma" threshold.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/05/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence
import math

import numpy as np

from hacover.core.errors import ParameterError
from hacover.models.configuration import Configuration, configs_to_array


DEFAULT_RADIUS_DB = 5.0
DEFAULT_GAMMA = 0.8

COVER_TOL = 1e-9
MASS_TOL = 1e-12
DUPLICATE_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class CoverageParams:
	"""
	radius:	Chebyshev ball radius around each preset (dB)
	gamma:	likelihood mass a fit type needs to count as covered
	"""
	radius: float = DEFAULT_RADIUS_DB
	gamma: float = DEFAULT_GAMMA

	def __post_init__(self) -> None:
		if not (math.isfinite(self.radius) and self.radius > 0.0):
			raise ParameterError(f"radius must be > 0, got {self.radius}")
		if not (0.0 < self.gamma <= 1.0):
			raise ParameterError(f"gamma must be in (0, 1], got {self.gamma}")
		object.__setattr__(self, "radius", float(self.radius))
		object.__setattr__(self, "gamma", float(self.gamma))

	def as_dict(self) -> dict[str, float]:
		return {"radius": self.radius, "gamma": self.gamma}


@dataclass(frozen=True, slots=True)
class PresetSet:
	"""
	Ordered collection of preset configurations without near-duplicates.
	"""
	presets: tuple[Configuration, ...]

	def __post_init__(self) -> None:
		presets = tuple(self.presets)
		arr = configs_to_array(presets)
		for i in range(1, len(presets)):
			if np.any(np.max(np.abs(arr[:i] - arr[i]), axis=1) <= DUPLICATE_TOL):
				raise ParameterError(f"preset {i} duplicates an earlier preset: {presets[i].gains}")
		object.__setattr__(self, "presets", presets)

	@classmethod
	def from_configs(cls, configs: Iterable[Configuration]) -> "PresetSet":
		"""
		Build a preset set, dropping entries that duplicate an earlier one.
		"""
		kept: list[Configuration] = []
		for cfg in configs:
			arr = cfg.as_array()
			if any(np.max(np.abs(k.as_array() - arr)) <= DUPLICATE_TOL for k in kept):
				continue
			kept.append(cfg)
		return cls(tuple(kept))

	def __len__(self) -> int:
		return len(self.presets)

	def __iter__(self) -> Iterator[Configuration]:
		return iter(self.presets)

	def as_array(self) -> np.ndarray:
		return configs_to_array(self.presets)


def require_presets(presets: PresetSet | Sequence[Configuration]) -> np.ndarray:
	"""
	(P, 6) array of a nonempty preset collection.
	"""
	arr = presets.as_array() if isinstance(presets, PresetSet) else configs_to_array(list(presets))
	if arr.shape[0] == 0:
		raise ParameterError("preset set is empty")
	return arr
