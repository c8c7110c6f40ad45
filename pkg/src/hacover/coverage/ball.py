# ---------------------------------------------------------------------------
# File: ball.py
# ---------------------------------------------------------------------------
# Description:
#	Chebyshev-ball coverage of configurations by presets.
#
# Notes:
#	- distance(a, b) = max over bands of |a[f] - b[f]|
#	- covered iff distance to some preset <= radius (inclusive)
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/05/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from typing import Sequence

import numpy as np

from hacover.coverage.params import COVER_TOL, PresetSet, require_presets
from hacover.models.configuration import Configuration


def chebyshev_to_point(points: np.ndarray, center: np.ndarray) -> np.ndarray:
	"""
	Distance from every row of points (n, 6) to center (6,).
	"""
	return np.max(np.abs(points - center), axis=1)


def covered_mask(points: np.ndarray, presets: np.ndarray, radius: float) -> np.ndarray:
	"""
	Boolean (n,) mask: which points lie within radius of at least one preset.
	"""
	mask = np.zeros(points.shape[0], dtype=bool)
	limit = radius + COVER_TOL
	for p in presets:
		mask |= chebyshev_to_point(points, p) <= limit
	return mask


def is_covered(
	config: Configuration,
	presets: PresetSet | Sequence[Configuration],
	radius: float,
) -> bool:
	arr = require_presets(presets)
	dist = chebyshev_to_point(arr, config.as_array())
	return bool(np.min(dist) <= radius + COVER_TOL)
