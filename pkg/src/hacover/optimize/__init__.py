# ---------------------------------------------------------------------------
# File: optimize/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Preset-selection algorithms.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .brute import DEFAULT_COMBINATION_LIMIT, brute_force_select
from .genetic import GaParams, ga_select
from .greedy import STRATEGIES, greedy_select
from .kmeans import kmeans_presets, kmeans_select, population_variations, snap_to_grid, weighted_kmeans
from .result import METHODS, SelectionResult, check_n, ensure_matrix
from .select import select_presets

__all__ = [
	"DEFAULT_COMBINATION_LIMIT",
	"GaParams",
	"METHODS",
	"STRATEGIES",
	"SelectionResult",
	"brute_force_select",
	"check_n",
	"ensure_matrix",
	"ga_select",
	"greedy_select",
	"kmeans_presets",
	"kmeans_select",
	"population_variations",
	"select_presets",
	"snap_to_grid",
	"weighted_kmeans",
]
