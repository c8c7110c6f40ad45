# ---------------------------------------------------------------------------
# File: reduce/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	PCA reduction and candidate-grid construction.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .grid import CandidateGrid, bounding_box, build_grid, build_grid_by_step_size, steps_for_step_size
from .pca import PcaModel, fit_pca, inverse_transform, inverse_transform_many, transform
from .sources import BBoxSource, source_configs, source_points

__all__ = [
	"BBoxSource",
	"CandidateGrid",
	"PcaModel",
	"bounding_box",
	"build_grid",
	"build_grid_by_step_size",
	"fit_pca",
	"inverse_transform",
	"inverse_transform_many",
	"source_configs",
	"source_points",
	"steps_for_step_size",
	"transform",
]
