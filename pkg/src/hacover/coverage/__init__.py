# ---------------------------------------------------------------------------
# File: coverage/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Ball coverage, per-user covered mass, population coverage and the
#	precomputed candidate coverage matrix.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .ball import covered_mask, is_covered
from .matrix import CoverageMatrix, incremental_pc, precompute_matrix
from .params import CoverageParams, PresetSet
from .population import (
	CoverageReport,
	UserCoverage,
	VariationTable,
	population_coverage,
	user_covered_mass,
)

__all__ = [
	"CoverageMatrix",
	"CoverageParams",
	"CoverageReport",
	"PresetSet",
	"UserCoverage",
	"VariationTable",
	"covered_mask",
	"incremental_pc",
	"is_covered",
	"population_coverage",
	"precompute_matrix",
	"user_covered_mass",
]
