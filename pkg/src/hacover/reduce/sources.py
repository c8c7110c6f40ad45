# ---------------------------------------------------------------------------
# File: sources.py
# ---------------------------------------------------------------------------
# Description:
#	Which configurations define the bounding box of a candidate or slider
#	grid: the prescriptions alone, or every preferred-configuration variation.
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/09/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from enum import Enum

import numpy as np

from hacover.coverage.population import VariationTable
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.reduce.pca import PcaModel, transform


class BBoxSource(str, Enum):
	PRESCRIPTIONS = "prescriptions"
	VARIATIONS = "variations"

	def __str__(self) -> str:
		return self.value


def source_configs(dataset: Dataset, bank: TransferFunctionBank, source: BBoxSource | str) -> np.ndarray:
	"""
	(n, 6) configurations for the requested source.
	"""
	table = VariationTable.build(dataset, bank)
	if BBoxSource(source) is BBoxSource.PRESCRIPTIONS:
		return table.base
	return table.variations()


def source_points(
	model: PcaModel,
	dataset: Dataset,
	bank: TransferFunctionBank,
	source: BBoxSource | str = BBoxSource.VARIATIONS,
) -> np.ndarray:
	"""
	(n, 2) reduced coordinates of the requested source configurations.
	"""
	return transform(model, source_configs(dataset, bank, source))
