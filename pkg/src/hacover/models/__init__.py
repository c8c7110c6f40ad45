# ---------------------------------------------------------------------------
# File: models/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Domain types: configurations, transfer functions, deviation model,
#	users and datasets.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .configuration import FREQUENCIES, Configuration, configs_to_array, frequency_index
from .deviation import DEFAULT_DEVIATION_MODEL, DeviationModel, fit_deviation_model, variation_weights
from .population import FIT_TYPE_ORDER, Dataset, FitType, LossType, Sex, User
from .transfer import (
	TransferFunction,
	TransferFunctionBank,
	apply_transfer,
	build_transfer_bank,
	deviation_features,
)

__all__ = [
	"DEFAULT_DEVIATION_MODEL",
	"FIT_TYPE_ORDER",
	"FREQUENCIES",
	"Configuration",
	"Dataset",
	"DeviationModel",
	"FitType",
	"LossType",
	"Sex",
	"TransferFunction",
	"TransferFunctionBank",
	"User",
	"apply_transfer",
	"build_transfer_bank",
	"configs_to_array",
	"deviation_features",
	"fit_deviation_model",
	"frequency_index",
	"variation_weights",
]
