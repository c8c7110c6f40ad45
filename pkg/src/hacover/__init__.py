# ---------------------------------------------------------------------------
# File: __init__.py
# ---------------------------------------------------------------------------
# Description:
#	Public package surface for hacover.
#
# Notes:
#	- Lazy exports: "import hacover" stays cheap; numpy-heavy modules load
#	  on first attribute access.
# ---------------------------------------------------------------------------

from __future__ import annotations

from typing import TYPE_CHECKING, Any

__all__ = [
	"Configuration",
	"CoverageParams",
	"Dataset",
	"PresetSet",
	"build_transfer_bank",
	"fit_deviation_model",
	"variation_weights",
	"population_coverage",
	"precompute_matrix",
	"incremental_pc",
	"fit_pca",
	"build_grid",
	"greedy_select",
	"ga_select",
	"kmeans_presets",
	"brute_force_select",
	"GaParams",
	"SliderSpec",
	"slider_presets",
	"slider_coverage",
	"load_dataset",
	"synth_dataset",
	"SynthSpec",
	"cli_dispatch",
]

_EXPORTS: dict[str, tuple[str, str]] = {
	"Configuration": ("hacover.models.configuration", "Configuration"),
	"Dataset": ("hacover.models.population", "Dataset"),
	"build_transfer_bank": ("hacover.models.transfer", "build_transfer_bank"),
	"fit_deviation_model": ("hacover.models.deviation", "fit_deviation_model"),
	"variation_weights": ("hacover.models.deviation", "variation_weights"),
	"CoverageParams": ("hacover.coverage.params", "CoverageParams"),
	"PresetSet": ("hacover.coverage.params", "PresetSet"),
	"population_coverage": ("hacover.coverage.population", "population_coverage"),
	"precompute_matrix": ("hacover.coverage.matrix", "precompute_matrix"),
	"incremental_pc": ("hacover.coverage.matrix", "incremental_pc"),
	"fit_pca": ("hacover.reduce.pca", "fit_pca"),
	"build_grid": ("hacover.reduce.grid", "build_grid"),
	"greedy_select": ("hacover.optimize.greedy", "greedy_select"),
	"ga_select": ("hacover.optimize.genetic", "ga_select"),
	"GaParams": ("hacover.optimize.genetic", "GaParams"),
	"kmeans_presets": ("hacover.optimize.kmeans", "kmeans_presets"),
	"brute_force_select": ("hacover.optimize.brute", "brute_force_select"),
	"SliderSpec": ("hacover.slider.sliders", "SliderSpec"),
	"slider_presets": ("hacover.slider.sliders", "slider_presets"),
	"slider_coverage": ("hacover.slider.sliders", "slider_coverage"),
	"load_dataset": ("hacover.io.dataset", "load_dataset"),
	"synth_dataset": ("hacover.io.synth", "synth_dataset"),
	"SynthSpec": ("hacover.io.synth", "SynthSpec"),
	"cli_dispatch": ("hacover.app.cli", "cli_dispatch"),
}

def __getattr__(name: str) -> Any:
	try:
		mod_name, attr_name = _EXPORTS[name]
	except KeyError as ex:
		raise AttributeError(f"module {__name__!r} has no attribute {name!r}") from ex

	import importlib
	mod = importlib.import_module(mod_name)
	return getattr(mod, attr_name)

def __dir__() -> list[str]:
	return sorted(set(list(globals().keys()) + list(__all__)))

if TYPE_CHECKING:
	from hacover.app.cli import cli_dispatch
	from hacover.coverage.matrix import incremental_pc, precompute_matrix
	from hacover.coverage.params import CoverageParams, PresetSet
	from hacover.coverage.population import population_coverage
	from hacover.io.dataset import load_dataset
	from hacover.io.synth import SynthSpec, synth_dataset
	from hacover.models.configuration import Configuration
	from hacover.models.deviation import fit_deviation_model, variation_weights
	from hacover.models.population import Dataset
	from hacover.models.transfer import build_transfer_bank
	from hacover.optimize.brute import brute_force_select
	from hacover.optimize.genetic import GaParams, ga_select
	from hacover.optimize.greedy import greedy_select
	from hacover.optimize.kmeans import kmeans_presets
	from hacover.reduce.grid import build_grid
	from hacover.reduce.pca import fit_pca
	from hacover.slider.sliders import SliderSpec, slider_coverage, slider_presets
