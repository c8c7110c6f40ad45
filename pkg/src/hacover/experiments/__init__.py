# ---------------------------------------------------------------------------
# File: experiments/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Experiment suite: tradeoff sweeps, subgroups, robustness, plot data and
#	the TOML-driven runner.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .config import ExperimentConfig, experiment_from_mapping, load_experiment_config
from .manifest import MANIFEST_NAME, build_manifest, write_manifest
from .plotdata import PLOT_KINDS, ExampleRow, coverage_example_rows, emit_plot_data, pca_scatter_rows
from .robustness import (
	BootstrapResult,
	BootstrapSummary,
	VarianceRow,
	bootstrap_coverage,
	variance_scaling,
)
from .runner import ExperimentOutcome, run_experiment
from .subgroup import Predicate, Subgroup, SubgroupRow, sex_age_subgroups, subgroup_analysis
from .sweep import SweepRow, revalidate, sweep

__all__ = [
	"BootstrapResult",
	"BootstrapSummary",
	"ExampleRow",
	"ExperimentConfig",
	"ExperimentOutcome",
	"MANIFEST_NAME",
	"PLOT_KINDS",
	"Predicate",
	"Subgroup",
	"SubgroupRow",
	"SweepRow",
	"VarianceRow",
	"bootstrap_coverage",
	"build_manifest",
	"coverage_example_rows",
	"emit_plot_data",
	"experiment_from_mapping",
	"load_experiment_config",
	"sex_age_subgroups",
	"pca_scatter_rows",
	"revalidate",
	"run_experiment",
	"subgroup_analysis",
	"sweep",
	"variance_scaling",
	"write_manifest",
]
