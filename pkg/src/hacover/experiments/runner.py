# ---------------------------------------------------------------------------
# File: runner.py
# ---------------------------------------------------------------------------
# Description:
#	run_experiment(): execute the stages an ExperimentConfig asks for and
#	write their CSVs plus manifest.json into the results directory.
#
#	Also hosts the small pipeline helpers the CLI shares (weighted bank,
#	PCA fit, candidate grid).
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/18/2026	Initial coding / release
# 02/19/2026	Plot stages reuse the largest greedy selection
# 10/18/2026	Manifest flags synthetic deviation points
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.matrix import CoverageMatrix, precompute_matrix
from hacover.experiments.config import ExperimentConfig
from hacover.experiments.manifest import write_manifest
from hacover.experiments.plotdata import coverage_example_rows, emit_plot_data, pca_scatter_rows
from hacover.experiments.robustness import bootstrap_coverage, variance_scaling
from hacover.experiments.subgroup import subgroup_analysis
from hacover.experiments.sweep import sweep
from hacover.io.dataset import load_dataset, save_dataset
from hacover.io.files import load_deviation_points, save_pca, save_report, save_selection
from hacover.io.synth import synth_dataset, synth_deviation_points
from hacover.models.deviation import DEFAULT_DEVIATION_MODEL, DeviationModel, fit_deviation_model, variation_weights
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank, build_transfer_bank
from hacover.optimize.greedy import greedy_select
from hacover.reduce.grid import CandidateGrid, build_grid, build_grid_by_step_size
from hacover.reduce.pca import PcaModel, fit_pca
from hacover.reduce.sources import BBoxSource, source_points
from hacover.slider.sliders import slider_coverage, slider_sweep


log = get_component_logger("experiments.runner")

SYNTH_DEVIATION_POINTS = 200


# ---------------------------------------------------------------------------
# Pipeline helpers
# ---------------------------------------------------------------------------

def deviation_model(
	deviations: Optional[Path],
	variance_scale: float = 1.0,
) -> tuple[DeviationModel, Optional[np.ndarray]]:
	"""
	Fitted model (and its points) when a deviations file is given, else the
	bundled default.
	"""
	if deviations is None:
		log.info("no deviations file; using the default deviation model")
		return DEFAULT_DEVIATION_MODEL.with_scale(variance_scale), None
	points = load_deviation_points(deviations)
	return fit_deviation_model(points).with_scale(variance_scale), points


def weighted_bank(
	tf_range: float,
	tf_step: float,
	model: DeviationModel,
) -> tuple[TransferFunctionBank, TransferFunctionBank]:
	"""
	(geometry bank with uniform weights, bank weighted by model).
	"""
	bank = build_transfer_bank(tf_range, tf_step)
	return bank, variation_weights(bank, model)


def fit_dataset_pca(dataset: Dataset, k: int = 2) -> PcaModel:
	return fit_pca([cfg for _, _, cfg in dataset.prescriptions()], k)


def candidate_grid(
	model: PcaModel,
	dataset: Dataset,
	bank: TransferFunctionBank,
	*,
	steps: tuple[int, int] = (20, 20),
	step_size: Optional[float] = None,
	bbox_source: BBoxSource | str = BBoxSource.VARIATIONS,
) -> CandidateGrid:
	points = source_points(model, dataset, bank, bbox_source)
	if step_size is not None:
		return build_grid_by_step_size(model, points, step_size)
	return build_grid(model, points, steps[0], steps[1])


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ExperimentOutcome:
	results_dir: Path
	outputs: tuple[Path, ...]
	manifest: Path


def run_experiment(config: ExperimentConfig, *, workers: int | None = None) -> ExperimentOutcome:
	out_dir = Path(config.results_dir)
	out_dir.mkdir(parents=True, exist_ok=True)
	outputs: list[Path] = []
	telemetry = get_telemetry()
	log.info("experiment %s -> %s", config.name, out_dir)

	if config.dataset is not None:
		dataset = load_dataset(config.dataset)
	else:
		dataset = synth_dataset(config.synth)
		outputs.append(save_dataset(dataset, out_dir / "dataset.csv"))

	model, points = deviation_model(config.deviations, config.variance_scale)
	geometry, bank = weighted_bank(config.tf_range, config.tf_step, model)
	params = config.params

	pca = fit_dataset_pca(dataset)
	outputs.append(save_pca(pca, out_dir / "pca.json"))
	grid = candidate_grid(
		pca, dataset, bank,
		steps=config.grid_steps, step_size=config.step_size, bbox_source=config.bbox_source,
	)
	log.info("candidate grid %dx%d (%d candidates)", grid.steps[0], grid.steps[1], len(grid))

	need_matrix = (
		any(m != "kmeans" for m in config.methods)
		or config.variance_scales is not None
		or config.bootstrap_replicates is not None
		or config.pca_scatter
		or config.coverage_example
	)
	matrix = precompute_matrix(grid.lifted, dataset, bank, params, workers=workers) if need_matrix else None

	with telemetry.timer("experiments.run.duration_ms", {"name": config.name}):
		if config.methods:
			rows = sweep(
				dataset, bank, params, grid, config.ns, config.methods,
				seed=config.seed, ga=config.ga, matrix=matrix,
				greedy_strategy=config.greedy_strategy, workers=workers,
			)
			outputs.append(emit_plot_data(rows, "sweep", out_dir / "sweep.csv"))
			outputs.append(emit_plot_data(rows, "coverage_vs_n", out_dir / "coverage_vs_n.csv"))

		if config.slider is not None:
			report = slider_coverage(dataset, bank, params, pca, config.slider, workers=workers)
			outputs.append(save_report(report, out_dir / "slider_report.json"))
			if config.slider_sweep:
				slider_rows = []
				for vary in ("x", "y"):
					slider_rows += slider_sweep(
						dataset, bank, params, pca,
						vary=vary, fixed=config.slider_fixed, steps=config.slider_sweep_steps,
						bbox_source=config.slider.bbox_source, workers=workers,
					)
				outputs.append(emit_plot_data(slider_rows, "slider", out_dir / "slider.csv"))

		if config.variance_scales is not None:
			base_model = model.with_scale(1.0)
			v_rows = variance_scaling(
				grid, dataset, geometry, params, config.ns,
				scales=config.variance_scales, model=base_model, matrix=matrix, workers=workers,
			)
			outputs.append(emit_plot_data(v_rows, "variance_scaling", out_dir / "variance_scaling.csv"))

		if config.bootstrap_replicates is not None:
			if points is None:
				points = synth_deviation_points(SYNTH_DEVIATION_POINTS, DEFAULT_DEVIATION_MODEL, config.seed)
				log.warning("bootstrap without a deviations file resamples %d synthetic points", len(points))
			boot = bootstrap_coverage(
				points, grid, dataset, geometry, params, config.ns,
				b=config.bootstrap_replicates, seed=config.seed, matrix=matrix, workers=workers,
			)
			outputs.append(emit_plot_data(boot.summary(), "bootstrap", out_dir / "bootstrap.csv"))

		if config.subgroups:
			s_rows = subgroup_analysis(
				dataset, bank, params, grid, config.subgroups, config.ns,
				method=config.subgroup_method, seed=config.seed, ga=config.ga,
				matrix=matrix if config.subgroup_method != "kmeans" else None, workers=workers,
			)
			outputs.append(emit_plot_data(s_rows, "subgroup", out_dir / "subgroup.csv"))

		if config.pca_scatter or config.coverage_example:
			outputs += _plot_stages(config, dataset, bank, pca, grid, matrix, workers, out_dir)

	manifest = write_manifest(
		out_dir,
		"run",
		{
			**config.as_dict(),
			"deviation_model": model.as_dict(),
			"synthetic_deviation_points": config.deviations is None,
			"grid": {"steps": list(grid.steps), "lower": list(grid.lower), "upper": list(grid.upper)},
			"pca_explained_variance_ratio": pca.explained_variance_ratio.tolist(),
		},
		outputs,
	)
	return ExperimentOutcome(results_dir=out_dir, outputs=tuple(outputs), manifest=manifest)


def _plot_stages(
	config: ExperimentConfig,
	dataset: Dataset,
	bank: TransferFunctionBank,
	pca: PcaModel,
	grid: CandidateGrid,
	matrix: CoverageMatrix | None,
	workers: int | None,
	out_dir: Path,
) -> Sequence[Path]:
	n = min(max(config.ns), len(grid))
	selection = greedy_select(grid, dataset, bank, config.params, n, matrix=matrix, workers=workers)
	written = [save_selection(selection, out_dir / "plot_selection.json")]
	if config.pca_scatter:
		rows = pca_scatter_rows(pca, dataset, bank, selection.presets, config.params)
		written.append(emit_plot_data(rows, "pca_scatter", out_dir / "pca_scatter.csv"))
	if config.coverage_example:
		rows = coverage_example_rows(dataset, selection.presets, pca, config.params)
		written.append(emit_plot_data(rows, "coverage_example", out_dir / "coverage_example.csv"))
	return written
