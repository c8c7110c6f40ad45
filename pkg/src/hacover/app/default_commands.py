# ---------------------------------------------------------------------------
# File: default_commands.py
# ---------------------------------------------------------------------------
# Description:
#	Default subcommands of the hacover CLI.
#
# Notes:
#	- Each command adds its own flags in _configure_<name>() and runs in
#	  _cmd_<name>(ctx).
#	- Global flags (radius, gamma, transfer bank, deviations, output dir) are
#	  read from ctx.args by the shared helpers below.
#	- Results go to --out; every command writes manifest.json there.
#	- Human-readable summaries go to stdout; logs go to stderr.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/19/2026	Initial coding / release
# 02/20/2026	Add run / plot-data commands
# 10/18/2026	Deviation model in every bank-dependent manifest
# ---------------------------------------------------------------------------

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Any, Sequence

from hacover.app.commands import Command, CommandContext, CommandRegistry
from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.coverage.matrix import precompute_matrix
from hacover.coverage.params import CoverageParams
from hacover.coverage.population import population_coverage
from hacover.experiments.config import DEFAULT_NS, load_experiment_config
from hacover.experiments.manifest import write_manifest
from hacover.experiments.plotdata import coverage_example_rows, emit_plot_data, pca_scatter_rows
from hacover.experiments.robustness import DEFAULT_REPLICATES, DEFAULT_SCALES, bootstrap_coverage, variance_scaling
from hacover.experiments.runner import (
	SYNTH_DEVIATION_POINTS,
	candidate_grid,
	deviation_model,
	fit_dataset_pca,
	run_experiment,
	weighted_bank,
)
from hacover.experiments.subgroup import Subgroup, sex_age_subgroups, subgroup_analysis
from hacover.experiments.sweep import sweep
from hacover.io.dataset import load_dataset, save_dataset
from hacover.io.files import (
	load_pca,
	load_presets,
	save_deviation_points,
	save_pca,
	save_presets,
	save_report,
	save_selection,
	write_json,
)
from hacover.io.synth import SynthSpec, synth_dataset, synth_deviation_points
from hacover.models.deviation import DEFAULT_DEVIATION_MODEL
from hacover.optimize.brute import DEFAULT_COMBINATION_LIMIT
from hacover.optimize.genetic import GaParams
from hacover.optimize.greedy import STRATEGIES, greedy_select
from hacover.optimize.result import METHODS
from hacover.optimize.select import select_presets
from hacover.reduce.sources import BBoxSource
from hacover.slider.sliders import SliderSpec, slider_grid


log = get_component_logger("app.commands")


# ---------------------------------------------------------------------------
# Shared flag groups
# ---------------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
	try:
		return [int(v) for v in text.split(",") if v.strip()]
	except ValueError as ex:
		raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from ex


def _float_list(text: str) -> list[float]:
	try:
		return [float(v) for v in text.split(",") if v.strip()]
	except ValueError as ex:
		raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from ex


def _str_list(text: str) -> list[str]:
	return [v.strip() for v in text.split(",") if v.strip()]


def _add_dataset(p: argparse.ArgumentParser) -> None:
	p.add_argument("--dataset", required=True, type=Path, help="dataset CSV")


def _add_grid(p: argparse.ArgumentParser) -> None:
	p.add_argument("--pca", type=Path, default=None, help="pca.json to reuse (default: fit on the dataset)")
	p.add_argument("--grid-steps", type=int, nargs=2, default=(20, 20), metavar=("X", "Y"))
	p.add_argument("--step-size", type=float, default=None, help="reduced-space spacing instead of --grid-steps")
	p.add_argument(
		"--bbox-source",
		choices=[s.value for s in BBoxSource],
		default=BBoxSource.VARIATIONS.value,
	)


def _add_ga(p: argparse.ArgumentParser) -> None:
	p.add_argument("--seed", type=int, default=None)
	p.add_argument("--ga-population", type=int, default=250)
	p.add_argument("--ga-iterations", type=int, default=500)
	p.add_argument("--ga-elitism", type=int, default=1)
	p.add_argument("--no-local-improvement", action="store_true")


def _add_ns(p: argparse.ArgumentParser, default: Sequence[int] = DEFAULT_NS) -> None:
	p.add_argument("--ns", type=_int_list, default=list(default), help="comma-separated preset counts")


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------

def _params(ctx: CommandContext) -> CoverageParams:
	return CoverageParams(radius=ctx.args.radius, gamma=ctx.args.gamma)


def _banks(ctx: CommandContext):
	model, points = deviation_model(ctx.args.deviations, ctx.args.variance_scale)
	geometry, bank = weighted_bank(ctx.args.tf_range, ctx.args.tf_step, model)
	return model, points, geometry, bank


def _out(ctx: CommandContext) -> Path:
	out = Path(ctx.args.out)
	out.mkdir(parents=True, exist_ok=True)
	return out


def _workers(ctx: CommandContext) -> int | None:
	return ctx.args.threads


def _pca(ctx: CommandContext, dataset):
	if getattr(ctx.args, "pca", None) is not None:
		return load_pca(ctx.args.pca)
	return fit_dataset_pca(dataset)


def _grid(ctx: CommandContext, pca, dataset, bank):
	return candidate_grid(
		pca, dataset, bank,
		steps=tuple(ctx.args.grid_steps), step_size=ctx.args.step_size, bbox_source=ctx.args.bbox_source,
	)


def _ga(ctx: CommandContext) -> GaParams:
	a = ctx.args
	return GaParams(
		population_size=a.ga_population,
		iterations=a.ga_iterations,
		elitism=a.ga_elitism,
		local_improvement=not a.no_local_improvement,
		seed=a.seed,
	)


def _jsonable(value: Any) -> Any:
	if isinstance(value, Path):
		return str(value)
	if isinstance(value, (list, tuple)):
		return [_jsonable(v) for v in value]
	return value


def _manifest(ctx: CommandContext, out: Path, outputs: Sequence[Path], **derived: Any) -> None:
	parameters = {k: _jsonable(v) for k, v in sorted(vars(ctx.args).items())}
	parameters.update(derived)
	write_manifest(out, ctx.args.command, parameters, outputs)


# ---------------------------------------------------------------------------
# synth
# ---------------------------------------------------------------------------

def _configure_synth(p: argparse.ArgumentParser) -> None:
	p.add_argument("--n-users", type=int, default=200)
	p.add_argument("--bilateral-fraction", type=float, default=0.5)
	p.add_argument("--profiles", type=int, default=4)
	p.add_argument("--noise-db", type=float, default=0.3)
	p.add_argument("--weight-concentration", type=float, default=2.0)
	p.add_argument("--male-fraction", type=float, default=0.5)
	p.add_argument("--deviation-points", type=int, default=0, help="also write N synthetic deviation points")
	p.add_argument("--seed", type=int, default=None)


def _cmd_synth(ctx: CommandContext) -> int:
	a = ctx.args
	spec = SynthSpec(
		n_users=a.n_users,
		bilateral_fraction=a.bilateral_fraction,
		n_profiles=a.profiles,
		noise_db=a.noise_db,
		weight_concentration=a.weight_concentration,
		male_fraction=a.male_fraction,
		seed=a.seed,
	)
	out = _out(ctx)
	outputs = [save_dataset(synth_dataset(spec), out / "dataset.csv")]
	if a.deviation_points:
		points = synth_deviation_points(a.deviation_points, DEFAULT_DEVIATION_MODEL, a.seed)
		outputs.append(save_deviation_points(points, out / "deviations.csv"))
	_manifest(ctx, out, outputs, synth=spec.as_dict())
	print(f"wrote {outputs[0]} ({spec.n_users} users)")
	return 0


# ---------------------------------------------------------------------------
# pca / grid
# ---------------------------------------------------------------------------

def _configure_pca(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	p.add_argument("--components", type=int, default=2)


def _cmd_pca(ctx: CommandContext) -> int:
	dataset = load_dataset(ctx.args.dataset)
	model = fit_dataset_pca(dataset, ctx.args.components)
	out = _out(ctx)
	path = save_pca(model, out / "pca.json")
	_manifest(ctx, out, [path])
	ratios = ", ".join(f"{r:.4f}" for r in model.explained_variance_ratio)
	print(f"explained variance ratio: {ratios} (total {model.explained_variance_ratio.sum():.4f})")
	return 0


def _configure_grid(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)


def _cmd_grid(ctx: CommandContext) -> int:
	dataset = load_dataset(ctx.args.dataset)
	model, _, _, bank = _banks(ctx)
	pca = _pca(ctx, dataset)
	grid = _grid(ctx, pca, dataset, bank)
	out = _out(ctx)
	path = write_json(
		{
			"steps": list(grid.steps),
			"lower": list(grid.lower),
			"upper": list(grid.upper),
			"points": grid.points.tolist(),
			"lifted": [c.as_dict() for c in grid.lifted],
		},
		out / "grid.json",
	)
	_manifest(ctx, out, [path], deviation_model=model.as_dict())
	print(f"grid {grid.steps[0]}x{grid.steps[1]}: {len(grid)} candidates")
	return 0


# ---------------------------------------------------------------------------
# optimize / coverage / slider
# ---------------------------------------------------------------------------

def _configure_optimize(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)
	_add_ga(p)
	p.add_argument("--method", choices=METHODS, default="greedy")
	p.add_argument("--n", type=int, required=True, help="number of presets")
	p.add_argument("--greedy-strategy", choices=STRATEGIES, default="exact")
	p.add_argument("--combination-limit", type=int, default=DEFAULT_COMBINATION_LIMIT)


def _cmd_optimize(ctx: CommandContext) -> int:
	a = ctx.args
	dataset = load_dataset(a.dataset)
	model, _, _, bank = _banks(ctx)
	pca = _pca(ctx, dataset)
	grid = _grid(ctx, pca, dataset, bank)
	result = select_presets(
		a.method, grid, dataset, bank, _params(ctx), a.n,
		seed=a.seed, ga=_ga(ctx), greedy_strategy=a.greedy_strategy,
		combination_limit=a.combination_limit, workers=_workers(ctx),
	)
	out = _out(ctx)
	outputs = [save_selection(result, out / "selection.json"), save_presets(result.presets, out / "presets.json")]
	_manifest(ctx, out, outputs, deviation_model=model.as_dict(), grid_size=len(grid))
	print(f"{a.method} N={a.n}: coverage {result.coverage:.6f}")
	return 0


def _configure_coverage(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	p.add_argument("--presets", required=True, type=Path, help="presets.json or selection.json")


def _cmd_coverage(ctx: CommandContext) -> int:
	dataset = load_dataset(ctx.args.dataset)
	presets = load_presets(ctx.args.presets)
	model, _, _, bank = _banks(ctx)
	report = population_coverage(dataset, presets, bank, _params(ctx), workers=_workers(ctx))
	out = _out(ctx)
	path = save_report(report, out / "report.json")
	_manifest(ctx, out, [path], deviation_model=model.as_dict())
	print(f"coverage {report.population_coverage:.6f}")
	return 0


def _configure_slider(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	p.add_argument("--pca", type=Path, default=None)
	p.add_argument("--x-steps", type=int, default=10)
	p.add_argument("--y-steps", type=int, default=10)
	p.add_argument(
		"--bbox-source",
		choices=[s.value for s in BBoxSource],
		default=BBoxSource.VARIATIONS.value,
	)


def _cmd_slider(ctx: CommandContext) -> int:
	a = ctx.args
	dataset = load_dataset(a.dataset)
	model, _, _, bank = _banks(ctx)
	pca = _pca(ctx, dataset)
	spec = SliderSpec(a.x_steps, a.y_steps, a.bbox_source)
	grid = slider_grid(pca, spec, dataset, bank)
	report = population_coverage(dataset, grid.lifted, bank, _params(ctx), workers=_workers(ctx))
	out = _out(ctx)
	outputs = [save_presets(grid.lifted, out / "presets.json"), save_report(report, out / "report.json")]
	_manifest(ctx, out, outputs, deviation_model=model.as_dict())
	print(f"slider {a.x_steps}x{a.y_steps} ({len(grid)} presets): coverage {report.population_coverage:.6f}")
	return 0


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------

def _configure_sweep(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)
	_add_ga(p)
	_add_ns(p)
	p.add_argument("--methods", type=_str_list, default=["greedy", "ga", "kmeans"])
	p.add_argument("--greedy-strategy", choices=STRATEGIES, default="exact")


def _cmd_sweep(ctx: CommandContext) -> int:
	a = ctx.args
	dataset = load_dataset(a.dataset)
	model, _, _, bank = _banks(ctx)
	grid = _grid(ctx, _pca(ctx, dataset), dataset, bank)
	rows = sweep(
		dataset, bank, _params(ctx), grid, a.ns, a.methods,
		seed=a.seed, ga=_ga(ctx), greedy_strategy=a.greedy_strategy, workers=_workers(ctx),
	)
	out = _out(ctx)
	outputs = [
		emit_plot_data(rows, "sweep", out / "sweep.csv"),
		emit_plot_data(rows, "coverage_vs_n", out / "coverage_vs_n.csv"),
	]
	_manifest(ctx, out, outputs, deviation_model=model.as_dict())
	for row in rows:
		print(f"{row.method:>7} N={row.n:<3d} coverage {row.coverage:.6f}  ({row.wall_time:.2f}s)")
	return 0


def _configure_bootstrap(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)
	_add_ns(p, (5, 10, 20))
	p.add_argument("--replicates", type=int, default=DEFAULT_REPLICATES)
	p.add_argument("--seed", type=int, default=None)


def _cmd_bootstrap(ctx: CommandContext) -> int:
	a = ctx.args
	dataset = load_dataset(a.dataset)
	model, points, geometry, bank = _banks(ctx)
	synthetic_points = points is None
	if synthetic_points:
		points = synth_deviation_points(SYNTH_DEVIATION_POINTS, DEFAULT_DEVIATION_MODEL, a.seed)
		log.warning("no --deviations given; resampling %d synthetic deviation points", len(points))
	grid = _grid(ctx, _pca(ctx, dataset), dataset, bank)
	result = bootstrap_coverage(
		points, grid, dataset, geometry, _params(ctx), a.ns,
		b=a.replicates, seed=a.seed, workers=_workers(ctx),
	)
	out = _out(ctx)
	summary = result.summary()
	path = emit_plot_data(summary, "bootstrap", out / "bootstrap.csv")
	_manifest(
		ctx, out, [path],
		deviation_model=model.as_dict(), synthetic_deviation_points=synthetic_points,
	)
	for s in summary:
		print(f"N={s.n:<3d} mean {s.mean:.6f} std {s.std:.6f} ({s.replicates} replicates, {s.skipped} skipped)")
	return 0


def _configure_variance(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)
	_add_ns(p, (5, 10, 20))
	p.add_argument("--scales", type=_float_list, default=list(DEFAULT_SCALES))


def _cmd_variance(ctx: CommandContext) -> int:
	a = ctx.args
	dataset = load_dataset(a.dataset)
	model, _, geometry, bank = _banks(ctx)
	grid = _grid(ctx, _pca(ctx, dataset), dataset, bank)
	rows = variance_scaling(
		grid, dataset, geometry, _params(ctx), a.ns,
		scales=a.scales, model=model.with_scale(1.0), workers=_workers(ctx),
	)
	out = _out(ctx)
	path = emit_plot_data(rows, "variance_scaling", out / "variance_scaling.csv")
	_manifest(ctx, out, [path], deviation_model=model.as_dict())
	for row in rows:
		print(f"scale {row.scale:g} N={row.n:<3d} coverage {row.coverage:.6f}")
	return 0


def _configure_subgroup(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)
	_add_ga(p)
	_add_ns(p, (10, 20))
	p.add_argument("--method", choices=METHODS, default="ga")
	p.add_argument("--sex-age-subgroups", action="store_true", help="sex x age (<= 65 / > 65)")
	p.add_argument(
		"--where",
		action="append",
		default=[],
		metavar="EXPR",
		help='subgroup such as "sex == male and age > 65" (repeatable)',
	)


def _cmd_subgroup(ctx: CommandContext) -> int:
	a = ctx.args
	groups: list[Subgroup] = sex_age_subgroups() if a.sex_age_subgroups else []
	groups += [Subgroup.parse(expr) for expr in a.where]
	if not groups:
		raise ParameterError("give --sex-age-subgroups or at least one --where")

	dataset = load_dataset(a.dataset)
	model, _, _, bank = _banks(ctx)
	grid = _grid(ctx, _pca(ctx, dataset), dataset, bank)
	rows = subgroup_analysis(
		dataset, bank, _params(ctx), grid, groups, a.ns,
		method=a.method, seed=a.seed, ga=_ga(ctx), workers=_workers(ctx),
	)
	out = _out(ctx)
	path = emit_plot_data(rows, "subgroup", out / "subgroup.csv")
	_manifest(ctx, out, [path], deviation_model=model.as_dict(), subgroups={g.name: str(g) for g in groups})
	for row in rows:
		print(
			f"{row.subgroup} N={row.n}: global {row.global_coverage:.6f} "
			f"subgroup {row.subgroup_coverage:.6f} ({row.users} users)"
		)
	return 0


def _configure_plot_data(p: argparse.ArgumentParser) -> None:
	_add_dataset(p)
	_add_grid(p)
	p.add_argument("--kind", choices=("pca_scatter", "coverage_example"), required=True)
	p.add_argument("--presets", type=Path, default=None, help="presets to flag coverage against")
	p.add_argument("--n", type=int, default=20, help="greedy preset count when --presets is absent")
	p.add_argument("--no-variations", action="store_true", help="pca_scatter without variation points")


def _cmd_plot_data(ctx: CommandContext) -> int:
	a = ctx.args
	dataset = load_dataset(a.dataset)
	model, _, _, bank = _banks(ctx)
	params = _params(ctx)
	pca = _pca(ctx, dataset)
	if a.presets is not None:
		presets = load_presets(a.presets)
	else:
		grid = _grid(ctx, pca, dataset, bank)
		matrix = precompute_matrix(grid.lifted, dataset, bank, params, workers=_workers(ctx))
		presets = greedy_select(grid, dataset, bank, params, min(a.n, len(grid)), matrix=matrix).presets

	out = _out(ctx)
	if a.kind == "pca_scatter":
		rows = pca_scatter_rows(pca, dataset, bank, presets, params, include_variations=not a.no_variations)
	else:
		rows = coverage_example_rows(dataset, presets, pca, params)
	path = emit_plot_data(rows, a.kind, out / f"{a.kind}.csv")
	_manifest(ctx, out, [path], deviation_model=model.as_dict())
	print(f"wrote {path} ({len(rows)} rows)")
	return 0


def _configure_run(p: argparse.ArgumentParser) -> None:
	p.add_argument("--config", required=True, type=Path, help="experiment.toml")


def _cmd_run(ctx: CommandContext) -> int:
	config = load_experiment_config(ctx.args.config)
	outcome = run_experiment(config, workers=_workers(ctx))
	print(f"experiment {config.name}: {len(outcome.outputs)} files in {outcome.results_dir}")
	return 0


# ---------------------------------------------------------------------------
# Registration
# ---------------------------------------------------------------------------

def register_default_commands(registry: CommandRegistry) -> None:
	registry.register(
		Command(
			id="synth",
			label="Generate a seeded synthetic dataset",
			handler=_cmd_synth,
			configure=_configure_synth,
			tags=("data",),
			order=10,
		)
	)
	registry.register(
		Command(
			id="pca",
			label="Fit the 2-component PCA model",
			handler=_cmd_pca,
			configure=_configure_pca,
			tags=("data",),
			order=20,
		)
	)
	registry.register(
		Command(
			id="grid",
			label="Build the candidate preset grid",
			handler=_cmd_grid,
			configure=_configure_grid,
			tags=("data",),
			order=30,
		)
	)
	registry.register(
		Command(
			id="optimize",
			label="Select N presets (greedy | ga | kmeans | brute)",
			handler=_cmd_optimize,
			configure=_configure_optimize,
			tags=("core",),
			order=40,
		)
	)
	registry.register(
		Command(
			id="coverage",
			label="Population coverage of a preset file",
			handler=_cmd_coverage,
			configure=_configure_coverage,
			tags=("core",),
			order=50,
		)
	)
	registry.register(
		Command(
			id="slider",
			label="Coverage of a two-slider grid",
			handler=_cmd_slider,
			configure=_configure_slider,
			tags=("core",),
			order=60,
		)
	)
	registry.register(
		Command(
			id="sweep",
			label="Coverage vs preset count across methods",
			handler=_cmd_sweep,
			configure=_configure_sweep,
			tags=("experiment",),
			order=70,
		)
	)
	registry.register(
		Command(
			id="bootstrap",
			label="Bootstrap the deviation model",
			handler=_cmd_bootstrap,
			configure=_configure_bootstrap,
			tags=("experiment",),
			order=80,
		)
	)
	registry.register(
		Command(
			id="variance-scale",
			label="Coverage under scaled deviation variance",
			handler=_cmd_variance,
			configure=_configure_variance,
			tags=("experiment",),
			order=90,
		)
	)
	registry.register(
		Command(
			id="subgroup",
			label="Subgroup-optimized vs global presets",
			handler=_cmd_subgroup,
			configure=_configure_subgroup,
			tags=("experiment",),
			order=100,
		)
	)
	registry.register(
		Command(
			id="plot-data",
			label="Emit PCA scatter / coverage example CSVs",
			handler=_cmd_plot_data,
			configure=_configure_plot_data,
			tags=("experiment",),
			order=110,
		)
	)
	registry.register(
		Command(
			id="run",
			label="Run an experiment.toml",
			handler=_cmd_run,
			configure=_configure_run,
			tags=("experiment",),
			order=120,
		)
	)
