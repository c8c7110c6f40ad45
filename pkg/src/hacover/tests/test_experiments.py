# ---------------------------------------------------------------------------
# File: test_experiments.py
# ---------------------------------------------------------------------------
# Description:
#	Unit tests for hacover.experiments: sweeps, subgroups, bootstrap and
#	variance scaling, plot data, experiment config and the runner.
#
# Notes:
#	- Instances are small (20 synthetic users, 25 transfer functions, 4x4
#	  grid) so every stage runs in well under a second.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/14/2026	Initial tests (sweep, subgroup)
# 02/17/2026	Bootstrap / variance scaling / plot data
# 02/19/2026	Experiment config + runner
# 10/18/2026	Variance trend across seeds; deviation model in manifests
# ---------------------------------------------------------------------------

from __future__ import annotations

import csv
import dataclasses
import json
import math

import numpy as np
import pytest

from hacover.core.errors import CoverageMismatch, EmptySubgroup, ParameterError, ValidationError
from hacover.coverage.params import CoverageParams, PresetSet
from hacover.experiments.config import experiment_from_mapping, load_experiment_config
from hacover.experiments.manifest import MANIFEST_NAME, build_manifest
from hacover.experiments.plotdata import PLOT_KINDS, coverage_example_rows, emit_plot_data, pca_scatter_rows
from hacover.experiments.robustness import bootstrap_coverage, variance_scaling
from hacover.experiments.runner import candidate_grid, fit_dataset_pca, run_experiment
from hacover.experiments.subgroup import (
	Predicate,
	Subgroup,
	sex_age_subgroups,
	subgroup_analysis,
	subgroup_dataset,
)
from hacover.experiments.sweep import revalidate, sweep
from hacover.io.synth import SynthSpec, synth_dataset
from hacover.models.deviation import DEFAULT_DEVIATION_MODEL, variation_weights
from hacover.models.transfer import build_transfer_bank
from hacover.optimize.genetic import GaParams
from hacover.optimize.greedy import greedy_select
from hacover.optimize.select import select_presets
from hacover.tests.toy import axis_model, cfg, dataset, uni


_SMALL_GA = GaParams(population_size=12, iterations=10, seed=3)


@pytest.fixture
def instance(synth_small, small_bank, params):
	pca = fit_dataset_pca(synth_small)
	grid = candidate_grid(pca, synth_small, small_bank, steps=(4, 4))
	return synth_small, small_bank, params, pca, grid


def _read_csv(path):
	with path.open(newline="", encoding="utf-8") as fh:
		return list(csv.reader(fh))


# ----------------------------
# Sweep
# ----------------------------

def test_sweep_rows_are_sorted_and_revalidated(instance):
	ds, bank, params, _, grid = instance

	rows = sweep(ds, bank, params, grid, [4, 2], ["kmeans", "greedy", "ga"], seed=3, ga=_SMALL_GA)

	assert [(r.method, r.n) for r in rows] == [
		("ga", 2), ("ga", 4), ("greedy", 2), ("greedy", 4), ("kmeans", 2), ("kmeans", 4),
	]
	assert all(0.0 <= r.coverage <= 1.0 for r in rows)
	assert all(r.wall_time >= 0.0 for r in rows)
	assert rows[0].seed == 3
	assert rows[2].seed is None
	assert rows[2].as_row()["seed"] == ""


def test_sweep_greedy_is_monotone_in_n(instance):
	ds, bank, params, _, grid = instance

	rows = sweep(ds, bank, params, grid, [1, 2, 3, 5, 8], ["greedy"])
	values = [r.coverage for r in rows]

	assert all(b >= a for a, b in zip(values, values[1:]))


def test_sweep_rejects_bad_inputs(instance):
	ds, bank, params, _, grid = instance

	with pytest.raises(ParameterError):
		sweep(ds, bank, params, grid, [0, 5], ["greedy"])
	with pytest.raises(ParameterError):
		sweep(ds, bank, params, grid, [], ["greedy"])
	with pytest.raises(ParameterError):
		sweep(ds, bank, params, grid, [2], [])
	with pytest.raises(ParameterError):
		sweep(ds, bank, params, grid, [2], ["greedy", "tabu"])


def test_revalidate_catches_a_tampered_result(instance):
	ds, bank, params, _, grid = instance
	result = select_presets("greedy", grid, ds, bank, params, 3)

	assert revalidate(result, ds, bank, params) == result.coverage

	tampered = dataclasses.replace(result, coverage=result.coverage + 0.01)
	with pytest.raises(CoverageMismatch):
		revalidate(tampered, ds, bank, params)


# ----------------------------
# Subgroups
# ----------------------------

def test_predicate_parsing_and_matching():
	pred = Predicate.parse("age > 65")
	old = uni("a", 1.0, cfg(), age=70)
	young = uni("b", 1.0, cfg(), age=40, sex="female")

	assert (pred.field, pred.op, pred.value) == ("age", ">", 65.0)
	assert str(pred) == "age > 65"
	assert pred(old) and not pred(young)

	group = Subgroup.parse("sex == female and age <= 65")
	assert group.matches(young) and not group.matches(old)
	assert str(group) == "sex == female and age <= 65"

	with pytest.raises(ParameterError):
		Predicate.parse("height > 2")
	with pytest.raises(ParameterError):
		Predicate.parse("age >> 3")
	with pytest.raises(ParameterError):
		Predicate("age", ">", "old")


def test_empty_subgroup_names_its_predicate():
	ds = dataset(uni("a", 1.0, cfg(), age=30))

	with pytest.raises(EmptySubgroup) as ei:
		subgroup_dataset(ds, Subgroup.parse("age > 200"))

	assert "age > 200" in str(ei.value)


def test_subgroup_of_everyone_reproduces_global_optimum(instance):
	ds, bank, params, _, grid = instance
	everyone = Subgroup.parse("age >= 0", name="all")

	rows = subgroup_analysis(ds, bank, params, grid, [everyone], [3], method="greedy")

	assert len(rows) == 1
	assert rows[0].weight_share == pytest.approx(1.0)
	assert rows[0].subgroup_coverage == pytest.approx(rows[0].global_coverage, abs=1e-12)
	assert rows[0].improvement == pytest.approx(0.0, abs=1e-12)


def test_subgroup_optimum_dominates_global_presets(instance):
	ds, bank, params, _, grid = instance
	groups = [g for g in sex_age_subgroups(50) if any(g.matches(u) for u in ds)]

	rows = subgroup_analysis(ds, bank, params, grid, groups, [2], method="brute")

	for row in rows:
		assert row.subgroup_coverage >= row.global_coverage - 1e-12


def test_sex_age_subgroups_partition_the_population(instance):
	ds, bank, params, _, grid = instance
	groups = [g for g in sex_age_subgroups(50) if any(g.matches(u) for u in ds)]
	assert [g.name for g in sex_age_subgroups()] == [
		"male_age_le_65", "male_age_gt_65", "female_age_le_65", "female_age_gt_65",
	]

	rows = subgroup_analysis(ds, bank, params, grid, groups, [3], method="greedy")
	full = select_presets("greedy", grid, ds, bank, params, 3).coverage

	assert sum(r.weight_share for r in rows) == pytest.approx(1.0)
	assert sum(r.users for r in rows) == len(ds)
	assert sum(r.weight_share * r.global_coverage for r in rows) == pytest.approx(full, abs=1e-9)


# ----------------------------
# Bootstrap / variance scaling
# ----------------------------

def test_bootstrap_is_deterministic_and_bounded(instance):
	ds, _, params, _, grid = instance
	geometry = build_transfer_bank(2.0, 1.0)
	points = np.random.default_rng(0).normal(0.0, 5.0, size=(30, 2))

	a = bootstrap_coverage(points, grid, ds, geometry, params, [1, 3], b=4, seed=9)
	b = bootstrap_coverage(points, grid, ds, geometry, params, [1, 3], b=4, seed=9)

	assert a.coverages == b.coverages
	assert a.skipped == 0 and a.completed == 4
	assert all(0.0 <= c <= 1.0 for values in a.coverages.values() for c in values)
	assert all(c3 >= c1 for c1, c3 in zip(a.coverages[1], a.coverages[3]))

	summary = {s.n: s for s in a.summary()}
	assert summary[3].mean == pytest.approx(np.mean(a.coverages[3]))
	assert summary[3].std == pytest.approx(np.std(a.coverages[3], ddof=1))


def test_bootstrap_skips_replicates_that_cannot_be_fitted(instance):
	ds, _, params, _, grid = instance
	same = np.tile([1.0, 2.0], (10, 1))

	result = bootstrap_coverage(same, grid, ds, build_transfer_bank(2.0, 1.0), params, [2], b=3, seed=1)

	assert result.skipped == 3
	assert result.coverages == {2: ()}
	assert math.isnan(result.summary()[0].mean)


def test_bootstrap_needs_two_replicates(instance):
	ds, _, params, _, grid = instance

	with pytest.raises(ParameterError):
		bootstrap_coverage(np.zeros((5, 2)), grid, ds, build_transfer_bank(2.0, 1.0), params, [2], b=1)


def test_variance_scale_one_matches_plain_greedy(instance):
	ds, bank, params, _, grid = instance
	geometry = build_transfer_bank(2.0, 1.0)

	rows = variance_scaling(grid, ds, geometry, params, [2, 4], scales=(0.5, 1.0, 1.5))
	baseline = greedy_select(grid, ds, variation_weights(geometry, DEFAULT_DEVIATION_MODEL), params, 4)

	assert [(r.scale, r.n) for r in rows] == [
		(0.5, 2), (0.5, 4), (1.0, 2), (1.0, 4), (1.5, 2), (1.5, 4),
	]
	by_key = {(r.scale, r.n): r.coverage for r in rows}
	assert by_key[(1.0, 4)] == baseline.coverage
	assert by_key[(1.0, 2)] == baseline.trace[1]

	with pytest.raises(ParameterError):
		variance_scaling(grid, ds, geometry, params, [2], scales=(0.0,))


def test_tighter_deviation_spread_raises_coverage_across_populations():
	geometry = build_transfer_bank()
	params = CoverageParams(radius=5.0, gamma=0.5)
	held = 0
	peak = 0.0

	for seed in range(20):
		ds = synth_dataset(SynthSpec(n_users=20, seed=seed))
		grid = candidate_grid(fit_dataset_pca(ds), ds, geometry, steps=(8, 8), bbox_source="prescriptions")
		rows = variance_scaling(grid, ds, geometry, params, [2, 4], scales=(0.5, 1.0, 1.5))
		by_key = {(r.scale, r.n): r.coverage for r in rows}
		peak = max(peak, by_key[(0.5, 4)])
		if all(
			by_key[(0.5, n)] + 1e-12 >= by_key[(1.0, n)] and by_key[(1.0, n)] + 1e-12 >= by_key[(1.5, n)]
			for n in (2, 4)
		):
			held += 1

	assert peak > 0.0
	assert held >= 16


# ----------------------------
# Plot data
# ----------------------------

def test_emit_plot_data_header_and_rows(tmp_path, instance):
	ds, bank, params, _, grid = instance
	rows = sweep(ds, bank, params, grid, [1, 2], ["greedy"])

	path = emit_plot_data(rows, "coverage_vs_n", tmp_path / "plots" / "coverage_vs_n.csv")
	table = _read_csv(path)

	assert table[0] == ["method", "N", "coverage"]
	assert [r[:2] for r in table[1:]] == [["greedy", "1"], ["greedy", "2"]]


def test_emit_plot_data_edge_cases(tmp_path):
	empty = emit_plot_data([], "bootstrap", tmp_path / "empty.csv")
	assert _read_csv(empty) == [list(PLOT_KINDS["bootstrap"])]

	with pytest.raises(ParameterError):
		emit_plot_data([], "heatmap", tmp_path / "x.csv")
	with pytest.raises(ParameterError):
		emit_plot_data([{"method": "greedy"}], "coverage_vs_n", tmp_path / "y.csv")


def test_coverage_example_flags_match_the_ball_test(params):
	ds = dataset(uni("in", 0.5, cfg(1, 1)), uni("out", 0.5, cfg(20, 0)))
	presets = PresetSet((cfg(0, 0),))

	rows = coverage_example_rows(ds, presets, axis_model(), params)

	assert [(r.user_id, r.covered) for r in rows] == [("in", True), ("out", False)]
	assert (rows[1].pc1, rows[1].pc2) == (20.0, 0.0)
	assert rows[0].as_row()["g500"] == 1.0


def test_pca_scatter_rows_cover_every_kind(instance):
	ds, bank, params, pca, grid = instance
	presets = PresetSet(grid.lifted[:3])

	rows = pca_scatter_rows(pca, ds, bank, presets, params)
	kinds = [r["kind"] for r in rows]

	assert kinds.count("prescription") == ds.prescription_count()
	assert kinds.count("variation") == ds.variation_count(bank)
	assert kinds.count("preset") == 3
	assert all(r["covered"] == 1 for r in rows if r["kind"] == "preset")

	bare = pca_scatter_rows(pca, ds, bank, include_variations=False)
	assert {r["covered"] for r in bare} == {""}


# ----------------------------
# Experiment config / runner
# ----------------------------

_TOML = """
[experiment]
name = "desk"
seed = 4
results_dir = "out"

[synth]
n_users = 15

[transfer]
range_db = 2.0
step_db = 1.0

[grid]
steps_x = 4
steps_y = 3

[optimize]
methods = ["greedy", "brute"]
ns = [1, 2]

[slider]
steps_x = 3
steps_y = 3
sweep = true
sweep_steps = [2, 3]

[variance]
scales = [0.5, 1.0]

[bootstrap]
replicates = 2

[subgroup]
groups = ["age >= 0"]
method = "greedy"

[plots]
pca_scatter = true
coverage_example = true
"""


def test_load_experiment_config(tmp_path):
	path = tmp_path / "experiment.toml"
	path.write_text(_TOML, encoding="utf-8")

	cfg_ = load_experiment_config(path)

	assert cfg_.name == "desk"
	assert cfg_.results_dir == tmp_path / "out"
	assert cfg_.synth.seed == 4
	assert cfg_.ga.seed == 4
	assert cfg_.methods == ("greedy", "brute")
	assert cfg_.grid_steps == (4, 3)
	assert cfg_.slider.preset_count == 9
	assert cfg_.variance_scales == (0.5, 1.0)
	assert cfg_.bootstrap_replicates == 2
	assert [str(g) for g in cfg_.subgroups] == ["age >= 0"]
	json.dumps(cfg_.as_dict())


def test_stages_run_only_when_present(tmp_path):
	cfg_ = experiment_from_mapping({"data": {"dataset": "d.csv"}}, tmp_path)

	assert cfg_.dataset == tmp_path / "d.csv"
	assert cfg_.methods == ()
	assert cfg_.slider is None
	assert cfg_.variance_scales is None
	assert cfg_.bootstrap_replicates is None
	assert cfg_.subgroups is None


def test_experiment_config_errors(tmp_path):
	with pytest.raises(ParameterError):
		experiment_from_mapping({}, tmp_path)
	with pytest.raises(ParameterError):
		experiment_from_mapping({"data": {"dataset": "d.csv"}, "optimize": {"methods": ["anneal"]}}, tmp_path)
	with pytest.raises(ParameterError):
		experiment_from_mapping({"data": {"dataset": "d.csv"}, "ga": {"population_size": 2}}, tmp_path)

	bad = tmp_path / "bad.toml"
	bad.write_text("[experiment\nname=", encoding="utf-8")
	with pytest.raises(ValidationError):
		load_experiment_config(bad)
	with pytest.raises(ValidationError):
		load_experiment_config(tmp_path / "missing.toml")


def test_run_experiment_writes_every_stage(tmp_path):
	path = tmp_path / "experiment.toml"
	path.write_text(_TOML, encoding="utf-8")

	outcome = run_experiment(load_experiment_config(path))
	names = {p.name for p in outcome.outputs}

	assert names == {
		"dataset.csv",
		"pca.json",
		"sweep.csv",
		"coverage_vs_n.csv",
		"slider_report.json",
		"slider.csv",
		"variance_scaling.csv",
		"bootstrap.csv",
		"subgroup.csv",
		"plot_selection.json",
		"pca_scatter.csv",
		"coverage_example.csv",
	}
	assert all(p.is_file() for p in outcome.outputs)

	manifest = json.loads(outcome.manifest.read_text(encoding="utf-8"))
	assert outcome.manifest.name == MANIFEST_NAME
	assert manifest["command"] == "run"
	assert manifest["parameters"]["seed"] == 4
	assert manifest["parameters"]["grid"]["steps"] == [4, 3]
	assert manifest["parameters"]["deviation_model"]["synthetic"] is True
	assert manifest["parameters"]["synthetic_deviation_points"] is True
	assert manifest["outputs"] == sorted(names)

	sweep_rows = _read_csv(outcome.results_dir / "sweep.csv")
	by_n = {}
	for method, n, coverage, *_ in sweep_rows[1:]:
		by_n.setdefault(n, {})[method] = float(coverage)
	for values in by_n.values():
		assert values["brute"] >= values["greedy"] - 1e-12


def test_run_experiment_is_reproducible(tmp_path):
	data = {
		"experiment": {"seed": 2},
		"synth": {"n_users": 12},
		"transfer": {"range_db": 2.0, "step_db": 1.0},
		"grid": {"steps_x": 3, "steps_y": 3},
		"optimize": {"methods": ["greedy", "ga", "kmeans"], "ns": [2]},
		"ga": {"population_size": 8, "iterations": 4},
	}

	a = run_experiment(experiment_from_mapping({**data, "experiment": {"seed": 2, "results_dir": str(tmp_path / "a")}}))
	b = run_experiment(experiment_from_mapping({**data, "experiment": {"seed": 2, "results_dir": str(tmp_path / "b")}}))

	def _coverages(outcome):
		return [row[:3] for row in _read_csv(outcome.results_dir / "sweep.csv")]

	assert _coverages(a) == _coverages(b)
	assert (a.results_dir / "dataset.csv").read_bytes() == (b.results_dir / "dataset.csv").read_bytes()


def test_build_manifest_lists_output_names(tmp_path):
	manifest = build_manifest("sweep", {"radius": 5.0}, [tmp_path / "b.csv", tmp_path / "a.csv"])

	assert manifest["tool"] == "hacover"
	assert manifest["outputs"] == ["a.csv", "b.csv"]
	assert isinstance(manifest["version"], str)
