# ---------------------------------------------------------------------------
# File: test_cli.py
# ---------------------------------------------------------------------------
# Description:
#	End-to-end tests for the hacover command line.
#
# Notes:
#	- Every run writes under tmp_path via --out.
#	- A +/-2 dB transfer bank keeps the runs small.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 01/20/2026	Initial tests
# 02/12/2026	optimize / run / exit codes
# 10/18/2026	Manifests record the deviation model
# ---------------------------------------------------------------------------

from __future__ import annotations

import json
import logging

import pytest

from hacover.app.cli import EXIT_OK, EXIT_USAGE, cli_dispatch
from hacover.core.logging import ROOT_LOGGER_NAME
from hacover.io.dataset import save_dataset
from hacover.io.files import save_presets
from hacover.tests.toy import bi, cfg, dataset, uni


_SMALL_BANK = ["--tf-range", "2", "--tf-step", "1"]


def _toy_files(tmp_path):
	"""
	Two users plus a preset file holding exactly their prescriptions.
	"""
	a = cfg(10, 20, 30, 30, 20, 10)
	b = cfg(40, 40, 45, 50, 55, 60)
	ds = dataset(
		uni("u1", 1.0, a),
		bi("u2", 1.0, [b, b, b, b]),
	)
	data_path = save_dataset(ds, tmp_path / "dataset.csv")
	presets_path = save_presets([a, b], tmp_path / "presets.json")
	return data_path, presets_path


def _synth(tmp_path, *extra: str) -> int:
	return cli_dispatch(["--out", str(tmp_path), "synth", "--n-users", "12", "--seed", "5", *extra])


# ----------------------------
# Usage errors
# ----------------------------

def test_no_command_is_a_usage_error(capsys):
	assert cli_dispatch([]) == EXIT_USAGE
	assert "a command is required" in capsys.readouterr().err


def test_unknown_command_is_a_usage_error(capsys):
	assert cli_dispatch(["frobnicate"]) == EXIT_USAGE
	assert "hacover: error:" in capsys.readouterr().err


def test_missing_required_flag_is_a_usage_error(tmp_path, capsys):
	assert cli_dispatch(["--out", str(tmp_path), "coverage"]) == EXIT_USAGE
	assert "--dataset" in capsys.readouterr().err


def test_help_exits_cleanly(capsys):
	assert cli_dispatch(["--help"]) == EXIT_OK
	out = capsys.readouterr().out
	assert "optimize" in out
	assert "experiment commands:" in out


def test_malformed_dataset_is_a_user_error(tmp_path, capsys):
	bad = tmp_path / "bad.csv"
	bad.write_text("not,a,dataset\n1,2,3\n", encoding="utf-8")
	presets = tmp_path / "presets.json"
	save_presets([cfg()], presets)

	rc = cli_dispatch(["--out", str(tmp_path), "coverage", "--dataset", str(bad), "--presets", str(presets)])

	assert rc == EXIT_USAGE
	assert "hacover coverage: error:" in capsys.readouterr().err


def test_subgroup_without_groups_is_a_user_error(tmp_path, capsys):
	data_path, _ = _toy_files(tmp_path)

	rc = cli_dispatch(["--out", str(tmp_path), "subgroup", "--dataset", str(data_path)])

	assert rc == EXIT_USAGE
	assert "--sex-age-subgroups" in capsys.readouterr().err


# ----------------------------
# Commands
# ----------------------------

def test_coverage_of_prescriptions_is_full(tmp_path, capsys):
	data_path, presets_path = _toy_files(tmp_path)
	out = tmp_path / "out"

	rc = cli_dispatch(
		[
			"--out", str(out), "--radius", "25", *_SMALL_BANK,
			"coverage", "--dataset", str(data_path), "--presets", str(presets_path),
		]
	)

	assert rc == EXIT_OK
	assert "coverage 1.000000" in capsys.readouterr().out
	report = json.loads((out / "report.json").read_text(encoding="utf-8"))
	assert report["population_coverage"] == 1.0
	manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
	assert manifest["command"] == "coverage"
	assert manifest["parameters"]["radius"] == 25.0


def test_synth_is_deterministic(tmp_path):
	first = tmp_path / "a"
	second = tmp_path / "b"

	assert _synth(first) == EXIT_OK
	assert _synth(second) == EXIT_OK

	assert (first / "dataset.csv").read_bytes() == (second / "dataset.csv").read_bytes()


def test_synth_can_write_deviation_points(tmp_path):
	assert _synth(tmp_path, "--deviation-points", "30") == EXIT_OK

	lines = (tmp_path / "deviations.csv").read_text(encoding="utf-8").splitlines()
	assert lines[0] == "low_dev,high_dev"
	assert len(lines) == 31


def test_optimize_brute_writes_selection(tmp_path, capsys):
	assert _synth(tmp_path) == EXIT_OK
	out = tmp_path / "opt"

	rc = cli_dispatch(
		[
			"--out", str(out), *_SMALL_BANK,
			"optimize", "--dataset", str(tmp_path / "dataset.csv"),
			"--method", "brute", "--n", "2", "--grid-steps", "4", "3",
		]
	)

	assert rc == EXIT_OK
	assert "brute N=2: coverage" in capsys.readouterr().out
	selection = json.loads((out / "selection.json").read_text(encoding="utf-8"))
	assert selection["method"] == "brute"
	assert selection["N"] == 2
	assert len(selection["preset_indices"]) == 2
	assert all(0 <= i < 12 for i in selection["preset_indices"])
	manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
	assert manifest["parameters"]["grid_size"] == 12
	assert manifest["outputs"] == ["presets.json", "selection.json"]


@pytest.mark.parametrize(
	"command",
	[
		["grid"],
		["sweep", "--methods", "greedy", "--ns", "1,2"],
		["bootstrap", "--ns", "1", "--replicates", "2", "--seed", "1"],
		["subgroup", "--where", "age >= 0", "--method", "greedy", "--ns", "1"],
		["plot-data", "--kind", "coverage_example", "--n", "2"],
	],
)
def test_bank_dependent_manifests_record_the_deviation_model(tmp_path, command):
	assert _synth(tmp_path) == EXIT_OK
	out = tmp_path / command[0]

	rc = cli_dispatch(
		[
			"--out", str(out), *_SMALL_BANK,
			command[0], "--dataset", str(tmp_path / "dataset.csv"), "--grid-steps", "3", "3", *command[1:],
		]
	)

	assert rc == EXIT_OK
	manifest = json.loads((out / "manifest.json").read_text(encoding="utf-8"))
	model = manifest["parameters"]["deviation_model"]
	assert model["synthetic"] is True
	assert model["std"] == [5.0, 5.0]
	if command[0] == "bootstrap":
		assert manifest["parameters"]["synthetic_deviation_points"] is True


def test_optimize_too_many_presets_is_a_user_error(tmp_path, capsys):
	assert _synth(tmp_path) == EXIT_OK

	rc = cli_dispatch(
		[
			"--out", str(tmp_path), *_SMALL_BANK,
			"optimize", "--dataset", str(tmp_path / "dataset.csv"),
			"--n", "5", "--grid-steps", "2", "2",
		]
	)

	assert rc == EXIT_USAGE
	assert "hacover optimize: error:" in capsys.readouterr().err


def test_run_config(tmp_path, capsys):
	config = tmp_path / "experiment.toml"
	config.write_text(
		"\n".join(
			[
				"[experiment]",
				'name = "cli"',
				"seed = 2",
				'results_dir = "results"',
				"[synth]",
				"n_users = 10",
				"[transfer]",
				"range_db = 2.0",
				"step_db = 1.0",
				"[grid]",
				"steps_x = 3",
				"steps_y = 3",
				"[optimize]",
				'methods = ["greedy"]',
				"ns = [1, 2]",
				"",
			]
		),
		encoding="utf-8",
	)

	assert cli_dispatch(["run", "--config", str(config)]) == EXIT_OK

	assert "experiment cli:" in capsys.readouterr().out
	assert (tmp_path / "results" / "sweep.csv").is_file()
	assert (tmp_path / "results" / "manifest.json").is_file()


# ----------------------------
# Runtime
# ----------------------------

def test_debug_env_forces_debug_level(tmp_path, monkeypatch):
	monkeypatch.setenv("HACOVER_DEBUG", "1")

	assert _synth(tmp_path) == EXIT_OK

	assert logging.getLogger(ROOT_LOGGER_NAME).level == logging.DEBUG


def test_log_level_flag(tmp_path):
	assert cli_dispatch(["--out", str(tmp_path), "--log-level", "ERROR", "synth", "--n-users", "5"]) == EXIT_OK

	assert logging.getLogger(ROOT_LOGGER_NAME).level == logging.ERROR
