# ---------------------------------------------------------------------------
# File: test_reduce.py
# ---------------------------------------------------------------------------
# Description:
#	Unit tests for hacover.reduce: PCA fit / projection, candidate grids and
#	bounding-box sources.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 01/29/2026	Initial tests
# 02/11/2026	Grid tests use axis_model()
# 10/18/2026	Isotropic PCA ratios
# ---------------------------------------------------------------------------

from __future__ import annotations

import logging

import numpy as np
import pytest

from hacover.core.errors import DegenerateBoundingBox, FitError, ParameterError
from hacover.models.configuration import configs_to_array
from hacover.reduce.grid import build_grid, build_grid_by_step_size, steps_for_step_size
from hacover.reduce.pca import PcaModel, fit_pca, inverse_transform, inverse_transform_many, transform
from hacover.reduce.sources import BBoxSource, source_configs, source_points
from hacover.tests.toy import axis_grid, axis_model, cfg, dataset, identity_bank, uni


def _planar_configs(n: int = 200, noise: float = 0.05, seed: int = 4) -> np.ndarray:
	rng = np.random.default_rng(seed)
	u = np.array([1.0, 1.0, 1.0, 1.0, 1.0, 1.0]) / np.sqrt(6.0)
	v = np.array([-2.5, -1.5, -0.5, 0.5, 1.5, 2.5])
	v = v / np.linalg.norm(v)
	coef = rng.normal(0.0, [12.0, 5.0], size=(n, 2))
	base = np.array([10.0, 15.0, 20.0, 25.0, 30.0, 28.0])
	return base + coef[:, :1] * u + coef[:, 1:] * v + rng.normal(0.0, noise, size=(n, 6))


# ----------------------------
# PCA
# ----------------------------

def test_pca_recovers_planar_data():
	X = _planar_configs()
	model = fit_pca(X, k=2)

	assert model.explained_variance_ratio.sum() >= 0.99
	assert model.explained_variance_ratio[0] >= model.explained_variance_ratio[1]
	assert model.components @ model.components.T == pytest.approx(np.eye(2), abs=1e-12)

	lifted = inverse_transform_many(model, transform(model, X))
	assert np.max(np.abs(lifted - X)) <= 0.5


def test_pca_on_synthetic_population(synth_small):
	X = configs_to_array([c for _, _, c in synth_small.prescriptions()])
	model = fit_pca(X)

	assert model.explained_variance_ratio.sum() >= 0.9
	lifted = inverse_transform_many(model, transform(model, X))
	assert np.mean(np.abs(lifted - X)) <= 0.5


def test_pca_on_isotropic_data_splits_variance_evenly():
	X = np.random.default_rng(21).normal(20.0, 4.0, size=(20_000, 6))

	two = fit_pca(X)
	full = fit_pca(X, k=6)

	assert two.explained_variance_ratio == pytest.approx([1 / 6, 1 / 6], abs=0.01)
	assert full.explained_variance_ratio == pytest.approx([1 / 6] * 6, abs=0.01)
	assert full.explained_variance_ratio.sum() == pytest.approx(1.0, abs=1e-12)
	assert np.all(np.diff(full.explained_variance_ratio) <= 0.0)


def test_pca_sign_convention_is_deterministic():
	X = _planar_configs()
	a = fit_pca(X)
	b = fit_pca(X[::-1].copy())

	for row in a.components:
		assert row[np.argmax(np.abs(row))] > 0
	assert a.components == pytest.approx(b.components, abs=1e-9)


def test_pca_collinear_data_warns_and_zeroes_second_ratio(caplog):
	X = np.array([[t, 2 * t, 3 * t, 0, 0, 0] for t in range(10)], dtype=float)

	with caplog.at_level(logging.WARNING, logger="hacover.reduce.pca"):
		model = fit_pca(X, k=2)

	assert "rank-deficient" in caplog.text
	assert model.explained_variance_ratio[0] == pytest.approx(1.0)
	assert model.explained_variance_ratio[1] == 0.0


def test_pca_rejects_identical_or_too_few_configs():
	with pytest.raises(FitError):
		fit_pca(np.tile([1.0, 2, 3, 4, 5, 6], (5, 1)))
	with pytest.raises(FitError):
		fit_pca(np.zeros((2, 6)), k=2)
	with pytest.raises(ParameterError):
		fit_pca(_planar_configs(), k=7)


def test_single_point_inverse_transform():
	model = axis_model()

	assert inverse_transform(model, (3.0, -4.0)).gains == (3.0, -4.0, 0.0, 0.0, 0.0, 0.0)
	assert transform(model, cfg(3, -4, 9)) == pytest.approx([3.0, -4.0])


def test_pca_model_dict_round_trip():
	model = fit_pca(_planar_configs())
	again = PcaModel.from_dict(model.as_dict())

	assert again.mean == pytest.approx(model.mean)
	assert again.components == pytest.approx(model.components)

	with pytest.raises(ParameterError):
		PcaModel.from_dict({"mean": [0.0] * 6})


# ----------------------------
# Grids
# ----------------------------

def test_two_by_two_grid_is_the_bounding_box_corners():
	grid = axis_grid(0.0, 30.0, 2, 2)

	assert len(grid) == 4
	assert [c.gains[:2] for c in grid.lifted] == [(0.0, 0.0), (0.0, 30.0), (30.0, 0.0), (30.0, 30.0)]
	assert grid.lower == (0.0, 0.0)
	assert grid.upper == (30.0, 30.0)


def test_grid_indexing_is_x_major():
	grid = axis_grid(0.0, 20.0, 3, 5)

	assert grid.index(1, 2) == 7
	assert grid.position(7) == (1, 2)
	assert grid.points[7] == pytest.approx([10.0, 10.0])
	with pytest.raises(ParameterError):
		grid.index(3, 0)


def test_grid_neighbors():
	grid = axis_grid(0.0, 20.0, 3, 3)

	assert grid.neighbors(0) == [1, 3, 4]
	assert grid.neighbors(1) == [0, 2, 3, 4, 5]
	assert grid.neighbors(4) == [0, 1, 2, 3, 5, 6, 7, 8]


def test_grid_rejects_bad_inputs():
	flat = np.array([[0.0, 1.0], [5.0, 1.0]])

	with pytest.raises(DegenerateBoundingBox):
		build_grid(axis_model(), flat, 3, 3)
	with pytest.raises(ParameterError):
		axis_grid(0.0, 10.0, 1, 3)
	with pytest.raises(ParameterError):
		build_grid(axis_model(), np.array([[0.0, 0.0], [1.0, 1.0]]), 2.5, 3)

	three = PcaModel(mean=np.zeros(6), components=np.eye(6)[:3], explained_variance_ratio=[0.5, 0.3, 0.2])
	with pytest.raises(ParameterError):
		build_grid(three, np.array([[0.0, 0.0], [1.0, 1.0]]), 2, 2)


def test_step_size_converts_to_vertex_counts():
	pts = np.array([[0.0, 0.0], [30.0, 12.0]])

	assert steps_for_step_size(pts, 10.0) == (4, 2)
	assert steps_for_step_size(pts, 7.0) == (5, 2)
	assert steps_for_step_size(pts, 3.0) == (11, 5)

	grid = build_grid_by_step_size(axis_model(), pts, 10.0)
	assert grid.steps == (4, 2)

	with pytest.raises(ParameterError):
		steps_for_step_size(pts, 0.0)


# ----------------------------
# Bounding-box sources
# ----------------------------

def test_sources_select_prescriptions_or_variations(small_bank):
	ds = dataset(uni("a", 1.0, cfg(0, 0)), uni("b", 1.0, cfg(10, 4)))

	presc = source_configs(ds, small_bank, BBoxSource.PRESCRIPTIONS)
	var = source_configs(ds, small_bank, "variations")
	assert presc.shape == (2, 6)
	assert var.shape == (ds.variation_count(small_bank), 6)

	pts = source_points(axis_model(), ds, identity_bank(), BBoxSource.PRESCRIPTIONS)
	assert pts.tolist() == [[0.0, 0.0], [10.0, 4.0]]

	# variations widen the box by the transfer range
	wide = source_points(axis_model(), ds, small_bank)
	assert wide[:, 0].min() == pytest.approx(-2.0)
	assert wide[:, 0].max() == pytest.approx(12.0)
