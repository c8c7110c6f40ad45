# ---------------------------------------------------------------------------
# File: test_coverage.py
# ---------------------------------------------------------------------------
# Description:
#	Unit tests for hacover.coverage: ball test, per-fit-type mass, population
#	coverage and the precomputed bitset matrix.
#
# Notes:
#	- Toy instances use identity_bank() / two_function_bank() so expected
#	  values can be worked out by hand.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 01/27/2026	Initial tests
# 02/04/2026	Matrix / direct agreement over all subsets
# 10/18/2026	Matrix / reference agreement across seeded populations
# ---------------------------------------------------------------------------

from __future__ import annotations

import itertools

import numpy as np
import pytest

from hacover.core.errors import MissingFitType, ParameterError
from hacover.coverage.ball import is_covered
from hacover.coverage.matrix import incremental_pc, precompute_matrix
from hacover.coverage.params import CoverageParams, PresetSet
from hacover.coverage.population import VariationTable, population_coverage, user_covered_mass
from hacover.io.synth import SynthSpec, synth_dataset
from hacover.models.configuration import Configuration
from hacover.models.deviation import DeviationModel, variation_weights
from hacover.models.population import FitType
from hacover.tests.toy import bi, cfg, dataset, identity_bank, two_function_bank, uni


def _candidates(ds, count: int) -> list[Configuration]:
	rows = ds.prescriptions()
	step = max(1, len(rows) // count)
	return [c for _, _, c in rows[::step]][:count]


def _reference_coverage(ds, presets, bank, params) -> float:
	"""
	Straight per-user evaluation of the coverage definition.
	"""
	p = np.asarray([c.gains for c in presets])
	offsets = bank.values_array()
	weights = bank.weights_array()
	total = 0.0
	for user in ds:
		ok = True
		for config in user.configs.values():
			variations = config.as_array() + offsets
			dist = np.max(np.abs(variations[:, None, :] - p[None, :, :]), axis=2).min(axis=1)
			mass = weights[dist <= params.radius + 1e-9].sum()
			if mass + 1e-12 < params.gamma:
				ok = False
				break
		if ok:
			total += user.weight
	return total


def _reference_coverage_of_subsets(ds, cands, bank, params) -> np.ndarray:
	"""
	Coverage definition evaluated for every candidate subset at once;
	entry m is the subset whose bits are set in m.
	"""
	p = np.asarray([c.gains for c in cands])
	offsets = bank.values_array()
	weights = bank.weights_array()
	masks = np.arange(1 << len(cands))
	chosen = ((masks[:, None] >> np.arange(len(cands))) & 1).astype(float)
	total = np.zeros(masks.size)
	for user in ds:
		ok = np.ones(masks.size, dtype=bool)
		for config in user.configs.values():
			variations = config.as_array() + offsets
			inside = np.max(np.abs(variations[:, None, :] - p[None, :, :]), axis=2) <= params.radius + 1e-9
			mass = weights @ (inside.astype(float) @ chosen.T > 0)
			ok &= mass + 1e-12 >= params.gamma
		total += np.where(ok, user.weight, 0.0)
	return total


# ----------------------------
# Params / presets
# ----------------------------

def test_coverage_params_validate_ranges():
	with pytest.raises(ParameterError):
		CoverageParams(radius=0.0)
	with pytest.raises(ParameterError):
		CoverageParams(gamma=0.0)
	with pytest.raises(ParameterError):
		CoverageParams(gamma=1.5)
	assert CoverageParams(gamma=1.0).gamma == 1.0


def test_preset_set_rejects_duplicates_and_from_configs_drops_them():
	with pytest.raises(ParameterError):
		PresetSet((cfg(1), cfg(2), cfg(1)))

	ps = PresetSet.from_configs([cfg(1), cfg(2), cfg(1 + 1e-12)])
	assert len(ps) == 2


# ----------------------------
# Ball test
# ----------------------------

def test_ball_boundary_is_inclusive():
	assert is_covered(cfg(5, -5, 5), [cfg()], 5.0) is True
	assert is_covered(cfg(5.01), [cfg()], 5.0) is False
	assert is_covered(cfg(5.01), [cfg(), cfg(10)], 5.0) is True


def test_empty_preset_set_is_an_error():
	with pytest.raises(ParameterError):
		is_covered(cfg(), [], 5.0)


# ----------------------------
# Per fit type mass
# ----------------------------

def test_user_covered_mass_counts_transfer_weights():
	user = uni("u1", 1.0, cfg())
	bank = two_function_bank(0.75, 10.0)
	params = CoverageParams()

	assert user_covered_mass(user, FitType.UNI_LEFT, [cfg()], bank, params) == pytest.approx(0.75)
	assert user_covered_mass(user, "uni_left", [cfg(), cfg(10, 10, 10, 10, 10, 10)], bank, params) == pytest.approx(1.0)


def test_user_covered_mass_missing_fit_type():
	user = uni("u1", 1.0, cfg())

	with pytest.raises(MissingFitType):
		user_covered_mass(user, FitType.BI_LEFT, [cfg()], identity_bank(), CoverageParams())
	with pytest.raises(KeyError):
		user_covered_mass(user, "sideways", [cfg()], identity_bank(), CoverageParams())


# ----------------------------
# Population coverage
# ----------------------------

def test_single_preset_covers_heavy_user_only():
	ds = dataset(uni("a", 0.9, cfg()), uni("b", 0.1, cfg(20)))

	report = population_coverage(ds, [cfg()], identity_bank(), CoverageParams())

	assert report.population_coverage == pytest.approx(0.9)
	assert report.covered_ids() == ["a"]


def test_gamma_threshold_is_inclusive():
	ds = dataset(uni("a", 1.0, cfg()))
	bank = two_function_bank(0.75, 10.0)

	strict = population_coverage(ds, [cfg()], bank, CoverageParams(gamma=0.8))
	exact = population_coverage(ds, [cfg()], bank, CoverageParams(gamma=0.75))

	assert strict.population_coverage == 0.0
	assert strict.per_user["a"].masses[FitType.UNI_LEFT] == pytest.approx(0.75)
	assert exact.population_coverage == pytest.approx(1.0)


def test_bilateral_user_needs_every_fit_type():
	user = bi("b", 1.0, [cfg(), cfg(), cfg(), cfg(30)])
	ds = dataset(user)

	report = population_coverage(ds, [cfg()], identity_bank(), CoverageParams())
	masses = report.per_user["b"].masses

	assert report.population_coverage == 0.0
	assert masses[FitType.UNI_LEFT] == 1.0
	assert masses[FitType.BI_RIGHT] == 0.0

	both = population_coverage(ds, [cfg(), cfg(30)], identity_bank(), CoverageParams())
	assert both.population_coverage == pytest.approx(1.0)


def test_coverage_is_monotone_in_presets(synth_small, small_bank, params):
	cands = _candidates(synth_small, 6)

	values = [
		population_coverage(synth_small, cands[:k], small_bank, params).population_coverage
		for k in range(1, len(cands) + 1)
	]

	assert all(b >= a for a, b in zip(values, values[1:]))
	assert all(0.0 <= v <= 1.0 for v in values)


def test_report_as_dict_lists_every_user(synth_small, small_bank, params):
	report = population_coverage(synth_small, _candidates(synth_small, 3), small_bank, params)
	data = report.as_dict()

	assert data["params"] == {"radius": 5.0, "gamma": 0.8}
	assert [row["user_id"] for row in data["per_user"]] == [u.id for u in synth_small]


def test_threaded_coverage_matches_serial(synth_small, small_bank, params):
	cands = _candidates(synth_small, 5)

	serial = population_coverage(synth_small, cands, small_bank, params, workers=1)
	threaded = population_coverage(synth_small, cands, small_bank, params, workers=4)

	assert serial.population_coverage == threaded.population_coverage


def test_direct_path_matches_reference_definition(synth_small, small_bank, params):
	cands = _candidates(synth_small, 8)

	for r in range(1, len(cands) + 1):
		for subset in itertools.combinations(cands, r):
			got = population_coverage(synth_small, list(subset), small_bank, params).population_coverage
			assert got == pytest.approx(_reference_coverage(synth_small, subset, small_bank, params), abs=1e-12)


# ----------------------------
# Coverage matrix
# ----------------------------

def test_matrix_matches_direct_path_on_every_subset(synth_small, small_bank, params):
	cands = _candidates(synth_small, 12)
	matrix = precompute_matrix(cands, synth_small, small_bank, params)

	assert incremental_pc(matrix, [], synth_small, params) == 0.0
	for mask in range(1, 1 << len(cands)):
		selected = [k for k in range(len(cands)) if mask >> k & 1]
		direct = population_coverage(synth_small, [cands[k] for k in selected], small_bank, params)
		assert incremental_pc(matrix, selected, synth_small, params) == direct.population_coverage


@pytest.mark.parametrize("seed", range(20))
def test_matrix_matches_reference_on_every_subset_across_populations(small_bank, seed):
	ds = synth_dataset(SynthSpec(n_users=15, seed=seed))
	params = CoverageParams(radius=5.0, gamma=0.3)
	cands = _candidates(ds, 12)
	matrix = precompute_matrix(cands, ds, small_bank, params)

	expected = _reference_coverage_of_subsets(ds, cands, small_bank, params)

	assert expected.max() > 0.0
	for mask in range(1 << len(cands)):
		selected = [k for k in range(len(cands)) if mask >> k & 1]
		assert incremental_pc(matrix, selected, ds, params) == pytest.approx(expected[mask], abs=1e-12)


def test_matrix_layout_and_row_counts(synth_small, small_bank, params):
	cands = _candidates(synth_small, 4)
	matrix = precompute_matrix(cands, synth_small, small_bank, params)
	table = VariationTable.build(synth_small, small_bank)

	assert len(matrix) == 4
	assert matrix.n_variations == synth_small.variation_count(small_bank) == table.n_variations
	# a candidate equal to a prescription always covers that prescription's identity variation
	assert all(matrix.covered_count(k) >= 1 for k in range(4))
	assert matrix.lifted([2])[0] == cands[2]

	with pytest.raises(ParameterError):
		matrix.row_mask(4)
	with pytest.raises(ParameterError):
		matrix.coverage_of([0, 9], params.gamma)


def test_matrix_reweighting_matches_fresh_matrix(synth_small, small_bank, params):
	cands = _candidates(synth_small, 6)
	matrix = precompute_matrix(cands, synth_small, small_bank, params)
	wide = variation_weights(small_bank, DeviationModel(mean=(1.0, -1.0), std=(8.0, 8.0)))

	fresh = precompute_matrix(cands, synth_small, wide, params)
	reweighted = matrix.reweighted(wide)

	for selected in ([0], [1, 3], [0, 2, 4, 5]):
		assert reweighted.coverage_of(selected, params.gamma) == fresh.coverage_of(selected, params.gamma)

	with pytest.raises(ParameterError):
		matrix.reweighted(identity_bank())


def test_incremental_pc_rejects_mismatched_inputs(synth_small, small_bank, params):
	matrix = precompute_matrix(_candidates(synth_small, 3), synth_small, small_bank, params)

	with pytest.raises(ParameterError):
		incremental_pc(matrix, [0], synth_small, CoverageParams(radius=4.0))
	with pytest.raises(ParameterError):
		incremental_pc(matrix, [0], synth_small.subset(lambda u: u.id != synth_small.users[0].id), params)


def test_precompute_reports_duration(synth_small, small_bank, params, memory_sink):
	precompute_matrix(_candidates(synth_small, 3), synth_small, small_bank, params)

	names = [m.name for m in memory_sink.metrics]
	assert "coverage.precompute.duration_ms" in names


def test_precompute_needs_candidates(synth_small, small_bank, params):
	with pytest.raises(ParameterError):
		precompute_matrix([], synth_small, small_bank, params)
