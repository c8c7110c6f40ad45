# ---------------------------------------------------------------------------
# File: test_config.py
# ---------------------------------------------------------------------------
# Description:
#	Unit tests for hacover.core.config and hacover.core.errors.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 01/22/2026	Initial tests
# ---------------------------------------------------------------------------

from __future__ import annotations

import pytest

from hacover.core.config import AppConfig, ordered_map, resolve_workers, truthy_env
from hacover.core.errors import (
	BruteForceRefused,
	EmptySubgroup,
	MissingFitType,
	ParameterError,
	ValidationError,
)


def test_appconfig_flat_key_wins_over_dotted():
	cfg = AppConfig({"logging.level": "DEBUG", "logging": {"level": "INFO"}})

	assert cfg.get("logging.level") == "DEBUG"


def test_appconfig_dotted_lookup_and_default():
	cfg = AppConfig({"sweep": {"ga": {"population_size": 40}}})

	assert cfg.get("sweep.ga.population_size") == 40
	assert cfg.get("sweep.ga.missing", 7) == 7
	assert cfg.get("nope.deeper") is None
	assert AppConfig().get("anything", "d") == "d"


def test_appconfig_section():
	cfg = AppConfig({"slider": {"steps_x": 3}, "scalar": 1})

	assert cfg.section("slider").get("steps_x") == 3
	assert cfg.section("scalar").get("x") is None
	assert cfg.section("absent").options == {}


def test_truthy_env(monkeypatch):
	monkeypatch.setenv("HACOVER_TEST_FLAG", "Yes")
	assert truthy_env("HACOVER_TEST_FLAG") is True

	monkeypatch.setenv("HACOVER_TEST_FLAG", "off")
	assert truthy_env("HACOVER_TEST_FLAG") is False

	monkeypatch.delenv("HACOVER_TEST_FLAG")
	assert truthy_env("HACOVER_TEST_FLAG") is False


def test_resolve_workers_precedence(monkeypatch):
	assert resolve_workers() == 1

	monkeypatch.setenv("HACOVER_THREADS", "3")
	assert resolve_workers() == 3
	assert resolve_workers(2) == 2


def test_resolve_workers_rejects_bad_values(monkeypatch):
	with pytest.raises(ParameterError):
		resolve_workers(0)

	monkeypatch.setenv("HACOVER_THREADS", "many")
	with pytest.raises(ParameterError):
		resolve_workers()


def test_ordered_map_keeps_input_order_with_threads():
	def work(i: int) -> int:
		return i * i

	assert ordered_map(work, range(50), workers=4) == [i * i for i in range(50)]
	assert ordered_map(work, [], workers=4) == []


def test_validation_error_prefixes_line_and_user():
	err = ValidationError("bad weight", user_id="u7", line=12)

	assert str(err) == "line 12: user 'u7': bad weight"
	assert err.user_id == "u7"
	assert err.line == 12


def test_missing_fit_type_is_key_error_with_readable_message():
	err = MissingFitType("u1", "bi_left")

	assert isinstance(err, KeyError)
	assert str(err) == "user 'u1' has no configuration for fit type bi_left"


def test_brute_force_refused_carries_counts():
	err = BruteForceRefused(10_000, 500)

	assert isinstance(err, ParameterError)
	assert isinstance(err, ValueError)
	assert err.combinations == 10_000
	assert "10000" in str(err)


def test_empty_subgroup_names_predicate():
	assert "age > 200" in str(EmptySubgroup("age > 200"))
