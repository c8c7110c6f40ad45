# ---------------------------------------------------------------------------
# File: conftest.py
# ---------------------------------------------------------------------------
# Description:
#	Shared fixtures for the hacover test suite.
# ---------------------------------------------------------------------------

from __future__ import annotations

import logging

import pytest

from hacover.core.logging import ROOT_LOGGER_NAME, _reset_logging_for_tests
from hacover.core.telemetry import MemorySink, Telemetry, set_telemetry
from hacover.coverage.params import CoverageParams
from hacover.io.synth import SynthSpec, synth_dataset
from hacover.models.deviation import DEFAULT_DEVIATION_MODEL, variation_weights
from hacover.models.transfer import build_transfer_bank


@pytest.fixture(autouse=True)
def _quiet_runtime(monkeypatch):
	"""
	Every test starts with telemetry off and no worker env override.
	"""
	monkeypatch.delenv("HACOVER_THREADS", raising=False)
	monkeypatch.delenv("HACOVER_DEBUG", raising=False)
	set_telemetry(Telemetry(False, MemorySink()))
	yield
	set_telemetry(Telemetry(False, MemorySink()))
	_reset_logging_for_tests()
	logger = logging.getLogger(ROOT_LOGGER_NAME)
	for h in list(logger.handlers):
		logger.removeHandler(h)
		h.close()
	logger.setLevel(logging.NOTSET)


@pytest.fixture
def memory_sink() -> MemorySink:
	sink = MemorySink()
	set_telemetry(Telemetry(True, sink))
	return sink


@pytest.fixture
def params() -> CoverageParams:
	return CoverageParams(radius=5.0, gamma=0.8)


@pytest.fixture
def small_bank():
	"""
	25 transfer functions (+/-2 dB in 1 dB steps) with Gaussian weights.
	"""
	return variation_weights(build_transfer_bank(2.0, 1.0), DEFAULT_DEVIATION_MODEL)


@pytest.fixture
def default_bank():
	return variation_weights(build_transfer_bank(), DEFAULT_DEVIATION_MODEL)


@pytest.fixture
def synth_small():
	return synth_dataset(SynthSpec(n_users=20, seed=11))
