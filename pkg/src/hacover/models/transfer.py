# ---------------------------------------------------------------------------
# File: transfer.py
# ---------------------------------------------------------------------------
# Description:
#	Transfer functions: log-linear deviations from a prescribed configuration,
#	anchored at 500 Hz and 4000 Hz, and the bank of all anchor pairs.
#
# Notes:
#	- Interpolation axis is log2(frequency). 6000 Hz is extrapolated on the
#	  same anchor line (no clamping).
#	- Anchor levels are (k - n) * step for k = 0..2n, n = range / step, so
#	  the zero anchor is exact and the bank always holds one identity function.
#	- Bank order: anchor_low outer loop, anchor_high inner loop (ascending).
#	- A freshly built bank carries uniform placeholder weights; the Gaussian
#	  weights come from deviation.variation_weights().
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/04/2026	Exact anchors at both ends of the line
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence
import math

import numpy as np

from hacover.core.errors import ParameterError
from hacover.models.configuration import FREQUENCIES, Configuration


LOW_ANCHOR_HZ = 500
HIGH_ANCHOR_HZ = 4000

LOW_BAND_HZ: tuple[int, ...] = (500, 1000)
HIGH_BAND_HZ: tuple[int, ...] = (2000, 3000, 4000)

DEFAULT_RANGE_DB = 15.0
DEFAULT_STEP_DB = 3.75


@dataclass(frozen=True, slots=True)
class TransferFunction:
	"""
	TransferFunction

	anchor_low:		deviation (dB) at 500 Hz
	anchor_high:	deviation (dB) at 4000 Hz
	values:			deviation (dB) at each of frequencies
	frequencies:	Hz, strictly increasing, includes both anchors
	"""
	anchor_low: float
	anchor_high: float
	values: tuple[float, ...]
	frequencies: tuple[int, ...] = FREQUENCIES

	def value_at(self, freq: int) -> float:
		try:
			return self.values[self.frequencies.index(int(freq))]
		except ValueError as ex:
			raise ParameterError(f"frequency {freq} not in {self.frequencies}") from ex

	@property
	def is_identity(self) -> bool:
		return all(v == 0.0 for v in self.values)


@dataclass(frozen=True, slots=True)
class TransferFunctionBank:
	"""
	TransferFunctionBank

	functions:	ordered transfer functions
	weights:	likelihood weight per function, summing to 1
	"""
	functions: tuple[TransferFunction, ...]
	weights: tuple[float, ...]

	def __post_init__(self) -> None:
		if not self.functions:
			raise ParameterError("transfer bank is empty")
		if len(self.weights) != len(self.functions):
			raise ParameterError(
				f"transfer bank has {len(self.functions)} functions but {len(self.weights)} weights"
			)
		if any(w < 0.0 or not math.isfinite(w) for w in self.weights):
			raise ParameterError("transfer weights must be finite and nonnegative")

	def __len__(self) -> int:
		return len(self.functions)

	@property
	def frequencies(self) -> tuple[int, ...]:
		return self.functions[0].frequencies

	def values_array(self) -> np.ndarray:
		"""
		(J, bands) array of deviations.
		"""
		return np.asarray([tf.values for tf in self.functions], dtype=float)

	def weights_array(self) -> np.ndarray:
		return np.asarray(self.weights, dtype=float)

	def identity_index(self) -> int:
		for i, tf in enumerate(self.functions):
			if tf.is_identity:
				return i
		raise ParameterError("transfer bank has no identity function")

	def with_weights(self, weights: Sequence[float] | np.ndarray) -> "TransferFunctionBank":
		return replace(self, weights=tuple(float(w) for w in weights))


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def anchor_levels(range_db: float, step_db: float) -> tuple[float, ...]:
	"""
	Anchor lattice -range..+range in step increments (both ends included).
	"""
	if not (range_db > 0 and step_db > 0):
		raise ParameterError(f"range and step must be positive, got range={range_db}, step={step_db}")

	ratio = range_db / step_db
	n = round(ratio)
	if n < 1 or abs(ratio - n) > 1e-9 * max(1.0, ratio):
		raise ParameterError(
			f"range {range_db} dB is not an integer multiple of step {step_db} dB"
		)
	return tuple((k - n) * step_db for k in range(2 * n + 1))


def log_linear_values(
	anchor_low: float,
	anchor_high: float,
	frequencies: Sequence[int] = FREQUENCIES,
) -> tuple[float, ...]:
	"""
	Evaluate the line through (500, anchor_low) and (4000, anchor_high) on a
	log2 frequency axis.
	"""
	span = math.log2(HIGH_ANCHOR_HZ / LOW_ANCHOR_HZ)
	out: list[float] = []
	for f in frequencies:
		t = math.log2(f / LOW_ANCHOR_HZ) / span
		out.append(anchor_low * (1.0 - t) + anchor_high * t)
	return tuple(out)


def build_transfer_bank(
	range_db: float = DEFAULT_RANGE_DB,
	step_db: float = DEFAULT_STEP_DB,
	frequencies: Sequence[int] = FREQUENCIES,
) -> TransferFunctionBank:
	"""
	Build one transfer function per (anchor_low, anchor_high) pair.

	Defaults (15 dB, 3.75 dB) yield 9 anchor levels and 81 functions.
	"""
	freqs = tuple(int(f) for f in frequencies)
	if len(freqs) != len(FREQUENCIES):
		raise ParameterError(f"expected {len(FREQUENCIES)} frequencies, got {len(freqs)}")
	if any(b <= a for a, b in zip(freqs, freqs[1:])):
		raise ParameterError(f"frequencies must be strictly increasing: {freqs}")
	for anchor in (LOW_ANCHOR_HZ, HIGH_ANCHOR_HZ):
		if anchor not in freqs:
			raise ParameterError(f"frequencies must include the {anchor} Hz anchor: {freqs}")

	levels = anchor_levels(range_db, step_db)
	functions = tuple(
		TransferFunction(
			anchor_low=lo,
			anchor_high=hi,
			values=log_linear_values(lo, hi, freqs),
			frequencies=freqs,
		)
		for lo in levels
		for hi in levels
	)
	uniform = 1.0 / len(functions)
	return TransferFunctionBank(functions=functions, weights=(uniform,) * len(functions))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def apply_transfer(config: Configuration, tf: TransferFunction) -> Configuration:
	"""
	Preferred configuration = prescription + deviation, band by band.
	"""
	if tf.frequencies != FREQUENCIES:
		raise ParameterError(
			f"transfer function frequencies {tf.frequencies} do not match configuration bands {FREQUENCIES}"
		)
	return Configuration(tuple(g + d for g, d in zip(config.gains, tf.values)))


def deviation_features(tf: TransferFunction) -> tuple[float, float]:
	"""
	(low_dev, high_dev): mean deviation over 500/1000 Hz and 2000/3000/4000 Hz.
	"""
	low = [tf.value_at(f) for f in LOW_BAND_HZ if f in tf.frequencies]
	high = [tf.value_at(f) for f in HIGH_BAND_HZ if f in tf.frequencies]
	if not low or not high:
		raise ParameterError(f"transfer function frequencies {tf.frequencies} miss a deviation band")
	return (sum(low) / len(low), sum(high) / len(high))
