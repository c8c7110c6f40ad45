# ---------------------------------------------------------------------------
# File: configuration.py
# ---------------------------------------------------------------------------
# Description:
#	Configuration: a 6-band insertion-gain vector (dB).
#
# Notes:
#	- Bands are fixed at FREQUENCIES; other frequency sets are rejected.
#	- Indexing by frequency: cfg[2000] -> gain at 2 kHz.
#	- Instances are immutable and hashable.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence
import math

import numpy as np

from hacover.core.errors import ParameterError


FREQUENCIES: tuple[int, ...] = (500, 1000, 2000, 3000, 4000, 6000)
N_BANDS = len(FREQUENCIES)

_FREQ_INDEX: dict[int, int] = {f: i for i, f in enumerate(FREQUENCIES)}


def frequency_index(freq: int) -> int:
	try:
		return _FREQ_INDEX[int(freq)]
	except (KeyError, ValueError, TypeError) as ex:
		raise ParameterError(f"unsupported frequency: {freq!r} (expected one of {FREQUENCIES})") from ex


@dataclass(frozen=True, slots=True)
class Configuration:
	"""
	Configuration

	gains: six dB values ordered as FREQUENCIES.
	"""
	gains: tuple[float, ...]

	def __post_init__(self) -> None:
		gains = tuple(float(g) for g in self.gains)
		if len(gains) != N_BANDS:
			raise ParameterError(f"configuration needs {N_BANDS} gains, got {len(gains)}")
		if not all(math.isfinite(g) for g in gains):
			raise ParameterError(f"configuration gains must be finite: {gains}")
		object.__setattr__(self, "gains", gains)

	@classmethod
	def from_array(cls, values: Iterable[float] | np.ndarray) -> "Configuration":
		return cls(tuple(float(v) for v in np.asarray(values, dtype=float).ravel()))

	def __getitem__(self, freq: int) -> float:
		return self.gains[frequency_index(freq)]

	def __iter__(self) -> Iterator[float]:
		return iter(self.gains)

	def __len__(self) -> int:
		return N_BANDS

	def as_array(self) -> np.ndarray:
		return np.asarray(self.gains, dtype=float)

	def as_dict(self) -> dict[str, float]:
		return {f"g{f}": g for f, g in zip(FREQUENCIES, self.gains)}


def configs_to_array(configs: Sequence[Configuration]) -> np.ndarray:
	"""
	Stack configurations into an (n, 6) float array.
	"""
	if not configs:
		return np.empty((0, N_BANDS), dtype=float)
	return np.asarray([c.gains for c in configs], dtype=float)
