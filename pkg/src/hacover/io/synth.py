# ---------------------------------------------------------------------------
# File: synth.py
# ---------------------------------------------------------------------------
# Description:
#	Seeded synthetic populations and deviation points.
#
#	Prescriptions are generated in a 2-dimensional affine subspace of the
#	6 bands (overall loudness and high-frequency tilt around a typical gain
#	curve) plus small isotropic noise, so two principal components carry
#	almost all of the variance.
#
# Notes:
#	- Users belong to one of n_profiles base profiles; profile and user
#	  offsets both live in the loudness / tilt plane.
#	- Bilateral users get left / right ear configurations that differ by a
#	  small in-plane asymmetry; the bilateral fits are the ear fits lowered
#	  by BILATERAL_REDUCTION_DB.
#	- Weights are Dirichlet(weight_concentration) draws.
#	- Everything is drawn from np.random.default_rng(seed).
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/13/2026	Initial coding / release
# 02/18/2026	Add synth_deviation_points
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Optional

import numpy as np

from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.models.configuration import FREQUENCIES, Configuration
from hacover.models.deviation import DEFAULT_DEVIATION_MODEL, DeviationModel
from hacover.models.population import Dataset, FitType, LossType, Sex, User


log = get_component_logger("io.synth")

# typical mild-to-moderate insertion gains, dB
BASE_CURVE_DB: tuple[float, ...] = (8.0, 14.0, 22.0, 26.0, 28.0, 26.0)
BILATERAL_REDUCTION_DB = 3.0

_LOUDNESS = np.ones(len(FREQUENCIES)) / math.sqrt(len(FREQUENCIES))
_TILT = np.log2(np.asarray(FREQUENCIES, dtype=float) / 500.0)
_TILT = _TILT - _TILT.mean()
_TILT = _TILT / np.linalg.norm(_TILT)


@dataclass(frozen=True, slots=True)
class SynthSpec:
	"""
	SynthSpec

	n_users:				population size
	bilateral_fraction:		share of users with bilateral loss
	n_profiles:				number of base profiles
	profile_spread_db:		std of profile centers in the loudness / tilt plane
	user_spread_db:			std of users around their profile, in-plane
	noise_db:				isotropic per-band noise std
	ear_asymmetry_db:		in-plane std between left and right ears
	weight_concentration:	Dirichlet parameter for population weights
	male_fraction:			share of male users
	age_range:				inclusive integer age range
	seed:					rng seed
	"""
	n_users: int = 200
	bilateral_fraction: float = 0.5
	n_profiles: int = 4
	profile_spread_db: float = 12.0
	user_spread_db: float = 6.0
	noise_db: float = 0.3
	ear_asymmetry_db: float = 2.0
	weight_concentration: float = 2.0
	male_fraction: float = 0.5
	age_range: tuple[int, int] = (20, 85)
	seed: Optional[int] = None

	def __post_init__(self) -> None:
		if self.n_users < 1:
			raise ParameterError(f"n_users must be >= 1, got {self.n_users}")
		if self.n_profiles < 1:
			raise ParameterError(f"n_profiles must be >= 1, got {self.n_profiles}")
		for name in ("bilateral_fraction", "male_fraction"):
			value = getattr(self, name)
			if not 0.0 <= value <= 1.0:
				raise ParameterError(f"{name} must be in [0, 1], got {value}")
		for name in ("profile_spread_db", "user_spread_db", "noise_db", "ear_asymmetry_db"):
			value = getattr(self, name)
			if not (value >= 0.0 and math.isfinite(value)):
				raise ParameterError(f"{name} must be finite and >= 0, got {value}")
		if not self.weight_concentration > 0.0:
			raise ParameterError(f"weight_concentration must be > 0, got {self.weight_concentration}")
		lo, hi = self.age_range
		if lo > hi:
			raise ParameterError(f"age_range must be (low, high) with low <= high, got {self.age_range}")

	def as_dict(self) -> dict[str, object]:
		return {
			"n_users": self.n_users,
			"bilateral_fraction": self.bilateral_fraction,
			"n_profiles": self.n_profiles,
			"profile_spread_db": self.profile_spread_db,
			"user_spread_db": self.user_spread_db,
			"noise_db": self.noise_db,
			"ear_asymmetry_db": self.ear_asymmetry_db,
			"weight_concentration": self.weight_concentration,
			"male_fraction": self.male_fraction,
			"age_range": list(self.age_range),
			"seed": self.seed,
		}


def _in_plane(rng: np.random.Generator, std: float) -> np.ndarray:
	a, b = rng.normal(0.0, std, size=2)
	return a * _LOUDNESS + b * _TILT


def synth_dataset(spec: SynthSpec) -> Dataset:
	rng = np.random.default_rng(spec.seed)
	base = np.asarray(BASE_CURVE_DB, dtype=float)
	profiles = [base + _in_plane(rng, spec.profile_spread_db) for _ in range(spec.n_profiles)]
	weights = rng.dirichlet(np.full(spec.n_users, spec.weight_concentration))

	def _config(center: np.ndarray) -> Configuration:
		return Configuration.from_array(center + rng.normal(0.0, spec.noise_db, size=center.size))

	users: list[User] = []
	for i in range(spec.n_users):
		center = profiles[int(rng.integers(spec.n_profiles))] + _in_plane(rng, spec.user_spread_db)
		bilateral = bool(rng.random() < spec.bilateral_fraction)
		sex = Sex.MALE if rng.random() < spec.male_fraction else Sex.FEMALE
		age = float(rng.integers(spec.age_range[0], spec.age_range[1] + 1))

		if bilateral:
			left = center + _in_plane(rng, spec.ear_asymmetry_db)
			right = center + _in_plane(rng, spec.ear_asymmetry_db)
			configs = {
				FitType.UNI_LEFT: _config(left),
				FitType.UNI_RIGHT: _config(right),
				FitType.BI_LEFT: _config(left - BILATERAL_REDUCTION_DB),
				FitType.BI_RIGHT: _config(right - BILATERAL_REDUCTION_DB),
			}
			loss_type = LossType.BILATERAL
		else:
			ear = FitType.UNI_LEFT if rng.random() < 0.5 else FitType.UNI_RIGHT
			configs = {ear: _config(center)}
			loss_type = LossType.UNILATERAL

		users.append(
			User(
				id=f"u{i:05d}",
				weight=float(weights[i]),
				loss_type=loss_type,
				age=age,
				sex=sex,
				configs=configs,
			)
		)

	dataset = Dataset(tuple(users)).normalized()
	log.info(
		"synthesized %d users (%d bilateral), seed=%s",
		len(dataset),
		sum(1 for u in dataset.users if u.loss_type is LossType.BILATERAL),
		spec.seed,
	)
	return dataset


def synth_deviation_points(
	n: int,
	model: DeviationModel = DEFAULT_DEVIATION_MODEL,
	seed: Optional[int] = None,
) -> np.ndarray:
	"""
	(n, 2) (low_dev, high_dev) points drawn from model.
	"""
	if n < 2:
		raise ParameterError(f"need at least 2 deviation points, got {n}")
	rng = np.random.default_rng(seed)
	mean = np.asarray(model.mean, dtype=float)
	std = np.asarray(model.std, dtype=float) * model.scale
	return mean + rng.normal(size=(n, 2)) * std
