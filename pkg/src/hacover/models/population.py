# ---------------------------------------------------------------------------
# File: population.py
# ---------------------------------------------------------------------------
# Description:
#	Users and datasets: population weights, demographics and prescribed
#	configurations keyed by fit type.
#
# Notes:
#	- Unilateral users carry exactly one fit type (uni_left or uni_right).
#	- Bilateral users carry all four fit types.
#	- Fit types are always iterated in FIT_TYPE_ORDER; user order is the
#	  dataset order. Coverage code relies on this for reproducible sums.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/16/2026	Add Dataset.subset for subgroup experiments
# 10/18/2026	normalized() keeps weights that already sum to 1
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Callable, Iterator, Mapping
import math

from hacover.core.errors import ValidationError
from hacover.models.configuration import Configuration
from hacover.models.transfer import TransferFunctionBank


# weight sums this close to 1 are taken as already normalized
NORMALIZED_TOL = 1e-12


class LossType(str, Enum):
	UNILATERAL = "unilateral"
	BILATERAL = "bilateral"

	def __str__(self) -> str:
		return self.value


class FitType(str, Enum):
	UNI_LEFT = "uni_left"
	UNI_RIGHT = "uni_right"
	BI_LEFT = "bi_left"
	BI_RIGHT = "bi_right"

	def __str__(self) -> str:
		return self.value


class Sex(str, Enum):
	MALE = "male"
	FEMALE = "female"

	def __str__(self) -> str:
		return self.value


FIT_TYPE_ORDER: tuple[FitType, ...] = (
	FitType.UNI_LEFT,
	FitType.UNI_RIGHT,
	FitType.BI_LEFT,
	FitType.BI_RIGHT,
)

UNILATERAL_FIT_TYPES = frozenset({FitType.UNI_LEFT, FitType.UNI_RIGHT})


@dataclass(frozen=True, slots=True, eq=True)
class User:
	"""
	User

	id:			unique identifier
	weight:		population weight (normalized at dataset level)
	loss_type:	unilateral | bilateral
	age:		years
	sex:		male | female
	configs:	fit type -> prescribed Configuration
	"""
	id: str
	weight: float
	loss_type: LossType
	age: float
	sex: Sex
	configs: Mapping[FitType, Configuration] = field(default_factory=dict)

	def __post_init__(self) -> None:
		if not self.id:
			raise ValidationError("user id must be non-empty")
		if not math.isfinite(self.weight) or self.weight < 0.0:
			raise ValidationError(f"weight must be finite and nonnegative, got {self.weight}", user_id=self.id)

		loss_type = _coerce(LossType, self.loss_type, "loss_type", self.id)
		sex = _coerce(Sex, self.sex, "sex", self.id)
		configs = {_coerce(FitType, k, "fit_type", self.id): v for k, v in self.configs.items()}

		if loss_type is LossType.UNILATERAL:
			if len(configs) != 1:
				raise ValidationError(
					f"unilateral user needs exactly 1 fit type, got {len(configs)}",
					user_id=self.id,
				)
			if not set(configs) <= UNILATERAL_FIT_TYPES:
				raise ValidationError(
					f"unilateral user has bilateral fit type {sorted(str(k) for k in configs)}",
					user_id=self.id,
				)
		elif len(configs) != len(FIT_TYPE_ORDER):
			raise ValidationError(
				f"bilateral user needs exactly {len(FIT_TYPE_ORDER)} fit types, got {len(configs)}",
				user_id=self.id,
			)

		ordered = {ft: configs[ft] for ft in FIT_TYPE_ORDER if ft in configs}
		object.__setattr__(self, "weight", float(self.weight))
		object.__setattr__(self, "age", float(self.age))
		object.__setattr__(self, "loss_type", loss_type)
		object.__setattr__(self, "sex", sex)
		object.__setattr__(self, "configs", MappingProxyType(ordered))

	def __hash__(self) -> int:
		return hash(self.id)

	@property
	def fit_types(self) -> tuple[FitType, ...]:
		return tuple(self.configs.keys())

	def with_weight(self, weight: float) -> "User":
		return replace(self, weight=weight, configs=dict(self.configs))


@dataclass(frozen=True, slots=True)
class Dataset:
	"""
	Dataset

	users:	ordered users; call normalized() before computing coverage.
	"""
	users: tuple[User, ...]

	def __post_init__(self) -> None:
		users = tuple(self.users)
		seen: set[str] = set()
		for u in users:
			if u.id in seen:
				raise ValidationError("duplicate user id", user_id=u.id)
			seen.add(u.id)
		object.__setattr__(self, "users", users)

	def __len__(self) -> int:
		return len(self.users)

	def __iter__(self) -> Iterator[User]:
		return iter(self.users)

	@property
	def weight_sum(self) -> float:
		return math.fsum(u.weight for u in self.users)

	def normalized(self) -> "Dataset":
		"""
		Dataset whose user weights sum to 1.
		Weights already summing to 1 within NORMALIZED_TOL are kept as is.
		"""
		total = self.weight_sum
		if not self.users:
			raise ValidationError("dataset has no users")
		if total <= 0.0:
			raise ValidationError(f"population weights sum to {total}; cannot normalize")
		if abs(total - 1.0) <= NORMALIZED_TOL:
			return self
		return Dataset(tuple(u.with_weight(u.weight / total) for u in self.users))

	def subset(self, keep: Callable[[User], bool]) -> "Dataset":
		"""
		Users matching keep, renormalized within the subset.
		"""
		return Dataset(tuple(u for u in self.users if keep(u))).normalized()

	def prescriptions(self) -> list[tuple[int, FitType, Configuration]]:
		"""
		(user index, fit type, prescription) rows in canonical order.
		"""
		return [
			(ui, ft, cfg)
			for ui, user in enumerate(self.users)
			for ft, cfg in user.configs.items()
		]

	def prescription_count(self) -> int:
		return sum(len(u.configs) for u in self.users)

	def variation_count(self, bank: TransferFunctionBank) -> int:
		return self.prescription_count() * len(bank)


def _coerce(enum_cls: type[Enum], value: object, name: str, user_id: str):
	try:
		return enum_cls(value)
	except ValueError as ex:
		allowed = ", ".join(m.value for m in enum_cls)
		raise ValidationError(f"unknown {name} {value!r} (expected one of: {allowed})", user_id=user_id) from ex
