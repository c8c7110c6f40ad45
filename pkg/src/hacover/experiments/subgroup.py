# ---------------------------------------------------------------------------
# File: subgroup.py
# ---------------------------------------------------------------------------
# Description:
#	Demographic subgroup analysis: how well do presets optimized for the
#	whole population serve a subgroup, compared with presets optimized for
#	that subgroup alone?
#
# Notes:
#	- A subgroup is a conjunction of (field, operator, value) predicates.
#	- Subgroup weights are renormalized to sum 1 within the subgroup.
#	- Both preset sets are chosen from the same candidate grid.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/15/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
import math
import operator
import re
from typing import Any, Callable, Optional, Sequence

from hacover.core.errors import EmptySubgroup, ParameterError
from hacover.core.logging import get_component_logger
from hacover.coverage.matrix import CoverageMatrix, precompute_matrix
from hacover.coverage.params import CoverageParams
from hacover.coverage.population import population_coverage
from hacover.experiments.sweep import check_ns
from hacover.models.population import Dataset, User
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.genetic import GaParams
from hacover.optimize.select import select_presets
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("experiments.subgroup")

OPERATORS: dict[str, Callable[[Any, Any], bool]] = {
	"==": operator.eq,
	"!=": operator.ne,
	"<": operator.lt,
	"<=": operator.le,
	">": operator.gt,
	">=": operator.ge,
}

NUMERIC_FIELDS = frozenset({"age", "weight"})
TEXT_FIELDS = frozenset({"sex", "loss_type", "id"})

_PREDICATE_RE = re.compile(r"^\s*(\w+)\s*(==|!=|<=|>=|<|>)\s*(.+?)\s*$")


@dataclass(frozen=True, slots=True)
class Predicate:
	field: str
	op: str
	value: Any

	def __post_init__(self) -> None:
		if self.op not in OPERATORS:
			raise ParameterError(f"unknown operator {self.op!r}; expected one of {list(OPERATORS)}")
		if self.field in NUMERIC_FIELDS:
			try:
				object.__setattr__(self, "value", float(self.value))
			except (TypeError, ValueError) as ex:
				raise ParameterError(f"{self.field} needs a numeric value, got {self.value!r}") from ex
		elif self.field in TEXT_FIELDS:
			object.__setattr__(self, "value", str(self.value))
		else:
			raise ParameterError(
				f"unknown subgroup field {self.field!r}; expected one of {sorted(NUMERIC_FIELDS | TEXT_FIELDS)}"
			)

	def __call__(self, user: User) -> bool:
		actual = getattr(user, self.field)
		if self.field in TEXT_FIELDS:
			actual = str(actual)
		return bool(OPERATORS[self.op](actual, self.value))

	def __str__(self) -> str:
		value = self.value
		if isinstance(value, float) and value.is_integer():
			value = int(value)
		return f"{self.field} {self.op} {value}"

	@classmethod
	def parse(cls, text: str) -> "Predicate":
		"""
		Parse "age > 65" / "sex==male".
		"""
		m = _PREDICATE_RE.match(text)
		if not m:
			raise ParameterError(f"cannot parse predicate {text!r}; expected '<field> <op> <value>'")
		return cls(m.group(1), m.group(2), m.group(3))


@dataclass(frozen=True, slots=True)
class Subgroup:
	name: str
	predicates: tuple[Predicate, ...]

	def matches(self, user: User) -> bool:
		return all(p(user) for p in self.predicates)

	def __str__(self) -> str:
		return " and ".join(str(p) for p in self.predicates) or "all users"

	@classmethod
	def parse(cls, text: str, name: Optional[str] = None) -> "Subgroup":
		"""
		Parse "sex == male and age > 65".
		"""
		parts = [p for p in re.split(r"\s+and\s+", text.strip()) if p]
		return cls(name or text.strip(), tuple(Predicate.parse(p) for p in parts))


@dataclass(frozen=True, slots=True)
class SubgroupRow:
	"""
	weight_share:		population weight of the subgroup in the full dataset
	global_coverage:	presets optimized on everyone, evaluated on the subgroup
	subgroup_coverage:	presets optimized on the subgroup only
	"""
	subgroup: str
	n: int
	method: str
	users: int
	weight_share: float
	global_coverage: float
	subgroup_coverage: float

	@property
	def improvement(self) -> float:
		return self.subgroup_coverage - self.global_coverage

	def as_row(self) -> dict[str, object]:
		return {
			"subgroup": self.subgroup,
			"N": self.n,
			"method": self.method,
			"users": self.users,
			"weight_share": self.weight_share,
			"global_coverage": self.global_coverage,
			"subgroup_coverage": self.subgroup_coverage,
			"improvement": self.improvement,
		}


def sex_age_subgroups(age_split: float = 65.0) -> list[Subgroup]:
	"""
	The four sex x age subgroups (age <= split, age > split).
	"""
	out: list[Subgroup] = []
	for sex in ("male", "female"):
		for op, label in (("<=", "le"), (">", "gt")):
			split = int(age_split) if float(age_split).is_integer() else age_split
			out.append(
				Subgroup(
					name=f"{sex}_age_{label}_{split}",
					predicates=(Predicate("sex", "==", sex), Predicate("age", op, age_split)),
				)
			)
	return out


def subgroup_dataset(dataset: Dataset, subgroup: Subgroup) -> Dataset:
	members = [u for u in dataset.users if subgroup.matches(u)]
	if not members:
		raise EmptySubgroup(subgroup)
	return dataset.subset(subgroup.matches)


def subgroup_analysis(
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	grid: CandidateGrid,
	subgroups: Sequence[Subgroup],
	ns: Sequence[int],
	*,
	method: str = "ga",
	seed: Optional[int] = None,
	ga: GaParams | None = None,
	matrix: CoverageMatrix | None = None,
	workers: int | None = None,
) -> list[SubgroupRow]:
	if not subgroups:
		raise ParameterError("no subgroups given")
	ns = check_ns(ns)
	parts = [(sg, subgroup_dataset(dataset, sg)) for sg in subgroups]

	if matrix is None and method != "kmeans":
		matrix = precompute_matrix(grid.lifted, dataset, bank, params, workers=workers)
	global_presets = {
		n: select_presets(
			method, grid, dataset, bank, params, n, seed=seed, ga=ga, matrix=matrix, workers=workers
		).presets
		for n in sorted(set(ns))
	}

	rows: list[SubgroupRow] = []
	for sg, sub in parts:
		share = math.fsum(u.weight for u in dataset.users if sg.matches(u))
		sub_matrix = None
		if method != "kmeans":
			sub_matrix = precompute_matrix(grid.lifted, sub, bank, params, workers=workers)
		for n in sorted(set(ns)):
			on_subgroup = population_coverage(sub, global_presets[n], bank, params, workers=workers)
			tuned = select_presets(
				method, grid, sub, bank, params, n, seed=seed, ga=ga, matrix=sub_matrix, workers=workers
			)
			rows.append(
				SubgroupRow(
					subgroup=sg.name,
					n=n,
					method=method,
					users=len(sub),
					weight_share=share,
					global_coverage=on_subgroup.population_coverage,
					subgroup_coverage=tuned.coverage,
				)
			)
			log.info(
				"subgroup %s N=%d: global presets %.6f, subgroup presets %.6f",
				sg.name,
				n,
				on_subgroup.population_coverage,
				tuned.coverage,
			)
	return rows
