# ---------------------------------------------------------------------------
# File: dataset.py
# ---------------------------------------------------------------------------
# Description:
#	Dataset CSV ingestion and export.
#
#	Schema (one row per user and fit type):
#		user_id,weight,loss_type,fit_type,g500,g1000,g2000,g3000,g4000,g6000,age,sex
#
# Notes:
#	- Ingestion is total: every malformed input raises ValidationError naming
#	  the line and, when known, the user.
#	- weight, loss_type, age and sex must agree across a user's rows.
#	- Weights are normalized to sum 1 at load; a WARNING is logged when the
#	  raw sum is more than 1e-6 away from 1.
#	- Floats are written with repr() so save -> load is lossless.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/12/2026	Initial coding / release
# 02/13/2026	Add save_dataset
# 10/18/2026	Normalization tolerance lives on Dataset.normalized
# ---------------------------------------------------------------------------

from __future__ import annotations

import csv
import math
from pathlib import Path

from hacover.core.errors import ValidationError
from hacover.core.logging import get_component_logger
from hacover.models.configuration import FREQUENCIES, Configuration
from hacover.models.population import Dataset, User


log = get_component_logger("io.dataset")

GAIN_COLUMNS: tuple[str, ...] = tuple(f"g{f}" for f in FREQUENCIES)
COLUMNS: tuple[str, ...] = ("user_id", "weight", "loss_type", "fit_type", *GAIN_COLUMNS, "age", "sex")

WEIGHT_SUM_WARN_TOL = 1e-6


def _float(row: dict[str, str], column: str, line: int, user_id: str | None) -> float:
	raw = (row.get(column) or "").strip()
	try:
		value = float(raw)
	except ValueError:
		raise ValidationError(f"column {column!r} is not a number: {raw!r}", user_id=user_id, line=line) from None
	if not math.isfinite(value):
		raise ValidationError(f"column {column!r} must be finite, got {raw!r}", user_id=user_id, line=line)
	return value


def load_dataset(path: str | Path) -> Dataset:
	p = Path(path)
	if not p.is_file():
		raise ValidationError(f"dataset file not found: {p}")

	try:
		with p.open(newline="", encoding="utf-8") as fh:
			reader = csv.DictReader(fh)
			header = tuple(reader.fieldnames or ())
			missing = [c for c in COLUMNS if c not in header]
			if missing:
				raise ValidationError(f"{p.name}: missing columns {missing}", line=1)
			extra_gains = [c for c in header if c.startswith("g") and c[1:].isdigit() and c not in GAIN_COLUMNS]
			if extra_gains:
				raise ValidationError(
					f"{p.name}: unsupported frequency columns {extra_gains}; expected {list(GAIN_COLUMNS)}",
					line=1,
				)
			users = _read_users(reader)
	except (OSError, UnicodeDecodeError, csv.Error) as ex:
		raise ValidationError(f"cannot read dataset {p}: {ex}") from ex

	if not users:
		raise ValidationError(f"{p.name}: dataset has no rows")

	dataset = Dataset(tuple(users))
	total = dataset.weight_sum
	if abs(total - 1.0) > WEIGHT_SUM_WARN_TOL:
		log.warning("population weights sum to %.9g; normalizing to 1", total)
	dataset = dataset.normalized()

	log.info("loaded %d users (%d prescriptions) from %s", len(dataset), dataset.prescription_count(), p)
	return dataset


def _read_users(reader: csv.DictReader) -> list[User]:
	heads: dict[str, tuple[int, float, str, float, str]] = {}
	configs: dict[str, dict[str, Configuration]] = {}
	order: list[str] = []

	for row in reader:
		line = reader.line_num
		if None in row:
			raise ValidationError("row has more fields than the header", line=line)
		user_id = (row.get("user_id") or "").strip()
		if not user_id:
			raise ValidationError("empty user_id", line=line)

		weight = _float(row, "weight", line, user_id)
		if weight < 0.0:
			raise ValidationError(f"negative weight {weight}", user_id=user_id, line=line)
		age = _float(row, "age", line, user_id)
		loss_type = (row.get("loss_type") or "").strip()
		sex = (row.get("sex") or "").strip()
		fit_type = (row.get("fit_type") or "").strip()
		gains = [_float(row, c, line, user_id) for c in GAIN_COLUMNS]

		head = (line, weight, loss_type, age, sex)
		if user_id not in heads:
			heads[user_id] = head
			configs[user_id] = {}
			order.append(user_id)
		else:
			first = heads[user_id]
			for name, a, b in zip(("weight", "loss_type", "age", "sex"), first[1:], head[1:]):
				if a != b:
					raise ValidationError(
						f"{name} {b!r} disagrees with {a!r} on line {first[0]}",
						user_id=user_id,
						line=line,
					)

		if fit_type in configs[user_id]:
			raise ValidationError(f"duplicate fit_type {fit_type!r}", user_id=user_id, line=line)
		configs[user_id][fit_type] = Configuration(tuple(gains))

	users: list[User] = []
	for user_id in order:
		line, weight, loss_type, age, sex = heads[user_id]
		try:
			users.append(User(user_id, weight, loss_type, age, sex, configs[user_id]))
		except ValidationError as ex:
			raise ValidationError(f"{ex} (user starts on line {line})") from ex
	return users


def save_dataset(dataset: Dataset, path: str | Path) -> Path:
	p = Path(path)
	p.parent.mkdir(parents=True, exist_ok=True)
	with p.open("w", newline="", encoding="utf-8") as fh:
		writer = csv.writer(fh, lineterminator="\n")
		writer.writerow(COLUMNS)
		for user in dataset.users:
			for ft, cfg in user.configs.items():
				writer.writerow(
					[
						user.id,
						repr(user.weight),
						str(user.loss_type),
						str(ft),
						*(repr(g) for g in cfg.gains),
						repr(user.age),
						str(user.sex),
					]
				)
	log.debug("wrote %d users to %s", len(dataset), p)
	return p
