# ---------------------------------------------------------------------------
# File: grid.py
# ---------------------------------------------------------------------------
# Description:
#	Candidate-preset lattice in 2-component space.
#
# Notes:
#	- Closed grid: both bounding-box edges are vertices on each axis.
#	- Vertex order is x-major: index = ix * steps_y + iy.
#	- Every vertex is lifted to 6 bands through the PCA model.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/07/2026	Initial coding / release
# 02/09/2026	Add step_size parameterization
# 02/15/2026	Add neighbors() for GA local improvement
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from hacover.core.errors import DegenerateBoundingBox, ParameterError
from hacover.models.configuration import Configuration
from hacover.reduce.pca import PcaModel, inverse_transform_many


@dataclass(frozen=True, slots=True, eq=False)
class CandidateGrid:
	"""
	CandidateGrid

	lower / upper:	(2,) bounding-box corners
	steps:			(steps_x, steps_y) vertex counts
	points:			(G, 2) reduced coordinates
	lifted:			G configurations, lifted[i] = inverse_transform(points[i])
	"""
	lower: tuple[float, float]
	upper: tuple[float, float]
	steps: tuple[int, int]
	points: np.ndarray
	lifted: tuple[Configuration, ...]

	def __len__(self) -> int:
		return len(self.lifted)

	def index(self, ix: int, iy: int) -> int:
		sx, sy = self.steps
		if not (0 <= ix < sx and 0 <= iy < sy):
			raise ParameterError(f"grid position ({ix}, {iy}) outside {sx}x{sy}")
		return ix * sy + iy

	def position(self, k: int) -> tuple[int, int]:
		return divmod(int(k), self.steps[1])

	def neighbors(self, k: int) -> list[int]:
		"""
		Indices of the up-to-8 surrounding vertices, ascending.
		"""
		ix, iy = self.position(k)
		sx, sy = self.steps
		out: list[int] = []
		for dx in (-1, 0, 1):
			for dy in (-1, 0, 1):
				if dx == 0 and dy == 0:
					continue
				nx, ny = ix + dx, iy + dy
				if 0 <= nx < sx and 0 <= ny < sy:
					out.append(nx * sy + ny)
		return sorted(out)

	def lifted_array(self) -> np.ndarray:
		return np.asarray([c.gains for c in self.lifted], dtype=float)


def bounding_box(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
	P = np.asarray(points, dtype=float)
	if P.ndim != 2 or P.shape[0] == 0:
		raise ParameterError("bounding box needs at least one point")
	return P.min(axis=0), P.max(axis=0)


def build_grid(
	model: PcaModel,
	source_points: np.ndarray,
	steps_x: int,
	steps_y: int,
) -> CandidateGrid:
	"""
	steps_x x steps_y closed lattice over the bounding box of source_points.
	"""
	if model.n_components != 2:
		raise ParameterError(f"grid needs a 2-component model, got {model.n_components}")
	for name, steps in (("steps_x", steps_x), ("steps_y", steps_y)):
		if int(steps) != steps or steps < 2:
			raise ParameterError(f"{name} must be an integer >= 2, got {steps}")

	lo, hi = bounding_box(np.asarray(source_points, dtype=float).reshape(-1, 2))
	if np.any(hi - lo <= 0.0):
		raise DegenerateBoundingBox(
			f"degenerate bounding box: lower={lo.tolist()} upper={hi.tolist()}"
		)

	xs = np.linspace(lo[0], hi[0], int(steps_x))
	ys = np.linspace(lo[1], hi[1], int(steps_y))
	points = np.array([(x, y) for x in xs for y in ys], dtype=float)
	lifted = tuple(Configuration.from_array(row) for row in inverse_transform_many(model, points))
	points.setflags(write=False)

	return CandidateGrid(
		lower=(float(lo[0]), float(lo[1])),
		upper=(float(hi[0]), float(hi[1])),
		steps=(int(steps_x), int(steps_y)),
		points=points,
		lifted=lifted,
	)


def steps_for_step_size(source_points: np.ndarray, step_size: float) -> tuple[int, int]:
	"""
	Vertex counts per axis for a reduced-space spacing of about step_size.
	"""
	if not (step_size > 0 and math.isfinite(step_size)):
		raise ParameterError(f"step_size must be > 0, got {step_size}")
	lo, hi = bounding_box(np.asarray(source_points, dtype=float).reshape(-1, 2))
	extent = hi - lo
	steps = [max(2, int(math.floor(e / step_size + 1e-9)) + 1) for e in extent]
	return steps[0], steps[1]


def build_grid_by_step_size(model: PcaModel, source_points: np.ndarray, step_size: float) -> CandidateGrid:
	sx, sy = steps_for_step_size(source_points, step_size)
	return build_grid(model, source_points, sx, sy)
