# ---------------------------------------------------------------------------
# File: genetic.py
# ---------------------------------------------------------------------------
# Description:
#	Genetic-algorithm preset selection over a candidate grid.
#
#	A chromosome is a boolean vector over the G grid vertices with exactly
#	N ones; its fitness is the population coverage of the selected vertices.
#
# Notes:
#	- One generation: carry over the elites, optionally improve the best
#	  elite by local search, fill the rest with crossover children (parents
#	  drawn from the top parent_fraction) and single-swap mutants.
#	- Crossover keeps parent A's first L genes and parent B's remaining
#	  genes, then repairs the child to exactly N ones with the seeded rng.
#	- Local improvement: for each selected vertex, move it to the best of its
#	  8 grid neighbors if that strictly improves fitness.
#	- All randomness comes from np.random.default_rng(seed).
#	- trace[t] is the best fitness seen through generation t.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/09/2026	Initial coding / release
# 02/15/2026	Neighborhood local improvement
# 02/16/2026	Fitness cache keyed by packed chromosome
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Optional

import numpy as np

from hacover.core.config import ordered_map
from hacover.core.errors import ParameterError
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.matrix import CoverageMatrix
from hacover.coverage.params import CoverageParams
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.result import SelectionResult, check_n, ensure_matrix, grid_selection
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("optimize.ga")


@dataclass(frozen=True, slots=True)
class GaParams:
	population_size: int = 250
	iterations: int = 500
	elitism: int = 1
	crossover_fraction: float = 0.5
	parent_fraction: float = 0.5
	local_improvement: bool = True
	local_passes: int = 1
	seed: Optional[int] = None

	def __post_init__(self) -> None:
		if self.population_size < 4:
			raise ParameterError(f"population_size must be >= 4, got {self.population_size}")
		if self.iterations < 1:
			raise ParameterError(f"iterations must be >= 1, got {self.iterations}")
		if not 0 <= self.elitism < self.population_size:
			raise ParameterError(
				f"elitism must be in [0, population_size), got {self.elitism}"
			)
		if self.local_improvement and self.elitism < 1:
			raise ParameterError("local_improvement needs elitism >= 1")
		for name in ("crossover_fraction", "parent_fraction"):
			value = getattr(self, name)
			if not 0.0 <= value <= 1.0:
				raise ParameterError(f"{name} must be in [0, 1], got {value}")
		if self.local_passes < 1:
			raise ParameterError(f"local_passes must be >= 1, got {self.local_passes}")

	def as_dict(self) -> dict[str, object]:
		return {
			"population_size": self.population_size,
			"iterations": self.iterations,
			"elitism": self.elitism,
			"crossover_fraction": self.crossover_fraction,
			"parent_fraction": self.parent_fraction,
			"local_improvement": self.local_improvement,
			"local_passes": self.local_passes,
			"seed": self.seed,
		}


class _Fitness:
	"""
	Memoized coverage of chromosomes.
	"""

	def __init__(self, matrix: CoverageMatrix, gamma: float, workers: int | None) -> None:
		self._matrix = matrix
		self._gamma = gamma
		self._workers = workers
		self._cache: dict[bytes, float] = {}
		self.evaluations = 0

	def _compute(self, chrom: np.ndarray) -> float:
		return self._matrix.coverage_of(np.flatnonzero(chrom), self._gamma)

	def __call__(self, chrom: np.ndarray) -> float:
		key = np.packbits(chrom).tobytes()
		if key not in self._cache:
			self._cache[key] = self._compute(chrom)
			self.evaluations += 1
		return self._cache[key]

	def many(self, population: list[np.ndarray]) -> list[float]:
		keys = [np.packbits(c).tobytes() for c in population]
		pending: dict[bytes, np.ndarray] = {}
		for key, chrom in zip(keys, population):
			if key not in self._cache and key not in pending:
				pending[key] = chrom
		if pending:
			scores = ordered_map(self._compute, list(pending.values()), self._workers)
			self._cache.update(zip(pending.keys(), scores))
			self.evaluations += len(pending)
		return [self._cache[k] for k in keys]


def ga_select(
	grid: CandidateGrid,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	n: int,
	ga: GaParams | None = None,
	*,
	matrix: CoverageMatrix | None = None,
	workers: int | None = None,
) -> SelectionResult:
	ga = ga or GaParams()
	size = len(grid)
	check_n(n, size)
	matrix = ensure_matrix(grid, dataset, bank, params, matrix, workers)

	rng = np.random.default_rng(ga.seed)
	fitness = _Fitness(matrix, params.gamma, workers)
	telemetry = get_telemetry()

	with telemetry.timer("optimize.ga.duration_ms", {"n": n, "iterations": ga.iterations}):
		population = [_random_chromosome(rng, size, n) for _ in range(ga.population_size)]
		scores = fitness.many(population)
		top = int(np.argmax(scores))
		best, best_score = population[top].copy(), scores[top]
		trace: list[float] = []

		n_parents = max(2, math.ceil(ga.population_size * ga.parent_fraction))
		n_children = ga.population_size - ga.elitism
		n_cross = int(round(ga.crossover_fraction * n_children))

		for generation in range(ga.iterations):
			order = np.argsort(-np.asarray(scores), kind="stable")
			ranked = [population[i] for i in order]
			elites = [c.copy() for c in ranked[: ga.elitism]]
			if ga.local_improvement:
				elites[0], _ = _local_improve(elites[0], fitness, grid, ga.local_passes)

			parents = ranked[:n_parents]
			children = [_crossover(rng, parents, n) for _ in range(n_cross)]
			children += [
				_mutate(rng, population[int(rng.integers(len(population)))])
				for _ in range(n_children - n_cross)
			]

			population = elites + children
			scores = fitness.many(population)
			for chrom, score in zip(population, scores):
				if score > best_score:
					best, best_score = chrom.copy(), score
			trace.append(best_score)
			log.debug("ga generation %d: best %.6f", generation, best_score)

	telemetry.counter("optimize.ga.evaluations", fitness.evaluations)
	telemetry.event("optimize.ga.done", {"n": n, "coverage": best_score, "seed": ga.seed})
	log.info("ga N=%d coverage %.6f (%d evaluations)", n, best_score, fitness.evaluations)
	return grid_selection("ga", grid, np.flatnonzero(best).tolist(), best_score, trace, ga.seed)


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------

def _random_chromosome(rng: np.random.Generator, size: int, n: int) -> np.ndarray:
	chrom = np.zeros(size, dtype=bool)
	chrom[rng.choice(size, size=n, replace=False)] = True
	return chrom


def _repair(rng: np.random.Generator, chrom: np.ndarray, n: int) -> np.ndarray:
	ones = np.flatnonzero(chrom)
	if ones.size > n:
		chrom[rng.choice(ones, size=ones.size - n, replace=False)] = False
	elif ones.size < n:
		zeros = np.flatnonzero(~chrom)
		chrom[rng.choice(zeros, size=n - ones.size, replace=False)] = True
	return chrom


def _crossover(rng: np.random.Generator, parents: list[np.ndarray], n: int) -> np.ndarray:
	a, b = rng.choice(len(parents), size=2, replace=False)
	cut = int(rng.integers(1, parents[a].size)) if parents[a].size > 1 else 0
	child = np.concatenate([parents[a][:cut], parents[b][cut:]])
	return _repair(rng, child, n)


def _mutate(rng: np.random.Generator, chrom: np.ndarray) -> np.ndarray:
	child = chrom.copy()
	ones = np.flatnonzero(child)
	zeros = np.flatnonzero(~child)
	if zeros.size == 0:
		return child
	child[rng.choice(ones)] = False
	child[rng.choice(zeros)] = True
	return child


def _local_improve(
	chrom: np.ndarray,
	fitness: _Fitness,
	grid: CandidateGrid,
	passes: int,
) -> tuple[np.ndarray, float]:
	chrom = chrom.copy()
	score = fitness(chrom)
	for _ in range(passes):
		for k in np.flatnonzero(chrom).tolist():
			move, move_score = None, score
			for nb in grid.neighbors(k):
				if chrom[nb]:
					continue
				trial = chrom.copy()
				trial[k] = False
				trial[nb] = True
				trial_score = fitness(trial)
				if trial_score > move_score:
					move, move_score = nb, trial_score
			if move is not None:
				chrom[k] = False
				chrom[move] = True
				score = move_score
	return chrom, score
