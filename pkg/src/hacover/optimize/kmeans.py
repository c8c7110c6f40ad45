# ---------------------------------------------------------------------------
# File: kmeans.py
# ---------------------------------------------------------------------------
# Description:
#	Mass-weighted k-means baseline: cluster every preferred-configuration
#	variation (weighted by w_u * cl_j) in the full 6-band space and use the
#	cluster centers as presets.
#
# Notes:
#	- k-means++ seeding, weighted by mass; Lloyd iterations until the
#	  assignment stops changing or max_iter is reached.
#	- A cluster that empties keeps its previous center.
#	- Without a grid the presets are the cluster means. Centers that coincide
#	  are topped up with the heaviest variations not yet used, so there are
#	  always N presets.
#	- With a grid each center, heaviest cluster first, takes its nearest free
#	  vertex (Euclidean in the 6 bands, ties to the lowest index). The
#	  presets are then grid vertices like every other method's.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/10/2026	Initial coding / release
# 10/18/2026	Snap centers to the candidate grid; fill coincident centers
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from hacover.core.errors import FitError, ParameterError
from hacover.core.logging import get_component_logger
from hacover.core.telemetry import get_telemetry
from hacover.coverage.params import CoverageParams, PresetSet
from hacover.coverage.population import VariationTable, population_coverage
from hacover.models.configuration import Configuration, configs_to_array
from hacover.models.population import Dataset
from hacover.models.transfer import TransferFunctionBank
from hacover.optimize.result import SelectionResult, check_n
from hacover.reduce.grid import CandidateGrid


log = get_component_logger("optimize.kmeans")

DEFAULT_MAX_ITER = 100
_CHUNK = 8192


@dataclass(frozen=True, slots=True, eq=False)
class KMeansFit:
	centers: np.ndarray		# (n, 6)
	labels: np.ndarray		# (V,)
	iterations: int


def population_variations(dataset: Dataset, bank: TransferFunctionBank) -> list[tuple[Configuration, float]]:
	"""
	Every variation of every user with its population mass.
	"""
	table = VariationTable.build(dataset, bank)
	return [
		(Configuration.from_array(row), float(m))
		for row, m in zip(table.variations(), table.variation_masses())
	]


def _nearest(points: np.ndarray, centers: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
	labels = np.empty(points.shape[0], dtype=np.int64)
	d2 = np.empty(points.shape[0], dtype=float)
	for start in range(0, points.shape[0], _CHUNK):
		block = points[start : start + _CHUNK]
		dist = ((block[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)
		labels[start : start + block.shape[0]] = dist.argmin(axis=1)
		d2[start : start + block.shape[0]] = dist.min(axis=1)
	return labels, d2


def _seed_centers(points: np.ndarray, masses: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
	total = masses.sum()
	p = masses / total if total > 0 else np.full(masses.shape, 1.0 / masses.size)
	centers = [points[rng.choice(points.shape[0], p=p)]]
	d2 = ((points - centers[0]) ** 2).sum(axis=1)

	while len(centers) < n:
		w = masses * d2
		if w.sum() <= 0:
			w = (d2 > 0).astype(float)
		centers.append(points[rng.choice(points.shape[0], p=w / w.sum())])
		d2 = np.minimum(d2, ((points - centers[-1]) ** 2).sum(axis=1))

	return np.array(centers, dtype=float)


def weighted_kmeans(
	points: np.ndarray,
	masses: np.ndarray,
	n: int,
	rng: np.random.Generator,
	max_iter: int = DEFAULT_MAX_ITER,
) -> KMeansFit:
	points = np.asarray(points, dtype=float)
	masses = np.asarray(masses, dtype=float)
	if points.ndim != 2 or points.shape[0] != masses.shape[0]:
		raise ParameterError("points and masses must align")
	if int(n) != n or n < 1:
		raise ParameterError(f"cluster count must be an integer >= 1, got {n}")
	if max_iter < 1:
		raise ParameterError(f"max_iter must be >= 1, got {max_iter}")
	distinct = np.unique(points, axis=0).shape[0]
	if n > distinct:
		raise ParameterError(f"cannot form {n} clusters from {distinct} distinct points")

	centers = _seed_centers(points, masses, n, rng)
	labels: np.ndarray | None = None
	iterations = 0

	for iterations in range(1, max_iter + 1):
		new_labels, _ = _nearest(points, centers)
		if labels is not None and np.array_equal(new_labels, labels):
			break
		labels = new_labels
		for c in range(n):
			members = labels == c
			if not members.any():
				continue
			w = masses[members]
			if w.sum() > 0:
				centers[c] = (w[:, None] * points[members]).sum(axis=0) / w.sum()
			else:
				centers[c] = points[members].mean(axis=0)
	else:
		log.warning("k-means stopped after %d iterations without converging", max_iter)

	return KMeansFit(centers=centers, labels=labels, iterations=iterations)


def snap_to_grid(
	centers: np.ndarray,
	grid: CandidateGrid,
	weights: Optional[Sequence[float]] = None,
) -> tuple[int, ...]:
	"""
	Map centers to distinct grid vertices, ascending.

	Centers are placed heaviest first (by weights, stable); each takes the
	nearest vertex no earlier center has taken, ties to the lowest index.
	"""
	centers = np.asarray(centers, dtype=float)
	check_n(centers.shape[0], len(grid))
	vertices = grid.lifted_array()
	order = range(centers.shape[0])
	if weights is not None:
		order = np.argsort(-np.asarray(weights, dtype=float), kind="stable")

	taken: set[int] = set()
	for c in order:
		dist = ((vertices - centers[c]) ** 2).sum(axis=1)
		k = next(int(k) for k in np.argsort(dist, kind="stable") if int(k) not in taken)
		taken.add(k)
	return tuple(sorted(taken))


def _complete_presets(centers: np.ndarray, points: np.ndarray, masses: np.ndarray) -> PresetSet:
	presets = PresetSet.from_configs(Configuration.from_array(c) for c in centers)
	n = centers.shape[0]
	if len(presets) == n:
		return presets

	log.warning("k-means produced %d distinct centers for N=%d; filling from the heaviest variations", len(presets), n)
	kept = list(presets)
	for j in np.argsort(-masses, kind="stable"):
		if len(kept) == n:
			break
		kept = list(PresetSet.from_configs([*kept, Configuration.from_array(points[j])]))
	if len(kept) < n:
		raise FitError(f"only {len(kept)} distinct presets available for N={n}")
	return PresetSet(tuple(kept))


def kmeans_presets(
	variations: Sequence[tuple[Configuration, float]],
	n: int,
	seed: Optional[int],
	*,
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	grid: Optional[CandidateGrid] = None,
	max_iter: int = DEFAULT_MAX_ITER,
) -> SelectionResult:
	if not variations:
		raise ParameterError("no variations to cluster")
	points = configs_to_array([cfg for cfg, _ in variations])
	masses = np.asarray([m for _, m in variations], dtype=float)
	return _select(points, masses, n, seed, dataset, bank, params, grid, max_iter)


def kmeans_select(
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	n: int,
	seed: Optional[int] = None,
	*,
	grid: Optional[CandidateGrid] = None,
	max_iter: int = DEFAULT_MAX_ITER,
) -> SelectionResult:
	"""
	kmeans_presets over the dataset's own variations.
	"""
	table = VariationTable.build(dataset, bank)
	return _select(table.variations(), table.variation_masses(), n, seed, dataset, bank, params, grid, max_iter)


def _select(
	points: np.ndarray,
	masses: np.ndarray,
	n: int,
	seed: Optional[int],
	dataset: Dataset,
	bank: TransferFunctionBank,
	params: CoverageParams,
	grid: Optional[CandidateGrid],
	max_iter: int,
) -> SelectionResult:
	if grid is not None:
		check_n(n, len(grid))
	telemetry = get_telemetry()
	with telemetry.timer("optimize.kmeans.duration_ms", {"n": n}):
		fit = weighted_kmeans(points, masses, n, np.random.default_rng(seed), max_iter)
		if grid is None:
			indices: tuple[int, ...] = ()
			presets = _complete_presets(fit.centers, points, masses)
		else:
			cluster_mass = np.bincount(fit.labels, weights=masses, minlength=n)
			indices = snap_to_grid(fit.centers, grid, cluster_mass)
			presets = PresetSet(tuple(grid.lifted[k] for k in indices))
		coverage = population_coverage(dataset, presets, bank, params).population_coverage

	telemetry.event("optimize.kmeans.done", {"n": n, "coverage": coverage, "iterations": fit.iterations})
	log.info("k-means N=%d coverage %.6f after %d iterations", n, coverage, fit.iterations)
	return SelectionResult(
		method="kmeans",
		n=n,
		presets=presets,
		indices=indices,
		coverage=coverage,
		trace=(),
		seed=seed,
	)
