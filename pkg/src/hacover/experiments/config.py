# ---------------------------------------------------------------------------
# File: config.py
# ---------------------------------------------------------------------------
# Description:
#	experiment.toml -> ExperimentConfig.
#
#	Example:
#
#		[experiment]
#		name = "desk"
#		seed = 7
#		results_dir = "results"
#
#		[data]
#		dataset = "dataset.csv"			# or a [synth] table
#		deviations = "deviations.csv"	# optional
#
#		[coverage]
#		radius = 5.0
#		gamma = 0.8
#
#		[transfer]
#		range_db = 15.0
#		step_db = 3.75
#
#		[grid]
#		steps_x = 20					# or step_size = 1.0
#		steps_y = 20
#		bbox_source = "variations"
#
#		[optimize]
#		methods = ["greedy", "ga", "kmeans"]
#		ns = [5, 10, 15, 20]
#
#		[ga]
#		population_size = 250
#		iterations = 500
#
#		[slider]
#		steps_x = 10
#		steps_y = 10
#		sweep = true
#
#		[variance]
#		scales = [0.5, 1.0, 1.5]
#
#		[bootstrap]
#		replicates = 50
#
#		[subgroup]
#		sex_age = true
#		groups = ["sex == male and age > 70"]
#
#		[plots]
#		pca_scatter = true
#		coverage_example = true
#
# Notes:
#	- A stage runs only when its table is present ([optimize], [slider],
#	  [variance], [bootstrap], [subgroup], [plots]).
#	- Relative paths resolve against the config file's directory.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/18/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Mapping, Optional
import tomllib

from hacover.core.config import AppConfig
from hacover.core.errors import HacoverError, ParameterError, ValidationError
from hacover.coverage.params import DEFAULT_GAMMA, DEFAULT_RADIUS_DB, CoverageParams
from hacover.experiments.robustness import DEFAULT_REPLICATES, DEFAULT_SCALES
from hacover.experiments.subgroup import Subgroup, sex_age_subgroups
from hacover.io.synth import SynthSpec
from hacover.models.transfer import DEFAULT_RANGE_DB, DEFAULT_STEP_DB
from hacover.optimize.genetic import GaParams
from hacover.optimize.result import METHODS
from hacover.reduce.sources import BBoxSource
from hacover.slider.sliders import DEFAULT_FIXED_STEPS, SliderSpec


DEFAULT_NS: tuple[int, ...] = (5, 10, 15, 20, 25, 30, 35, 40)
DEFAULT_GRID_STEPS = 20


@dataclass(frozen=True, slots=True)
class ExperimentConfig:
	name: str = "experiment"
	results_dir: Path = Path("results")
	seed: Optional[int] = None

	dataset: Optional[Path] = None
	synth: Optional[SynthSpec] = None
	deviations: Optional[Path] = None

	radius: float = DEFAULT_RADIUS_DB
	gamma: float = DEFAULT_GAMMA
	tf_range: float = DEFAULT_RANGE_DB
	tf_step: float = DEFAULT_STEP_DB
	variance_scale: float = 1.0

	grid_steps: tuple[int, int] = (DEFAULT_GRID_STEPS, DEFAULT_GRID_STEPS)
	step_size: Optional[float] = None
	bbox_source: BBoxSource = BBoxSource.VARIATIONS

	methods: tuple[str, ...] = ()
	ns: tuple[int, ...] = DEFAULT_NS
	greedy_strategy: str = "exact"
	ga: GaParams = field(default_factory=GaParams)

	slider: Optional[SliderSpec] = None
	slider_sweep: bool = False
	slider_fixed: int = DEFAULT_FIXED_STEPS
	slider_sweep_steps: tuple[int, ...] = tuple(range(2, 21))

	variance_scales: Optional[tuple[float, ...]] = None
	bootstrap_replicates: Optional[int] = None
	subgroups: Optional[tuple[Subgroup, ...]] = None
	subgroup_method: str = "ga"

	pca_scatter: bool = False
	coverage_example: bool = False

	def __post_init__(self) -> None:
		if self.dataset is None and self.synth is None:
			raise ParameterError("experiment needs [data].dataset or a [synth] table")
		unknown = [m for m in self.methods if m not in METHODS]
		if unknown:
			raise ParameterError(f"unknown methods {unknown}; expected some of {METHODS}")

	@property
	def params(self) -> CoverageParams:
		return CoverageParams(radius=self.radius, gamma=self.gamma)

	def as_dict(self) -> dict[str, Any]:
		out: dict[str, Any] = {}
		for f in fields(self):
			value = getattr(self, f.name)
			if isinstance(value, Path):
				value = str(value)
			elif isinstance(value, (GaParams, SynthSpec, SliderSpec)):
				value = value.as_dict()
			elif isinstance(value, BBoxSource):
				value = str(value)
			elif f.name == "subgroups" and value is not None:
				value = {sg.name: str(sg) for sg in value}
			elif isinstance(value, tuple):
				value = list(value)
			out[f.name] = value
		return out


def _path(base: Path, value: Any) -> Optional[Path]:
	if value in (None, ""):
		return None
	p = Path(str(value))
	return p if p.is_absolute() else base / p


def _steps(cfg: AppConfig, key: str, default: tuple[int, int]) -> tuple[int, int]:
	return (int(cfg.get(f"{key}.steps_x", default[0])), int(cfg.get(f"{key}.steps_y", default[1])))


def experiment_from_mapping(data: Mapping[str, Any], base_dir: Path | None = None) -> ExperimentConfig:
	cfg = AppConfig(data)
	base = base_dir or Path.cwd()
	seed = cfg.get("experiment.seed")

	try:
		synth = None
		if cfg.get("synth") is not None:
			synth_opts = dict(cfg.section("synth").options or {})
			synth_opts.setdefault("seed", seed)
			if "age_range" in synth_opts:
				synth_opts["age_range"] = tuple(synth_opts["age_range"])
			synth = SynthSpec(**synth_opts)

		ga_opts = dict(cfg.section("ga").options or {})
		if seed is not None:
			ga_opts.setdefault("seed", seed)
		ga = GaParams(**ga_opts)

		slider = None
		if cfg.get("slider") is not None:
			slider = SliderSpec(*_steps(cfg, "slider", (10, 10)), cfg.get("slider.bbox_source", "variations"))

		subgroups: Optional[tuple[Subgroup, ...]] = None
		if cfg.get("subgroup") is not None:
			groups: list[Subgroup] = []
			if cfg.get("subgroup.sex_age", False):
				groups.extend(sex_age_subgroups(float(cfg.get("subgroup.age_split", 65.0))))
			groups.extend(Subgroup.parse(text) for text in cfg.get("subgroup.groups", []))
			subgroups = tuple(groups)

		step_size = cfg.get("grid.step_size")
		return ExperimentConfig(
			name=str(cfg.get("experiment.name", "experiment")),
			results_dir=_path(base, cfg.get("experiment.results_dir", "results")),
			seed=seed,
			dataset=_path(base, cfg.get("data.dataset")),
			synth=synth,
			deviations=_path(base, cfg.get("data.deviations")),
			radius=float(cfg.get("coverage.radius", DEFAULT_RADIUS_DB)),
			gamma=float(cfg.get("coverage.gamma", DEFAULT_GAMMA)),
			tf_range=float(cfg.get("transfer.range_db", DEFAULT_RANGE_DB)),
			tf_step=float(cfg.get("transfer.step_db", DEFAULT_STEP_DB)),
			variance_scale=float(cfg.get("transfer.variance_scale", 1.0)),
			grid_steps=_steps(cfg, "grid", (DEFAULT_GRID_STEPS, DEFAULT_GRID_STEPS)),
			step_size=None if step_size is None else float(step_size),
			bbox_source=BBoxSource(cfg.get("grid.bbox_source", "variations")),
			methods=tuple(cfg.get("optimize.methods", ())) if cfg.get("optimize") is not None else (),
			ns=tuple(int(n) for n in cfg.get("optimize.ns", DEFAULT_NS)),
			greedy_strategy=str(cfg.get("optimize.greedy_strategy", "exact")),
			ga=ga,
			slider=slider,
			slider_sweep=bool(cfg.get("slider.sweep", False)),
			slider_fixed=int(cfg.get("slider.fixed", DEFAULT_FIXED_STEPS)),
			slider_sweep_steps=tuple(int(s) for s in cfg.get("slider.sweep_steps", range(2, 21))),
			variance_scales=(
				tuple(float(s) for s in cfg.get("variance.scales", DEFAULT_SCALES))
				if cfg.get("variance") is not None
				else None
			),
			bootstrap_replicates=(
				int(cfg.get("bootstrap.replicates", DEFAULT_REPLICATES))
				if cfg.get("bootstrap") is not None
				else None
			),
			subgroups=subgroups,
			subgroup_method=str(cfg.get("subgroup.method", "ga")),
			pca_scatter=bool(cfg.get("plots.pca_scatter", False)),
			coverage_example=bool(cfg.get("plots.coverage_example", False)),
		)
	except HacoverError:
		raise
	except (TypeError, ValueError) as ex:
		raise ParameterError(f"invalid experiment config: {ex}") from ex


def load_experiment_config(path: str | Path) -> ExperimentConfig:
	p = Path(path)
	if not p.is_file():
		raise ValidationError(f"experiment config not found: {p}")
	try:
		with p.open("rb") as fh:
			data = tomllib.load(fh)
	except (OSError, tomllib.TOMLDecodeError) as ex:
		raise ValidationError(f"cannot parse {p}: {ex}") from ex
	return experiment_from_mapping(data, p.parent)
