# ---------------------------------------------------------------------------
# File: slider/__init__.py
# ---------------------------------------------------------------------------
# Description:
#	Slider-interface preset grids.
# ---------------------------------------------------------------------------

from __future__ import annotations

from .sliders import (
	SliderRow,
	SliderSpec,
	position_to_config,
	slider_coverage,
	slider_grid,
	slider_presets,
	slider_sweep,
)

__all__ = [
	"SliderRow",
	"SliderSpec",
	"position_to_config",
	"slider_coverage",
	"slider_grid",
	"slider_presets",
	"slider_sweep",
]
