# ---------------------------------------------------------------------------
# File: manifest.py
# ---------------------------------------------------------------------------
# Description:
#	manifest.json: every parameter of a run plus the files it produced, so
#	the run can be repeated from the manifest alone.
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/18/2026	Initial coding / release
# ---------------------------------------------------------------------------

from __future__ import annotations

from importlib import metadata
from pathlib import Path
from typing import Any, Iterable, Mapping

from hacover.io.files import write_json


MANIFEST_NAME = "manifest.json"


def package_version() -> str:
	try:
		return metadata.version("hacover")
	except metadata.PackageNotFoundError:
		return "0+unknown"


def build_manifest(
	command: str,
	parameters: Mapping[str, Any],
	outputs: Iterable[str | Path] = (),
) -> dict[str, Any]:
	return {
		"tool": "hacover",
		"version": package_version(),
		"command": command,
		"parameters": dict(parameters),
		"outputs": sorted(Path(o).name for o in outputs),
	}


def write_manifest(
	results_dir: str | Path,
	command: str,
	parameters: Mapping[str, Any],
	outputs: Iterable[str | Path] = (),
) -> Path:
	return write_json(build_manifest(command, parameters, outputs), Path(results_dir) / MANIFEST_NAME)
