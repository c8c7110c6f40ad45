# ---------------------------------------------------------------------------
# File: errors.py
# ---------------------------------------------------------------------------
# Description:
#	Exception hierarchy for hacover.
#
# Notes:
#	- Every library failure derives from HacoverError.
#	- The CLI maps ValidationError / ParameterError / FitError to exit code 1
#	  and anything else to exit code 2.
#
# ---------------------------------------------------------------------------
# Revision History
# ---------------------------------------------------------------------------
# Date			Change
# ---------------------------------------------------------------------------
# 02/03/2026	Initial coding / release
# 02/09/2026	Add BruteForceRefused + DegenerateBoundingBox
# 02/16/2026	Add EmptySubgroup + CoverageMismatch
# ---------------------------------------------------------------------------

from __future__ import annotations

from typing import Any, Optional


class HacoverError(Exception):
	pass


class ParameterError(HacoverError, ValueError):
	pass


class FitError(HacoverError):
	pass


class ValidationError(HacoverError):
	"""
	Raised for malformed input files.

	user_id and line are attached when known so messages can name the culprit.
	"""

	def __init__(
		self,
		message: str,
		*,
		user_id: Optional[str] = None,
		line: Optional[int] = None,
	) -> None:
		prefix = ""
		if line is not None:
			prefix += f"line {line}: "
		if user_id is not None:
			prefix += f"user {user_id!r}: "
		super().__init__(prefix + message)
		self.user_id = user_id
		self.line = line


class MissingFitType(HacoverError, KeyError):
	def __init__(self, user_id: str, fit_type: Any) -> None:
		super().__init__(f"user {user_id!r} has no configuration for fit type {fit_type!s}")
		self.user_id = user_id
		self.fit_type = fit_type

	def __str__(self) -> str:
		# KeyError would otherwise repr() the message
		return str(self.args[0])


class BruteForceRefused(ParameterError):
	def __init__(self, combinations: int, limit: int) -> None:
		super().__init__(
			f"brute force refused: {combinations} combinations exceed the limit of {limit}"
		)
		self.combinations = combinations
		self.limit = limit


class DegenerateBoundingBox(ParameterError):
	pass


class EmptySubgroup(HacoverError):
	def __init__(self, predicate: Any) -> None:
		super().__init__(f"subgroup selects no users: {predicate}")
		self.predicate = predicate


class CoverageMismatch(HacoverError):
	pass
