"""Exception types shared across the engine, store, CLI and service."""
from __future__ import annotations

from dataclasses import dataclass


class FahpError(Exception):
    """Base class for all errors raised by this package."""


class FuzzyDomainError(FahpError, ValueError):
    """Fuzzy arithmetic applied outside its domain (nonpositive support)."""


class InvalidMatrixError(FahpError, ValueError):
    """A comparison matrix violates its structural invariants.

    ``cells`` lists the offending (row, col) index pairs.
    """

    def __init__(self, message: str, cells: list[tuple[int, int]] | None = None):
        super().__init__(message)
        self.cells = cells or []


class LabelMismatchError(FahpError, ValueError):
    """Two labelled collections that must align do not.

    ``missing`` are labels expected but absent, ``extra`` labels present
    but unexpected.
    """

    def __init__(self, message: str, missing: list[str] | None = None,
                 extra: list[str] | None = None):
        super().__init__(message)
        self.missing = missing or []
        self.extra = extra or []


class UnknownCriterionError(FahpError, KeyError):
    """A criterion id does not exist in the hierarchy."""


class UnknownNodeError(FahpError, KeyError):
    """A node id is neither "criteria" nor a criterion id."""


class UnsupportedOrderError(FahpError, ValueError):
    """Consistency ratio requested for a matrix order without an RI constant."""


class PowerIterationError(FahpError, ArithmeticError):
    """Dominant-eigenvalue iteration failed to converge within its cap."""


@dataclass(frozen=True)
class Violation:
    """One validation failure, addressed by a dotted document path."""

    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class SessionParseError(FahpError, ValueError):
    """The session document is not syntactically valid JSON."""


class SessionVersionError(FahpError, ValueError):
    """The session document declares an unsupported version."""


class SessionValidationError(FahpError, ValueError):
    """The session document violates one or more schema invariants."""

    def __init__(self, violations: list[Violation]):
        super().__init__("; ".join(str(v) for v in violations))
        self.violations = violations


class StorageError(FahpError, OSError):
    """A session could not be written to or read from its backing file."""


class IncompleteJudgmentsError(FahpError):
    """An operation needs a full comparison matrix but cells are missing.

    ``missing`` maps node id to the sorted list of absent (i, j) cells.
    """

    def __init__(self, missing: dict[str, list[tuple[int, int]]]):
        parts = ", ".join(f"{node}: {cells}" for node, cells in missing.items())
        super().__init__(f"incomplete judgments ({parts})")
        self.missing = missing


class PrecomputedNodeError(FahpError):
    """A judgment-level operation was applied to a precomputed-mode node."""
