"""Triangular fuzzy numbers and the five-grade linguistic comparison scale.

A triangular fuzzy number (TFN) is an ordered triple ``(l, m, u)`` whose
membership rises linearly from ``l`` to the peak ``m`` and falls linearly
back to zero at ``u``.  Pairwise-comparison judgments are expressed on a
five-grade scale (equal .. extreme importance); each grade maps to a fixed
TFN, and reciprocal judgments map to the fuzzy reciprocal of that TFN.

Everything here is immutable and side-effect free.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import FuzzyDomainError

#: Componentwise tolerance for "same TFN" checks (reciprocity etc.).
COMPONENT_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class TFN:
    """Triangular fuzzy number with support ``[l, u]`` and peak ``m``."""

    l: float
    m: float
    u: float

    def __post_init__(self) -> None:
        if not (self.l <= self.m <= self.u):
            raise ValueError(f"TFN components must satisfy l <= m <= u, got {self}")

    def __add__(self, other: TFN) -> TFN:
        return TFN(self.l + other.l, self.m + other.m, self.u + other.u)

    def __mul__(self, other: TFN) -> TFN:
        # Componentwise approximation of the extension product; only valid
        # on strictly positive support.
        if self.l <= 0 or other.l <= 0:
            raise FuzzyDomainError(f"fuzzy product needs positive support, got {self} * {other}")
        return TFN(self.l * other.l, self.m * other.m, self.u * other.u)

    def reciprocal(self) -> TFN:
        if self.l <= 0:
            raise FuzzyDomainError(f"fuzzy reciprocal needs positive support, got {self}")
        return TFN(1.0 / self.u, 1.0 / self.m, 1.0 / self.l)

    def membership(self, x: float) -> float:
        """Degree to which ``x`` belongs to this fuzzy number, in [0, 1].

        Degenerate flat sides (``l == m`` or ``m == u``) contribute no slope;
        the peak still has membership 1.
        """
        if x < self.l or x > self.u:
            return 0.0
        if x == self.m:
            return 1.0
        if x < self.m:
            return (x - self.l) / (self.m - self.l)
        return (self.u - x) / (self.u - self.m)

    def centroid(self) -> float:
        """Crisp centroid projection ``(l + m + u) / 3``."""
        return (self.l + self.m + self.u) / 3.0

    def approx_equal(self, other: TFN, tol: float = COMPONENT_TOL) -> bool:
        return (abs(self.l - other.l) <= tol
                and abs(self.m - other.m) <= tol
                and abs(self.u - other.u) <= tol)

    def __str__(self) -> str:
        return f"({self.l:g}, {self.m:g}, {self.u:g})"


#: Crisp unity, used for diagonal self-comparisons.
ONE = TFN(1.0, 1.0, 1.0)


class Grade(enum.Enum):
    """Linguistic importance grades of the comparison scale."""

    EQUAL = "EI"
    MODERATE = "MI"
    STRONG = "SI"
    VERY_STRONG = "VSI"
    EXTREME = "EMI"

    @property
    def code(self) -> str:
        return self.value


#: Grade -> TFN for direct (row-dominates-column) judgments.  Note the
#: asymmetric "equal importance" triple (1, 1, 2): on this scale an equal
#: judgment is not self-reciprocal, which the engine surfaces as a
#: diagnostic rather than repairing.
SCALE: dict[Grade, TFN] = {
    Grade.EQUAL: TFN(1.0, 1.0, 2.0),
    Grade.MODERATE: TFN(2.0, 3.0, 4.0),
    Grade.STRONG: TFN(4.0, 5.0, 6.0),
    Grade.VERY_STRONG: TFN(6.0, 7.0, 8.0),
    Grade.EXTREME: TFN(8.0, 9.0, 10.0),
}

#: Full display names, e.g. for UI tooltips.
GRADE_NAMES: dict[Grade, str] = {
    Grade.EQUAL: "Equal importance",
    Grade.MODERATE: "Moderate importance",
    Grade.STRONG: "Strong importance",
    Grade.VERY_STRONG: "Very strong importance",
    Grade.EXTREME: "Extremely more importance",
}

_GRADE_BY_CODE = {g.value: g for g in Grade}


@dataclass(frozen=True, slots=True)
class Judgment:
    """One linguistic pairwise judgment: a grade, possibly reciprocal.

    Serializes as ``"SI"`` (direct) or ``"1/SI"`` (reciprocal).
    """

    grade: Grade
    reciprocal: bool = False

    def tfn(self) -> TFN:
        base = SCALE[self.grade]
        return base.reciprocal() if self.reciprocal else base

    def inverse(self) -> Judgment:
        return Judgment(self.grade, not self.reciprocal)

    @classmethod
    def parse(cls, text: str) -> Judgment:
        """Parse a wire-format grade string; raises ValueError on junk."""
        reciprocal = text.startswith("1/")
        code = text[2:] if reciprocal else text
        grade = _GRADE_BY_CODE.get(code)
        if grade is None:
            raise ValueError(f"unknown grade {text!r}")
        return cls(grade, reciprocal)

    def __str__(self) -> str:
        return f"1/{self.grade.code}" if self.reciprocal else self.grade.code


def is_equal_importance(t: TFN, tol: float = COMPONENT_TOL) -> bool:
    """True when ``t`` is the asymmetric equal-importance triple (or its
    reciprocal), the one scale value that breaks reciprocal symmetry."""
    ei = SCALE[Grade.EQUAL]
    return t.approx_equal(ei, tol) or t.approx_equal(ei.reciprocal(), tol)
