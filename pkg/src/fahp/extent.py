"""Extent-analysis weight derivation from fuzzy pairwise-comparison matrices.

The pipeline: each row's fuzzy sum is scaled by the reciprocal of the
matrix-wide fuzzy sum (the synthetic extent), extents are compared pairwise
through the possibility degree, each row keeps its minimum possibility
against the others, and the minima are normalized into crisp weights.

Summation uses :func:`math.fsum`, the exactly-rounded float sum, so results
are independent of row/column ordering: relabelling a matrix by a
permutation permutes the weights bit-for-bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import fsum
from typing import Iterable, Mapping, Sequence

from .errors import InvalidMatrixError
from .fuzzy import COMPONENT_TOL, ONE, TFN, Judgment, is_equal_importance

#: Weight vectors must sum to one within this.
WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """A non-fatal warning attached to a computed weight vector."""

    code: str
    message: str
    label: str | None = None


@dataclass(frozen=True)
class WeightVector:
    """Normalized nonnegative priorities for the children of one node."""

    labels: tuple[str, ...]
    weights: tuple[float, ...]
    diagnostics: tuple[Diagnostic, ...] = ()

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.weights):
            raise ValueError("labels and weights must have equal length")
        if not self.weights:
            raise ValueError("weight vector cannot be empty")
        if any(w < 0.0 or w > 1.0 for w in self.weights):
            raise ValueError(f"weights must lie in [0, 1], got {self.weights}")
        if abs(fsum(self.weights) - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1, got {fsum(self.weights)!r}")
        if not any(w > 0.0 for w in self.weights):
            raise ValueError("at least one weight must be positive")

    def weight_of(self, label: str) -> float:
        return self.weights[self.labels.index(label)]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.labels, self.weights))


@dataclass(frozen=True)
class FuzzyComparisonMatrix:
    """Square reciprocal matrix of TFNs over labelled children.

    Invariants (checked on construction): unit diagonal, reciprocity of
    mirrored cells within ``COMPONENT_TOL``, strictly positive supports.
    """

    labels: tuple[str, ...]
    entries: tuple[tuple[TFN, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n < 1:
            raise InvalidMatrixError("matrix needs at least one row")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise InvalidMatrixError(f"entries must form an {n}x{n} grid")
        bad: list[tuple[int, int]] = []
        for i in range(n):
            if self.entries[i][i] != ONE:
                bad.append((i, i))
        for i in range(n):
            for j in range(n):
                if self.entries[i][j].l <= 0 and (i, j) not in bad:
                    bad.append((i, j))
        for i in range(n):
            for j in range(i + 1, n):
                upper, lower = self.entries[i][j], self.entries[j][i]
                if upper.l <= 0 or lower.l <= 0:
                    continue  # already reported above
                if not lower.approx_equal(upper.reciprocal(), COMPONENT_TOL):
                    bad.append((j, i))
        if bad:
            raise InvalidMatrixError(f"invalid comparison matrix cells: {bad}", cells=bad)

    @property
    def n(self) -> int:
        return len(self.labels)

    @classmethod
    def from_judgments(cls, labels: Sequence[str],
                       cells: Mapping[tuple[int, int], Judgment]) -> FuzzyComparisonMatrix:
        """Build a full matrix from strict upper-triangle judgments.

        The diagonal is crisp unity and the lower triangle is generated as
        fuzzy reciprocals, so reciprocity holds by construction.  Raises
        KeyError naming the first missing cell if the triangle is not full.
        """
        n = len(labels)
        grid: list[list[TFN]] = [[ONE] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if (i, j) not in cells:
                    raise KeyError(f"missing judgment for cell ({i}, {j})")
                t = cells[(i, j)].tfn()
                grid[i][j] = t
                grid[j][i] = t.reciprocal()
        return cls(tuple(labels), tuple(tuple(row) for row in grid))

    def cell(self, i: int, j: int) -> TFN:
        return self.entries[i][j]


def _fsum_tfns(tfns: Iterable[TFN]) -> TFN:
    """Componentwise fuzzy sum with order-independent rounding."""
    items = list(tfns)
    return TFN(fsum(t.l for t in items),
               fsum(t.m for t in items),
               fsum(t.u for t in items))


def synthetic_extents(matrix: FuzzyComparisonMatrix) -> list[TFN]:
    """Fuzzy synthetic extent of each row.

    Row sums are scaled by the fuzzy reciprocal of the whole-matrix sum:
    ``S_i = (sum_j M_ij) * (sum_i sum_j M_ij)^-1``.
    """
    row_sums = [_fsum_tfns(row) for row in matrix.entries]
    total = _fsum_tfns(t for row in matrix.entries for t in row)
    inv = total.reciprocal()
    return [TFN(rs.l * inv.l, rs.m * inv.m, rs.u * inv.u) for rs in row_sums]


def possibility(a: TFN, b: TFN) -> float:
    """Degree of possibility of ``a >= b``.

    1 when a's peak is at least b's; 0 when the supports are ordered the
    other way with no overlap; otherwise the height at which a's falling
    edge crosses b's rising edge.
    """
    if a.m >= b.m:
        return 1.0
    if b.l >= a.u:
        return 0.0
    return (b.l - a.u) / ((a.m - a.u) - (b.m - b.l))


def min_possibility(extents: Sequence[TFN]) -> list[float]:
    """For each extent, its minimum possibility of dominating the others.

    A single extent trivially dominates: the result is ``[1.0]``.
    """
    if len(extents) == 1:
        return [1.0]
    return [
        min(possibility(extents[i], extents[k])
            for k in range(len(extents)) if k != i)
        for i in range(len(extents))
    ]


def extent_weights(matrix: FuzzyComparisonMatrix) -> WeightVector:
    """Full extent-analysis weight derivation for one comparison matrix.

    The minimum-possibility vector always contains a 1 (the extent with the
    largest peak dominates every other), so normalization is safe.  Strong
    dominance can drive weights to exactly zero; that is a property of the
    method and is reported via a "zero-weight" diagnostic instead of being
    floored away.
    """
    extents = synthetic_extents(matrix)
    d = min_possibility(extents)
    total = fsum(d)
    weights = tuple(v / total for v in d)

    diagnostics: list[Diagnostic] = []
    for label, w in zip(matrix.labels, weights):
        if w == 0.0:
            diagnostics.append(Diagnostic(
                code="zero-weight",
                message=f"{label!r} is fully dominated and receives weight 0",
                label=label,
            ))
    if any(is_equal_importance(matrix.entries[i][j])
           for i in range(matrix.n) for j in range(i + 1, matrix.n)):
        diagnostics.append(Diagnostic(
            code="ei-asymmetry",
            message="equal-importance judgments use the asymmetric (1, 1, 2) "
                    "triple, so 'equal' cells are not self-reciprocal",
        ))
    return WeightVector(matrix.labels, weights, tuple(diagnostics))
