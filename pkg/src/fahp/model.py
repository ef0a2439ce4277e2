"""Hierarchy, consistency diagnostics, aggregation, ranking and sensitivity.

These are pure functions over immutable values; the session layer wires
them to stored documents.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import fsum
from typing import Mapping, Sequence

import numpy as np

from .errors import (LabelMismatchError, PowerIterationError,
                     UnknownCriterionError, UnsupportedOrderError)
from .extent import FuzzyComparisonMatrix, WeightVector

#: Aggregation modes: plain weighted sum, and the same divided by the
#: criterion count (the scaling the bundled demo dataset's scores use).
WEIGHTED_SUM = "weighted-sum"
PAPER_MEAN = "paper-mean"
AGGREGATION_MODES = (WEIGHTED_SUM, PAPER_MEAN)

#: Mean consistency index of random reciprocal matrices, by order (Saaty's
#: random-index constants).
RANDOM_INDEX = {1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
                6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49}

#: Conventional acceptability threshold for the consistency ratio.
CR_ACCEPTABLE = 0.10

#: Column-sum slack for decision matrices loaded from rounded printed data.
COLUMN_SUM_TOL = 2e-3


@dataclass(frozen=True, slots=True)
class Member:
    """One labelled element of a hierarchy level."""

    id: str
    name: str


@dataclass(frozen=True)
class Hierarchy:
    """Goal, criteria and alternatives of a decision problem."""

    goal: str
    criteria: tuple[Member, ...]
    alternatives: tuple[Member, ...]

    def __post_init__(self) -> None:
        if not self.criteria:
            raise ValueError("hierarchy needs at least one criterion")
        if not self.alternatives:
            raise ValueError("hierarchy needs at least one alternative")
        for level, members in (("criteria", self.criteria),
                               ("alternatives", self.alternatives)):
            ids = [m.id for m in members]
            if len(set(ids)) != len(ids):
                raise ValueError(f"duplicate ids in {level}: {ids}")

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(m.id for m in self.criteria)

    @property
    def alternative_ids(self) -> tuple[str, ...]:
        return tuple(m.id for m in self.alternatives)

    def criterion_name(self, cid: str) -> str:
        for m in self.criteria:
            if m.id == cid:
                return m.name
        raise UnknownCriterionError(cid)

    def alternative_name(self, aid: str) -> str:
        for m in self.alternatives:
            if m.id == aid:
                return m.name
        raise KeyError(aid)


@dataclass(frozen=True)
class DecisionMatrix:
    """Alternatives x criteria table of local priorities in [0, 1]."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n_alt, n_crit = len(self.alternatives), len(self.criteria)
        if len(self.values) != n_alt or any(len(r) != n_crit for r in self.values):
            raise ValueError(f"values must form an {n_alt}x{n_crit} grid")
        for row in self.values:
            for v in row:
                if v < 0.0 or v > 1.0:
                    raise ValueError(f"local priorities must lie in [0, 1], got {v}")
        for j in range(n_crit):
            s = fsum(row[j] for row in self.values)
            if abs(s - 1.0) > COLUMN_SUM_TOL:
                raise ValueError(
                    f"column {self.criteria[j]!r} sums to {s}, expected 1")

    def value(self, alternative: str, criterion: str) -> float:
        return self.values[self.alternatives.index(alternative)][self.criteria.index(criterion)]

    def column(self, criterion: str) -> tuple[float, ...]:
        j = self.criteria.index(criterion)
        return tuple(row[j] for row in self.values)


@dataclass(frozen=True, slots=True)
class RankedAlternative:
    alternative: str
    rank: int
    score: float


@dataclass(frozen=True)
class RankingResult:
    """Alternatives ordered by descending score, ranks 1..n."""

    entries: tuple[RankedAlternative, ...]
    aggregation: str

    def order(self) -> tuple[str, ...]:
        return tuple(e.alternative for e in self.entries)

    def score_of(self, alternative: str) -> float:
        for e in self.entries:
            if e.alternative == alternative:
                return e.score
        raise KeyError(alternative)


@dataclass(frozen=True, slots=True)
class CRReport:
    """Saaty-style consistency diagnostic of a defuzzified matrix."""

    lambda_max: float
    consistency_index: float
    consistency_ratio: float
    acceptable: bool
    n: int


@dataclass(frozen=True, slots=True)
class RankReversal:
    """A pair of alternatives whose order flips inside a sweep interval."""

    threshold: float
    leader_before: str
    leader_after: str


@dataclass(frozen=True, slots=True)
class SweepPoint:
    weight: float
    ranking: RankingResult


@dataclass(frozen=True)
class SensitivityReport:
    criterion: str
    points: tuple[SweepPoint, ...]
    reversals: tuple[RankReversal, ...]


def _power_iteration_lambda_max(a: np.ndarray, tol: float = 1e-10,
                                max_iter: int = 1000) -> float:
    """Dominant eigenvalue of a positive matrix.

    Starts from the uniform vector and renormalizes by the max-magnitude
    component each step; for positive matrices this converges to the
    Perron eigenvalue.
    """
    n = a.shape[0]
    x = np.ones(n)
    lam = 0.0
    for _ in range(max_iter):
        y = a @ x
        new_lam = float(np.max(np.abs(y)))
        x = y / new_lam
        if abs(new_lam - lam) < tol:
            return new_lam
        lam = new_lam
    raise PowerIterationError(
        f"dominant eigenvalue did not converge within {max_iter} iterations")


def crisp_consistency_ratio(matrix: FuzzyComparisonMatrix) -> CRReport:
    """Consistency ratio of the centroid-defuzzified comparison matrix.

    The upper triangle is defuzzified; the lower triangle is forced to
    exact crisp reciprocals so the diagnostic sees a true reciprocal
    matrix.  Orders above 10 have no random-index constant.
    """
    n = matrix.n
    if n > max(RANDOM_INDEX):
        raise UnsupportedOrderError(
            f"no random-index constant for order {n} (max {max(RANDOM_INDEX)})")
    crisp = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = matrix.entries[i][j].centroid()
            crisp[i, j] = v
            crisp[j, i] = 1.0 / v
    lam = _power_iteration_lambda_max(crisp)
    ci = 0.0 if n <= 2 else (lam - n) / (n - 1)
    cr = 0.0 if n <= 2 else ci / RANDOM_INDEX[n]
    return CRReport(lambda_max=lam, consistency_index=ci,
                    consistency_ratio=cr, acceptable=cr <= CR_ACCEPTABLE, n=n)


def build_decision_matrix(hierarchy: Hierarchy,
                          weights_by_criterion: Mapping[str, WeightVector]) -> DecisionMatrix:
    """Assemble the decision matrix from one weight vector per criterion."""
    crit_ids = hierarchy.criterion_ids
    missing = [c for c in crit_ids if c not in weights_by_criterion]
    extra = [c for c in weights_by_criterion if c not in crit_ids]
    if missing or extra:
        raise LabelMismatchError(
            f"weight vectors do not match criteria (missing {missing}, extra {extra})",
            missing=missing, extra=extra)

    alt_ids = hierarchy.alternative_ids
    columns: dict[str, dict[str, float]] = {}
    for cid in crit_ids:
        wv = weights_by_criterion[cid]
        missing_a = [a for a in alt_ids if a not in wv.labels]
        extra_a = [a for a in wv.labels if a not in alt_ids]
        if missing_a or extra_a:
            raise LabelMismatchError(
                f"weights under {cid!r} do not cover the alternatives "
                f"(missing {missing_a}, extra {extra_a})",
                missing=missing_a, extra=extra_a)
        columns[cid] = wv.as_dict()

    values = tuple(tuple(columns[c][a] for c in crit_ids) for a in alt_ids)
    return DecisionMatrix(alternatives=alt_ids, criteria=crit_ids, values=values)


def aggregate(criteria_weights: WeightVector, dm: DecisionMatrix,
              mode: str = WEIGHTED_SUM) -> dict[str, float]:
    """Global score per alternative, keyed in decision-matrix row order.

    ``weighted-sum`` is the plain dot product of criteria weights with each
    row; ``paper-mean`` divides that by the criterion count.  The two only
    differ by a constant factor, so they always rank identically.
    """
    if mode not in AGGREGATION_MODES:
        raise ValueError(f"unknown aggregation mode {mode!r}")
    missing = [c for c in dm.criteria if c not in criteria_weights.labels]
    extra = [c for c in criteria_weights.labels if c not in dm.criteria]
    if missing or extra:
        raise LabelMismatchError(
            f"criteria weights do not match matrix columns "
            f"(missing {missing}, extra {extra})", missing=missing, extra=extra)
    w = criteria_weights.as_dict()
    divisor = float(len(dm.criteria)) if mode == PAPER_MEAN else 1.0
    scores: dict[str, float] = {}
    for alt, row in zip(dm.alternatives, dm.values):
        s = fsum(w[c] * v for c, v in zip(dm.criteria, row))
        scores[alt] = s / divisor
    return scores


def rank(scores: Mapping[str, float], aggregation: str = WEIGHTED_SUM) -> RankingResult:
    """Order alternatives by descending score.

    Ties keep the iteration order of ``scores`` (i.e. declaration order
    when the map was built from a hierarchy), so results are deterministic.
    """
    if not scores:
        raise ValueError("cannot rank an empty score map")
    ordered = sorted(scores.items(), key=lambda kv: -kv[1])
    entries = tuple(RankedAlternative(alternative=a, rank=i + 1, score=s)
                    for i, (a, s) in enumerate(ordered))
    return RankingResult(entries=entries, aggregation=aggregation)


def reweighted(criteria_weights: WeightVector, criterion: str, g: float) -> WeightVector:
    """Set one criterion's weight to ``g``, rescaling the rest to ``1 - g``.

    Unswept weights keep their relative proportions; if they are all zero
    they share ``1 - g`` uniformly.  When ``g`` equals the current weight
    the vector is returned unchanged, so a baseline grid point reproduces
    the unperturbed ranking bit-for-bit.
    """
    if criterion not in criteria_weights.labels:
        raise UnknownCriterionError(criterion)
    if not (0.0 <= g <= 1.0):
        raise ValueError(f"swept weight must lie in [0, 1], got {g}")
    idx = criteria_weights.labels.index(criterion)
    if criteria_weights.weights[idx] == g:
        return criteria_weights
    others = [w for i, w in enumerate(criteria_weights.weights) if i != idx]
    if not others:
        return criteria_weights  # single criterion: nothing to redistribute
    rest = fsum(others)
    new_weights = []
    for i, w in enumerate(criteria_weights.weights):
        if i == idx:
            new_weights.append(g)
        elif rest > 0.0:
            new_weights.append(w * (1.0 - g) / rest)
        else:
            new_weights.append((1.0 - g) / len(others))
    return WeightVector(criteria_weights.labels, tuple(new_weights),
                        criteria_weights.diagnostics)


def sensitivity_sweep(criteria_weights: WeightVector, dm: DecisionMatrix,
                      criterion: str, grid: Sequence[float],
                      mode: str = WEIGHTED_SUM) -> SensitivityReport:
    """Recompute the ranking along a grid of weights for one criterion.

    Scores are affine in the swept weight, so the crossing threshold of a
    reversed pair is recovered exactly by linear interpolation between the
    two adjacent grid points.
    """
    if criterion not in dm.criteria:
        raise UnknownCriterionError(criterion)
    for g in grid:
        if not (0.0 <= g <= 1.0):
            raise ValueError(f"grid values must lie in [0, 1], got {g}")

    points: list[SweepPoint] = []
    all_scores: list[dict[str, float]] = []
    for g in grid:
        w = reweighted(criteria_weights, criterion, g)
        scores = aggregate(w, dm, mode)
        all_scores.append(scores)
        points.append(SweepPoint(weight=g, ranking=rank(scores, mode)))

    reversals: list[RankReversal] = []
    seen: set[tuple[float, str, str]] = set()
    alts = dm.alternatives
    for k in range(len(points) - 1):
        g1, g2 = points[k].weight, points[k + 1].weight
        s1, s2 = all_scores[k], all_scores[k + 1]
        r1 = {e.alternative: e.rank for e in points[k].ranking.entries}
        r2 = {e.alternative: e.rank for e in points[k + 1].ranking.entries}
        for ai in range(len(alts)):
            for bi in range(ai + 1, len(alts)):
                a, b = alts[ai], alts[bi]
                if (r1[a] - r1[b]) * (r2[a] - r2[b]) >= 0:
                    continue
                d1 = s1[a] - s1[b]
                d2 = s2[a] - s2[b]
                if d1 == d2:
                    continue
                threshold = g1 + (g2 - g1) * d1 / (d1 - d2)
                before, after = (a, b) if r1[a] < r1[b] else (b, a)
                key = (threshold, before, after)
                if key not in seen:
                    seen.add(key)
                    reversals.append(RankReversal(
                        threshold=threshold, leader_before=before, leader_after=after))
    reversals.sort(key=lambda r: (r.threshold, r.leader_before, r.leader_after))
    return SensitivityReport(criterion=criterion, points=tuple(points),
                             reversals=tuple(reversals))


def ranking_csv(result: RankingResult) -> str:
    """CSV export ``alternative,rank,score`` with 4-decimal scores."""
    lines = ["alternative,rank,score"]
    lines += [f"{e.alternative},{e.rank},{e.score:.4f}" for e in result.entries]
    return "\n".join(lines) + "\n"


def sensitivity_csv(report: SensitivityReport) -> str:
    """CSV export ``criterion_weight,alternative,rank,score``."""
    lines = ["criterion_weight,alternative,rank,score"]
    for point in report.points:
        for e in point.ranking.entries:
            lines.append(f"{point.weight:.4f},{e.alternative},{e.rank},{e.score:.4f}")
    return "\n".join(lines) + "\n"
