"""Evaluate stored sessions: node weights, consistency, ranking, sweeps.

Every node of a session is addressed by id: ``"criteria"`` for the
criteria-level matrix, a criterion id for that criterion's alternative
matrix.  A node's priorities come either from its judgments (run through
extent analysis) or from precomputed values; never both.
"""
from __future__ import annotations

from math import fsum

from .errors import (IncompleteJudgmentsError, PrecomputedNodeError,
                     UnknownCriterionError, UnknownNodeError)
from .extent import (FuzzyComparisonMatrix, WeightVector, extent_weights)
from .model import (CRReport, DecisionMatrix, RankingResult,
                    SensitivityReport, aggregate, build_decision_matrix,
                    crisp_consistency_ratio, rank, sensitivity_sweep)
from .store import CRITERIA_NODE, Cell, SessionDocument


def node_ids(doc: SessionDocument) -> list[str]:
    return [CRITERIA_NODE, *doc.hierarchy.criterion_ids]


def node_labels(doc: SessionDocument, node: str) -> tuple[str, ...]:
    if node == CRITERIA_NODE:
        return doc.hierarchy.criterion_ids
    if node in doc.hierarchy.criterion_ids:
        return doc.hierarchy.alternative_ids
    raise UnknownNodeError(node)


def is_precomputed(doc: SessionDocument, node: str) -> bool:
    node_labels(doc, node)  # raises on unknown node
    if node == CRITERIA_NODE:
        return doc.precomputed_criteria_weights is not None
    return doc.precomputed_decision_matrix is not None


def stored_judgments(doc: SessionDocument, node: str):
    node_labels(doc, node)
    if node == CRITERIA_NODE:
        return doc.criteria_judgments or {}
    return (doc.alternative_judgments or {}).get(node, {})


def missing_cells(doc: SessionDocument, node: str) -> list[Cell]:
    """Upper-triangle cells still unset for a judgment-mode node."""
    n = len(node_labels(doc, node))
    have = stored_judgments(doc, node)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in have]


def comparison_matrix(doc: SessionDocument, node: str) -> FuzzyComparisonMatrix:
    """The node's full fuzzy matrix; only judgment-mode nodes have one."""
    if is_precomputed(doc, node):
        raise PrecomputedNodeError(
            f"node {node!r} carries precomputed priorities, not judgments")
    missing = missing_cells(doc, node)
    if missing:
        raise IncompleteJudgmentsError({node: missing})
    return FuzzyComparisonMatrix.from_judgments(
        node_labels(doc, node), stored_judgments(doc, node))


def _normalized(labels: tuple[str, ...], values) -> WeightVector:
    total = fsum(values)
    return WeightVector(labels, tuple(v / total for v in values))


def node_weights(doc: SessionDocument, node: str, *,
                 recompute: bool = False) -> WeightVector:
    """Priorities of a node's children.

    Judgment-mode nodes are computed by extent analysis; precomputed nodes
    return their stored values (renormalized, since printed data may carry
    rounding slack).  ``recompute`` insists on the judgment path and fails
    on precomputed-only nodes.
    """
    if is_precomputed(doc, node):
        if recompute:
            raise PrecomputedNodeError(
                f"node {node!r} has no judgments to recompute from")
        labels = node_labels(doc, node)
        if node == CRITERIA_NODE:
            return _normalized(labels, doc.precomputed_criteria_weights)
        j = doc.hierarchy.criterion_ids.index(node)
        column = [row[j] for row in doc.precomputed_decision_matrix]
        return _normalized(labels, column)
    return extent_weights(comparison_matrix(doc, node))


def node_consistency(doc: SessionDocument, node: str) -> CRReport:
    return crisp_consistency_ratio(comparison_matrix(doc, node))


def all_missing(doc: SessionDocument, nodes: list[str] | None = None) -> dict[str, list[Cell]]:
    """Missing judgment cells per node, for every non-precomputed node."""
    missing: dict[str, list[Cell]] = {}
    for node in (nodes if nodes is not None else node_ids(doc)):
        if is_precomputed(doc, node):
            continue
        cells = missing_cells(doc, node)
        if cells:
            missing[node] = cells
    return missing


def _require_complete(doc: SessionDocument, nodes: list[str] | None = None) -> None:
    missing = all_missing(doc, nodes)
    if missing:
        raise IncompleteJudgmentsError(missing)


def decision_matrix(doc: SessionDocument) -> DecisionMatrix:
    """Local priorities of every alternative under every criterion.

    Precomputed matrices are passed through verbatim; judgment-based ones
    are assembled from per-criterion extent weights.
    """
    if doc.precomputed_decision_matrix is not None:
        return DecisionMatrix(
            alternatives=doc.hierarchy.alternative_ids,
            criteria=doc.hierarchy.criterion_ids,
            values=doc.precomputed_decision_matrix,
        )
    _require_complete(doc, list(doc.hierarchy.criterion_ids))
    per_criterion = {cid: node_weights(doc, cid)
                     for cid in doc.hierarchy.criterion_ids}
    return build_decision_matrix(doc.hierarchy, per_criterion)


def criteria_weights(doc: SessionDocument) -> WeightVector:
    return node_weights(doc, CRITERIA_NODE)


def ranking(doc: SessionDocument, aggregation: str | None = None) -> RankingResult:
    """Global ranking of the session's alternatives.

    Refuses (listing every missing cell) while any needed matrix is
    incomplete; partial extent analysis is undefined.
    """
    _require_complete(doc)
    mode = aggregation or doc.aggregation
    scores = aggregate(criteria_weights(doc), decision_matrix(doc), mode)
    return rank(scores, mode)


def sensitivity(doc: SessionDocument, criterion: str, grid,
                aggregation: str | None = None) -> SensitivityReport:
    """Sweep one criterion's weight over a grid and re-rank at each point."""
    if criterion not in doc.hierarchy.criterion_ids:
        raise UnknownCriterionError(criterion)
    _require_complete(doc)
    mode = aggregation or doc.aggregation
    return sensitivity_sweep(criteria_weights(doc), decision_matrix(doc),
                             criterion, grid, mode)
