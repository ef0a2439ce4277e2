"""Pydantic request/response models for the HTTP session service."""
from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field

from ..engine import node_consistency, node_weights
from ..errors import UnsupportedOrderError
from ..extent import WeightVector
from ..model import CRReport, RankingResult, SensitivityReport
from ..store import SessionDocument


class ApiError(BaseModel):
    """Uniform error body carried by every non-2xx response."""

    code: str
    message: str
    details: Optional[dict[str, Any]] = None


class SessionCreated(BaseModel):
    id: str


class JudgmentBody(BaseModel):
    grade: str = Field(description='wire-format grade, e.g. "SI" or "1/MI"')


class DiagnosticModel(BaseModel):
    code: str
    message: str
    label: Optional[str] = None


class WeightsResponse(BaseModel):
    node: str
    labels: list[str]
    weights: list[float]
    diagnostics: list[DiagnosticModel]

    @classmethod
    def from_vector(cls, node: str, wv: WeightVector) -> "WeightsResponse":
        return cls(
            node=node,
            labels=list(wv.labels),
            weights=list(wv.weights),
            diagnostics=[DiagnosticModel(code=d.code, message=d.message, label=d.label)
                         for d in wv.diagnostics],
        )


class ConsistencyResponse(BaseModel):
    node: str
    lambda_max: float
    consistency_index: float
    consistency_ratio: float
    acceptable: bool
    n: int

    @classmethod
    def from_report(cls, node: str, report: CRReport) -> "ConsistencyResponse":
        return cls(node=node, lambda_max=report.lambda_max,
                   consistency_index=report.consistency_index,
                   consistency_ratio=report.consistency_ratio,
                   acceptable=report.acceptable, n=report.n)


class JudgmentUpdateResponse(BaseModel):
    """Live snapshot returned after storing one judgment."""

    node: str
    cell: str
    grade: str
    complete: bool
    missing: list[str]
    weights: Optional[WeightsResponse] = None
    consistency: Optional[ConsistencyResponse] = None

    @classmethod
    def build(cls, doc: SessionDocument, node: str, cell: str, grade: str,
              missing: list[str]) -> "JudgmentUpdateResponse":
        weights = consistency = None
        if not missing:
            weights = WeightsResponse.from_vector(node, node_weights(doc, node))
            try:
                consistency = ConsistencyResponse.from_report(
                    node, node_consistency(doc, node))
            except UnsupportedOrderError:
                consistency = None  # no random-index constant for this order
        return cls(node=node, cell=cell, grade=grade, complete=not missing,
                   missing=missing, weights=weights, consistency=consistency)


class RankingEntry(BaseModel):
    alternative: str
    name: str
    rank: int
    score: float


class RankingResponse(BaseModel):
    aggregation: str
    entries: list[RankingEntry]

    @classmethod
    def from_result(cls, result: RankingResult, doc: SessionDocument) -> "RankingResponse":
        names = {m.id: m.name for m in doc.hierarchy.alternatives}
        return cls(
            aggregation=result.aggregation,
            entries=[RankingEntry(alternative=e.alternative, name=names[e.alternative],
                                  rank=e.rank, score=e.score)
                     for e in result.entries],
        )


class SweepPointModel(BaseModel):
    weight: float
    ranking: RankingResponse


class ReversalModel(BaseModel):
    threshold: float
    leader_before: str
    leader_after: str


class SensitivityResponse(BaseModel):
    criterion: str
    points: list[SweepPointModel]
    reversals: list[ReversalModel]

    @classmethod
    def from_report(cls, report: SensitivityReport,
                    doc: SessionDocument) -> "SensitivityResponse":
        return cls(
            criterion=report.criterion,
            points=[SweepPointModel(weight=p.weight,
                                    ranking=RankingResponse.from_result(p.ranking, doc))
                    for p in report.points],
            reversals=[ReversalModel(threshold=r.threshold,
                                     leader_before=r.leader_before,
                                     leader_after=r.leader_after)
                       for r in report.reversals],
        )
