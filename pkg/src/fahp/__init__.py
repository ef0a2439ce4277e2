"""Fuzzy-AHP decision analysis: extent-analysis weights, rankings, sweeps."""

from .errors import (FahpError, FuzzyDomainError, IncompleteJudgmentsError,
                     InvalidMatrixError, LabelMismatchError,
                     PowerIterationError, PrecomputedNodeError,
                     SessionParseError, SessionValidationError,
                     SessionVersionError, StorageError, UnknownCriterionError,
                     UnknownNodeError, UnsupportedOrderError, Violation)
from .extent import (Diagnostic, FuzzyComparisonMatrix, WeightVector,
                     extent_weights, min_possibility, possibility,
                     synthetic_extents)
from .fuzzy import (GRADE_NAMES, ONE, SCALE, TFN, Grade, Judgment,
                    is_equal_importance)
from .model import (AGGREGATION_MODES, PAPER_MEAN, RANDOM_INDEX, WEIGHTED_SUM,
                    CRReport, DecisionMatrix, Hierarchy, Member,
                    RankReversal, RankedAlternative, RankingResult,
                    SensitivityReport, SweepPoint, aggregate,
                    build_decision_matrix, crisp_consistency_ratio, rank,
                    ranking_csv, reweighted, sensitivity_csv,
                    sensitivity_sweep)
from .store import (CRITERIA_NODE, SCALE_ID, SessionDocument, SessionStore,
                    canonical_bytes, document_from_dict, document_to_dict,
                    load_session, paper_template, save_session,
                    validation_notes, with_judgment)
from . import engine

__version__ = "0.1.0"

__all__ = [
    "AGGREGATION_MODES", "CRITERIA_NODE", "CRReport", "DecisionMatrix",
    "Diagnostic", "FahpError", "FuzzyComparisonMatrix", "FuzzyDomainError",
    "GRADE_NAMES", "Grade", "Hierarchy", "IncompleteJudgmentsError",
    "InvalidMatrixError", "Judgment", "LabelMismatchError", "Member", "ONE",
    "PAPER_MEAN", "PowerIterationError", "PrecomputedNodeError",
    "RANDOM_INDEX", "RankReversal", "RankedAlternative", "RankingResult",
    "SCALE", "SCALE_ID", "SensitivityReport", "SessionDocument",
    "SessionParseError", "SessionStore", "SessionValidationError",
    "SessionVersionError", "StorageError", "SweepPoint", "TFN",
    "UnknownCriterionError", "UnknownNodeError", "UnsupportedOrderError",
    "Violation", "WEIGHTED_SUM", "WeightVector", "aggregate",
    "build_decision_matrix", "canonical_bytes", "crisp_consistency_ratio",
    "document_from_dict", "document_to_dict", "engine", "extent_weights",
    "is_equal_importance", "load_session", "min_possibility",
    "paper_template", "possibility", "rank", "ranking_csv", "reweighted",
    "save_session", "sensitivity_csv", "sensitivity_sweep",
    "synthetic_extents", "validation_notes", "with_judgment",
]
