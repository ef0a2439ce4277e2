import pytest

from fahp import (CRITERIA_NODE, IncompleteJudgmentsError, PAPER_MEAN,
                  PrecomputedNodeError, UnknownCriterionError,
                  UnknownNodeError, WEIGHTED_SUM, Grade, Judgment,
                  paper_template)
from fahp import engine
from fahp.store import with_judgment

from conftest import make_judgment_doc


def test_node_ids_and_labels(paper_doc):
    assert engine.node_ids(paper_doc) == [
        "criteria", "economic", "quality-of-life", "environmental"]
    assert engine.node_labels(paper_doc, CRITERIA_NODE) == (
        "economic", "quality-of-life", "environmental")
    assert len(engine.node_labels(paper_doc, "economic")) == 9
    with pytest.raises(UnknownNodeError):
        engine.node_labels(paper_doc, "nope")


def test_precomputed_weights(paper_doc):
    wv = engine.node_weights(paper_doc, CRITERIA_NODE)
    assert [round(w, 4) for w in wv.weights] == [0.4532, 0.3105, 0.2363]
    assert sum(wv.weights) == pytest.approx(1.0, abs=1e-12)
    col = engine.node_weights(paper_doc, "economic")
    assert col.labels == paper_doc.hierarchy.alternative_ids
    assert round(col.weight_of("ultraviolet-radiation"), 4) == 0.193


def test_recompute_demands_judgments(paper_doc):
    with pytest.raises(PrecomputedNodeError):
        engine.node_weights(paper_doc, CRITERIA_NODE, recompute=True)
    with pytest.raises(PrecomputedNodeError):
        engine.comparison_matrix(paper_doc, "economic")


def test_precomputed_consistency_unavailable(paper_doc):
    with pytest.raises(PrecomputedNodeError):
        engine.node_consistency(paper_doc, CRITERIA_NODE)


def test_judgment_session_flow():
    doc = make_judgment_doc(n_criteria=2, n_alternatives=3)
    wv = engine.node_weights(doc, CRITERIA_NODE)
    assert wv.weights == (1.0, 0.0)
    report = engine.node_consistency(doc, "c0")
    assert report.n == 3
    result = engine.ranking(doc)
    assert result.aggregation == WEIGHTED_SUM
    assert len(result.entries) == 3


def test_missing_cells_reported():
    doc = make_judgment_doc(n_criteria=3, criteria_cells={(0, 1): Judgment(Grade.STRONG)})
    assert engine.missing_cells(doc, CRITERIA_NODE) == [(0, 2), (1, 2)]
    with pytest.raises(IncompleteJudgmentsError) as exc:
        engine.ranking(doc)
    assert exc.value.missing == {CRITERIA_NODE: [(0, 2), (1, 2)]}


def test_all_missing_covers_every_node():
    doc = make_judgment_doc(n_criteria=2, n_alternatives=3, alternative_cells={})
    missing = engine.all_missing(doc)
    assert set(missing) == {"c0", "c1"}
    assert missing["c0"] == [(0, 1), (0, 2), (1, 2)]


def test_hybrid_session():
    # Precomputed criteria weights, judgment-based alternatives.
    doc = make_judgment_doc(n_criteria=2, n_alternatives=2)
    doc = doc.__class__(
        hierarchy=doc.hierarchy,
        criteria_judgments=None,
        alternative_judgments=doc.alternative_judgments,
        precomputed_criteria_weights=(0.6, 0.4),
        aggregation=doc.aggregation,
    )
    assert engine.is_precomputed(doc, CRITERIA_NODE)
    assert not engine.is_precomputed(doc, "c0")
    result = engine.ranking(doc)
    assert result.order() == ("a0", "a1")
    assert result.entries[0].score == pytest.approx(1.0)


def test_decision_matrix_verbatim(paper_doc):
    dm = engine.decision_matrix(paper_doc)
    assert dm.value("ultraviolet-radiation", "economic") == 0.193
    assert dm.value("sleep-control", "quality-of-life") == 0.143


def test_demo_ranking_order(paper_doc):
    result = engine.ranking(paper_doc)
    assert result.aggregation == PAPER_MEAN
    assert result.order() == (
        "ultraviolet-radiation", "dental-health", "fall-detection",
        "patient-surveillance", "hygienic-hand-control", "sportsmen-care",
        "sleep-control", "medical-fridges", "chronic-disease-management")


def test_ranking_mode_override(paper_doc):
    mean = engine.ranking(paper_doc)
    summed = engine.ranking(paper_doc, WEIGHTED_SUM)
    assert summed.order() == mean.order()
    for a, b in zip(summed.entries, mean.entries):
        assert a.score == pytest.approx(3 * b.score, rel=1e-12)


def test_sensitivity_wrapper(paper_doc):
    report = engine.sensitivity(paper_doc, "economic", [0.0, 1.0])
    assert report.points[0].ranking.order()[0] == "dental-health"
    assert report.points[1].ranking.order()[0] == "ultraviolet-radiation"
    with pytest.raises(UnknownCriterionError):
        engine.sensitivity(paper_doc, "nope", [0.5])


def test_incremental_judgment_completion():
    doc = make_judgment_doc(n_criteria=2, n_alternatives=2,
                            criteria_cells={}, alternative_cells={})
    assert engine.missing_cells(doc, CRITERIA_NODE) == [(0, 1)]
    doc = with_judgment(doc, CRITERIA_NODE, (0, 1), Judgment(Grade.MODERATE))
    doc = with_judgment(doc, "c0", (0, 1), Judgment(Grade.STRONG))
    with pytest.raises(IncompleteJudgmentsError) as exc:
        engine.ranking(doc)
    assert set(exc.value.missing) == {"c1"}
    doc = with_judgment(doc, "c1", (0, 1), Judgment(Grade.EQUAL))
    result = engine.ranking(doc)
    assert [e.alternative for e in result.entries] == ["a0", "a1"]
