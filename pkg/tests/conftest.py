import numpy as np
import pytest

from fahp import (Grade, Hierarchy, Judgment, Member, SessionDocument,
                  paper_template)


def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        outcome = "PASS" if report.passed else "FAIL"
        print(f"\nACCEPTANCE {outcome}: {name}")


@pytest.fixture
def paper_doc() -> SessionDocument:
    return paper_template()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def make_judgment_doc(n_criteria: int = 2, n_alternatives: int = 2,
                      criteria_cells=None, alternative_cells=None,
                      aggregation: str = "weighted-sum") -> SessionDocument:
    """A small fully-judged session for plumbing tests.

    Unset cells default to a strong-importance judgment so matrices are
    complete unless a test passes partial cell maps explicitly.
    """
    def full(n):
        return {(i, j): Judgment(Grade.STRONG)
                for i in range(n) for j in range(i + 1, n)}

    criteria = tuple(Member(id=f"c{k}", name=f"Criterion {k}")
                     for k in range(n_criteria))
    alternatives = tuple(Member(id=f"a{k}", name=f"Alternative {k}")
                         for k in range(n_alternatives))
    crit_cells = full(n_criteria) if criteria_cells is None else dict(criteria_cells)
    alt_cells = {m.id: (full(n_alternatives) if alternative_cells is None
                        else dict(alternative_cells))
                 for m in criteria}
    return SessionDocument(
        hierarchy=Hierarchy(goal="demo", criteria=criteria, alternatives=alternatives),
        criteria_judgments=crit_cells,
        alternative_judgments=alt_cells,
        aggregation=aggregation,
    )
