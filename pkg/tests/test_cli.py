import json

import pytest

from fahp import Grade, Judgment, save_session
from fahp.cli import main

from conftest import make_judgment_doc

TABLE_ORDER = ["Ultraviolet Radiation", "Dental Health", "Fall Detection",
               "Patient Surveillance", "Hygienic Hand Control",
               "Sportsmen Care", "Sleep Control", "Medical Fridges",
               "Chronic Disease Management"]
TABLE_SCORES = [0.0567, 0.0555, 0.0374, 0.0371, 0.0340,
                0.0311, 0.0297, 0.0271, 0.0247]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_rank_text(out: str):
    rows = []
    for line in out.splitlines():
        parts = line.split(maxsplit=2)
        if parts and parts[0].isdigit():
            rows.append((int(parts[0]), float(parts[1]), parts[2]))
    return rows


# --- rank ---------------------------------------------------------------------

def test_rank_demo(capsys):
    code, out, _ = run(capsys, "rank", "--demo-paper")
    assert code == 0
    rows = parse_rank_text(out)
    assert [r[2] for r in rows] == TABLE_ORDER
    assert [r[1] for r in rows] == TABLE_SCORES
    assert "aggregation: paper-mean" in out


def test_rank_weighted_sum_scales_by_three(capsys):
    _, out, _ = run(capsys, "rank", "--demo-paper", "--aggregation", "weighted-sum")
    rows = parse_rank_text(out)
    assert [r[2] for r in rows] == TABLE_ORDER
    for (_, score, _), mean_score in zip(rows, TABLE_SCORES):
        assert score == pytest.approx(3 * mean_score, abs=2e-4)


def test_rank_csv(capsys):
    code, out, _ = run(capsys, "rank", "--demo-paper", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "alternative,rank,score"
    assert lines[1] == "ultraviolet-radiation,1,0.0567"
    assert lines[9] == "chronic-disease-management,9,0.0247"


def test_rank_json_same_numbers(capsys):
    _, out, _ = run(capsys, "rank", "--demo-paper", "--format", "json")
    payload = json.loads(out)
    assert payload["aggregation"] == "paper-mean"
    assert [e["score"] for e in payload["entries"]] == TABLE_SCORES
    assert [e["name"] for e in payload["entries"]] == TABLE_ORDER


def test_rank_deterministic_output(capsys):
    _, first, _ = run(capsys, "rank", "--demo-paper")
    _, second, _ = run(capsys, "rank", "--demo-paper")
    assert first == second


def test_rank_from_file(tmp_path, capsys):
    path = tmp_path / "s.json"
    save_session(make_judgment_doc(), path)
    code, out, _ = run(capsys, "rank", str(path))
    assert code == 0
    assert "Alternative 0" in out


def test_rank_incomplete_session_is_computation_error(tmp_path, capsys):
    path = tmp_path / "s.json"
    save_session(make_judgment_doc(criteria_cells={}), path)
    code, _, err = run(capsys, "rank", str(path))
    assert code == 1
    assert "incomplete" in err


# --- weights --------------------------------------------------------------------

def test_weights_demo_criteria(capsys):
    code, out, _ = run(capsys, "weights", "--demo-paper")
    assert code == 0
    assert "economic         0.4532" in out
    assert "quality-of-life  0.3105" in out
    assert "environmental    0.2363" in out


def test_weights_zero_weight_warning(tmp_path, capsys):
    path = tmp_path / "s.json"
    save_session(make_judgment_doc(), path)
    code, out, _ = run(capsys, "weights", str(path), "--node", "criteria")
    assert code == 0
    assert "c0  1.0000" in out
    assert "c1  0.0000" in out
    assert "warning[zero-weight]" in out


def test_weights_uniform_fixture(tmp_path, capsys):
    doc = make_judgment_doc(n_criteria=4, criteria_cells={
        (i, j): Judgment(Grade.EQUAL) for i in range(4) for j in range(i + 1, 4)})
    path = tmp_path / "s.json"
    save_session(doc, path)
    _, out, _ = run(capsys, "weights", str(path))
    assert out.count("0.2500") == 4


def test_weights_recompute_requires_judgments(capsys):
    code, _, err = run(capsys, "weights", "--demo-paper", "--recompute")
    assert code == 1
    assert "no judgments" in err


def test_weights_unknown_node(capsys):
    code, _, err = run(capsys, "weights", "--demo-paper", "--node", "nope")
    assert code == 1


def test_weights_json(capsys):
    _, out, _ = run(capsys, "weights", "--demo-paper", "--format", "json")
    payload = json.loads(out)
    assert payload["weights"] == [0.4532, 0.3105, 0.2363]


# --- validate --------------------------------------------------------------------

def test_validate_ok(tmp_path, capsys):
    path = tmp_path / "s.json"
    save_session(make_judgment_doc(), path)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert out.splitlines()[0] == "OK"


def test_validate_equal_importance_note(tmp_path, capsys):
    doc = make_judgment_doc(criteria_cells={(0, 1): Judgment(Grade.EQUAL)})
    path = tmp_path / "s.json"
    save_session(doc, path)
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert "OK" in out and "note:" in out


def test_validate_bad_grade_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    raw = {
        "version": 1, "goal": "g",
        "criteria": [{"id": "a", "name": "A"}, {"id": "b", "name": "B"}],
        "alternatives": [{"id": "x", "name": "X"}],
        "judgments": {"criteria": {"(0,1)": "XL"}},
    }
    path.write_text(json.dumps(raw), encoding="utf-8")
    code, out, _ = run(capsys, "validate", str(path))
    assert code == 2
    assert "judgments.criteria.(0,1)" in out


def test_validate_malformed_and_version(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{oops", encoding="utf-8")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2 and "malformed" in err

    path.write_text('{"version": 99}', encoding="utf-8")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2 and "version" in err


def test_validate_json_format(tmp_path, capsys):
    path = tmp_path / "s.json"
    save_session(make_judgment_doc(), path)
    code, out, _ = run(capsys, "validate", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_validate_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "validate", str(tmp_path / "absent.json"))
    assert code == 2


# --- sensitivity ------------------------------------------------------------------

def test_sensitivity_demo_csv(capsys):
    code, out, _ = run(capsys, "sensitivity", "--demo-paper",
                       "--criterion", "economic", "--grid", "0,0.4532,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "criterion_weight,alternative,rank,score"
    by_weight = {}
    for line in lines[1:]:
        weight, alt, rank_, _ = line.split(",")
        by_weight.setdefault(weight, []).append((int(rank_), alt))
    assert min(by_weight["0.0000"])[1] == "dental-health"
    assert min(by_weight["0.4532"])[1] == "ultraviolet-radiation"
    assert min(by_weight["1.0000"])[1] == "ultraviolet-radiation"
    baseline = [alt for _, alt in sorted(by_weight["0.4532"])]
    assert baseline[:3] == ["ultraviolet-radiation", "dental-health", "fall-detection"]


def test_sensitivity_text_shows_reversals(capsys):
    code, out, _ = run(capsys, "sensitivity", "--demo-paper",
                       "--criterion", "economic", "--grid", "0,0.4532",
                       "--format", "text")
    assert code == 0
    assert "reversals:" in out
    assert "dental-health -> ultraviolet-radiation" in out


def test_sensitivity_grid_out_of_range_is_usage_error(capsys):
    code, _, err = run(capsys, "sensitivity", "--demo-paper",
                       "--criterion", "economic", "--grid", "0,1.5")
    assert code == 3
    assert "[0, 1]" in err


def test_sensitivity_grid_junk_is_usage_error(capsys):
    code, _, _ = run(capsys, "sensitivity", "--demo-paper",
                     "--criterion", "economic", "--grid", "a,b")
    assert code == 3


def test_sensitivity_unknown_criterion(capsys):
    code, _, _ = run(capsys, "sensitivity", "--demo-paper",
                     "--criterion", "nope", "--grid", "0.5")
    assert code == 1


def test_sensitivity_json(capsys):
    _, out, _ = run(capsys, "sensitivity", "--demo-paper",
                    "--criterion", "economic", "--grid", "0,1",
                    "--format", "json")
    payload = json.loads(out)
    assert payload["criterion"] == "economic"
    assert len(payload["points"]) == 2
    assert payload["reversals"]


# --- usage handling -----------------------------------------------------------------

def test_source_required(capsys):
    code, _, err = run(capsys, "rank")
    assert code == 3


def test_source_conflict(tmp_path, capsys):
    path = tmp_path / "s.json"
    save_session(make_judgment_doc(), path)
    code, _, err = run(capsys, "rank", str(path), "--demo-paper")
    assert code == 3
    assert "not both" in err


def test_unknown_subcommand_exits_3():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 3


def test_serve_rejects_bad_addr(capsys):
    code, _, err = run(capsys, "serve", "--addr", "nocolon")
    assert code == 3
    assert "host:port" in err


def test_bad_flag_choice_exits_3():
    with pytest.raises(SystemExit) as exc:
        main(["rank", "--demo-paper", "--aggregation", "median"])
    assert exc.value.code == 3
