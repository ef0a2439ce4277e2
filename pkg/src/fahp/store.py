"""Session documents: JSON schema, validation, atomic storage, demo data.

A session document records one decision problem: its hierarchy, either
linguistic judgments (strict upper triangle only; the lower triangle is
always derived) or precomputed priorities per node, and aggregation
settings.  Serialization is canonical: saving an unmodified document is
byte-identical.
"""
from __future__ import annotations

import json
import os
import re
import secrets
import tempfile
import threading
from dataclasses import dataclass, replace
from math import fsum
from pathlib import Path
from typing import IO, Any, Mapping

from .errors import (SessionParseError, SessionValidationError,
                     SessionVersionError, StorageError, Violation)
from .fuzzy import Grade, Judgment
from .model import (AGGREGATION_MODES, COLUMN_SUM_TOL, PAPER_MEAN,
                    WEIGHTED_SUM, Hierarchy, Member)

SCHEMA_VERSION = 1

#: The only supported linguistic scale.
SCALE_ID = "paper-table-1"

#: Node id addressing the criteria-level comparison matrix; criterion ids
#: address the per-criterion alternative matrices.
CRITERIA_NODE = "criteria"

#: Precomputed criteria weights may carry printed-rounding error.
PRECOMPUTED_WEIGHT_SUM_TOL = 1e-3

Cell = tuple[int, int]
CellMap = dict[Cell, Judgment]

_CELL_KEY = re.compile(r"^\((\d+),(\d+)\)$")
_SESSION_ID_OK = re.compile(r"^[A-Za-z0-9_-]+$")


@dataclass(frozen=True)
class SessionDocument:
    """One decision problem plus everything needed to evaluate it."""

    hierarchy: Hierarchy
    criteria_judgments: CellMap | None = None
    alternative_judgments: dict[str, CellMap] | None = None
    precomputed_criteria_weights: tuple[float, ...] | None = None
    precomputed_decision_matrix: tuple[tuple[float, ...], ...] | None = None
    aggregation: str = WEIGHTED_SUM
    scale: str = SCALE_ID
    version: int = SCHEMA_VERSION

    def judgment_nodes(self) -> dict[str, CellMap]:
        """All judgment cell maps keyed by node id (criteria node included)."""
        nodes: dict[str, CellMap] = {}
        if self.criteria_judgments is not None:
            nodes[CRITERIA_NODE] = self.criteria_judgments
        if self.alternative_judgments is not None:
            nodes.update(self.alternative_judgments)
        return nodes


def _fmt_cell(cell: Cell) -> str:
    return f"({cell[0]},{cell[1]})"


def _parse_members(raw: Any, level: str, out: list[Violation]) -> tuple[Member, ...]:
    if not isinstance(raw, list) or not raw:
        out.append(Violation(level, "must be a non-empty list"))
        return ()
    members: list[Member] = []
    seen: set[str] = set()
    for idx, item in enumerate(raw):
        path = f"{level}[{idx}]"
        if not isinstance(item, dict):
            out.append(Violation(path, "must be an object with 'id' and 'name'"))
            continue
        unknown = set(item) - {"id", "name"}
        if unknown:
            out.append(Violation(path, f"unknown keys {sorted(unknown)}"))
        mid, name = item.get("id"), item.get("name")
        if not isinstance(mid, str) or not mid:
            out.append(Violation(f"{path}.id", "must be a non-empty string"))
            continue
        if not isinstance(name, str) or not name:
            out.append(Violation(f"{path}.name", "must be a non-empty string"))
            continue
        if level == "criteria" and mid == CRITERIA_NODE:
            out.append(Violation(f"{path}.id",
                                 f"{CRITERIA_NODE!r} is reserved for the criteria node"))
            continue
        if mid in seen:
            out.append(Violation(f"{path}.id", f"duplicate id {mid!r}"))
            continue
        seen.add(mid)
        members.append(Member(id=mid, name=name))
    return tuple(members)


def _parse_cells(raw: Any, n: int, path: str, out: list[Violation]) -> CellMap:
    cells: CellMap = {}
    if not isinstance(raw, dict):
        out.append(Violation(path, "must be an object of '(i,j)' cells"))
        return cells
    for key, value in raw.items():
        cell_path = f"{path}.{key}"
        match = _CELL_KEY.match(key) if isinstance(key, str) else None
        if match is None:
            out.append(Violation(cell_path, "cell keys must look like '(i,j)'"))
            continue
        i, j = int(match.group(1)), int(match.group(2))
        if not (0 <= i < j < n):
            out.append(Violation(
                cell_path, f"cell must satisfy 0 <= i < j < {n}"))
            continue
        if not isinstance(value, str):
            out.append(Violation(cell_path, "grade must be a string"))
            continue
        try:
            cells[(i, j)] = Judgment.parse(value)
        except ValueError as exc:
            out.append(Violation(cell_path, str(exc)))
    return cells


def _parse_numbers(raw: Any, path: str, out: list[Violation]) -> list[float]:
    values: list[float] = []
    for idx, v in enumerate(raw):
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            out.append(Violation(f"{path}[{idx}]", "must be a number"))
            values.append(0.0)
            continue
        if v < 0.0 or v > 1.0:
            out.append(Violation(f"{path}[{idx}]", f"must lie in [0, 1], got {v}"))
            values.append(0.0)
            continue
        values.append(float(v))
    return values


def document_from_dict(raw: Any) -> SessionDocument:
    """Validate a parsed JSON object and build the typed document.

    All violations are collected and raised together so a user can fix a
    document in one pass.
    """
    if not isinstance(raw, dict):
        raise SessionParseError("session document must be a JSON object")
    version = raw.get("version")
    if version != SCHEMA_VERSION:
        raise SessionVersionError(
            f"unsupported document version {version!r} (expected {SCHEMA_VERSION})")

    out: list[Violation] = []
    known = {"version", "goal", "criteria", "alternatives",
             "judgments", "precomputed", "settings"}
    for key in set(raw) - known:
        out.append(Violation(key, "unknown key"))

    goal = raw.get("goal")
    if not isinstance(goal, str):
        out.append(Violation("goal", "must be a string"))
        goal = ""
    criteria = _parse_members(raw.get("criteria"), "criteria", out)
    alternatives = _parse_members(raw.get("alternatives"), "alternatives", out)
    criterion_ids = [m.id for m in criteria]

    criteria_judgments: CellMap | None = None
    alternative_judgments: dict[str, CellMap] | None = None
    judgments = raw.get("judgments")
    if judgments is not None:
        if not isinstance(judgments, dict):
            out.append(Violation("judgments", "must be an object"))
        else:
            for key in set(judgments) - {"criteria", "alternatives"}:
                out.append(Violation(f"judgments.{key}", "unknown key"))
            if "criteria" in judgments:
                criteria_judgments = _parse_cells(
                    judgments["criteria"], len(criteria), "judgments.criteria", out)
            if "alternatives" in judgments:
                alt_raw = judgments["alternatives"]
                if not isinstance(alt_raw, dict):
                    out.append(Violation("judgments.alternatives", "must be an object"))
                else:
                    alternative_judgments = {}
                    for cid, cells in alt_raw.items():
                        path = f"judgments.alternatives.{cid}"
                        if cid not in criterion_ids:
                            out.append(Violation(path, f"unknown criterion {cid!r}"))
                            continue
                        alternative_judgments[cid] = _parse_cells(
                            cells, len(alternatives), path, out)

    pre_weights: tuple[float, ...] | None = None
    pre_matrix: tuple[tuple[float, ...], ...] | None = None
    precomputed = raw.get("precomputed")
    if precomputed is not None:
        if not isinstance(precomputed, dict):
            out.append(Violation("precomputed", "must be an object"))
        else:
            for key in set(precomputed) - {"criteria_weights", "decision_matrix"}:
                out.append(Violation(f"precomputed.{key}", "unknown key"))
            if "criteria_weights" in precomputed:
                wraw = precomputed["criteria_weights"]
                path = "precomputed.criteria_weights"
                if not isinstance(wraw, list) or len(wraw) != len(criteria):
                    out.append(Violation(
                        path, f"must be a list of {len(criteria)} weights"))
                else:
                    values = _parse_numbers(wraw, path, out)
                    if abs(fsum(values) - 1.0) > PRECOMPUTED_WEIGHT_SUM_TOL:
                        out.append(Violation(
                            path, f"weights sum to {fsum(values)}, expected 1"))
                    pre_weights = tuple(values)
            if "decision_matrix" in precomputed:
                mraw = precomputed["decision_matrix"]
                path = "precomputed.decision_matrix"
                if (not isinstance(mraw, list) or len(mraw) != len(alternatives)
                        or any(not isinstance(r, list) or len(r) != len(criteria)
                               for r in mraw)):
                    out.append(Violation(
                        path, f"must be a {len(alternatives)}x{len(criteria)} grid"))
                else:
                    rows = [_parse_numbers(r, f"{path}[{i}]", out)
                            for i, r in enumerate(mraw)]
                    for j in range(len(criteria)):
                        s = fsum(row[j] for row in rows)
                        if abs(s - 1.0) > COLUMN_SUM_TOL:
                            out.append(Violation(
                                path, f"column {j} sums to {s}, expected 1"))
                    pre_matrix = tuple(tuple(r) for r in rows)

    # A node's priorities must come from exactly one place.
    if criteria_judgments is not None and pre_weights is not None:
        out.append(Violation(
            "precomputed.criteria_weights",
            "criteria are judgment-mode; remove either the judgments or the weights"))
    if alternative_judgments and pre_matrix is not None:
        for cid in alternative_judgments:
            out.append(Violation(
                f"judgments.alternatives.{cid}",
                "alternatives are precomputed; remove either the judgments "
                "or the decision matrix"))

    aggregation: str = WEIGHTED_SUM
    scale: str = SCALE_ID
    settings = raw.get("settings")
    if settings is not None:
        if not isinstance(settings, dict):
            out.append(Violation("settings", "must be an object"))
        else:
            for key in set(settings) - {"aggregation", "scale"}:
                out.append(Violation(f"settings.{key}", "unknown key"))
            if "aggregation" in settings:
                if settings["aggregation"] not in AGGREGATION_MODES:
                    out.append(Violation(
                        "settings.aggregation",
                        f"must be one of {list(AGGREGATION_MODES)}"))
                else:
                    aggregation = settings["aggregation"]
            if "scale" in settings:
                if settings["scale"] != SCALE_ID:
                    out.append(Violation(
                        "settings.scale", f"only {SCALE_ID!r} is supported"))
                else:
                    scale = settings["scale"]

    if out:
        raise SessionValidationError(out)

    try:
        hierarchy = Hierarchy(goal=goal, criteria=criteria, alternatives=alternatives)
    except ValueError as exc:  # unreachable after the checks above
        raise SessionValidationError([Violation("hierarchy", str(exc))]) from exc

    return SessionDocument(
        hierarchy=hierarchy,
        criteria_judgments=criteria_judgments,
        alternative_judgments=alternative_judgments,
        precomputed_criteria_weights=pre_weights,
        precomputed_decision_matrix=pre_matrix,
        aggregation=aggregation,
        scale=scale,
    )


def document_to_dict(doc: SessionDocument) -> dict[str, Any]:
    """Canonical plain-dict form: stable key order, sorted cell keys."""
    data: dict[str, Any] = {
        "version": doc.version,
        "goal": doc.hierarchy.goal,
        "criteria": [{"id": m.id, "name": m.name} for m in doc.hierarchy.criteria],
        "alternatives": [{"id": m.id, "name": m.name}
                         for m in doc.hierarchy.alternatives],
    }
    if doc.criteria_judgments is not None or doc.alternative_judgments is not None:
        judgments: dict[str, Any] = {}
        if doc.criteria_judgments is not None:
            judgments["criteria"] = {
                _fmt_cell(c): str(doc.criteria_judgments[c])
                for c in sorted(doc.criteria_judgments)}
        if doc.alternative_judgments is not None:
            judgments["alternatives"] = {
                cid: {_fmt_cell(c): str(cells[c]) for c in sorted(cells)}
                for cid, cells in _in_criterion_order(doc)}
        data["judgments"] = judgments
    if (doc.precomputed_criteria_weights is not None
            or doc.precomputed_decision_matrix is not None):
        precomputed: dict[str, Any] = {}
        if doc.precomputed_criteria_weights is not None:
            precomputed["criteria_weights"] = list(doc.precomputed_criteria_weights)
        if doc.precomputed_decision_matrix is not None:
            precomputed["decision_matrix"] = [list(r)
                                              for r in doc.precomputed_decision_matrix]
        data["precomputed"] = precomputed
    data["settings"] = {"aggregation": doc.aggregation, "scale": doc.scale}
    return data


def _in_criterion_order(doc: SessionDocument):
    assert doc.alternative_judgments is not None
    ordered = [(m.id, doc.alternative_judgments[m.id])
               for m in doc.hierarchy.criteria if m.id in doc.alternative_judgments]
    # Defensive: keep any ids not in the hierarchy (cannot happen post-validation).
    rest = [(cid, cells) for cid, cells in doc.alternative_judgments.items()
            if cid not in {m.id for m in doc.hierarchy.criteria}]
    return ordered + sorted(rest)


def canonical_bytes(doc: SessionDocument) -> bytes:
    return (json.dumps(document_to_dict(doc), ensure_ascii=False, indent=2)
            + "\n").encode("utf-8")


def load_session(source: str | Path | IO) -> SessionDocument:
    """Load and fully validate a session document from a path or stream."""
    if isinstance(source, (str, Path)):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise StorageError(f"cannot read session file {source}: {exc}") from exc
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SessionParseError(f"malformed session document: {exc}") from exc
    return document_from_dict(raw)


def save_session(doc: SessionDocument, path: str | Path) -> None:
    """Write the canonical form atomically (temp file + rename)."""
    target = Path(path)
    payload = canonical_bytes(doc)
    try:
        fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=f".{target.name}.")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(payload)
            os.replace(tmp, target)
        except BaseException:
            os.unlink(tmp)
            raise
    except OSError as exc:
        raise StorageError(f"cannot write session file {target}: {exc}") from exc


def with_judgment(doc: SessionDocument, node: str, cell: Cell,
                  judgment: Judgment) -> SessionDocument:
    """Return a copy of ``doc`` with one upper-triangle judgment set."""
    if node == CRITERIA_NODE:
        cells = dict(doc.criteria_judgments or {})
        cells[cell] = judgment
        return replace(doc, criteria_judgments=cells)
    nodes = {cid: dict(c) for cid, c in (doc.alternative_judgments or {}).items()}
    cells = nodes.setdefault(node, {})
    cells[cell] = judgment
    return replace(doc, alternative_judgments=nodes)


def validation_notes(doc: SessionDocument) -> list[str]:
    """Non-fatal observations about a valid document."""
    notes: list[str] = []
    ei_nodes = sorted(
        node for node, cells in doc.judgment_nodes().items()
        if any(j.grade is Grade.EQUAL for j in cells.values()))
    if ei_nodes:
        notes.append(
            "equal-importance judgments present (nodes: "
            + ", ".join(ei_nodes)
            + "); the (1, 1, 2) scale triple makes them asymmetric under reciprocity")
    return notes


class SessionStore:
    """Directory of one JSON document per session id.

    Writes to the same id are serialized by an in-process lock and are
    atomic on disk, so readers always see a complete document.
    """

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._registry = threading.Lock()

    def _lock(self, session_id: str) -> threading.Lock:
        with self._registry:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        if not _SESSION_ID_OK.match(session_id):
            raise KeyError(session_id)
        return self.root / f"{session_id}.json"

    def create(self, doc: SessionDocument) -> str:
        session_id = secrets.token_urlsafe(16)
        self.save(session_id, doc)
        return session_id

    def save(self, session_id: str, doc: SessionDocument) -> None:
        path = self._path(session_id)
        with self._lock(session_id):
            save_session(doc, path)

    def load(self, session_id: str) -> SessionDocument:
        path = self._path(session_id)
        if not path.exists():
            raise KeyError(session_id)
        return load_session(path)

    def update(self, session_id: str, mutate) -> SessionDocument:
        """Apply ``mutate(doc) -> doc`` atomically with respect to other
        writers of the same session."""
        path = self._path(session_id)
        with self._lock(session_id):
            if not path.exists():
                raise KeyError(session_id)
            doc = load_session(path)
            updated = mutate(doc)
            save_session(updated, path)
            return updated

    def exists(self, session_id: str) -> bool:
        try:
            return self._path(session_id).exists()
        except KeyError:
            return False

    def ids(self) -> list[str]:
        return sorted(p.stem for p in self.root.glob("*.json"))


# ---------------------------------------------------------------------------
# Bundled demo dataset ("paper" template): nine healthcare IoT application
# areas scored against three sustainable-development criteria by an expert
# panel, shipped as precomputed priorities.

_DEMO_GOAL = "Sustainable IoT priorities in healthcare"

_DEMO_CRITERIA: tuple[tuple[str, str, float], ...] = (
    ("economic", "Economic Prosperity", 0.4532),
    ("quality-of-life", "Quality of Life", 0.3105),
    ("environmental", "Environmental Protection", 0.2363),
)

_DEMO_ALTERNATIVES: tuple[tuple[str, str, tuple[float, float, float]], ...] = (
    ("fall-detection", "Fall Detection", (0.109, 0.096, 0.14)),
    ("medical-fridges", "Medical Fridges", (0.084, 0.11, 0.039)),
    ("sportsmen-care", "Sportsmen Care", (0.069, 0.0836, 0.153)),
    ("patient-surveillance", "Patient Surveillance", (0.117, 0.0954, 0.121)),
    ("chronic-disease-management", "Chronic Disease Management", (0.079, 0.104, 0.025)),
    ("ultraviolet-radiation", "Ultraviolet Radiation", (0.193, 0.132, 0.176)),
    ("hygienic-hand-control", "Hygienic Hand Control", (0.098, 0.094, 0.12)),
    ("sleep-control", "Sleep Control", (0.068, 0.143, 0.059)),
    ("dental-health", "Dental Health", (0.183, 0.142, 0.167)),
)


def paper_template() -> SessionDocument:
    """The built-in demo session (template id "paper").

    Criteria weights and the 9x3 decision matrix are precomputed; the
    aggregation mode is the mean-scaled one its reference scores use.
    """
    return SessionDocument(
        hierarchy=Hierarchy(
            goal=_DEMO_GOAL,
            criteria=tuple(Member(id=i, name=n) for i, n, _ in _DEMO_CRITERIA),
            alternatives=tuple(Member(id=i, name=n) for i, n, _ in _DEMO_ALTERNATIVES),
        ),
        precomputed_criteria_weights=tuple(w for _, _, w in _DEMO_CRITERIA),
        precomputed_decision_matrix=tuple(row for _, _, row in _DEMO_ALTERNATIVES),
        aggregation=PAPER_MEAN,
    )
