"""HTTP session service: JSON over HTTP, one ApiError body per failure.

Binds the engine to a directory-backed session store.  Writes to one
session are serialized; reads always see a complete document.
"""
from __future__ import annotations

import os
from pathlib import Path
from typing import Any

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from ..errors import (IncompleteJudgmentsError, PrecomputedNodeError,
                      SessionParseError, SessionValidationError,
                      SessionVersionError, UnknownCriterionError,
                      UnsupportedOrderError)
from ..fuzzy import Judgment
from ..model import AGGREGATION_MODES
from ..store import (CRITERIA_NODE, SessionStore, document_from_dict,
                     document_to_dict, paper_template, with_judgment)
from .. import engine
from .schemas import (ApiError, ConsistencyResponse, JudgmentBody,
                      JudgmentUpdateResponse, RankingResponse, SessionCreated,
                      SensitivityResponse, WeightsResponse)

PAPER_TEMPLATE_ID = "paper"


class UTF8JSONResponse(JSONResponse):
    media_type = "application/json; charset=utf-8"


class ApiException(Exception):
    """Carries an HTTP status plus the ApiError payload."""

    def __init__(self, status: int, code: str, message: str,
                 details: dict[str, Any] | None = None):
        super().__init__(message)
        self.status = status
        self.error = ApiError(code=code, message=message, details=details)


def _fmt_cells(cells) -> list[str]:
    return [f"({i},{j})" for i, j in cells]


def _missing_details(exc: IncompleteJudgmentsError) -> dict[str, Any]:
    return {"missing": {node: _fmt_cells(cells)
                        for node, cells in exc.missing.items()}}


def _default_static_dir() -> Path | None:
    env = os.environ.get("FAHP_UI_DIR")
    if env:
        return Path(env)
    candidate = Path(__file__).resolve().parents[3] / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


def create_app(store_dir: str | Path = "./sessions",
               static_dir: str | Path | None = None) -> FastAPI:
    """Build the service around a session directory.

    ``static_dir`` (or the bundled frontend build, when present) is served
    at the root route; the JSON API lives under its own paths either way.
    """
    store = SessionStore(store_dir)
    app = FastAPI(title="fahp session service",
                  default_response_class=UTF8JSONResponse)

    @app.exception_handler(ApiException)
    async def api_exception_handler(_: Request, exc: ApiException):
        return UTF8JSONResponse(status_code=exc.status,
                                content=exc.error.model_dump(exclude_none=True))

    @app.exception_handler(StarletteHTTPException)
    async def http_exception_handler(_: Request, exc: StarletteHTTPException):
        error = ApiError(code=f"http-{exc.status_code}", message=str(exc.detail))
        return UTF8JSONResponse(status_code=exc.status_code,
                                content=error.model_dump(exclude_none=True))

    @app.exception_handler(RequestValidationError)
    async def validation_handler(_: Request, exc: RequestValidationError):
        errors = exc.errors()
        if any(e.get("type") == "json_invalid" for e in errors):
            error = ApiError(code="malformed-body", message="request body is not valid JSON")
            return UTF8JSONResponse(status_code=400,
                                    content=error.model_dump(exclude_none=True))
        detail = [{"loc": [str(p) for p in e.get("loc", ())],
                   "message": e.get("msg", "")} for e in errors]
        error = ApiError(code="invalid-request", message="request does not match the API",
                         details={"errors": detail})
        return UTF8JSONResponse(status_code=422,
                                content=error.model_dump(exclude_none=True))

    @app.exception_handler(Exception)
    async def fallback_handler(_: Request, exc: Exception):
        error = ApiError(code="internal-error", message=str(exc))
        return UTF8JSONResponse(status_code=500,
                                content=error.model_dump(exclude_none=True))

    def load_doc(session_id: str):
        try:
            return store.load(session_id)
        except KeyError:
            raise ApiException(404, "unknown-session",
                               f"no session {session_id!r}")

    def check_node(doc, node: str) -> None:
        if node != CRITERIA_NODE and node not in doc.hierarchy.criterion_ids:
            raise ApiException(404, "unknown-node", f"no node {node!r}")

    @app.post("/sessions", status_code=201, response_model=SessionCreated)
    def create_session(body: Any = Body(...)):
        if isinstance(body, dict) and set(body) == {"template"}:
            if body["template"] != PAPER_TEMPLATE_ID:
                raise ApiException(422, "unknown-template",
                                   f"no template {body['template']!r}")
            doc = paper_template()
        else:
            try:
                doc = document_from_dict(body)
            except SessionParseError as exc:
                raise ApiException(400, "malformed-body", str(exc))
            except SessionVersionError as exc:
                raise ApiException(422, "unsupported-version", str(exc))
            except SessionValidationError as exc:
                raise ApiException(
                    422, "invalid-document", "session document is invalid",
                    details={"violations": [{"path": v.path, "message": v.message}
                                            for v in exc.violations]})
        return SessionCreated(id=store.create(doc))

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return document_to_dict(load_doc(session_id))

    @app.put("/sessions/{session_id}/judgments/{node}/{i}/{j}",
             response_model=JudgmentUpdateResponse,
             response_model_exclude_none=True)
    def put_judgment(session_id: str, node: str, i: int, j: int, body: JudgmentBody):
        doc = load_doc(session_id)
        check_node(doc, node)
        if engine.is_precomputed(doc, node):
            raise ApiException(409, "precomputed-node",
                               f"node {node!r} carries precomputed priorities")
        n = len(engine.node_labels(doc, node))
        if not (0 <= i < j < n):
            raise ApiException(422, "invalid-cell",
                               f"cell must satisfy 0 <= i < j < {n}, got ({i},{j})")
        try:
            judgment = Judgment.parse(body.grade)
        except ValueError as exc:
            raise ApiException(422, "invalid-grade", str(exc))

        updated = store.update(
            session_id, lambda d: with_judgment(d, node, (i, j), judgment))
        missing = _fmt_cells(engine.missing_cells(updated, node))
        return JudgmentUpdateResponse.build(
            updated, node, f"({i},{j})", str(judgment), missing)

    @app.get("/sessions/{session_id}/weights/{node}",
             response_model=WeightsResponse)
    def get_weights(session_id: str, node: str):
        doc = load_doc(session_id)
        check_node(doc, node)
        try:
            return WeightsResponse.from_vector(node, engine.node_weights(doc, node))
        except IncompleteJudgmentsError as exc:
            raise ApiException(409, "incomplete-judgments",
                               "judgments are incomplete", _missing_details(exc))

    @app.get("/sessions/{session_id}/consistency/{node}",
             response_model=ConsistencyResponse)
    def get_consistency(session_id: str, node: str):
        doc = load_doc(session_id)
        check_node(doc, node)
        try:
            return ConsistencyResponse.from_report(
                node, engine.node_consistency(doc, node))
        except IncompleteJudgmentsError as exc:
            raise ApiException(409, "incomplete-judgments",
                               "judgments are incomplete", _missing_details(exc))
        except PrecomputedNodeError as exc:
            raise ApiException(409, "precomputed-node", str(exc))
        except UnsupportedOrderError as exc:
            raise ApiException(422, "unsupported-order", str(exc))

    @app.get("/sessions/{session_id}/ranking", response_model=RankingResponse)
    def get_ranking(session_id: str, aggregation: str | None = None):
        if aggregation is not None and aggregation not in AGGREGATION_MODES:
            raise ApiException(422, "invalid-aggregation",
                               f"aggregation must be one of {list(AGGREGATION_MODES)}")
        doc = load_doc(session_id)
        try:
            return RankingResponse.from_result(engine.ranking(doc, aggregation), doc)
        except IncompleteJudgmentsError as exc:
            raise ApiException(409, "incomplete-judgments",
                               "judgments are incomplete", _missing_details(exc))

    @app.get("/sessions/{session_id}/sensitivity",
             response_model=SensitivityResponse)
    def get_sensitivity(session_id: str, criterion: str, grid: str,
                        aggregation: str | None = None):
        if aggregation is not None and aggregation not in AGGREGATION_MODES:
            raise ApiException(422, "invalid-aggregation",
                               f"aggregation must be one of {list(AGGREGATION_MODES)}")
        try:
            values = [float(part) for part in grid.split(",") if part != ""]
        except ValueError:
            raise ApiException(422, "invalid-grid",
                               f"grid must be comma-separated numbers, got {grid!r}")
        if not values or any(not (0.0 <= g <= 1.0) for g in values):
            raise ApiException(422, "invalid-grid",
                               "grid values must lie in [0, 1]")
        doc = load_doc(session_id)
        try:
            report = engine.sensitivity(doc, criterion, values, aggregation)
        except UnknownCriterionError:
            raise ApiException(404, "unknown-criterion",
                               f"no criterion {criterion!r}")
        except IncompleteJudgmentsError as exc:
            raise ApiException(409, "incomplete-judgments",
                               "judgments are incomplete", _missing_details(exc))
        return SensitivityResponse.from_report(report, doc)

    @app.get("/templates/{template_id}")
    def get_template(template_id: str):
        if template_id != PAPER_TEMPLATE_ID:
            raise ApiException(404, "unknown-template",
                               f"no template {template_id!r}")
        return document_to_dict(paper_template())

    ui_dir = Path(static_dir) if static_dir is not None else _default_static_dir()
    if ui_dir is not None and ui_dir.is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        def index():
            return ("<!doctype html><title>fahp</title>"
                    "<p>fahp session service is running. The web UI has not "
                    "been built; see README for <code>frontend</code> build "
                    "steps.</p>")

    return app
