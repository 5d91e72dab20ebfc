"""HTTP service: the engine's operations behind a small JSON protocol.

Stateless endpoints call straight into the library.  Play sessions are
the one stateful part: each lives in its own JSON file under the
configured directory, is re-validated by replay when loaded, and is
serialized per session id by an in-process lock, so concurrent requests
against the same session cannot interleave.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from ._reports import diagram_report, invariants_report
from .activities import (
    Session,
    check_coloring,
    load_session,
    make_puzzle,
    new_session,
    play_move,
    reset_session,
    save_session,
    score,
)
from .catalog import catalog_get, catalog_names
from .diagram import emit_pd, parse_pd, validate_text
from .equivalence import (
    DEFAULT_CROSSING_CAP,
    DEFAULT_NODE_BUDGET,
    decide_equivalent,
    simplify,
)
from .errors import KnotlabError, NotFoundError, StructureError
from .invariants import DEFAULT_BRACKET_BUDGET
from .moves import MoveSite, apply_move, enumerate_sites
from .render import SvgOptions, layout_diagram, to_svg

_STATUS = {
    "SYNTAX": 400,
    "STRUCTURE": 400,
    "BUDGET": 400,
    "INVALID_SITE": 409,
    "NOT_FOUND": 404,
}

_HINT_NODE_BUDGET = 2_000

_SESSION_ID = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_-]{0,127}$")


@dataclass(frozen=True)
class ServiceConfig:
    """Server knobs; budget caps bound worst-case request latency."""

    session_dir: Path
    host: str = "127.0.0.1"
    port: int = 8765
    bracket_budget_cap: int = DEFAULT_BRACKET_BUDGET
    node_budget_cap: int = DEFAULT_NODE_BUDGET


class SessionStore:
    """One JSON file per session, with a per-id lock and a cache."""

    def __init__(self, root: Path | str):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        probe = self.root / ".write-probe"
        try:
            probe.write_text("")
            probe.unlink()
        except OSError as exc:
            raise RuntimeError(
                f"session directory {self.root} is not writable: {exc}"
            ) from exc
        self._cache: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry = threading.Lock()

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._registry:
            return self._locks.setdefault(session_id, threading.Lock())

    def path_of(self, session_id: str) -> Path:
        return self.root / f"{session_id}.json"

    def load(self, session_id: str) -> Session:
        cached = self._cache.get(session_id)
        if cached is not None:
            return cached
        path = self.path_of(session_id)
        if not path.exists():
            raise NotFoundError(
                f"no session named {session_id!r}",
                detail={"session_id": session_id},
            )
        s = load_session(path)
        self._cache[session_id] = s
        return s

    def save(self, s: Session) -> None:
        path = self.path_of(s.session_id)
        tmp = path.with_name(path.name + ".tmp")
        save_session(s, tmp)
        tmp.replace(path)
        self._cache[s.session_id] = s


def _checked_id(session_id: str) -> str:
    if not _SESSION_ID.match(session_id):
        raise NotFoundError(
            f"no session named {session_id!r}",
            detail={"session_id": session_id},
        )
    return session_id


# ── request bodies ───────────────────────────────────────────────────


class PdBody(BaseModel):
    pd: str


class InvariantsBody(BaseModel):
    pd: str
    budget: int | None = Field(default=None, ge=0)


class EnumerateBody(BaseModel):
    pd: str
    kinds: list[Literal["R1", "R2", "R3"]] | None = None
    directions: list[Literal["reduce", "grow", "slide"]] | None = None


class ApplyBody(BaseModel):
    pd: str
    site: dict


class ColoringBody(BaseModel):
    pd: str
    coloring: dict[int, int]


class BudgetsBody(BaseModel):
    crossing_cap: int | None = Field(default=None, ge=0)
    node_budget: int | None = Field(default=None, ge=0)
    bracket_budget: int | None = Field(default=None, ge=0)


class EquivalenceBody(BaseModel):
    pd_a: str
    pd_b: str
    budgets: BudgetsBody | None = None


class RenderOptionsBody(BaseModel):
    gap_width: float | None = Field(default=None, gt=0)
    stroke_width: float | None = Field(default=None, gt=0)
    coloring: dict[int, int] | None = None
    show_labels: bool = False


class RenderBody(BaseModel):
    pd: str
    options: RenderOptionsBody | None = None


class PuzzleNewBody(BaseModel):
    base: str
    n: int = Field(ge=0)
    seed: int
    move_budget: int | None = Field(default=None, ge=1)


class SessionMoveBody(BaseModel):
    site: dict


# ── app factory ──────────────────────────────────────────────────────


def create_app(config: ServiceConfig) -> FastAPI:
    store = SessionStore(config.session_dir)
    app = FastAPI(title="knotlab", docs_url=None, redoc_url=None, openapi_url=None)
    # The browser playground is served as static files from a different
    # origin; the service carries no credentials, so open CORS is safe.
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(KnotlabError)
    def domain_error(_request, exc: KnotlabError):
        return JSONResponse(
            status_code=_STATUS.get(exc.code, 400),
            content={
                "error": {
                    "code": exc.code,
                    "message": exc.message,
                    "detail": exc.detail,
                }
            },
        )

    @app.exception_handler(RequestValidationError)
    def bad_body(_request, exc: RequestValidationError):
        problems = [
            {"loc": [str(part) for part in e["loc"]], "msg": str(e["msg"])}
            for e in exc.errors()
        ]
        return JSONResponse(
            status_code=400,
            content={
                "error": {
                    "code": "SYNTAX",
                    "message": "malformed request body",
                    "detail": {"problems": problems},
                }
            },
        )

    def public_session(s: Session) -> dict:
        wire = s.to_wire(include_solution=False)
        wire["score"] = score(s)
        return wire

    @app.get("/catalog")
    def get_catalog():
        entries = []
        for name in catalog_names():
            entry = catalog_get(name)
            entries.append(
                {
                    "name": entry.name,
                    "pd": entry.pd,
                    "notes": entry.notes,
                    "preset_layout": [list(p) for p in entry.preset_layout or ()],
                    "crossing_count": entry.diagram.crossing_count,
                    "component_count": entry.component_count,
                }
            )
        return {"entries": entries}

    @app.post("/parse")
    def post_parse(body: PdBody):
        return diagram_report(parse_pd(body.pd))

    @app.post("/validate")
    def post_validate(body: PdBody):
        report = validate_text(body.pd)
        return {
            "valid": report.ok,
            "findings": [
                {"code": f.code, "message": f.message, "labels": list(f.labels)}
                for f in report.findings
            ],
        }

    @app.post("/invariants")
    def post_invariants(body: InvariantsBody):
        d = parse_pd(body.pd)
        budget = min(
            body.budget if body.budget is not None else config.bracket_budget_cap,
            config.bracket_budget_cap,
        )
        return invariants_report(d, budget)

    @app.post("/moves/enumerate")
    def post_enumerate(body: EnumerateBody):
        d = parse_pd(body.pd)
        sites = enumerate_sites(
            d,
            kinds=None if body.kinds is None else tuple(body.kinds),
            directions=None if body.directions is None else tuple(body.directions),
        )
        return {"sites": [s.to_wire() for s in sites], "count": len(sites)}

    @app.post("/moves/apply")
    def post_apply(body: ApplyBody):
        d = parse_pd(body.pd)
        result = apply_move(d, MoveSite.from_wire(body.site))
        return {
            "pd": emit_pd(result),
            "crossing_count": result.crossing_count,
            "free_loops": result.free_loops,
        }

    @app.post("/coloring/check")
    def post_coloring(body: ColoringBody):
        d = parse_pd(body.pd)
        for arc, color in body.coloring.items():
            if color not in (0, 1, 2):
                raise StructureError(
                    f"colors are 0, 1, or 2; arc {arc} has {color}",
                    detail={"arc": arc, "color": color},
                )
        return check_coloring(d, dict(body.coloring)).to_wire()

    @app.post("/equivalence")
    def post_equivalence(body: EquivalenceBody):
        a = parse_pd(body.pd_a)
        b = parse_pd(body.pd_b)
        budgets = body.budgets or BudgetsBody()
        verdict = decide_equivalent(
            a,
            b,
            crossing_cap=budgets.crossing_cap
            if budgets.crossing_cap is not None
            else DEFAULT_CROSSING_CAP,
            node_budget=min(
                budgets.node_budget
                if budgets.node_budget is not None
                else config.node_budget_cap,
                config.node_budget_cap,
            ),
            bracket_budget=min(
                budgets.bracket_budget
                if budgets.bracket_budget is not None
                else config.bracket_budget_cap,
                config.bracket_budget_cap,
            ),
        )
        return verdict.to_wire()

    @app.post("/render")
    def post_render(body: RenderBody):
        d = parse_pd(body.pd)
        opts = body.options or RenderOptionsBody()
        layout = layout_diagram(d)
        svg = to_svg(
            d,
            layout,
            SvgOptions(
                gap_width=opts.gap_width,
                stroke_width=opts.stroke_width,
                coloring=None if opts.coloring is None else dict(opts.coloring),
                show_labels=opts.show_labels,
            ),
        )
        return {"svg": svg, "layout": layout.to_wire()}

    @app.post("/puzzle/new")
    def post_puzzle_new(body: PuzzleNewBody):
        puzzle = make_puzzle(
            body.base, body.n, body.seed, move_budget=body.move_budget
        )
        s = new_session(puzzle)
        with store.lock_for(s.session_id):
            store.save(s)
        return public_session(s)

    @app.get("/session/{session_id}")
    def get_session(session_id: str):
        sid = _checked_id(session_id)
        with store.lock_for(sid):
            return public_session(store.load(sid))

    @app.post("/session/{session_id}/move")
    def post_session_move(session_id: str, body: SessionMoveBody):
        sid = _checked_id(session_id)
        site = MoveSite.from_wire(body.site)
        with store.lock_for(sid):
            s = play_move(store.load(sid), site)
            store.save(s)
            return public_session(s)

    @app.post("/session/{session_id}/reset")
    def post_session_reset(session_id: str):
        sid = _checked_id(session_id)
        with store.lock_for(sid):
            s = reset_session(store.load(sid))
            store.save(s)
            return public_session(s)

    @app.get("/session/{session_id}/hint")
    def get_session_hint(session_id: str):
        sid = _checked_id(session_id)
        with store.lock_for(sid):
            s = store.load(sid)
        if s.completed:
            return {"site": None, "source": None}
        solution = s.puzzle.solution_path
        on_track = s.history == solution[: len(s.history)]
        if on_track and len(s.history) < len(solution):
            return {
                "site": solution[len(s.history)].to_wire(),
                "source": "solution",
            }
        _, path = simplify(s.current, node_budget=_HINT_NODE_BUDGET)
        if path:
            return {"site": path[0].to_wire(), "source": "search"}
        return {"site": None, "source": None}

    return app


def serve(config: ServiceConfig) -> None:
    """Run the service until interrupted; startup failures are fatal."""
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
