"""HTTP game service: in-memory sessions for human-vs-engine play plus
one-shot analysis endpoints for the browser UI.

Sessions live in memory with a TTL and are never persisted; the export
endpoint returns the full history so a finished game can be reproduced.
Requests to distinct sessions run independently; requests to the same
session serialize on a per-session lock. Vertex ids in responses are the
stable original ids so a client can animate deletions.
"""

from __future__ import annotations

import secrets
import threading
import time

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .canon import CanonCapError
from .engine import follower, normalize
from .families import make_family
from .graph6 import emit_graph6, parse_graph6
from .graphs import Graph, GraphError
from .solver import SolverCapError, best_move, sg_value, winning_moves

DEFAULT_TTL = 3600.0


class CreateGameBody(BaseModel):
    spec: str
    starting_player: int = 1


class MoveBody(BaseModel):
    vertex: int


class GameSession:
    def __init__(self, sid: str, spec: str, initial: Graph, starting_player: int):
        self.id = sid
        self.spec = spec
        self.initial = initial
        self.current = initial
        self.starting_player = starting_player
        self.to_move = starting_player
        self.history: list[dict] = []
        self.lock = threading.Lock()
        self.touched = time.monotonic()

    @property
    def finished(self) -> bool:
        return self.current.n == 0

    @property
    def winner(self) -> int | None:
        if not self.finished:
            return None
        if self.history:
            return self.history[-1]["player"]
        # empty at creation: nobody could move, the previous player won
        return 2 if self.starting_player == 1 else 1

    def apply(self, vertex: int) -> None:
        self.current = follower(self.current, vertex)
        self.history.append(
            {"player": self.to_move, "vertex": vertex, "remaining": self.current.n}
        )
        self.to_move = 2 if self.to_move == 1 else 1

    def state(self) -> dict:
        return {
            "id": self.id,
            "spec": self.spec,
            "vertices": [{"id": v} for v in self.current.vertices],
            "edges": [[u, v] for u, v in self.current.edges()],
            "to_move": self.to_move,
            "status": "finished" if self.finished else "in_progress",
            "winner": self.winner,
            "history": list(self.history),
        }


class SessionStore:
    def __init__(self, ttl: float = DEFAULT_TTL):
        self.ttl = ttl
        self._lock = threading.Lock()
        self._sessions: dict[str, GameSession] = {}

    def add(self, session: GameSession) -> None:
        with self._lock:
            self._sweep()
            self._sessions[session.id] = session

    def get(self, sid: str) -> GameSession | None:
        with self._lock:
            self._sweep()
            s = self._sessions.get(sid)
            if s is not None:
                s.touched = time.monotonic()
            return s

    def _sweep(self) -> None:
        now = time.monotonic()
        dead = [k for k, s in self._sessions.items() if now - s.touched > self.ttl]
        for k in dead:
            del self._sessions[k]


def _build_graph(spec: str) -> Graph:
    try:
        return make_family(spec)
    except GraphError:
        # bare graph6 text is accepted as well as the g6: spec form
        return parse_graph6(spec)


def create_app(
    session_ttl: float = DEFAULT_TTL,
    solver_cap: int = 16,
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="grim", docs_url=None, redoc_url=None)
    store = SessionStore(ttl=session_ttl)

    @app.exception_handler(RequestValidationError)
    async def malformed(request, exc):
        return JSONResponse(status_code=400, content={"detail": "malformed request"})

    def error(code: int, detail: str) -> JSONResponse:
        return JSONResponse(status_code=code, content={"detail": detail})

    @app.post("/v1/games", status_code=201)
    def create_game(body: CreateGameBody):
        if body.starting_player not in (1, 2):
            return error(400, "starting_player must be 1 or 2")
        try:
            g = normalize(_build_graph(body.spec))
        except GraphError as exc:
            return error(400, str(exc))
        session = GameSession(secrets.token_hex(8), body.spec, g, body.starting_player)
        store.add(session)
        return session.state()

    @app.get("/v1/games/{sid}")
    def get_game(sid: str):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown game")
        with s.lock:
            return s.state()

    @app.post("/v1/games/{sid}/moves")
    def human_move(sid: str, body: MoveBody):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown game")
        with s.lock:
            if s.finished:
                return error(409, "game already finished")
            if not s.current.has_vertex(body.vertex):
                return error(404, f"vertex {body.vertex} not present")
            s.apply(body.vertex)
            return s.state()

    @app.post("/v1/games/{sid}/engine-move")
    def engine_move(sid: str):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown game")
        with s.lock:
            if s.finished:
                return error(409, "game already finished")
            try:
                v = best_move(s.current, cap=solver_cap)
            except (SolverCapError, CanonCapError) as exc:
                return error(422, str(exc))
            s.apply(v)
            return {"vertex": v, "state": s.state()}

    @app.get("/v1/games/{sid}/analysis")
    def analysis(sid: str):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown game")
        with s.lock:
            try:
                sg = sg_value(s.current, cap=solver_cap)
                moves = winning_moves(s.current, cap=solver_cap)
            except (SolverCapError, CanonCapError) as exc:
                return error(422, str(exc))
            return {
                "outcome": "P" if sg == 0 else "N",
                "sg": sg,
                "winning_moves": moves,
            }

    @app.get("/v1/games/{sid}/export")
    def export(sid: str):
        s = store.get(sid)
        if s is None:
            return error(404, "unknown game")
        with s.lock:
            return {
                "id": s.id,
                "spec": s.spec,
                "starting_player": s.starting_player,
                "initial": {
                    "vertices": [{"id": v} for v in s.initial.vertices],
                    "edges": [[u, v] for u, v in s.initial.edges()],
                    "graph6": emit_graph6(s.initial) if s.initial.n <= 62 else None,
                },
                "history": list(s.history),
                "status": "finished" if s.finished else "in_progress",
                "winner": s.winner,
            }

    @app.post("/v1/analysis")
    def oneshot_analysis(body: CreateGameBody):
        try:
            g = normalize(_build_graph(body.spec))
        except GraphError as exc:
            return error(400, str(exc))
        try:
            sg = sg_value(g, cap=solver_cap)
            moves = winning_moves(g, cap=solver_cap)
        except (SolverCapError, CanonCapError) as exc:
            return error(422, str(exc))
        return {
            "outcome": "P" if sg == 0 else "N",
            "sg": sg,
            "winning_moves": moves,
            "vertices": [{"id": v} for v in g.vertices],
            "edges": [[u, v] for u, v in g.edges()],
        }

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
