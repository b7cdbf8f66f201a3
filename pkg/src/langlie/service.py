"""Live test sessions: persisted conduction of a Langlie experiment.

The service owns the design: it dictates each stimulus via the next-input
rule and clients echo the value back when recording the real-world
outcome, which keeps the replay invariant intact by construction.  Every
session is an append-only JSONL log in the data directory; state is a
fold over the log, so a crash between append and acknowledgment leaves a
replayable file (a torn trailing line is tolerated on load).  Undo is a
compensating entry, never truncation: destructive-test audit trails must
not lose information.

Mutations within one session are serialized by a per-session lock and
double-guarded by the expected trial index and the echoed stimulus, so
concurrent writers get StaleStimulusError instead of corruption.
"""

from __future__ import annotations

import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .design import (
    TrialHistory,
    balance_index,
    cumulative_sums,
    langlie_next,
    verify_replay,
)
from .errors import (
    EmptyHistoryError,
    NonConvergenceError,
    RecordFormatError,
    SeparationError,
    SessionClosedError,
    StaleStimulusError,
    UnknownSessionError,
    ValidationError,
)
from .estimation import FitResult, fit_mle
from .models import FAMILIES
from .records import Trial, parse_document, render_document

MIN_TRIALS_FOR_FIT = 2


@dataclass(frozen=True)
class NotEstimable:
    """Structured reason why no fit is available; a value, not an error."""

    reason: str
    detail: str = ""


@dataclass
class SessionState:
    id: str
    created_at: str
    a: float
    b: float
    family: str
    status: str = "active"
    trials: list[Trial] = field(default_factory=list)

    def history(self) -> TrialHistory:
        return TrialHistory(self.a, self.b,
                            [t.x for t in self.trials],
                            [t.y for t in self.trials])

    def next_stimulus(self) -> float:
        return langlie_next(self.history())


def _now() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ")


class SessionStore:
    """Append-only session persistence under one data directory."""

    def __init__(self, data_dir: str, fsync: bool = True):
        self._dir = data_dir
        self._fsync = fsync
        self._sessions: dict[str, SessionState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        os.makedirs(data_dir, exist_ok=True)
        if not os.access(data_dir, os.W_OK):
            raise OSError(f"data directory {data_dir!r} is not writable")
        self._load_all()

    # -- persistence ------------------------------------------------------

    def _path(self, session_id: str) -> str:
        return os.path.join(self._dir, f"{session_id}.jsonl")

    def _append(self, session_id: str, event: dict) -> None:
        line = json.dumps(event) + "\n"
        with open(self._path(session_id), "a") as f:
            f.write(line)
            f.flush()
            if self._fsync:
                os.fsync(f.fileno())

    def _load_all(self) -> None:
        for name in sorted(os.listdir(self._dir)):
            if not name.endswith(".jsonl"):
                continue
            state = self._replay_log(os.path.join(self._dir, name))
            verify_replay(state.history())
            self._sessions[state.id] = state
            self._locks[state.id] = threading.Lock()

    @staticmethod
    def _replay_log(path: str) -> SessionState:
        state: SessionState | None = None
        with open(path) as f:
            lines = f.read().split("\n")
        if lines and lines[-1] == "":
            lines.pop()
        for i, line in enumerate(lines):
            try:
                event = json.loads(line)
            except json.JSONDecodeError:
                if i == len(lines) - 1:
                    break  # torn trailing write; state up to here is good
                raise RecordFormatError(
                    f"{path}: corrupt log line {i + 1}") from None
            kind = event.get("event")
            if kind == "created":
                state = SessionState(
                    id=event["id"], created_at=event["created_at"],
                    a=float(event["a"]), b=float(event["b"]),
                    family=event["family"])
            elif state is None:
                raise RecordFormatError(f"{path}: log does not start with creation")
            elif kind == "outcome":
                state.trials.append(Trial(
                    index=len(state.trials) + 1, x=float(event["x"]),
                    y=int(event["y"]), timestamp=event.get("timestamp"),
                    note=event.get("note")))
            elif kind == "undo":
                if not state.trials:
                    raise RecordFormatError(f"{path}: undo with no trials")
                state.trials.pop()
            elif kind == "closed":
                state.status = "closed"
            else:
                raise RecordFormatError(f"{path}: unknown event {kind!r}")
        if state is None:
            raise RecordFormatError(f"{path}: empty session log")
        return state

    # -- lookups ----------------------------------------------------------

    def _get(self, session_id: str) -> SessionState:
        try:
            return self._sessions[session_id]
        except KeyError:
            raise UnknownSessionError(f"no session {session_id!r}") from None

    def _lock(self, session_id: str) -> threading.Lock:
        self._get(session_id)
        return self._locks[session_id]

    def list_sessions(self) -> list[SessionState]:
        return sorted(self._sessions.values(), key=lambda s: (s.created_at, s.id))

    def get(self, session_id: str) -> SessionState:
        return self._get(session_id)

    def next_stimulus(self, session_id: str) -> float:
        state = self._get(session_id)
        if state.status != "active":
            raise SessionClosedError(f"session {session_id} is closed")
        return state.next_stimulus()

    # -- mutations --------------------------------------------------------

    def create(self, a: float, b: float, family: str) -> SessionState:
        a = float(a)
        b = float(b)
        if not (json_finite(a) and json_finite(b)):
            raise ValidationError("bracket endpoints must be finite numbers")
        if not a < b:
            raise ValidationError(f"need a < b, got a={a}, b={b}")
        if family not in FAMILIES:
            raise ValidationError(f"unknown family {family!r}")
        state = SessionState(id=uuid.uuid4().hex, created_at=_now(),
                             a=a, b=b, family=family)
        with self._registry_lock:
            self._sessions[state.id] = state
            self._locks[state.id] = threading.Lock()
        self._append(state.id, {
            "event": "created", "id": state.id, "created_at": state.created_at,
            "a": a, "b": b, "family": family})
        return state

    def record_outcome(self, session_id: str, x: float, y: int,
                       note: str | None = None,
                       expected_index: int | None = None) -> SessionState:
        """Append one trial; x must echo the current next stimulus exactly."""
        if y not in (-1, 1):
            raise ValidationError(f"outcome must be +1 or -1, got {y!r}")
        with self._lock(session_id):
            state = self._get(session_id)
            if state.status != "active":
                raise SessionClosedError(f"session {session_id} is closed")
            if expected_index is not None and expected_index != len(state.trials):
                raise StaleStimulusError(
                    f"expected_index {expected_index} != current trial count "
                    f"{len(state.trials)}")
            expected_x = state.next_stimulus()
            if float(x) != expected_x:
                raise StaleStimulusError(
                    f"stimulus {x!r} is stale; the current stimulus is "
                    f"{expected_x!r}")
            trial = Trial(index=len(state.trials) + 1, x=expected_x, y=int(y),
                          timestamp=_now(), note=note)
            self._append(session_id, {
                "event": "outcome", "x": trial.x, "y": trial.y,
                "timestamp": trial.timestamp, "note": trial.note})
            state.trials.append(trial)
            return state

    def undo_last(self, session_id: str) -> SessionState:
        with self._lock(session_id):
            state = self._get(session_id)
            if state.status != "active":
                raise SessionClosedError(f"session {session_id} is closed")
            if not state.trials:
                raise EmptyHistoryError(f"session {session_id} has no trials")
            self._append(session_id, {"event": "undo",
                                      "index": len(state.trials)})
            state.trials.pop()
            return state

    def close(self, session_id: str) -> SessionState:
        with self._lock(session_id):
            state = self._get(session_id)
            if state.status != "active":
                raise SessionClosedError(f"session {session_id} is closed")
            self._append(session_id, {"event": "closed"})
            state.status = "closed"
            return state

    # -- derived ----------------------------------------------------------

    def current_estimate(self, session_id: str) -> FitResult | NotEstimable:
        state = self._get(session_id)
        if len(state.trials) < MIN_TRIALS_FOR_FIT:
            return NotEstimable("insufficient data",
                                f"{len(state.trials)} trials recorded, "
                                f"need at least {MIN_TRIALS_FOR_FIT}")
        try:
            return fit_mle(state.history(), state.family)
        except SeparationError as exc:
            return NotEstimable("separation", str(exc))
        except NonConvergenceError as exc:
            return NotEstimable("non-convergence", str(exc))

    def export(self, session_id: str, fmt: str = "json") -> str:
        if fmt != "json":
            raise ValidationError(f"unknown export format {fmt!r}")
        state = self._get(session_id)
        return render_document(state.a, state.b, state.family, state.trials)

    def import_document(self, text: str) -> SessionState:
        """Create a new session from an exported document (lossless)."""
        a, b, family, trials = parse_document(text)
        if not (json_finite(a) and json_finite(b)):
            raise ValidationError("live sessions need a finite bracket")
        state = self.create(a, b, family)
        for t in trials:
            with self._lock(state.id):
                self._append(state.id, {
                    "event": "outcome", "x": t.x, "y": t.y,
                    "timestamp": t.timestamp, "note": t.note})
                state.trials.append(t)
        return state


def json_finite(v: float) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) \
        and v == v and abs(v) != float("inf")


# ---------------------------------------------------------------------------
# HTTP API
# ---------------------------------------------------------------------------

def _fit_payload(result: FitResult | NotEstimable) -> dict:
    if isinstance(result, NotEstimable):
        return {"estimable": False, "reason": result.reason,
                "detail": result.detail}
    return {
        "estimable": True,
        "alpha_hat": result.alpha_hat,
        "beta_hat": result.beta_hat,
        "family": result.family,
        "converged": result.converged,
        "iterations": result.iterations,
        "final_gradient_norm": result.final_gradient_norm,
        "xi50_hat": result.xi50_hat,
        "log_likelihood": result.log_likelihood,
    }


def _state_payload(state: SessionState) -> dict:
    h = state.history()
    sums = cumulative_sums(h.y)
    taus = [balance_index(h.y[: i + 1]) for i in range(len(h.y))]
    return {
        "id": state.id,
        "created_at": state.created_at,
        "a": state.a,
        "b": state.b,
        "family": state.family,
        "status": state.status,
        "trial_count": len(state.trials),
        "next_stimulus": state.next_stimulus() if state.status == "active" else None,
        "expected_index": len(state.trials),
        "trials": [
            {"index": t.index, "x": t.x, "y": t.y, "s": s, "tau": tau,
             "timestamp": t.timestamp, "note": t.note}
            for t, s, tau in zip(state.trials, sums, taus)
        ],
    }


def create_app(store: SessionStore, ui_dir: str | None = None):
    """FastAPI application over a session store.

    Errors are structured as {"code", "message", "detail"}.
    """
    app = FastAPI(title="langlie session service")

    codes = {
        ValidationError: (422, "validation_error"),
        UnknownSessionError: (404, "unknown_session"),
        SessionClosedError: (409, "session_closed"),
        StaleStimulusError: (409, "stale_stimulus"),
        EmptyHistoryError: (409, "empty_history"),
        RecordFormatError: (422, "record_format_error"),
    }

    for exc_type, (status, code) in codes.items():
        def handler(request: Request, exc, status=status, code=code):
            return JSONResponse(
                status_code=status,
                content={"code": code, "message": str(exc), "detail": None})
        app.add_exception_handler(exc_type, handler)

    @app.get("/sessions")
    def list_sessions():
        return [{"id": s.id, "created_at": s.created_at, "a": s.a, "b": s.b,
                 "family": s.family, "status": s.status,
                 "trial_count": len(s.trials)}
                for s in store.list_sessions()]

    @app.post("/sessions", status_code=201)
    async def create_session(request: Request):
        body = await request.json()
        if not isinstance(body, dict):
            raise ValidationError("body must be a JSON object")
        for key in ("a", "b", "family"):
            if key not in body:
                raise ValidationError(f"missing field {key!r}")
        if not json_finite(body["a"]) or not json_finite(body["b"]):
            raise ValidationError("bracket endpoints must be finite numbers")
        state = store.create(body["a"], body["b"], body["family"])
        return _state_payload(state)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return _state_payload(store.get(session_id))

    @app.get("/sessions/{session_id}/next")
    def next_stimulus(session_id: str):
        state = store.get(session_id)
        return {"next_stimulus": store.next_stimulus(session_id),
                "expected_index": len(state.trials)}

    @app.post("/sessions/{session_id}/outcomes")
    async def record_outcome(session_id: str, request: Request):
        body = await request.json()
        if not isinstance(body, dict):
            raise ValidationError("body must be a JSON object")
        for key in ("x", "y", "expected_index"):
            if key not in body:
                raise ValidationError(f"missing field {key!r}")
        if not json_finite(body["x"]):
            raise ValidationError("x must be a finite number")
        if not isinstance(body["expected_index"], int):
            raise ValidationError("expected_index must be an integer")
        note = body.get("note")
        if note is not None and not isinstance(note, str):
            raise ValidationError("note must be a string or null")
        state = store.record_outcome(
            session_id, float(body["x"]), body["y"], note=note,
            expected_index=body["expected_index"])
        return _state_payload(state)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        return _state_payload(store.undo_last(session_id))

    @app.post("/sessions/{session_id}/close")
    def close(session_id: str):
        return _state_payload(store.close(session_id))

    @app.get("/sessions/{session_id}/estimate")
    def estimate(session_id: str):
        return _fit_payload(store.current_estimate(session_id))

    @app.get("/sessions/{session_id}/export")
    def export(session_id: str, format: str = "json"):
        doc = store.export(session_id, format)
        return Response(content=doc, media_type="application/json")

    @app.post("/sessions/import", status_code=201)
    async def import_session(request: Request):
        text = (await request.body()).decode()
        return _state_payload(store.import_document(text))

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
