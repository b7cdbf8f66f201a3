"""Canonical record and table formats.

One JSON document per experiment/session:

    {"version": 1, "a": ..., "b": ..., "family": ...,
     "trials": [{"index": 1, "x": ..., "y": +1/-1,
                 "timestamp": str|null, "note": str|null}, ...]}

Field order, indentation, and number formatting are fixed (shortest
round-trip float repr), so exporting the same state twice yields the
same bytes.  Non-finite bounds (free-design data) serialize as null.
Bracketed documents must satisfy the design replay invariant: the
recorded inputs are exactly what the Langlie rule dictates from the
outcomes.

Path tables are plain CSV with a fixed header; floats use the same
shortest round-trip formatting.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .design import TrialHistory, replay_inputs
from .errors import RecordFormatError
from .models import FAILURE, SUCCESS

RECORD_VERSION = 1


@dataclass(frozen=True)
class Trial:
    index: int
    x: float
    y: int
    timestamp: str | None = None
    note: str | None = None


def _bound_out(v: float):
    return v if math.isfinite(v) else None


def _bound_in(v, default: float) -> float:
    if v is None:
        return default
    if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
        raise RecordFormatError(f"bound must be a finite number or null, got {v!r}")
    return float(v)


def render_document(a: float, b: float, family: str,
                    trials: Sequence[Trial]) -> str:
    """Serialize to the canonical byte-stable document."""
    doc = {
        "version": RECORD_VERSION,
        "a": _bound_out(a),
        "b": _bound_out(b),
        "family": family,
        "trials": [
            {"index": t.index, "x": t.x, "y": t.y,
             "timestamp": t.timestamp, "note": t.note}
            for t in trials
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def history_document(h: TrialHistory, family: str) -> str:
    """Canonical document for a simulated history (no timestamps/notes)."""
    trials = [Trial(index=i + 1, x=x, y=y)
              for i, (x, y) in enumerate(zip(h.x, h.y))]
    return render_document(h.a, h.b, family, trials)


def parse_document(text: str) -> tuple[float, float, str, list[Trial]]:
    """Parse and validate a canonical document; returns (a, b, family, trials).

    Bracketed documents are checked against the replay invariant.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise RecordFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise RecordFormatError("document root must be an object")
    if doc.get("version") != RECORD_VERSION:
        raise RecordFormatError(
            f"unsupported record version {doc.get('version')!r}")
    family = doc.get("family")
    if family not in ("probit", "logistic"):
        raise RecordFormatError(f"unknown family {family!r}")
    a = _bound_in(doc.get("a"), float("-inf"))
    b = _bound_in(doc.get("b"), float("inf"))
    raw = doc.get("trials")
    if not isinstance(raw, list):
        raise RecordFormatError("trials must be a list")
    trials: list[Trial] = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict):
            raise RecordFormatError(f"trial {i + 1} is not an object")
        if item.get("index") != i + 1:
            raise RecordFormatError(
                f"trial indices must be 1..n in order; position {i + 1} "
                f"has index {item.get('index')!r}")
        x = item.get("x")
        y = item.get("y")
        if not isinstance(x, (int, float)) or isinstance(x, bool) or not math.isfinite(x):
            raise RecordFormatError(f"trial {i + 1}: x must be a finite number")
        if y not in (SUCCESS, FAILURE):
            raise RecordFormatError(f"trial {i + 1}: y must be +1 or -1")
        ts = item.get("timestamp")
        note = item.get("note")
        if ts is not None and not isinstance(ts, str):
            raise RecordFormatError(f"trial {i + 1}: timestamp must be string or null")
        if note is not None and not isinstance(note, str):
            raise RecordFormatError(f"trial {i + 1}: note must be string or null")
        trials.append(Trial(index=i + 1, x=float(x), y=int(y),
                            timestamp=ts, note=note))
    history = TrialHistory(a, b, [t.x for t in trials], [t.y for t in trials])
    if history.bracketed:
        expected = replay_inputs(history.y, a, b)
        for t, want in zip(trials, expected):
            if t.x != want:
                raise RecordFormatError(
                    f"trial {t.index}: recorded x={t.x!r} does not replay "
                    f"(the design rule dictates {want!r})")
    return a, b, family, trials


def document_history(text: str) -> tuple[TrialHistory, str]:
    """Parse a document into (TrialHistory, family)."""
    a, b, family, trials = parse_document(text)
    return TrialHistory(a, b, [t.x for t in trials], [t.y for t in trials]), family


def format_float(v: float) -> str:
    """Shortest round-trip decimal form, as used everywhere in output files."""
    return repr(float(v))


def paths_table(rows: Iterable[Sequence], header: Sequence[str]) -> str:
    """Render a CSV path table with canonical float formatting."""
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(
            format_float(v) if isinstance(v, float) else str(v)
            for v in row) + "\n")
    return buf.getvalue()
