"""Live session store and HTTP API: persistence, concurrency, round trips."""

import concurrent.futures
import json
import os

import numpy as np
import pytest
from fastapi.testclient import TestClient

from langlie import (
    EmptyHistoryError,
    SensitivityModel,
    SessionClosedError,
    StaleStimulusError,
    UnknownSessionError,
    ValidationError,
    draw_outcome,
    median,
)
from langlie.errors import RecordFormatError
from langlie.estimation import FitResult
from langlie.service import NotEstimable, SessionStore, create_app


@pytest.fixture()
def store(tmp_path):
    return SessionStore(str(tmp_path / "data"), fsync=False)


@pytest.fixture()
def client(store):
    return TestClient(create_app(store), raise_server_exceptions=False)


class TestCreate:
    def test_fresh_session_starts_at_midpoint(self, store):
        s = store.create(-1.5, 1.5, "probit")
        assert store.next_stimulus(s.id) == 0.0
        assert s.status == "active" and s.trials == []

    @pytest.mark.parametrize("a,b", [(0.0, 0.0), (1.0, -1.0)])
    def test_degenerate_brackets_rejected(self, store, a, b):
        with pytest.raises(ValidationError):
            store.create(a, b, "probit")

    def test_nonfinite_bracket_rejected(self, store):
        with pytest.raises(ValidationError):
            store.create(float("-inf"), 1.0, "probit")

    def test_unknown_family_rejected(self, store):
        with pytest.raises(ValidationError):
            store.create(-1.0, 1.0, "weibull")


class TestRecordAndNext:
    def test_conduction_sequence(self, store):
        s = store.create(-1.5, 1.5, "probit")
        assert store.next_stimulus(s.id) == 0.0
        store.record_outcome(s.id, 0.0, 1, expected_index=0)
        assert store.next_stimulus(s.id) == -0.75
        store.record_outcome(s.id, -0.75, -1, expected_index=1)
        assert store.next_stimulus(s.id) == 0.375

    def test_next_is_a_pure_read(self, store):
        s = store.create(-1.5, 1.5, "probit")
        assert [store.next_stimulus(s.id) for _ in range(3)] == [0.0] * 3

    def test_stale_stimulus_value(self, store):
        s = store.create(-1.5, 1.5, "probit")
        with pytest.raises(StaleStimulusError):
            store.record_outcome(s.id, 0.1, 1, expected_index=0)

    def test_stale_index(self, store):
        s = store.create(-1.5, 1.5, "probit")
        store.record_outcome(s.id, 0.0, 1, expected_index=0)
        with pytest.raises(StaleStimulusError):
            store.record_outcome(s.id, -0.75, 1, expected_index=0)

    def test_unknown_session(self, store):
        with pytest.raises(UnknownSessionError):
            store.next_stimulus("nope")

    def test_concurrent_posts_accept_exactly_one(self, store):
        for round_ in range(20):
            s = store.create(-1.5, 1.5, "probit")
            with concurrent.futures.ThreadPoolExecutor(2) as pool:
                results = list(pool.map(
                    lambda k: _try_record(store, s.id), range(2)))
            assert sorted(results) == ["ok", "stale"]
            assert len(store.get(s.id).trials) == 1


def _try_record(store, sid):
    try:
        store.record_outcome(sid, 0.0, 1, expected_index=0)
        return "ok"
    except StaleStimulusError:
        return "stale"


class TestUndo:
    def test_undo_restores_fresh_state(self, store):
        s = store.create(-1.5, 1.5, "probit")
        store.record_outcome(s.id, 0.0, 1, expected_index=0)
        store.undo_last(s.id)
        assert store.get(s.id).trials == []
        assert store.next_stimulus(s.id) == 0.0

    def test_undo_on_fresh_session_rejected(self, store):
        s = store.create(-1.5, 1.5, "probit")
        with pytest.raises(EmptyHistoryError):
            store.undo_last(s.id)

    def test_record_undo_record_round_trip(self, store):
        s = store.create(-1.5, 1.5, "probit")
        store.record_outcome(s.id, 0.0, 1, expected_index=0)
        before = [(t.x, t.y) for t in store.get(s.id).trials]
        store.undo_last(s.id)
        store.record_outcome(s.id, 0.0, 1, expected_index=0)
        after = [(t.x, t.y) for t in store.get(s.id).trials]
        assert before == after
        assert store.next_stimulus(s.id) == -0.75


class TestClosed:
    def test_closed_forbids_mutation(self, store):
        s = store.create(-1.5, 1.5, "probit")
        store.close(s.id)
        with pytest.raises(SessionClosedError):
            store.record_outcome(s.id, 0.0, 1, expected_index=0)
        with pytest.raises(SessionClosedError):
            store.undo_last(s.id)

    def test_closed_survives_restart(self, store, tmp_path):
        s = store.create(-1.5, 1.5, "probit")
        store.close(s.id)
        again = SessionStore(str(tmp_path / "data"), fsync=False)
        assert again.get(s.id).status == "closed"


class TestEstimate:
    def test_empty_history(self, store):
        s = store.create(-1.5, 1.5, "probit")
        result = store.current_estimate(s.id)
        assert isinstance(result, NotEstimable)
        assert result.reason == "insufficient data"

    def test_one_sided_history_reports_separation(self, store):
        s = store.create(-1.5, 1.5, "probit")
        for _ in range(4):
            x = store.next_stimulus(s.id)
            store.record_outcome(s.id, x, 1)
        result = store.current_estimate(s.id)
        assert isinstance(result, NotEstimable)
        assert result.reason == "separation"

    def test_simulated_sessions_estimate_the_median(self, store):
        # 100 seeded 50-trial conductions; the median fitted median
        # lands within 0.15 of the true one
        model = SensitivityModel("probit", 3.333, 9.999)
        xi = median(model)
        estimates = []
        for r in range(100):
            rng = np.random.default_rng([4242, r])
            s = store.create(-1.5, 1.5, "probit")
            for _ in range(50):
                x = store.next_stimulus(s.id)
                store.record_outcome(s.id, x, draw_outcome(model, x, rng))
            result = store.current_estimate(s.id)
            if isinstance(result, FitResult):
                estimates.append(result.xi50_hat)
        assert len(estimates) >= 90
        assert abs(float(np.median(estimates)) - xi) <= 0.15


class TestExportImport:
    def test_round_trip_is_byte_identical(self, store):
        model = SensitivityModel("probit", 3.333, 9.999)
        rng = np.random.default_rng(11)
        s = store.create(-1.5, 1.5, "probit")
        for _ in range(12):
            x = store.next_stimulus(s.id)
            store.record_outcome(s.id, x, draw_outcome(model, x, rng),
                                 note="shot")
        doc = store.export(s.id)
        copy = store.import_document(doc)
        assert store.export(copy.id) == doc

    def test_export_of_empty_session(self, store):
        s = store.create(-1.5, 1.5, "logistic")
        doc = store.export(s.id)
        assert json.loads(doc)["trials"] == []

    def test_unknown_format_rejected(self, store):
        s = store.create(-1.5, 1.5, "probit")
        with pytest.raises(ValidationError):
            store.export(s.id, "csv")

    def test_exported_inputs_replay(self, store):
        from langlie.records import document_history
        from langlie import verify_replay
        model = SensitivityModel("probit", 3.333, 9.999)
        rng = np.random.default_rng(12)
        s = store.create(-1.5, 1.5, "probit")
        for _ in range(9):
            x = store.next_stimulus(s.id)
            store.record_outcome(s.id, x, draw_outcome(model, x, rng))
        history, _ = document_history(store.export(s.id))
        verify_replay(history)


class TestDurability:
    def test_restart_recovers_everything(self, tmp_path):
        path = str(tmp_path / "data")
        store = SessionStore(path, fsync=True)
        s1 = store.create(-1.5, 1.5, "probit")
        store.record_outcome(s1.id, 0.0, 1)
        store.record_outcome(s1.id, -0.75, -1)
        store.undo_last(s1.id)
        s2 = store.create(-2.0, 2.0, "logistic")
        del store  # no graceful shutdown; the log is the only state
        again = SessionStore(path, fsync=True)
        r1 = again.get(s1.id)
        assert [(t.x, t.y) for t in r1.trials] == [(0.0, 1)]
        assert again.next_stimulus(s1.id) == -0.75
        assert again.get(s2.id).family == "logistic"
        assert {s.id for s in again.list_sessions()} == {s1.id, s2.id}

    def test_torn_trailing_line_is_tolerated(self, tmp_path):
        path = str(tmp_path / "data")
        store = SessionStore(path, fsync=False)
        s = store.create(-1.5, 1.5, "probit")
        store.record_outcome(s.id, 0.0, 1)
        with open(os.path.join(path, f"{s.id}.jsonl"), "a") as f:
            f.write('{"event": "outcome", "x": -0.7')  # crash mid-append
        again = SessionStore(path, fsync=False)
        assert [(t.x, t.y) for t in again.get(s.id).trials] == [(0.0, 1)]

    def test_corrupt_interior_line_is_an_error(self, tmp_path):
        path = str(tmp_path / "data")
        store = SessionStore(path, fsync=False)
        s = store.create(-1.5, 1.5, "probit")
        store.record_outcome(s.id, 0.0, 1)
        log = os.path.join(path, f"{s.id}.jsonl")
        lines = open(log).read().splitlines()
        lines.insert(1, "garbage")
        with open(log, "w") as f:
            f.write("\n".join(lines) + "\n")
        with pytest.raises(RecordFormatError):
            SessionStore(path, fsync=False)


class TestHttpApi:
    def test_full_conduction_flow(self, client):
        created = client.post("/sessions", json={"a": -1.5, "b": 1.5,
                                                 "family": "probit"})
        assert created.status_code == 201
        sid = created.json()["id"]
        assert created.json()["next_stimulus"] == 0.0

        nxt = client.get(f"/sessions/{sid}/next").json()
        assert nxt == {"next_stimulus": 0.0, "expected_index": 0}

        rec = client.post(f"/sessions/{sid}/outcomes",
                          json={"x": 0.0, "y": 1, "expected_index": 0})
        assert rec.status_code == 200
        assert rec.json()["next_stimulus"] == -0.75

        rec2 = client.post(f"/sessions/{sid}/outcomes",
                           json={"x": -0.75, "y": -1, "expected_index": 1,
                                 "note": "dud"})
        assert rec2.json()["next_stimulus"] == 0.375
        trials = rec2.json()["trials"]
        assert [t["tau"] for t in trials] == [0, 0]
        assert [t["s"] for t in trials] == [1, 0]

        undone = client.post(f"/sessions/{sid}/undo")
        assert undone.json()["next_stimulus"] == -0.75

    def test_structured_errors(self, client):
        assert client.get("/sessions/zzz").status_code == 404
        assert client.get("/sessions/zzz").json()["code"] == "unknown_session"

        bad = client.post("/sessions", json={"a": 1.0, "b": -1.0,
                                             "family": "probit"})
        assert bad.status_code == 422
        assert bad.json()["code"] == "validation_error"

        created = client.post("/sessions", json={"a": -1.5, "b": 1.5,
                                                 "family": "probit"})
        sid = created.json()["id"]
        stale = client.post(f"/sessions/{sid}/outcomes",
                            json={"x": 0.5, "y": 1, "expected_index": 0})
        assert stale.status_code == 409
        assert stale.json()["code"] == "stale_stimulus"

    def test_estimate_endpoint_shapes(self, client):
        sid = client.post("/sessions", json={"a": -1.5, "b": 1.5,
                                             "family": "probit"}).json()["id"]
        out = client.get(f"/sessions/{sid}/estimate").json()
        assert out == {"estimable": False, "reason": "insufficient data",
                       "detail": out["detail"]}

    def test_export_and_import_endpoints(self, client):
        sid = client.post("/sessions", json={"a": -1.5, "b": 1.5,
                                             "family": "probit"}).json()["id"]
        client.post(f"/sessions/{sid}/outcomes",
                    json={"x": 0.0, "y": 1, "expected_index": 0})
        doc = client.get(f"/sessions/{sid}/export").text
        imported = client.post("/sessions/import", content=doc)
        assert imported.status_code == 201
        sid2 = imported.json()["id"]
        assert client.get(f"/sessions/{sid2}/export").text == doc
        assert client.get(f"/sessions/{sid}/export?format=xml").status_code == 422

    def test_list_sessions(self, client):
        assert client.get("/sessions").json() == []
        client.post("/sessions", json={"a": -1.0, "b": 1.0, "family": "logistic"})
        listing = client.get("/sessions").json()
        assert len(listing) == 1 and listing[0]["family"] == "logistic"
