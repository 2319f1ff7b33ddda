"""HTTP session service tests: lifecycle, wire formats, and error codes."""

import json
import threading
import urllib.error
import urllib.parse
import urllib.request

import pytest

from ccp.session import SCHEMA_VERSION, start_background

CLOCK_SOURCE = "alphabet T = {tick}\nprocess CLK : T = mu X . {tick} -> X\n"
PAIR_SOURCE = (
    "alphabet L = {a}\nalphabet R = {b}\n"
    "process P : L = {a} -> STOP\nprocess Q : R = {b} -> STOP\n"
    "process BOTH = P || Q\n"
)


@pytest.fixture(scope="module")
def service():
    server, port = start_background()
    yield f"http://127.0.0.1:{port}"
    server.shutdown()
    server.server_close()


def call(base, method, path, body=None, query=None):
    url = base + path
    if query:
        url += "?" + urllib.parse.urlencode(query)
    data = json.dumps(body).encode() if body is not None else None
    request = urllib.request.Request(url, data=data, method=method)
    if data is not None:
        request.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(request) as response:
            return response.status, json.loads(response.read().decode())
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read().decode())


def create(base, source=CLOCK_SOURCE, process="CLK"):
    return call(base, "POST", "/api/session", {"source": source, "process": process})


class TestCreate:
    def test_initial_state(self, service):
        status, payload = create(service)
        assert status == 200
        assert payload["version"] == SCHEMA_VERSION
        assert payload["history"] == "<>"
        assert payload["offers"] == ["{tick}"]
        assert payload["stopped"] is False
        assert payload["id"]

    def test_parse_failure_returns_400_with_error_list(self, service):
        status, payload = create(service, source="process P = {a} ->")
        assert status == 400
        assert payload["version"] == SCHEMA_VERSION
        assert payload["errors"]
        first = payload["errors"][0]
        assert {"line", "col", "expected", "found"} <= set(first)

    def test_unknown_process_rejected(self, service):
        status, payload = create(service, process="MISSING")
        assert status == 400
        assert "MISSING" in payload["error"]

    def test_unknown_fields_ignored(self, service):
        status, _ = call(
            service,
            "POST",
            "/api/session",
            {"source": CLOCK_SOURCE, "process": "CLK", "future": {"x": 1}},
        )
        assert status == 200


class TestStepUndoPeek:
    def test_step_extends_history(self, service):
        _, session = create(service)
        status, payload = call(
            service, "POST", f"/api/session/{session['id']}/step", {"eventset": "{tick}"}
        )
        assert status == 200
        assert payload["history"] == "<{tick}>"
        assert payload["offers"] == ["{tick}"]

    def test_step_on_stopped_process_conflicts(self, service):
        _, session = create(
            service, source="alphabet A = {a}\nprocess HALT : A = STOP\n", process="HALT"
        )
        status, payload = call(
            service, "POST", f"/api/session/{session['id']}/step", {"eventset": "{a}"}
        )
        assert status == 409
        assert payload["offers"] == []
        assert payload["stopped"] is True

    def test_non_offered_eventset_conflicts_with_offer_list(self, service):
        _, session = create(service)
        status, payload = call(
            service, "POST", f"/api/session/{session['id']}/step", {"eventset": "{tock}"}
        )
        assert status == 409
        assert payload["offers"] == ["{tick}"]
        assert payload["history"] == "<>"

    def test_undo_restores_previous_state(self, service):
        _, session = create(service)
        call(service, "POST", f"/api/session/{session['id']}/step", {"eventset": "{tick}"})
        status, payload = call(service, "POST", f"/api/session/{session['id']}/undo")
        assert status == 200
        assert payload["history"] == "<>"

    def test_undo_at_start_conflicts(self, service):
        _, session = create(service)
        status, payload = call(service, "POST", f"/api/session/{session['id']}/undo")
        assert status == 409
        assert "undo" in payload["error"]

    def test_peek_does_not_mutate(self, service):
        _, session = create(service)
        status, payload = call(
            service,
            "GET",
            f"/api/session/{session['id']}/peek",
            query={"eventset": "{tick}"},
        )
        assert status == 200
        assert payload["offers"] == ["{tick}"]
        _, state = call(service, "GET", f"/api/session/{session['id']}")
        assert state["history"] == "<>"

    def test_lockstep_offers_merge(self, service):
        _, session = create(service, source=PAIR_SOURCE, process="BOTH")
        assert session["offers"] == ["{a,b}"]
        status, payload = call(
            service, "POST", f"/api/session/{session['id']}/step", {"eventset": "{a,b}"}
        )
        assert status == 200
        assert payload["stopped"] is True

    def test_bad_eventset_syntax_is_400(self, service):
        _, session = create(service)
        status, payload = call(
            service, "POST", f"/api/session/{session['id']}/step", {"eventset": "{{"}
        )
        assert status == 400
        assert payload["errors"]


class TestRouting:
    def test_unknown_session_404(self, service):
        status, payload = call(service, "GET", "/api/session/nosuchid")
        assert status == 404
        assert payload["error"] == "unknown session"

    def test_unknown_route_404(self, service):
        status, _ = call(service, "GET", "/api/other")
        assert status == 404

    def test_non_json_body_400(self, service):
        url = service + "/api/session"
        request = urllib.request.Request(url, data=b"not json", method="POST")
        try:
            with urllib.request.urlopen(request) as response:
                status = response.status
        except urllib.error.HTTPError as err:
            status = err.code
        assert status == 400


class TestConcurrency:
    def test_parallel_steps_serialize(self, service):
        _, session = create(service)
        sid = session["id"]
        errors = []

        def hammer():
            for _ in range(10):
                status, _ = call(
                    service, "POST", f"/api/session/{sid}/step", {"eventset": "{tick}"}
                )
                if status != 200:
                    errors.append(status)

        threads = [threading.Thread(target=hammer) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        _, state = call(service, "GET", f"/api/session/{sid}")
        assert state["history"].count("{tick}") == 40

    def test_sessions_are_independent(self, service):
        _, one = create(service)
        _, two = create(service)
        call(service, "POST", f"/api/session/{one['id']}/step", {"eventset": "{tick}"})
        _, state_two = call(service, "GET", f"/api/session/{two['id']}")
        assert state_two["history"] == "<>"


class TestReplay:
    def test_history_replays_to_current(self, service):
        from ccp.dsl import parse_module, parse_trace
        from ccp.process import after, step

        _, session = create(service, source=PAIR_SOURCE, process="BOTH")
        sid = session["id"]
        call(service, "POST", f"/api/session/{sid}/step", {"eventset": "{a,b}"})
        _, state = call(service, "GET", f"/api/session/{sid}")
        module = parse_module(PAIR_SOURCE)
        replayed = after(module.processes["BOTH"], parse_trace(state["history"]))
        offers = [str(o.guard) for o in step(replayed)]
        assert offers == state["offers"]
