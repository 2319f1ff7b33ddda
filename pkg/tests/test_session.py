"""Direct session-engine tests (the service wraps this same engine)."""

import json
import urllib.error
import urllib.request

import pytest

from ccp.dsl import parse_module
from ccp.process import after
from ccp.semantics import equiv_upto
from ccp.session import NothingToUndo, NotOffered, Session, start_background
from ccp.traces import eset

CLOCK = "alphabet T = {t}\nprocess CLK : T = mu X . {t} -> X\n"


def make_session():
    proc = parse_module(CLOCK).processes["CLK"]
    return Session(id="s", initial=proc, current=proc)


class TestSessionEngine:
    def test_undo_stack_depth_tracks_history(self):
        session = make_session()
        for expected in range(4):
            assert len(session.undo_stack) == len(session.history.elements) == expected
            session.apply_step(eset("t"))
        session.apply_undo()
        assert len(session.undo_stack) == len(session.history.elements) == 3

    def test_step_requires_an_offer(self):
        session = make_session()
        with pytest.raises(NotOffered):
            session.apply_step(eset("nope"))

    def test_undo_at_bottom_raises(self):
        session = make_session()
        with pytest.raises(NothingToUndo):
            session.apply_undo()

    def test_replaying_history_reproduces_current(self):
        session = make_session()
        for _ in range(3):
            session.apply_step(eset("t"))
        replayed = after(session.initial, session.history)
        assert equiv_upto(replayed, session.current, 4).equal

    def test_peek_leaves_state_alone(self):
        session = make_session()
        offers = session.peek(eset("t"))
        assert offers == [eset("t")]
        assert session.history.elements == ()
        assert len(session.undo_stack) == 0


class TestStatelessnessBoundary:
    def test_restarting_the_service_invalidates_ids(self):
        server_one, port_one = start_background()
        request = urllib.request.Request(
            f"http://127.0.0.1:{port_one}/api/session",
            data=json.dumps({"source": CLOCK, "process": "CLK"}).encode(),
            method="POST",
        )
        with urllib.request.urlopen(request) as response:
            session_id = json.loads(response.read())["id"]
        server_one.shutdown()
        server_one.server_close()

        server_two, port_two = start_background()
        try:
            with pytest.raises(urllib.error.HTTPError) as err:
                urllib.request.urlopen(
                    f"http://127.0.0.1:{port_two}/api/session/{session_id}"
                )
            assert err.value.code == 404
        finally:
            server_two.shutdown()
            server_two.server_close()
