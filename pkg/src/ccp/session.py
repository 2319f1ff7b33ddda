"""Interactive stepping sessions and the local JSON session service.

A session holds a live process, the trace walked so far, and an undo stack;
stepping applies one offered event set.  The HTTP service exposes sessions
to the explorer frontend; sessions live in memory only, so restarting the
service invalidates every id.  Distinct sessions are independent; each
session serializes its own mutations.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .dsl import DslParseError, parse_event_set, parse_module
from .errors import CcpError
from .process import Process, step
from .traces import EventSet, Trace, TraceElement, catenate, format_event_set, format_trace

SCHEMA_VERSION = 1


class NotOffered(CcpError):
    """The chosen event set is not among the current offers."""


class NothingToUndo(CcpError):
    """The session is already at its initial state."""


@dataclass
class Session:
    id: str
    initial: Process
    current: Process
    history: Trace = field(default_factory=Trace)
    undo_stack: list[tuple[Process, Trace]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def offers(self) -> list[EventSet]:
        return [o.guard for o in step(self.current)]

    @property
    def stopped(self) -> bool:
        return not step(self.current)

    def find_offer(self, chosen: EventSet):
        for offer in step(self.current):
            if offer.guard == chosen:
                return offer
        raise NotOffered(f"event set {format_event_set(chosen)} is not offered")

    def apply_step(self, chosen: EventSet) -> None:
        with self.lock:
            offer = self.find_offer(chosen)
            self.undo_stack.append((self.current, self.history))
            self.current = offer.next
            self.history = catenate(self.history, Trace((TraceElement(chosen),)))

    def apply_undo(self) -> None:
        with self.lock:
            if not self.undo_stack:
                raise NothingToUndo("nothing to undo")
            self.current, self.history = self.undo_stack.pop()

    def peek(self, chosen: EventSet) -> list[EventSet]:
        with self.lock:
            offer = self.find_offer(chosen)
        return [o.guard for o in step(offer.next)]

    def state_payload(self) -> dict:
        return {
            "version": SCHEMA_VERSION,
            "id": self.id,
            "history": format_trace(self.history),
            "offers": [format_event_set(es) for es in self.offers()],
            "stopped": self.stopped,
        }


class SessionStore:
    def __init__(self) -> None:
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, source: str, process_name: str) -> Session:
        module = parse_module(source)
        if process_name not in module.processes:
            raise KeyError(process_name)
        proc = module.processes[process_name]
        session = Session(id=uuid.uuid4().hex, initial=proc, current=proc)
        with self._lock:
            self._sessions[session.id] = session
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)


def _parse_errors_payload(exc: DslParseError) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "errors": [
            {
                "line": e.line,
                "col": e.col,
                "expected": e.expected,
                "found": e.found,
            }
            for e in exc.errors
        ],
    }


def make_handler(store: SessionStore):
    class SessionHandler(BaseHTTPRequestHandler):
        server_version = "ccp-session"
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # quiet by design
            pass

        # -- plumbing

        def _send(self, code: int, payload: dict) -> None:
            body = json.dumps(payload, sort_keys=True).encode("utf-8")
            self.send_response(code)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(body)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.end_headers()
            self.wfile.write(body)

        def _read_json(self) -> dict | None:
            length = int(self.headers.get("Content-Length") or 0)
            raw = self.rfile.read(length) if length else b"{}"
            try:
                parsed = json.loads(raw.decode("utf-8") or "{}")
            except (UnicodeDecodeError, json.JSONDecodeError):
                self._send(
                    400,
                    {"version": SCHEMA_VERSION, "error": "request body is not JSON"},
                )
                return None
            if not isinstance(parsed, dict):
                self._send(
                    400,
                    {"version": SCHEMA_VERSION, "error": "request body must be an object"},
                )
                return None
            return parsed

        def _session_or_404(self, session_id: str) -> Session | None:
            session = store.get(session_id)
            if session is None:
                self._send(
                    404, {"version": SCHEMA_VERSION, "error": "unknown session"}
                )
            return session

        def _eventset_or_400(self, text: str) -> EventSet | None:
            try:
                return parse_event_set(text)
            except DslParseError as exc:
                self._send(400, _parse_errors_payload(exc))
                return None

        def _conflict(self, session: Session, message: str) -> None:
            payload = session.state_payload()
            payload["error"] = message
            self._send(409, payload)

        # -- routes

        def do_POST(self) -> None:
            parts = [p for p in urlparse(self.path).path.split("/") if p]
            body = self._read_json()
            if body is None:
                return
            if parts == ["api", "session"]:
                self._create_session(body)
            elif len(parts) == 4 and parts[:2] == ["api", "session"]:
                session = self._session_or_404(parts[2])
                if session is None:
                    return
                if parts[3] == "step":
                    self._step(session, body)
                elif parts[3] == "undo":
                    self._undo(session)
                else:
                    self._send(404, {"version": SCHEMA_VERSION, "error": "no such action"})
            else:
                self._send(404, {"version": SCHEMA_VERSION, "error": "no such route"})

        def do_GET(self) -> None:
            url = urlparse(self.path)
            parts = [p for p in url.path.split("/") if p]
            if len(parts) == 3 and parts[:2] == ["api", "session"]:
                session = self._session_or_404(parts[2])
                if session is not None:
                    self._send(200, session.state_payload())
            elif len(parts) == 4 and parts[:2] == ["api", "session"] and parts[3] == "peek":
                session = self._session_or_404(parts[2])
                if session is None:
                    return
                query = parse_qs(url.query)
                raw = (query.get("eventset") or [""])[0]
                chosen = self._eventset_or_400(raw)
                if chosen is None:
                    return
                try:
                    offers = session.peek(chosen)
                except NotOffered as exc:
                    self._conflict(session, str(exc))
                    return
                self._send(
                    200,
                    {
                        "version": SCHEMA_VERSION,
                        "id": session.id,
                        "eventset": format_event_set(chosen),
                        "offers": [format_event_set(es) for es in offers],
                        "stopped": not offers,
                    },
                )
            else:
                self._send(404, {"version": SCHEMA_VERSION, "error": "no such route"})

        def _create_session(self, body: dict) -> None:
            source = body.get("source")
            process_name = body.get("process")
            if not isinstance(source, str) or not isinstance(process_name, str):
                self._send(
                    400,
                    {
                        "version": SCHEMA_VERSION,
                        "error": "body must carry 'source' and 'process' strings",
                    },
                )
                return
            try:
                session = store.create(source, process_name)
            except DslParseError as exc:
                self._send(400, _parse_errors_payload(exc))
                return
            except KeyError:
                self._send(
                    400,
                    {
                        "version": SCHEMA_VERSION,
                        "error": f"unknown process '{process_name}'",
                    },
                )
                return
            self._send(200, session.state_payload())

        def _step(self, session: Session, body: dict) -> None:
            raw = body.get("eventset")
            if not isinstance(raw, str):
                self._send(
                    400,
                    {"version": SCHEMA_VERSION, "error": "body must carry an 'eventset' string"},
                )
                return
            chosen = self._eventset_or_400(raw)
            if chosen is None:
                return
            try:
                session.apply_step(chosen)
            except NotOffered as exc:
                self._conflict(session, str(exc))
                return
            self._send(200, session.state_payload())

        def _undo(self, session: Session) -> None:
            try:
                session.apply_undo()
            except NothingToUndo as exc:
                self._conflict(session, str(exc))
                return
            self._send(200, session.state_payload())

    return SessionHandler


def make_server(host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    store = SessionStore()
    server = ThreadingHTTPServer((host, port), make_handler(store))
    server.daemon_threads = True
    return server


def start_background(host: str = "127.0.0.1", port: int = 0):
    """Start a service thread for tests and the explorer; returns (server, port)."""
    server = make_server(host, port)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, server.server_address[1]
