"""Command-line entry points: batch checking, trace listings, the law
suite, a terminal stepper, and the session service.

Exit codes: 0 success, 1 a check or law failed, 2 usage or parse errors,
3 the enumeration budget was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dsl import DslParseError, ModuleSource, parse_module
from .errors import ResourceLimitError
from .laws import format_report, run_suite
from .predicates import sat_check
from .semantics import equiv_upto, export_records, traces_upto
from .session import NothingToUndo, NotOffered, Session, make_server
from .traces import format_event_set, format_trace

DEFAULT_DEPTH = 6


def _load_module(path: str) -> ModuleSource | None:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        print(f"{path}: {exc.strerror or exc}", file=sys.stderr)
        return None
    try:
        return parse_module(text)
    except DslParseError as exc:
        for error in exc.errors:
            print(f"{path}:{error}", file=sys.stderr)
        return None


def cmd_check(args) -> int:
    module = _load_module(args.file)
    if module is None:
        return 2
    if not module.checks:
        print("no check directives")
        return 0
    failed = 0
    for check in module.checks:
        depth = check.depth if check.depth is not None else args.depth
        label = f"check {check.left} {check.kind} {check.right} depth {depth}"
        try:
            if check.kind == "sat":
                report = sat_check(
                    module.processes[check.left], module.specs[check.right], depth
                )
                verdict = str(report)
                ok = report.holds
            else:
                outcome = equiv_upto(
                    module.processes[check.left], module.processes[check.right], depth
                )
                if outcome.equal:
                    verdict = f"equal to depth {depth}"
                    ok = True
                else:
                    ok = False
                    if outcome.witness is None:
                        verdict = f"differ: {outcome.reason}"
                    else:
                        verdict = (
                            f"differ, witness {format_trace(outcome.witness)} "
                            f"({outcome.reason})"
                        )
        except ResourceLimitError as exc:
            print(f"{label}: aborted: {exc}")
            return 3
        failed += 0 if ok else 1
        print(f"{label}: {verdict}")
    print(f"checks: {len(module.checks)} run, {failed} failed")
    return 1 if failed else 0


def cmd_traces(args) -> int:
    module = _load_module(args.file)
    if module is None:
        return 2
    if args.process not in module.processes:
        print(f"unknown process '{args.process}'", file=sys.stderr)
        return 2
    try:
        ts = traces_upto(module.processes[args.process], args.depth)
    except ResourceLimitError as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return 3
    if args.format == "json":
        for record in export_records(ts):
            print(json.dumps(record, sort_keys=True))
    else:
        for tr in ts.in_canonical_order():
            print(format_trace(tr))
    return 0


def cmd_laws(args) -> int:
    results = run_suite(args.seed, args.cases)
    sys.stdout.write(format_report(results, args.seed, args.cases))
    return 0 if all(r.ok for r in results) else 1


def cmd_step(args) -> int:
    module = _load_module(args.file)
    if module is None:
        return 2
    if args.process not in module.processes:
        print(f"unknown process '{args.process}'", file=sys.stderr)
        return 2
    proc = module.processes[args.process]
    session = Session(id="local", initial=proc, current=proc)
    out = sys.stdout
    print(f"stepping {args.process}; pick an offer by number, u undoes, q quits", file=out)
    while True:
        print(f"history: {format_trace(session.history)}", file=out)
        offers = session.offers()
        if offers:
            for i, guard in enumerate(offers, start=1):
                print(f"  {i}) {format_event_set(guard)}", file=out)
        else:
            print("  stopped (no offers)", file=out)
        out.write("> ")
        out.flush()
        line = sys.stdin.readline()
        if not line:
            print("", file=out)
            return 0
        choice = line.strip()
        if choice == "q":
            return 0
        if choice == "u":
            try:
                session.apply_undo()
            except NothingToUndo:
                print("nothing to undo", file=out)
            continue
        if choice.isdigit() and 1 <= int(choice) <= len(offers):
            try:
                session.apply_step(offers[int(choice) - 1])
            except NotOffered:  # unreachable from the menu, kept for safety
                print("not offered", file=out)
            continue
        print(f"invalid input: {choice!r}", file=out)


def cmd_serve(args) -> int:
    if args.host not in ("127.0.0.1", "localhost"):
        print(
            f"warning: binding {args.host} exposes the unauthenticated session "
            "service beyond this machine",
            file=sys.stderr,
        )
    try:
        server = make_server(args.host, args.port)
    except OSError as exc:
        print(f"cannot bind {args.host}:{args.port}: {exc.strerror or exc}", file=sys.stderr)
        return 2
    host, port = server.server_address[:2]
    print(f"session service listening on http://{host}:{port} (schema v1)", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ccp",
        description="Concurrent-trace process algebra toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run every check directive in a module")
    p_check.add_argument("file")
    p_check.add_argument(
        "--depth", type=int, default=DEFAULT_DEPTH,
        help="depth for directives without their own depth clause",
    )
    p_check.set_defaults(fn=cmd_check)

    p_traces = sub.add_parser("traces", help="enumerate traces of a process")
    p_traces.add_argument("file")
    p_traces.add_argument("--process", required=True)
    p_traces.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p_traces.add_argument("--format", choices=("text", "json"), default="text")
    p_traces.set_defaults(fn=cmd_traces)

    p_laws = sub.add_parser("laws", help="run the algebraic law suite")
    p_laws.add_argument("--seed", type=int, default=1)
    p_laws.add_argument("--cases", type=int, default=200)
    p_laws.set_defaults(fn=cmd_laws)

    p_step = sub.add_parser("step", help="step a process interactively")
    p_step.add_argument("file")
    p_step.add_argument("--process", required=True)
    p_step.set_defaults(fn=cmd_step)

    p_serve = sub.add_parser("serve", help="run the local session service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8421)
    p_serve.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
