"""Bounded trace semantics: enumeration, membership, and equivalence.

All process equalities in this toolkit are certified only up to a
caller-chosen depth; every report names the bound.  Enumeration is guarded
by a configurable trace budget (CCP_MAX_TRACES overrides the default).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .errors import CompositionError, InterfaceError, NotATraceError, ResourceLimitError, ShapeError
from .process import Process, alphabet, ensure_valid, step
from .traces import EventSet, Trace, TraceElement, cc, trace_sort_key

DEFAULT_MAX_TRACES = 1_000_000
_ENV_LIMIT = "CCP_MAX_TRACES"


def trace_limit(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get(_ENV_LIMIT)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise InterfaceError(f"{_ENV_LIMIT} must be an integer, got {raw!r}") from None
    return DEFAULT_MAX_TRACES


@dataclass(frozen=True, slots=True)
class TraceSet:
    """The traces of a process enumerated to a depth bound."""

    traces: frozenset[Trace]
    depth: int

    def __contains__(self, s: Trace) -> bool:
        return s in self.traces

    def __len__(self) -> int:
        return len(self.traces)

    def __iter__(self) -> Iterator[Trace]:
        return iter(self.in_canonical_order())

    def in_canonical_order(self) -> list[Trace]:
        return sorted(self.traces, key=trace_sort_key)


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def charge(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise ResourceLimitError(self.limit)


def _suffixes(
    p: Process,
    depth: int,
    budget: _Budget,
    cache: dict[tuple[Process, int], frozenset[tuple[EventSet, ...]]],
) -> frozenset[tuple[EventSet, ...]]:
    if depth == 0:
        return frozenset({()})
    key = (p, depth)
    hit = cache.get(key)
    if hit is not None:
        return hit
    out: set[tuple[EventSet, ...]] = {()}
    for offer in step(p):
        for suffix in _suffixes(offer.next, depth - 1, budget, cache):
            out.add((offer.guard,) + suffix)
            budget.charge()
    result = frozenset(out)
    cache[key] = result
    return result


def _levels(p: Process, depth: int, max_traces: int | None = None) -> list[set[Trace]]:
    """Traces of `p` grouped by length, for lengths 0..depth."""
    ensure_valid(p)
    budget = _Budget(trace_limit(max_traces))
    cache: dict[tuple[Process, int], frozenset[tuple[EventSet, ...]]] = {}
    suffixes = _suffixes(p, depth, budget, cache)
    levels: list[set[Trace]] = [set() for _ in range(depth + 1)]
    for guards in suffixes:
        levels[len(guards)].add(Trace(tuple(TraceElement(g) for g in guards)))
    return levels


def traces_upto(p: Process, depth: int, max_traces: int | None = None) -> TraceSet:
    """Exactly the traces of length <= depth reachable by iterating step."""
    if depth < 0:
        raise InterfaceError("depth must be a natural number")
    levels = _levels(p, depth, max_traces)
    return TraceSet(frozenset().union(*levels), depth)


def trace_member(p: Process, s: Trace) -> bool:
    """Decide s ∈ traces(p) by replaying the trace against step offers."""
    ensure_valid(p)
    if not s.is_plain:
        raise ShapeError("process traces are plain traces")
    from .process import after

    try:
        after(p, s)
    except NotATraceError:
        return False
    return True


@dataclass(frozen=True, slots=True)
class Equivalence:
    """Outcome of a bounded trace-set comparison between two processes."""

    equal: bool
    depth: int
    witness: Trace | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal


def equiv_upto(
    p: Process, q: Process, depth: int, max_traces: int | None = None
) -> Equivalence:
    """Equal iff alphabets agree and trace sets agree to `depth`; otherwise
    report a shortest distinguishing trace (canonical order breaks ties)."""
    ensure_valid(p)
    ensure_valid(q)
    pa, qa = alphabet(p), alphabet(q)
    if pa != qa:
        return Equivalence(False, depth, None, f"alphabets differ: {pa} vs {qa}")
    p_levels = _levels(p, depth, max_traces)
    q_levels = _levels(q, depth, max_traces)
    for n in range(depth + 1):
        diff = p_levels[n] ^ q_levels[n]
        if diff:
            witness = min(diff, key=trace_sort_key)
            side = "left" if witness in p_levels[n] else "right"
            return Equivalence(
                False, depth, witness, f"trace of the {side} operand only"
            )
    return Equivalence(True, depth)


def cc_sets(s: TraceSet, t: TraceSet) -> frozenset[Trace]:
    """Pairwise positionwise composition of two trace sets (where defined)."""
    out: set[Trace] = set()
    for a in s.traces:
        for b in t.traces:
            try:
                out.add(cc(a, b))
            except CompositionError:
                continue
    return frozenset(out)


def intersect_sets(s: TraceSet, t: TraceSet) -> frozenset[Trace]:
    """Set intersection; the oracle for equal-alphabet parallel composition."""
    if s.depth != t.depth:
        raise InterfaceError(
            f"intersect_sets requires equal depths ({s.depth} vs {t.depth})"
        )
    return s.traces & t.traces


def export_records(ts: TraceSet) -> list[dict[str, object]]:
    """Machine-readable view: one record per trace, in canonical order."""
    from .traces import format_trace

    return [
        {"length": len(tr.elements), "trace": format_trace(tr)}
        for tr in ts.in_canonical_order()
    ]
