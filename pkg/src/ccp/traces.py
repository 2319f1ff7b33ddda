"""Concurrent traces and their algebra.

A trace element is a nonempty finite set of events that occur simultaneously;
a concurrent trace is a finite sequence of such elements.  Pair traces attach
a payload set to every element and exist solely to feed `select`.

All values are immutable and hashable; every operation is a pure function.
The termination mark is a reserved event that may only occur as the singleton
element {✓} and is interpreted only by `seq_compose` (and searched for by
`infix_in`); every other operator treats it as an ordinary event.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import CompositionError, DomainError, ShapeError

TICK = "✓"  # rendered ✓; ASCII input fallback is ^OK
TICK_ASCII = "^OK"

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def is_event_name(name: str) -> bool:
    """True for identifiers acceptable as event names (or the ✓ mark)."""
    return name == TICK or bool(_NAME_RE.match(name))


def _canonical(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names)))


@dataclass(frozen=True, slots=True)
class EventSet:
    """A nonempty set of events occurring at one instant, stored sorted."""

    events: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.events:
            raise DomainError("an event set must be nonempty")
        if self.events != _canonical(self.events):
            raise DomainError("event set tuple must be sorted and duplicate-free")
        for name in self.events:
            if not is_event_name(name):
                raise DomainError(f"invalid event name: {name!r}")
        if TICK in self.events and len(self.events) > 1:
            raise DomainError("the ✓ mark may only form the singleton element {✓}")

    @classmethod
    def of(cls, *names: str) -> "EventSet":
        return cls(_canonical(names))

    @classmethod
    def from_iterable(cls, names: Iterable[str]) -> "EventSet":
        return cls(_canonical(names))

    @property
    def is_tick(self) -> bool:
        return self.events == (TICK,)

    def __contains__(self, name: str) -> bool:
        return name in self.events

    def __iter__(self) -> Iterator[str]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def union(self, other: "EventSet") -> "EventSet":
        return EventSet(_canonical(self.events + other.events))

    def overlaps(self, other: "EventSet") -> bool:
        return bool(set(self.events) & set(other.events))

    def issubset(self, names: Iterable[str]) -> bool:
        pool = set(names)
        return all(e in pool for e in self.events)

    def __str__(self) -> str:
        return format_event_set(self)

    def __repr__(self) -> str:
        return f"EventSet({format_event_set(self)})"


@dataclass(frozen=True, slots=True)
class Alphabet:
    """A finite set of events a process may engage in; never contains ✓."""

    events: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.events != _canonical(self.events):
            raise DomainError("alphabet tuple must be sorted and duplicate-free")
        for name in self.events:
            if name == TICK:
                raise DomainError("the ✓ mark never belongs to an alphabet")
            if not is_event_name(name):
                raise DomainError(f"invalid event name: {name!r}")

    @classmethod
    def of(cls, *names: str) -> "Alphabet":
        return cls(_canonical(names))

    @classmethod
    def from_iterable(cls, names: Iterable[str]) -> "Alphabet":
        return cls(_canonical(names))

    def __contains__(self, name: str) -> bool:
        return name in self.events

    def __iter__(self) -> Iterator[str]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def union(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(_canonical(self.events + other.events))

    def intersection(self, other: "Alphabet") -> "Alphabet":
        mine = set(self.events)
        return Alphabet(_canonical(e for e in other.events if e in mine))

    def covers(self, es: EventSet) -> bool:
        return es.issubset(self.events)

    def __str__(self) -> str:
        return "{" + ",".join(self.events) + "}"

    def __repr__(self) -> str:
        return f"Alphabet({self})"


@dataclass(frozen=True, slots=True)
class TraceElement:
    """One instant of a trace: its labels, plus a payload in pair traces."""

    labels: EventSet
    payload: EventSet | None = None

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True, slots=True)
class Trace:
    """A finite sequence of trace elements; payload presence is uniform."""

    elements: tuple[TraceElement, ...] = ()

    def __post_init__(self) -> None:
        kinds = {el.payload is not None for el in self.elements}
        if len(kinds) > 1:
            raise ShapeError("payload presence must be uniform across a trace")

    @classmethod
    def of(cls, *elements: EventSet | Iterable[str]) -> "Trace":
        return cls(tuple(TraceElement(_as_event_set(e)) for e in elements))

    @classmethod
    def of_pairs(
        cls, *pairs: tuple[EventSet | Iterable[str], EventSet | Iterable[str]]
    ) -> "Trace":
        return cls(
            tuple(
                TraceElement(_as_event_set(lab), _as_event_set(pay))
                for lab, pay in pairs
            )
        )

    @property
    def is_plain(self) -> bool:
        return all(el.payload is None for el in self.elements)

    @property
    def is_pair(self) -> bool:
        return bool(self.elements) and all(
            el.payload is not None for el in self.elements
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[TraceElement]:
        return iter(self.elements)

    def __str__(self) -> str:
        return format_trace(self)

    def __repr__(self) -> str:
        return f"Trace({format_trace(self)})"


EMPTY = Trace(())


def _as_event_set(value: EventSet | Iterable[str]) -> EventSet:
    if isinstance(value, EventSet):
        return value
    return EventSet.from_iterable(value)


def eset(*names: str) -> EventSet:
    """Shorthand constructor used pervasively in tests and examples."""
    return EventSet.of(*names)


def trace(*elements: EventSet | Iterable[str]) -> Trace:
    """Shorthand plain-trace constructor."""
    return Trace.of(*elements)


def _require_plain(s: Trace, op: str) -> None:
    if not s.is_plain:
        raise ShapeError(f"{op} requires a plain (payload-free) trace")


# ---------------------------------------------------------------------------
# formatting (canonical textual form, shared with the DSL grammar)

def format_event_set(es: EventSet) -> str:
    return "{" + ",".join(es.events) + "}"


def format_element(el: TraceElement) -> str:
    if el.payload is None:
        return format_event_set(el.labels)
    return format_event_set(el.labels) + "." + format_event_set(el.payload)


def format_trace(s: Trace) -> str:
    return "<" + ",".join(format_element(el) for el in s.elements) + ">"


def trace_sort_key(s: Trace) -> tuple[int, str]:
    """Canonical report order: by length, then by printed form."""
    return (len(s.elements), format_trace(s))


# ---------------------------------------------------------------------------
# the trace operators

def length(s: Trace) -> int:
    return len(s.elements)


def catenate(s: Trace, t: Trace) -> Trace:
    if s.elements and t.elements and s.is_pair != t.is_pair:
        raise ShapeError("cannot catenate a pair trace with a plain trace")
    return Trace(s.elements + t.elements)


def power(t: Trace, n: int) -> Trace:
    if n < 0:
        raise DomainError("power requires a natural exponent")
    return Trace(t.elements * n)


def flatten(parts: Sequence[Trace]) -> Trace:
    out = EMPTY
    for part in parts:
        out = catenate(out, part)
    return out


def restrict(s: Trace, a: Alphabet) -> Trace:
    """Intersect each element with `a`, dropping elements that become empty."""
    _require_plain(s, "restrict")
    kept: list[TraceElement] = []
    for el in s.elements:
        inside = [e for e in el.labels.events if e in a]
        if inside:
            kept.append(TraceElement(EventSet(tuple(inside))))
    return Trace(tuple(kept))


def head(s: Trace) -> EventSet:
    if not s.elements:
        raise DomainError("head of the empty trace is undefined")
    return s.elements[0].labels


def tail(s: Trace) -> Trace:
    if not s.elements:
        raise DomainError("tail of the empty trace is undefined")
    return Trace(s.elements[1:])


def star_member(s: Trace, a: Alphabet) -> bool:
    """True when every element of `s` is a subset of `a`."""
    _require_plain(s, "star_member")
    return all(a.covers(el.labels) for el in s.elements)


def prefix_leq(s: Trace, t: Trace) -> bool:
    n = len(s.elements)
    return t.elements[:n] == s.elements


def infix_in(s: Trace, t: Trace) -> bool:
    n, m = len(s.elements), len(t.elements)
    return any(t.elements[i : i + n] == s.elements for i in range(m - n + 1))


def subscript(s: Trace, i: int) -> EventSet:
    if not 0 <= i < len(s.elements):
        raise DomainError(f"index {i} out of range for a trace of length {len(s.elements)}")
    return s.elements[i].labels


def reverse(s: Trace) -> Trace:
    return Trace(tuple(reversed(s.elements)))


def select(s: Trace, label: EventSet) -> Trace:
    """Keep pair elements whose label set equals `label`; yield their payloads."""
    if s.elements and not s.is_pair:
        raise ShapeError("select requires a pair trace")
    out = [
        TraceElement(el.payload)
        for el in s.elements
        if el.labels == label and el.payload is not None
    ]
    return Trace(tuple(out))


_TICK_ELEMENT = TraceElement(EventSet((TICK,)))


def seq_compose(s: Trace, t: Trace) -> Trace:
    """Sequential composition: run `s` up to its first {✓}, then run `t`."""
    _require_plain(s, "seq_compose")
    _require_plain(t, "seq_compose")
    for i, el in enumerate(s.elements):
        if el == _TICK_ELEMENT:
            return Trace(s.elements[:i] + t.elements)
    return s


def map_symbols(mapping: Mapping[str, str], s: Trace) -> Trace:
    """Rename every event of `s` through `mapping`; ✓ always maps to itself."""
    _require_plain(s, "map_symbols")
    if mapping.get(TICK, TICK) != TICK:
        raise DomainError("the ✓ mark must map to itself")
    for target in mapping.values():
        if target != TICK and not _NAME_RE.match(target):
            raise DomainError(f"invalid renamed event: {target!r}")
    out: list[TraceElement] = []
    for el in s.elements:
        image = []
        for e in el.labels.events:
            if e == TICK:
                image.append(TICK)
            elif e in mapping:
                image.append(mapping[e])
            else:
                raise DomainError(f"event {e!r} is outside the renaming's domain")
        out.append(TraceElement(EventSet.from_iterable(image)))
    return Trace(tuple(out))


def cc(s: Trace, t: Trace) -> Trace:
    """Positionwise union of two traces; the longer remainder is appended.

    Aligned elements must be disjoint, and a merged element may never
    contain ✓ (the mark cannot share an instant with other events).
    """
    _require_plain(s, "cc")
    _require_plain(t, "cc")
    merged: list[TraceElement] = []
    for a, b in zip(s.elements, t.elements):
        if a.labels.overlaps(b.labels):
            raise CompositionError(
                f"overlapping elements {format_event_set(a.labels)} and "
                f"{format_event_set(b.labels)} cannot be composed"
            )
        if TICK in a.labels or TICK in b.labels:
            raise CompositionError("the ✓ mark cannot be merged into a composite element")
        merged.append(TraceElement(a.labels.union(b.labels)))
    longer = s.elements if len(s.elements) >= len(t.elements) else t.elements
    merged.extend(longer[min(len(s.elements), len(t.elements)) :])
    return Trace(tuple(merged))
