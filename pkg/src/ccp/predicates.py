"""Trace specifications as evaluable predicate trees, and the sat relation.

A predicate is evaluated against a single concurrent trace; a process
satisfies a predicate to a depth when every enumerated trace up to that
depth evaluates true.  Evaluation is total: head/subscript atoms evaluate
false on traces too short to have the requested position, and tail of the
empty trace is the empty trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InterfaceError
from .process import Process
from .semantics import _levels
from .traces import (
    Alphabet,
    EventSet,
    Trace,
    format_event_set,
    format_trace,
    prefix_leq,
    restrict,
    star_member,
    trace_sort_key,
)

# ---------------------------------------------------------------------------
# trace expressions


@dataclass(frozen=True, slots=True)
class TraceVar:
    """The free variable: the trace under observation."""


@dataclass(frozen=True, slots=True)
class Lit:
    value: Trace


@dataclass(frozen=True, slots=True)
class Tail:
    inner: "TraceExpr"


@dataclass(frozen=True, slots=True)
class Restrict:
    inner: "TraceExpr"
    alphabet: Alphabet


TraceExpr = Union[TraceVar, Lit, Tail, Restrict]


def eval_trace_expr(expr: TraceExpr, t: Trace) -> Trace:
    match expr:
        case TraceVar():
            return t
        case Lit(value):
            return value
        case Tail(inner):
            v = eval_trace_expr(inner, t)
            return Trace(v.elements[1:])
        case Restrict(inner, alpha):
            return restrict(eval_trace_expr(inner, t), alpha)
    raise TypeError(f"not a trace expression: {expr!r}")


# ---------------------------------------------------------------------------
# predicates


@dataclass(frozen=True, slots=True)
class Const:
    value: bool


@dataclass(frozen=True, slots=True)
class Not:
    inner: "TracePredicate"


@dataclass(frozen=True, slots=True)
class And:
    left: "TracePredicate"
    right: "TracePredicate"


@dataclass(frozen=True, slots=True)
class Or:
    left: "TracePredicate"
    right: "TracePredicate"


@dataclass(frozen=True, slots=True)
class Implies:
    left: "TracePredicate"
    right: "TracePredicate"


@dataclass(frozen=True, slots=True)
class TraceEquals:
    left: TraceExpr
    right: TraceExpr


@dataclass(frozen=True, slots=True)
class PrefixOf:
    """left <= right in the prefix order."""

    left: TraceExpr
    right: TraceExpr


@dataclass(frozen=True, slots=True)
class InStar:
    expr: TraceExpr
    alphabet: Alphabet


@dataclass(frozen=True, slots=True)
class HeadIs:
    """Head equals the given set; false on the empty trace."""

    expr: TraceExpr
    value: EventSet


@dataclass(frozen=True, slots=True)
class HeadIn:
    """Head is one of the given guard sets; false on the empty trace."""

    expr: TraceExpr
    guards: frozenset[EventSet]


@dataclass(frozen=True, slots=True)
class SubscriptIs:
    """Element at a fixed index equals the given set; false out of range."""

    expr: TraceExpr
    index: int
    value: EventSet


@dataclass(frozen=True, slots=True)
class LengthCmp:
    expr: TraceExpr
    op: str  # one of = <= < >= >
    bound: int


TracePredicate = Union[
    Const, Not, And, Or, Implies, TraceEquals, PrefixOf, InStar, HeadIs, HeadIn,
    SubscriptIs, LengthCmp,
]

_CMP = {
    "=": lambda a, b: a == b,
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}


def evaluate(pred: TracePredicate, t: Trace) -> bool:
    match pred:
        case Const(value):
            return value
        case Not(inner):
            return not evaluate(inner, t)
        case And(left, right):
            return evaluate(left, t) and evaluate(right, t)
        case Or(left, right):
            return evaluate(left, t) or evaluate(right, t)
        case Implies(left, right):
            return (not evaluate(left, t)) or evaluate(right, t)
        case TraceEquals(left, right):
            return eval_trace_expr(left, t) == eval_trace_expr(right, t)
        case PrefixOf(left, right):
            return prefix_leq(eval_trace_expr(left, t), eval_trace_expr(right, t))
        case InStar(expr, alpha):
            return star_member(eval_trace_expr(expr, t), alpha)
        case HeadIs(expr, value):
            v = eval_trace_expr(expr, t)
            return bool(v.elements) and v.elements[0].labels == value
        case HeadIn(expr, guards):
            v = eval_trace_expr(expr, t)
            return bool(v.elements) and v.elements[0].labels in guards
        case SubscriptIs(expr, index, value):
            v = eval_trace_expr(expr, t)
            return 0 <= index < len(v.elements) and v.elements[index].labels == value
        case LengthCmp(expr, op, bound):
            return _CMP[op](len(eval_trace_expr(expr, t).elements), bound)
    raise TypeError(f"not a predicate: {pred!r}")


def shift_trace_var(pred: TracePredicate, replacement: TraceExpr) -> TracePredicate:
    """The predicate with its free trace variable read through `replacement`."""

    def on_expr(expr: TraceExpr) -> TraceExpr:
        match expr:
            case TraceVar():
                return replacement
            case Lit(_):
                return expr
            case Tail(inner):
                return Tail(on_expr(inner))
            case Restrict(inner, alpha):
                return Restrict(on_expr(inner), alpha)
        raise TypeError(f"not a trace expression: {expr!r}")

    match pred:
        case Const(_):
            return pred
        case Not(inner):
            return Not(shift_trace_var(inner, replacement))
        case And(left, right):
            return And(shift_trace_var(left, replacement), shift_trace_var(right, replacement))
        case Or(left, right):
            return Or(shift_trace_var(left, replacement), shift_trace_var(right, replacement))
        case Implies(left, right):
            return Implies(
                shift_trace_var(left, replacement), shift_trace_var(right, replacement)
            )
        case TraceEquals(left, right):
            return TraceEquals(on_expr(left), on_expr(right))
        case PrefixOf(left, right):
            return PrefixOf(on_expr(left), on_expr(right))
        case InStar(expr, alpha):
            return InStar(on_expr(expr), alpha)
        case HeadIs(expr, value):
            return HeadIs(on_expr(expr), value)
        case HeadIn(expr, guards):
            return HeadIn(on_expr(expr), guards)
        case SubscriptIs(expr, index, value):
            return SubscriptIs(on_expr(expr), index, value)
        case LengthCmp(expr, op, bound):
            return LengthCmp(on_expr(expr), op, bound)
    raise TypeError(f"not a predicate: {pred!r}")


EMPTY_TRACE_PRED = TraceEquals(TraceVar(), Lit(Trace(())))


def prefix_transform(guard: EventSet, pred: TracePredicate) -> TracePredicate:
    """What a guarded process promises: empty so far, or the guard happened
    first and the rest satisfies `pred`."""
    return Or(
        EMPTY_TRACE_PRED,
        And(HeadIs(TraceVar(), guard), shift_trace_var(pred, Tail(TraceVar()))),
    )


def choice_transform(
    branches: tuple[tuple[EventSet, TracePredicate], ...]
) -> TracePredicate:
    """The menu analogue of prefix_transform: one disjunct per branch."""
    guards = [g for g, _ in branches]
    if len(set(guards)) != len(guards):
        raise InterfaceError("choice_transform requires pairwise distinct guards")
    out: TracePredicate = EMPTY_TRACE_PRED
    for guard, pred in branches:
        out = Or(
            out,
            And(HeadIs(TraceVar(), guard), shift_trace_var(pred, Tail(TraceVar()))),
        )
    return out


def concur_spec(
    sp: TracePredicate, sq: TracePredicate, a: Alphabet, b: Alphabet
) -> TracePredicate:
    """Each side's promise, read through restriction to its own alphabet."""
    return And(
        shift_trace_var(sp, Restrict(TraceVar(), a)),
        shift_trace_var(sq, Restrict(TraceVar(), b)),
    )


# ---------------------------------------------------------------------------
# satisfaction


@dataclass(frozen=True, slots=True)
class SatReport:
    verdict: str  # "holds-to-depth" | "refuted"
    depth: int
    witness: Trace | None = None

    @property
    def holds(self) -> bool:
        return self.verdict == "holds-to-depth"

    def __str__(self) -> str:
        if self.holds:
            return f"holds to depth {self.depth}"
        assert self.witness is not None
        return (
            f"refuted at length {len(self.witness.elements)}, "
            f"witness {format_trace(self.witness)}"
        )


def sat_check(
    p: Process, pred: TracePredicate, depth: int, max_traces: int | None = None
) -> SatReport:
    """Check every trace of `p` up to `depth`; report the shortest refuting
    witness (ties broken by canonical trace order)."""
    for level in _levels(p, depth, max_traces):
        failures = [t for t in level if not evaluate(pred, t)]
        if failures:
            return SatReport("refuted", depth, min(failures, key=trace_sort_key))
    return SatReport("holds-to-depth", depth)


# ---------------------------------------------------------------------------
# printing (the DSL's spec-expression surface)

_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3


def format_predicate(pred: TracePredicate) -> str:
    return _fmt_pred(pred, 0)


def _fmt_pred(pred: TracePredicate, prec: int) -> str:
    match pred:
        case Const(value):
            return "true" if value else "false"
        case Implies(left, right):
            text = f"{_fmt_pred(left, 1)} => {_fmt_pred(right, 0)}"
            return f"({text})" if prec > 0 else text
        case Or(left, right):
            text = f"{_fmt_pred(left, _PREC_OR)} or {_fmt_pred(right, _PREC_OR + 1)}"
            return f"({text})" if prec > _PREC_OR else text
        case And(left, right):
            text = f"{_fmt_pred(left, _PREC_AND)} and {_fmt_pred(right, _PREC_AND + 1)}"
            return f"({text})" if prec > _PREC_AND else text
        case Not(inner):
            return f"not {_fmt_pred(inner, _PREC_NOT + 1)}"
        case TraceEquals(left, right):
            return f"{format_trace_expr(left)} = {format_trace_expr(right)}"
        case PrefixOf(left, right):
            return f"{format_trace_expr(left)} <= {format_trace_expr(right)}"
        case InStar(expr, alpha):
            return f"{format_trace_expr(expr)} in {alpha}*"
        case HeadIs(expr, value):
            return f"head({format_trace_expr(expr)}) = {format_event_set(value)}"
        case HeadIn(expr, guards):
            listed = ",".join(sorted(format_event_set(g) for g in guards))
            return f"head({format_trace_expr(expr)}) in [{listed}]"
        case SubscriptIs(expr, index, value):
            return f"{format_trace_expr(expr)}[{index}] = {format_event_set(value)}"
        case LengthCmp(expr, op, bound):
            # no space after '#': a '#' followed by whitespace opens a comment
            return f"#{format_trace_expr(expr)} {op} {bound}"
    raise TypeError(f"not a predicate: {pred!r}")


def format_trace_expr(expr: TraceExpr) -> str:
    match expr:
        case TraceVar():
            return "tr"
        case Lit(value):
            return format_trace(value)
        case Tail(inner):
            return f"tail({format_trace_expr(inner)})"
        case Restrict(inner, alpha):
            return f"{format_trace_expr(inner)} | {alpha}"
    raise TypeError(f"not a trace expression: {expr!r}")
