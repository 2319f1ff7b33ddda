"""Executable law catalog with seeded random generators and a text report.

Every algebraic law of the trace operators, the process operators, and the
satisfaction relation is an entry in a registry.  `run_suite(seed, cases)`
checks each entry over freshly generated inputs and returns per-law results;
the report is byte-stable for a fixed seed.

Erratum entries cover laws whose classical statement is refuted by a
concrete counterexample under set-valued trace elements (or under lockstep
parallelism).  An erratum entry asserts two things: the documented
counterexample still refutes the literal statement, and the corrected form
holds over random inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import predicates as pr
from .errors import CompositionError, ResourceLimitError
from .process import (
    Menu,
    Mu,
    Prefix,
    Process,
    Run,
    Stop,
    Var,
    after,
    alphabet,
    concur,
    interact,
    step,
    substitute,
    validate,
)
from .semantics import cc_sets, equiv_upto, intersect_sets, traces_upto
from .traces import (
    EMPTY,
    TICK,
    Alphabet,
    EventSet,
    Trace,
    catenate,
    cc,
    eset,
    flatten,
    format_event_set,
    format_trace,
    head,
    infix_in,
    length,
    map_symbols,
    power,
    prefix_leq,
    restrict,
    reverse,
    select,
    seq_compose,
    star_member,
    subscript,
    tail,
    trace,
)

TRACE_POOL = ("a", "b", "c", "d", "e")
PROCESS_POOL = ("a", "b", "c", "d")
RENAME_TARGETS = ("v", "w", "x", "y", "z")

# enumeration budget per law case; explosive cases are skipped, not failed
CASE_TRACE_BUDGET = 60_000


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True, slots=True)
class Bounds:
    max_len: int = 6
    max_elem: int = 3
    max_depth: int = 4


def gen_event_set(rng: random.Random, pool=TRACE_POOL, max_elem: int = 3) -> EventSet:
    size = rng.randint(1, min(max_elem, len(pool)))
    return EventSet.from_iterable(rng.sample(pool, size))


def gen_trace(
    rng: random.Random,
    pool=TRACE_POOL,
    max_len: int = 6,
    max_elem: int = 3,
    tick: bool = False,
) -> Trace:
    n = rng.randint(0, max_len)
    elements = []
    for _ in range(n):
        if tick and rng.random() < 0.18:
            elements.append(EventSet.of(TICK))
        else:
            elements.append(gen_event_set(rng, pool, max_elem))
    return Trace.of(*elements)


def gen_pair_trace(rng: random.Random, pool=TRACE_POOL, max_len: int = 5) -> Trace:
    n = rng.randint(0, max_len)
    return Trace.of_pairs(
        *[
            (gen_event_set(rng, pool, 2), gen_event_set(rng, pool, 2))
            for _ in range(n)
        ]
    )


def gen_alphabet(
    rng: random.Random, pool=TRACE_POOL, max_size: int = 4, min_size: int = 0
) -> Alphabet:
    size = rng.randint(min_size, min(max_size, len(pool)))
    return Alphabet.from_iterable(rng.sample(pool, size))


def gen_renaming(rng: random.Random, injective: bool = True) -> dict[str, str]:
    if injective:
        targets = rng.sample(RENAME_TARGETS, len(TRACE_POOL))
    else:
        targets = [rng.choice(RENAME_TARGETS) for _ in TRACE_POOL]
    return dict(zip(TRACE_POOL, targets))


def gen_process(
    rng: random.Random,
    alpha: Alphabet,
    depth: int,
    scope: tuple[str, ...] = (),
    under_guard: bool = False,
) -> Process:
    """A valid closed process over one alphabet.  RUN only appears over small
    alphabets so bounded enumeration stays affordable."""
    allow_run = 1 <= len(alpha) <= 2
    if depth <= 0:
        roll = rng.random()
        if scope and under_guard and roll < 0.45:
            return Var(rng.choice(scope))
        if allow_run and roll < 0.6:
            return Run(alpha)
        return Stop(alpha)
    roll = rng.random()
    if roll < 0.34 and len(alpha) >= 1:
        guard = gen_event_set(rng, alpha.events, 3)
        return Prefix(guard, gen_process(rng, alpha, depth - 1, scope, True))
    if roll < 0.58 and len(alpha) >= 1:
        guards = _distinct_guards(rng, alpha, rng.randint(2, 3))
        branches = tuple(
            (g, gen_process(rng, alpha, depth - 1, scope, True)) for g in guards
        )
        return Menu(branches)
    if roll < 0.72 and depth >= 2 and len(alpha) >= 1:
        name = f"X{len(scope)}"
        body = gen_process(rng, alpha, depth - 1, scope + (name,), False)
        term = Mu(name, alpha, body)
        if not validate(term):
            return term
        return Prefix(gen_event_set(rng, alpha.events, 3), Stop(alpha))
    if roll < 0.8:
        if scope and under_guard:
            return Var(rng.choice(scope))
        if allow_run:
            return Run(alpha)
        return Stop(alpha)
    return Stop(alpha)


def _distinct_guards(rng: random.Random, alpha: Alphabet, want: int) -> list[EventSet]:
    guards: set[EventSet] = set()
    for _ in range(want * 4):
        guards.add(gen_event_set(rng, alpha.events, 3))
        if len(guards) >= want:
            break
    return sorted(guards, key=lambda g: g.events)


def gen_rooted_process(rng: random.Random, max_alpha: int = 4, depth: int = 4):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=max_alpha, min_size=1)
    return alpha, gen_process(rng, alpha, rng.randint(1, depth))


def gen_same_alphabet_pair(rng: random.Random, depth: int = 3):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    return (
        alpha,
        gen_process(rng, alpha, rng.randint(1, depth)),
        gen_process(rng, alpha, rng.randint(1, depth)),
    )


def gen_disjoint_pair(rng: random.Random, depth: int = 3):
    pool = list(PROCESS_POOL)
    rng.shuffle(pool)
    cut = rng.randint(1, len(pool) - 1)
    a = Alphabet.from_iterable(pool[:cut][: rng.randint(1, 2)])
    b = Alphabet.from_iterable(pool[cut:][: rng.randint(1, 2)])
    return (
        a,
        b,
        gen_process(rng, a, rng.randint(1, depth)),
        gen_process(rng, b, rng.randint(1, depth)),
    )


def gen_total_process(rng: random.Random, alpha: Alphabet, depth: int = 2) -> Process:
    """A process offering at least one move at every reachable state."""
    name = f"T{rng.randint(0, 999)}"

    def body(d: int) -> Process:
        if d <= 0:
            return Var(name)
        if rng.random() < 0.5:
            return Prefix(gen_event_set(rng, alpha.events, 2), body(d - 1))
        guards = _distinct_guards(rng, alpha, 2)
        return Menu(tuple((g, body(d - 1)) for g in guards))

    return Mu(name, alpha, body(rng.randint(1, depth)))


def gen_trace_expr(rng: random.Random, alpha: Alphabet) -> pr.TraceExpr:
    roll = rng.random()
    if roll < 0.6:
        return pr.TraceVar()
    if roll < 0.85:
        return pr.Tail(pr.TraceVar())
    sub = gen_alphabet(rng, alpha.events, max_size=max(1, len(alpha)), min_size=0)
    return pr.Restrict(pr.TraceVar(), sub)


def gen_predicate(
    rng: random.Random, alpha: Alphabet, depth: int = 2, tautology_bias: float = 0.0
) -> pr.TracePredicate:
    """A random spec over `alpha`; with `tautology_bias`, lean on shapes every
    trace of a process over `alpha` satisfies (keeps sat premises non-vacuous)."""
    if rng.random() < tautology_bias:
        if rng.random() < 0.5:
            return pr.InStar(pr.TraceVar(), alpha)
        return pr.LengthCmp(pr.TraceVar(), "<=", 12)
    if depth > 0 and rng.random() < 0.45:
        kind = rng.randrange(4)
        left = gen_predicate(rng, alpha, depth - 1, tautology_bias)
        right = gen_predicate(rng, alpha, depth - 1, tautology_bias)
        if kind == 0:
            return pr.And(left, right)
        if kind == 1:
            return pr.Or(left, right)
        if kind == 2:
            return pr.Implies(left, right)
        return pr.Not(left)
    roll = rng.randrange(5)
    expr = gen_trace_expr(rng, alpha)
    if roll == 0:
        sub = gen_alphabet(rng, alpha.events, max_size=max(1, len(alpha)), min_size=0)
        return pr.InStar(expr, sub)
    if roll == 1:
        return pr.LengthCmp(expr, rng.choice(("=", "<=", "<", ">=")), rng.randint(0, 4))
    if roll == 2 and len(alpha):
        return pr.HeadIs(expr, gen_event_set(rng, alpha.events, 2))
    if roll == 3 and len(alpha):
        lit = gen_trace(rng, alpha.events, max_len=2, max_elem=2)
        return pr.PrefixOf(expr, pr.Lit(lit))
    lit = gen_trace(rng, alpha.events if len(alpha) else ("a",), max_len=1, max_elem=2)
    return pr.TraceEquals(expr, pr.Lit(lit))


# ---------------------------------------------------------------------------
# registry framework


@dataclass(frozen=True, slots=True)
class LawResult:
    name: str
    group: str
    kind: str  # "law" | "erratum"
    ok: bool
    cases: int
    skipped: int
    detail: str = ""


@dataclass(frozen=True, slots=True)
class LawDef:
    name: str
    group: str
    kind: str
    fn: Callable[[random.Random, int], LawResult]


REGISTRY: list[LawDef] = []


def law(name: str, group: str):
    def deco(case_fn: Callable[[random.Random, Bounds], str | None]):
        def run(rng: random.Random, cases: int) -> LawResult:
            return _run_cases(name, group, "law", case_fn, rng, cases)

        REGISTRY.append(LawDef(name, group, "law", run))
        return case_fn

    return deco


def erratum(name: str, group: str):
    """Register a law whose literal form is refuted; `check_fn` must verify
    the counterexample and the corrected form, returning a short note."""

    def deco(check_fn: Callable[[random.Random, int], str]):
        def run(rng: random.Random, cases: int) -> LawResult:
            try:
                note = check_fn(rng, cases)
            except AssertionError as exc:
                return LawResult(name, group, "erratum", False, cases, 0, str(exc))
            return LawResult(name, group, "erratum", True, cases, 0, note)

        REGISTRY.append(LawDef(name, group, "erratum", run))
        return check_fn

    return deco


def _run_cases(name, group, kind, case_fn, rng, cases) -> LawResult:
    skipped = 0
    for i in range(cases):
        frac = i / max(1, cases - 1)
        bounds = Bounds(
            max_len=1 + round(5 * frac),
            max_elem=1 + round(2 * frac),
            max_depth=1 + round(3 * frac),
        )
        try:
            detail = case_fn(rng, bounds)
        except ResourceLimitError:
            skipped += 1
            continue
        if detail is not None:
            return LawResult(
                name, group, kind, False, cases, skipped,
                f"counterexample: {detail}",
            )
    return LawResult(name, group, kind, True, cases, skipped)


def _equiv(p: Process, q: Process, depth: int):
    return equiv_upto(p, q, depth, max_traces=CASE_TRACE_BUDGET)


def _traces(p: Process, depth: int):
    return traces_upto(p, depth, max_traces=CASE_TRACE_BUDGET)


# ---------------------------------------------------------------------------
# trace laws


def _fmt_inputs(**kw) -> str:
    parts = []
    for key, value in kw.items():
        if isinstance(value, Trace):
            parts.append(f"{key}={format_trace(value)}")
        elif isinstance(value, EventSet):
            parts.append(f"{key}={format_event_set(value)}")
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


@law("catenation-L1", "catenation")
def _cat_l1(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    if catenate(s, EMPTY) == s and catenate(EMPTY, s) == s:
        return None
    return _fmt_inputs(s=s)


@law("catenation-L2", "catenation")
def _cat_l2(rng, bounds):
    s, t, u = (gen_trace(rng, max_len=bounds.max_len) for _ in range(3))
    if catenate(s, catenate(t, u)) == catenate(catenate(s, t), u):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("catenation-L3", "catenation")
def _cat_l3(rng, bounds):
    s, t, u = (gen_trace(rng, max_len=bounds.max_len) for _ in range(3))
    if (catenate(s, t) == catenate(s, u)) == (t == u):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("catenation-L4", "catenation")
def _cat_l4(rng, bounds):
    s, t, u = (gen_trace(rng, max_len=bounds.max_len) for _ in range(3))
    if (catenate(s, t) == catenate(u, t)) == (s == u):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("catenation-L5", "catenation")
def _cat_l5(rng, bounds):
    s, t = (gen_trace(rng, max_len=bounds.max_len) for _ in range(2))
    if (catenate(s, t) == EMPTY) == (s == EMPTY and t == EMPTY):
        return None
    return _fmt_inputs(s=s, t=t)


@law("catenation-L6", "catenation")
def _cat_l6(rng, bounds):
    t = gen_trace(rng, max_len=bounds.max_len)
    return None if power(t, 0) == EMPTY else _fmt_inputs(t=t)


@law("catenation-L7", "catenation")
def _cat_l7(rng, bounds):
    t = gen_trace(rng, max_len=3)
    n = rng.randint(0, 4)
    if power(t, n + 1) == catenate(t, power(t, n)):
        return None
    return _fmt_inputs(t=t, n=n)


@law("catenation-L8", "catenation")
def _cat_l8(rng, bounds):
    t = gen_trace(rng, max_len=3)
    n = rng.randint(0, 4)
    if power(t, n + 1) == catenate(power(t, n), t):
        return None
    return _fmt_inputs(t=t, n=n)


@law("catenation-L9", "catenation")
def _cat_l9(rng, bounds):
    s, t = (gen_trace(rng, max_len=3) for _ in range(2))
    n = rng.randint(0, 3)
    lhs = power(catenate(s, t), n + 1)
    rhs = catenate(s, catenate(power(catenate(t, s), n), t))
    return None if lhs == rhs else _fmt_inputs(s=s, t=t, n=n)


@law("restriction-L1", "restriction")
def _res_l1(rng, bounds):
    a = gen_alphabet(rng)
    return None if restrict(EMPTY, a) == EMPTY else _fmt_inputs(A=a)


@law("restriction-L2", "restriction")
def _res_l2(rng, bounds):
    s, t = (gen_trace(rng, max_len=bounds.max_len) for _ in range(2))
    a = gen_alphabet(rng)
    lhs = restrict(catenate(s, t), a)
    rhs = catenate(restrict(s, a), restrict(t, a))
    return None if lhs == rhs else _fmt_inputs(s=s, t=t, A=a)


@law("restriction-L3", "restriction")
def _res_l3(rng, bounds):
    a = gen_alphabet(rng, min_size=1)
    x = gen_event_set(rng, a.events, bounds.max_elem)
    s = Trace.of(x)
    return None if restrict(s, a) == s else _fmt_inputs(x=x, A=a)


@law("restriction-L4", "restriction")
def _res_l4(rng, bounds):
    a = gen_alphabet(rng, max_size=2)
    outside = [e for e in TRACE_POOL if e not in a]
    y = gen_event_set(rng, outside, min(bounds.max_elem, len(outside)))
    return None if restrict(Trace.of(y), a) == EMPTY else _fmt_inputs(y=y, A=a)


@law("restriction-L5", "restriction")
def _res_l5(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if restrict(s, Alphabet.of()) == EMPTY else _fmt_inputs(s=s)


@erratum("restriction-L6", "restriction")
def _res_l6(rng, cases):
    # literal form: (s|A)|B = s|(A u B); refuted by s=<{a}>, A={a}, B={b}
    s = trace(["a"])
    a, b = Alphabet.of("a"), Alphabet.of("b")
    assert restrict(restrict(s, a), b) == EMPTY, "counterexample lhs changed"
    assert restrict(s, a.union(b)) == s, "counterexample rhs changed"
    for _ in range(cases):
        t = gen_trace(rng)
        x, y = gen_alphabet(rng), gen_alphabet(rng)
        got = restrict(restrict(t, x), y)
        want = restrict(t, x.intersection(y))
        assert got == want, _fmt_inputs(t=t, A=x, B=y)
    return "literal union form refuted; intersection form holds"


@law("head-tail-L1", "head-tail")
def _ht_l1(rng, bounds):
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    s = gen_trace(rng, max_len=bounds.max_len)
    t = catenate(Trace.of(x), s)
    return None if head(t) == x else _fmt_inputs(x=x, s=s)


@law("head-tail-L2", "head-tail")
def _ht_l2(rng, bounds):
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    s = gen_trace(rng, max_len=bounds.max_len)
    t = catenate(Trace.of(x), s)
    return None if tail(t) == s else _fmt_inputs(x=x, s=s)


@law("head-tail-L3", "head-tail")
def _ht_l3(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    if s == EMPTY:
        return None
    if catenate(Trace.of(head(s)), tail(s)) == s:
        return None
    return _fmt_inputs(s=s)


@law("head-tail-L4", "head-tail")
def _ht_l4(rng, bounds):
    s = gen_trace(rng, max_len=3, max_elem=2)
    t = gen_trace(rng, max_len=3, max_elem=2)
    rhs = (s == EMPTY and t == EMPTY) or (
        s != EMPTY and t != EMPTY and head(s) == head(t) and tail(s) == tail(t)
    )
    return None if (s == t) == rhs else _fmt_inputs(s=s, t=t)


@law("star-L1", "star")
def _star_l1(rng, bounds):
    a = gen_alphabet(rng)
    return None if star_member(EMPTY, a) else _fmt_inputs(A=a)


@law("star-L2", "star")
def _star_l2(rng, bounds):
    a = gen_alphabet(rng)
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    lhs = star_member(Trace.of(x), a)
    return None if lhs == x.issubset(a.events) else _fmt_inputs(x=x, A=a)


@law("star-L3", "star")
def _star_l3(rng, bounds):
    s, t = (gen_trace(rng, max_len=bounds.max_len) for _ in range(2))
    a = gen_alphabet(rng)
    lhs = star_member(catenate(s, t), a)
    rhs = star_member(s, a) and star_member(t, a)
    return None if lhs == rhs else _fmt_inputs(s=s, t=t, A=a)


@law("star-L4", "star")
def _star_l4(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    a = gen_alphabet(rng)
    rhs = s == EMPTY or (head(s).issubset(a.events) and star_member(tail(s), a))
    return None if star_member(s, a) == rhs else _fmt_inputs(s=s, A=a)


@law("ordering-L1", "ordering")
def _ord_l1(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if prefix_leq(EMPTY, s) else _fmt_inputs(s=s)


@law("ordering-L2", "ordering")
def _ord_l2(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if prefix_leq(s, s) else _fmt_inputs(s=s)


@law("ordering-L3", "ordering")
def _ord_l3(rng, bounds):
    s = gen_trace(rng, max_len=3, max_elem=2)
    t = gen_trace(rng, max_len=3, max_elem=2)
    if prefix_leq(s, t) and prefix_leq(t, s) and s != t:
        return _fmt_inputs(s=s, t=t)
    return None


@law("ordering-L4", "ordering")
def _ord_l4(rng, bounds):
    s = gen_trace(rng, max_len=2)
    t = catenate(s, gen_trace(rng, max_len=2))
    u = catenate(t, gen_trace(rng, max_len=2))
    if prefix_leq(s, t) and prefix_leq(t, u) and not prefix_leq(s, u):
        return _fmt_inputs(s=s, t=t, u=u)
    return None


@law("ordering-L5", "ordering")
def _ord_l5(rng, bounds):
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    s = gen_trace(rng, max_len=3)
    t = gen_trace(rng, max_len=4)
    lhs = prefix_leq(catenate(Trace.of(x), s), t)
    rhs = t != EMPTY and head(t) == x and prefix_leq(s, tail(t))
    return None if lhs == rhs else _fmt_inputs(x=x, s=s, t=t)


@law("ordering-L6", "ordering")
def _ord_l6(rng, bounds):
    u = gen_trace(rng, max_len=bounds.max_len)
    s = Trace(u.elements[: rng.randint(0, len(u.elements))])
    t = Trace(u.elements[: rng.randint(0, len(u.elements))])
    if prefix_leq(s, t) or prefix_leq(t, s):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("ordering-L7", "ordering")
def _ord_l7(rng, bounds):
    s = gen_trace(rng, max_len=3, max_elem=2)
    t = gen_trace(rng, max_len=bounds.max_len, max_elem=2)
    oracle = any(
        t.elements[i : i + len(s.elements)] == s.elements
        for i in range(len(t.elements) - len(s.elements) + 1)
    )
    return None if infix_in(s, t) == oracle else _fmt_inputs(s=s, t=t)


@law("ordering-L8", "ordering")
def _ord_l8(rng, bounds):
    x = gen_event_set(rng, max_elem=2)
    s = gen_trace(rng, max_len=2, max_elem=2)
    t = gen_trace(rng, max_len=bounds.max_len, max_elem=2)
    xs = catenate(Trace.of(x), s)
    lhs = infix_in(xs, t)
    rhs = t != EMPTY and (
        (head(t) == x and prefix_leq(s, tail(t))) or infix_in(xs, tail(t))
    )
    return None if lhs == rhs else _fmt_inputs(x=x, s=s, t=t)


@law("ordering-L9", "ordering")
def _ord_l9(rng, bounds):
    t = gen_trace(rng, max_len=bounds.max_len)
    s = Trace(t.elements[: rng.randint(0, len(t.elements))])
    a = gen_alphabet(rng)
    if prefix_leq(restrict(s, a), restrict(t, a)):
        return None
    return _fmt_inputs(s=s, t=t, A=a)


@law("ordering-L10", "ordering")
def _ord_l10(rng, bounds):
    s = gen_trace(rng, max_len=3)
    u = gen_trace(rng, max_len=bounds.max_len)
    t = Trace(u.elements[: rng.randint(0, len(u.elements))])
    if prefix_leq(catenate(s, t), catenate(s, u)):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("length-L1", "length")
def _len_l1(rng, bounds):
    return None if length(EMPTY) == 0 else "length(<>) != 0"


@law("length-L2", "length")
def _len_l2(rng, bounds):
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    return None if length(Trace.of(x)) == 1 else _fmt_inputs(x=x)


@law("length-L3", "length")
def _len_l3(rng, bounds):
    s, t = (gen_trace(rng, max_len=bounds.max_len) for _ in range(2))
    if length(catenate(s, t)) == length(s) + length(t):
        return None
    return _fmt_inputs(s=s, t=t)


@erratum("length-L4", "length")
def _len_l4(rng, cases):
    # literal inclusion-exclusion; refuted by t=<{a,b}>, A={a}, B={b}
    t = trace(["a", "b"])
    a, b = Alphabet.of("a"), Alphabet.of("b")
    lhs = length(restrict(t, a.union(b)))
    rhs = length(restrict(t, a)) + length(restrict(t, b)) - length(
        restrict(t, a.intersection(b))
    )
    assert lhs == 1 and rhs == 2, "counterexample no longer refutes the literal form"
    for _ in range(cases):
        names = [rng.choice(TRACE_POOL) for _ in range(rng.randint(0, 6))]
        single = Trace.of(*[[n] for n in names])
        x, y = gen_alphabet(rng), gen_alphabet(rng)
        got = length(restrict(single, x.union(y)))
        want = length(restrict(single, x)) + length(restrict(single, y)) - length(
            restrict(single, x.intersection(y))
        )
        assert got == want, _fmt_inputs(t=single, A=x, B=y)
    return "literal form refuted on a set element; holds on singleton elements"


@law("length-L5", "length")
def _len_l5(rng, bounds):
    t = gen_trace(rng, max_len=bounds.max_len)
    s = Trace(t.elements[: rng.randint(0, len(t.elements))])
    return None if length(s) <= length(t) else _fmt_inputs(s=s, t=t)


@law("length-L6", "length")
def _len_l6(rng, bounds):
    t = gen_trace(rng, max_len=3)
    n = rng.randint(0, 4)
    return None if length(power(t, n)) == n * length(t) else _fmt_inputs(t=t, n=n)


@law("another-catenation-L1", "another-catenation")
def _flat_l1(rng, bounds):
    return None if flatten([]) == EMPTY else "flatten of no traces not empty"


@law("another-catenation-L2", "another-catenation")
def _flat_l2(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if flatten([s]) == s else _fmt_inputs(s=s)


@law("another-catenation-L3", "another-catenation")
def _flat_l3(rng, bounds):
    parts_a = [gen_trace(rng, max_len=2) for _ in range(rng.randint(0, 3))]
    parts_b = [gen_trace(rng, max_len=2) for _ in range(rng.randint(0, 3))]
    lhs = flatten(parts_a + parts_b)
    rhs = catenate(flatten(parts_a), flatten(parts_b))
    if lhs == rhs:
        return None
    return f"parts_a={[format_trace(x) for x in parts_a]} parts_b={[format_trace(x) for x in parts_b]}"


@law("cc-L1", "cc")
def _cc_l1(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if cc(EMPTY, s) == s else _fmt_inputs(s=s)


@law("cc-L2", "cc")
def _cc_l2(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if cc(s, EMPTY) == s else _fmt_inputs(s=s)


@law("cc-L3", "cc")
def _cc_l3(rng, bounds):
    # head rule, on disjoint positionwise traces built over split pools
    x, y = eset(rng.choice(("a", "b"))), eset(rng.choice(("c", "d")))
    s = gen_trace(rng, ("a", "b"), max_len=3, max_elem=2)
    t = gen_trace(rng, ("c", "d"), max_len=3, max_elem=2)
    lhs = cc(catenate(Trace.of(x), s), catenate(Trace.of(y), t))
    rhs = catenate(Trace.of(x.union(y)), cc(s, t))
    return None if lhs == rhs else _fmt_inputs(x=x, y=y, s=s, t=t)


@law("cc-commutes", "cc")
def _cc_comm(rng, bounds):
    s = gen_trace(rng, ("a", "b"), max_len=bounds.max_len, max_elem=2)
    t = gen_trace(rng, ("c", "d"), max_len=bounds.max_len, max_elem=2)
    lhs, rhs = cc(s, t), cc(t, s)
    if lhs == rhs and length(lhs) == max(length(s), length(t)):
        return None
    return _fmt_inputs(s=s, t=t)


@law("subscription-L1", "subscription")
def _sub_l1(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    if s == EMPTY:
        return None
    if subscript(s, 0) != head(s):
        return _fmt_inputs(s=s)
    for i in range(length(s) - 1):
        if subscript(s, i + 1) != subscript(tail(s), i):
            return _fmt_inputs(s=s, i=i)
    return None


@law("subscription-L2", "subscription")
def _sub_l2(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    f = gen_renaming(rng, injective=rng.random() < 0.7)
    mapped = map_symbols(f, s)
    for i in range(length(s)):
        image = EventSet.from_iterable(f[e] for e in subscript(s, i).events)
        if subscript(mapped, i) != image:
            return _fmt_inputs(s=s, i=i)
    return None


@law("reversal-L1", "reversal")
def _rev_l1(rng, bounds):
    return None if reverse(EMPTY) == EMPTY else "reverse of <> not <>"


@law("reversal-L2", "reversal")
def _rev_l2(rng, bounds):
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    s = Trace.of(x)
    return None if reverse(s) == s else _fmt_inputs(x=x)


@law("reversal-L3", "reversal")
def _rev_l3(rng, bounds):
    s, t = (gen_trace(rng, max_len=bounds.max_len) for _ in range(2))
    lhs = reverse(catenate(s, t))
    rhs = catenate(reverse(t), reverse(s))
    return None if lhs == rhs else _fmt_inputs(s=s, t=t)


@law("reversal-L4", "reversal")
def _rev_l4(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if reverse(reverse(s)) == s else _fmt_inputs(s=s)


@law("reversal-L5", "reversal")
def _rev_l5(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    for i in range(length(s)):
        if subscript(reverse(s), i) != subscript(s, length(s) - i - 1):
            return _fmt_inputs(s=s, i=i)
    return None


@law("selection-L1", "selection")
def _sel_l1(rng, bounds):
    x = gen_event_set(rng)
    return None if select(EMPTY, x) == EMPTY else _fmt_inputs(x=x)


@law("selection-L2", "selection")
def _sel_l2(rng, bounds):
    x = gen_event_set(rng, max_elem=2)
    others = [es for es in (eset("a"), eset("b", "c"), eset("d")) if es != x]
    y = rng.choice(others)
    z = gen_event_set(rng, max_elem=2)
    rest = gen_pair_trace(rng, max_len=3)
    s = catenate(Trace.of_pairs((y, z)), rest)
    return None if select(s, x) == select(rest, x) else _fmt_inputs(x=x, s=s)


@law("selection-L3", "selection")
def _sel_l3(rng, bounds):
    x = gen_event_set(rng, max_elem=2)
    z = gen_event_set(rng, max_elem=2)
    rest = gen_pair_trace(rng, max_len=3)
    s = catenate(Trace.of_pairs((x, z)), rest)
    lhs = select(s, x)
    rhs = catenate(Trace.of(z), select(rest, x))
    return None if lhs == rhs else _fmt_inputs(x=x, z=z, s=s)


_TICK_TRACE = Trace.of([TICK])


@law("composition-L1", "composition")
def _comp_l1(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)  # no tick marks
    t = gen_trace(rng, max_len=3, tick=True)
    return None if seq_compose(s, t) == s else _fmt_inputs(s=s, t=t)


@law("composition-L2", "composition")
def _comp_l2(rng, bounds):
    s = gen_trace(rng, max_len=bounds.max_len)
    t = gen_trace(rng, max_len=3, tick=True)
    lhs = seq_compose(catenate(s, _TICK_TRACE), t)
    return None if lhs == catenate(s, t) else _fmt_inputs(s=s, t=t)


@law("composition-L2A", "composition")
def _comp_l2a(rng, bounds):
    s = gen_trace(rng, max_len=3)
    u = gen_trace(rng, max_len=3, tick=True)
    t = gen_trace(rng, max_len=3, tick=True)
    lhs = seq_compose(catenate(catenate(s, _TICK_TRACE), u), t)
    return None if lhs == catenate(s, t) else _fmt_inputs(s=s, u=u, t=t)


@law("composition-L3", "composition")
def _comp_l3(rng, bounds):
    s, t, u = (gen_trace(rng, max_len=4, tick=True) for _ in range(3))
    lhs = seq_compose(s, seq_compose(t, u))
    rhs = seq_compose(seq_compose(s, t), u)
    return None if lhs == rhs else _fmt_inputs(s=s, t=t, u=u)


@law("composition-L4A", "composition")
def _comp_l4a(rng, bounds):
    t = gen_trace(rng, max_len=4, tick=True)
    s = Trace(t.elements[: rng.randint(0, len(t.elements))])
    u = gen_trace(rng, max_len=4, tick=True)
    if prefix_leq(seq_compose(u, s), seq_compose(u, t)):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("composition-L4B", "composition")
def _comp_l4b(rng, bounds):
    t = gen_trace(rng, max_len=4, tick=True)
    s = Trace(t.elements[: rng.randint(0, len(t.elements))])
    u = gen_trace(rng, max_len=4, tick=True)
    if prefix_leq(seq_compose(s, u), seq_compose(t, u)):
        return None
    return _fmt_inputs(s=s, t=t, u=u)


@law("composition-L5", "composition")
def _comp_l5(rng, bounds):
    t = gen_trace(rng, max_len=bounds.max_len, tick=True)
    return None if seq_compose(EMPTY, t) == EMPTY else _fmt_inputs(t=t)


@law("composition-L6", "composition")
def _comp_l6(rng, bounds):
    t = gen_trace(rng, max_len=bounds.max_len, tick=True)
    return None if seq_compose(_TICK_TRACE, t) == t else _fmt_inputs(t=t)


@law("composition-L7", "composition")
def _comp_l7(rng, bounds):
    s = gen_trace(rng, max_len=4)
    if rng.random() < 0.5:
        s = catenate(s, _TICK_TRACE)
    return None if seq_compose(s, _TICK_TRACE) == s else _fmt_inputs(s=s)


@law("change-of-symbol-L1", "change-of-symbol")
def _cos_l1(rng, bounds):
    f = gen_renaming(rng)
    return None if map_symbols(f, EMPTY) == EMPTY else "empty trace not fixed"


@law("change-of-symbol-L2", "change-of-symbol")
def _cos_l2(rng, bounds):
    f = gen_renaming(rng, injective=rng.random() < 0.7)
    x = gen_event_set(rng, max_elem=bounds.max_elem)
    image = EventSet.from_iterable(f[e] for e in x.events)
    if map_symbols(f, Trace.of(x)) == Trace.of(image):
        return None
    return _fmt_inputs(x=x)


@law("change-of-symbol-L3", "change-of-symbol")
def _cos_l3(rng, bounds):
    f = gen_renaming(rng, injective=rng.random() < 0.7)
    s, t = (gen_trace(rng, max_len=bounds.max_len) for _ in range(2))
    lhs = map_symbols(f, catenate(s, t))
    rhs = catenate(map_symbols(f, s), map_symbols(f, t))
    return None if lhs == rhs else _fmt_inputs(s=s, t=t)


@law("change-of-symbol-L4", "change-of-symbol")
def _cos_l4(rng, bounds):
    f = gen_renaming(rng, injective=rng.random() < 0.7)
    s = gen_trace(rng, max_len=bounds.max_len)
    if s == EMPTY:
        return None
    image = EventSet.from_iterable(f[e] for e in head(s).events)
    return None if head(map_symbols(f, s)) == image else _fmt_inputs(s=s)


@law("change-of-symbol-L5", "change-of-symbol")
def _cos_l5(rng, bounds):
    f = gen_renaming(rng, injective=rng.random() < 0.7)
    s = gen_trace(rng, max_len=bounds.max_len)
    return None if length(map_symbols(f, s)) == length(s) else _fmt_inputs(s=s)


@law("change-of-symbol-L6", "change-of-symbol")
def _cos_l6(rng, bounds):
    f = gen_renaming(rng, injective=True)
    s = gen_trace(rng, max_len=bounds.max_len)
    a = gen_alphabet(rng)
    fa = Alphabet.from_iterable(f[e] for e in a.events)
    lhs = map_symbols(f, restrict(s, a))
    rhs = restrict(map_symbols(f, s), fa)
    return None if lhs == rhs else _fmt_inputs(s=s, A=a)


# ---------------------------------------------------------------------------
# process laws


def _fmt_procs(**kw) -> str:
    parts = []
    for key, value in kw.items():
        parts.append(f"{key}={value!r}")
    return " ".join(parts)


@law("processes-L1A", "processes")
def _proc_l1a(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, min_size=1)
    guard = gen_event_set(rng, alpha.events, 2)
    prefixed = Prefix(guard, Stop(alpha))
    if _equiv(Stop(alphabet(prefixed)), prefixed, 1).equal:
        return _fmt_procs(guard=guard)
    return None


@law("processes-L1B", "processes")
def _proc_l1b(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=2)
    guards = _distinct_guards(rng, alpha, 2)
    if len(guards) < 2:
        return None
    p = Prefix(guards[0], Stop(alpha))
    q = Prefix(guards[1], Stop(alpha))
    if _equiv(p, q, 1).equal:
        return _fmt_procs(g1=guards[0], g2=guards[1])
    return None


@law("processes-L1C", "processes")
def _proc_l1c(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    guards = _distinct_guards(rng, alpha, rng.randint(2, 3))
    branches = [(g, gen_process(rng, alpha, 1, (), True)) for g in guards]
    menu = Menu(tuple(branches))
    reordered = Menu(tuple(reversed(branches)))
    if set(step(menu)) != set(step(reordered)):
        return _fmt_procs(menu=menu)
    if not _equiv(menu, reordered, 3).equal:
        return _fmt_procs(menu=menu)
    return None


@law("processes-L1D", "processes")
def _proc_l1d(rng, bounds):
    alpha, p, q = gen_same_alphabet_pair(rng, depth=2)
    if not len(alpha):
        return None
    guard = gen_event_set(rng, alpha.events, 2)
    depth = 4
    inner = _equiv(p, q, depth).equal
    outer = _equiv(Prefix(guard, p), Prefix(guard, q), depth + 1).equal
    return None if inner == outer else _fmt_procs(guard=guard, p=p, q=q)


@law("processes-L2A", "processes")
def _proc_l2a(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    body = gen_process(rng, alpha, rng.randint(1, 3), ("X",), False)
    m = Mu("X", alpha, body)
    if validate(m):
        return None  # degenerate draw without a usable body
    unfolded = substitute(body, "X", m)
    verdict = _equiv(m, unfolded, 5)
    return None if verdict.equal else _fmt_procs(m=m, witness=verdict.witness)


@law("process-traces-L1", "process-traces")
def _ptr_l1(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL)
    ts = _traces(Stop(alpha), rng.randint(0, 5))
    return None if ts.traces == {EMPTY} else _fmt_procs(alpha=alpha)


@law("process-traces-L2", "process-traces")
def _ptr_l2(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    guard = gen_event_set(rng, alpha.events, 2)
    body = gen_process(rng, alpha, 2)
    depth = 4
    lhs = _traces(Prefix(guard, body), depth).traces
    rhs = {EMPTY} | {
        catenate(Trace.of(guard), t) for t in _traces(body, depth - 1).traces
    }
    return None if lhs == rhs else _fmt_procs(guard=guard, body=body)


@law("process-traces-L3", "process-traces")
def _ptr_l3(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=2)
    guards = _distinct_guards(rng, alpha, 2)
    if len(guards) < 2:
        return None
    p = gen_process(rng, alpha, 2)
    q = gen_process(rng, alpha, 2)
    menu = Menu(((guards[0], p), (guards[1], q)))
    depth = 4
    lhs = _traces(menu, depth).traces
    rhs = (
        {EMPTY}
        | {catenate(Trace.of(guards[0]), t) for t in _traces(p, depth - 1).traces}
        | {catenate(Trace.of(guards[1]), t) for t in _traces(q, depth - 1).traces}
    )
    return None if lhs == rhs else _fmt_procs(menu=menu)


@law("process-traces-L4", "process-traces")
def _ptr_l4(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    guards = _distinct_guards(rng, alpha, rng.randint(1, 3))
    branches = tuple((g, gen_process(rng, alpha, 2)) for g in guards)
    menu = Menu(branches)
    depth = 4
    by_guard = dict(branches)
    for t in _traces(menu, depth).traces:
        if t == EMPTY:
            continue
        first = head(t)
        if first not in by_guard:
            return _fmt_procs(menu=menu, t=t)
        if tail(t) not in _traces(by_guard[first], depth - 1).traces:
            return _fmt_procs(menu=menu, t=t)
    return None


@law("process-traces-L5", "process-traces")
def _ptr_l5(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=2, min_size=1)
    body = gen_process(rng, alpha, 2, ("X",), False)
    m = Mu("X", alpha, body)
    if validate(m):
        return None
    depth = 4
    unrolled: Process = Stop(alpha)
    for _ in range(depth):
        unrolled = substitute(body, "X", unrolled)
    lhs = _traces(m, depth).traces
    rhs = _traces(unrolled, depth).traces
    return None if lhs == rhs else _fmt_procs(m=m)


@law("process-traces-L6", "process-traces")
def _ptr_l6(rng, bounds):
    _, p = gen_rooted_process(rng, depth=3)
    return None if EMPTY in _traces(p, 3).traces else _fmt_procs(p=p)


@law("process-traces-L7", "process-traces")
def _ptr_l7(rng, bounds):
    _, p = gen_rooted_process(rng, depth=3)
    ts = _traces(p, 4).traces
    for t in ts:
        for i in range(len(t.elements)):
            if Trace(t.elements[:i]) not in ts:
                return _fmt_procs(p=p, t=t)
    return None


@law("process-traces-L8", "process-traces")
def _ptr_l8(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=3)
    for t in _traces(p, 4).traces:
        if not star_member(t, alpha):
            return _fmt_procs(p=p, t=t)
    return None


@law("after-L1", "after")
def _aft_l1(rng, bounds):
    _, p = gen_rooted_process(rng, depth=3)
    return None if after(p, EMPTY) == p else _fmt_procs(p=p)


@law("after-L2", "after")
def _aft_l2(rng, bounds):
    _, p = gen_rooted_process(rng, depth=3)
    traces = sorted(_traces(p, 4).traces, key=lambda t: (len(t.elements), format_trace(t)))
    full = traces[rng.randrange(len(traces))]
    cut = rng.randint(0, len(full.elements))
    s, t = Trace(full.elements[:cut]), Trace(full.elements[cut:])
    lhs = after(p, catenate(s, t))
    rhs = after(after(p, s), t)
    return None if lhs == rhs else _fmt_procs(p=p, s=s, t=t)


@law("after-L3", "after")
def _aft_l3(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    guards = _distinct_guards(rng, alpha, rng.randint(1, 3))
    branches = tuple((g, gen_process(rng, alpha, 2)) for g in guards)
    menu = Menu(branches)
    pick = rng.randrange(len(branches))
    guard, body = branches[pick]
    got = after(menu, Trace.of(guard))
    return None if got == body else _fmt_procs(menu=menu, guard=guard)


@law("after-L3A", "after")
def _aft_l3a(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    guard = gen_event_set(rng, alpha.events, 3)
    body = gen_process(rng, alpha, 2)
    got = after(Prefix(guard, body), Trace.of(guard))
    return None if got == body else _fmt_procs(guard=guard, body=body)


@law("after-L4-sets", "after")
def _aft_l4(rng, bounds):
    _, p = gen_rooted_process(rng, depth=3)
    depth = 3
    candidates = sorted(
        _traces(p, 2).traces, key=lambda t: (len(t.elements), format_trace(t))
    )
    s = candidates[rng.randrange(len(candidates))]
    lhs = _traces(after(p, s), depth).traces
    rhs = {
        Trace(t.elements[len(s.elements):])
        for t in _traces(p, depth + len(s.elements)).traces
        if t.elements[: len(s.elements)] == s.elements
    }
    return None if lhs == rhs else _fmt_procs(p=p, s=s)


# ---------------------------------------------------------------------------
# interaction laws (equal alphabets)


@law("interaction-L1", "interaction")
def _int_l1(rng, bounds):
    _, p, q = gen_same_alphabet_pair(rng)
    verdict = _equiv(interact(p, q), interact(q, p), 6)
    return None if verdict.equal else _fmt_procs(p=p, q=q, witness=verdict.witness)


@law("interaction-L2", "interaction")
def _int_l2(rng, bounds):
    alpha, p, q = gen_same_alphabet_pair(rng, depth=2)
    r = gen_process(rng, alpha, 2)
    lhs = interact(p, interact(q, r))
    rhs = interact(interact(p, q), r)
    verdict = _equiv(lhs, rhs, 6)
    return None if verdict.equal else _fmt_procs(p=p, q=q, r=r, witness=verdict.witness)


@law("interaction-L3A", "interaction")
def _int_l3a(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=3)
    verdict = _equiv(interact(p, Stop(alpha)), Stop(alpha), 6)
    return None if verdict.equal else _fmt_procs(p=p, witness=verdict.witness)


@law("interaction-L3B", "interaction")
def _int_l3b(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=2, min_size=1)
    p = gen_process(rng, alpha, rng.randint(1, 3))
    verdict = _equiv(interact(p, Run(alpha)), p, 6)
    return None if verdict.equal else _fmt_procs(p=p, witness=verdict.witness)


@law("interaction-L4A", "interaction")
def _int_l4a(rng, bounds):
    alpha, p, q = gen_same_alphabet_pair(rng, depth=2)
    if not len(alpha):
        return None
    c = gen_event_set(rng, alpha.events, 2)
    lhs = interact(Prefix(c, p), Prefix(c, q))
    rhs = Prefix(c, interact(p, q))
    verdict = _equiv(lhs, rhs, 5)
    return None if verdict.equal else _fmt_procs(c=c, p=p, q=q, witness=verdict.witness)


@law("interaction-L4B", "interaction")
def _int_l4b(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=2)
    guards = _distinct_guards(rng, alpha, 2)
    if len(guards) < 2:
        return None
    p = gen_process(rng, alpha, 2)
    q = gen_process(rng, alpha, 2)
    lhs = interact(Prefix(guards[0], p), Prefix(guards[1], q))
    verdict = _equiv(lhs, Stop(alpha), 5)
    return None if verdict.equal else _fmt_procs(c=guards[0], d=guards[1])


@law("interaction-L4-menu", "interaction")
def _int_l4menu(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    ga = _distinct_guards(rng, alpha, rng.randint(1, 3))
    gb = _distinct_guards(rng, alpha, rng.randint(1, 3))
    pa = {g: gen_process(rng, alpha, 1) for g in ga}
    qb = {g: gen_process(rng, alpha, 1) for g in gb}
    lhs = interact(Menu(tuple(pa.items())), Menu(tuple(qb.items())))
    shared = [g for g in ga if g in qb]
    if shared:
        rhs: Process = Menu(
            tuple((g, interact(pa[g], qb[g])) for g in shared)
        )
    else:
        rhs = Stop(alpha)
    verdict = _equiv(lhs, rhs, 5)
    return None if verdict.equal else _fmt_procs(lhs=lhs, witness=verdict.witness)


@law("interaction-traces-L1", "interaction")
def _int_tr_l1(rng, bounds):
    _, p, q = gen_same_alphabet_pair(rng)
    depth = 4
    lhs = _traces(interact(p, q), depth).traces
    rhs = intersect_sets(_traces(p, depth), _traces(q, depth))
    return None if lhs == rhs else _fmt_procs(p=p, q=q)


@law("interaction-traces-L2", "interaction")
def _int_tr_l2(rng, bounds):
    _, p, q = gen_same_alphabet_pair(rng)
    composite = interact(p, q)
    choices = sorted(
        _traces(composite, 2).traces, key=lambda t: (len(t.elements), format_trace(t))
    )
    s = choices[rng.randrange(len(choices))]
    lhs = after(composite, s)
    rhs = interact(after(p, s), after(q, s))
    verdict = _equiv(lhs, rhs, 4)
    return None if verdict.equal else _fmt_procs(p=p, q=q, s=s)


# ---------------------------------------------------------------------------
# concurrency laws (alphabets may differ)


def _gen_overlapping_pair(rng):
    a = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    b = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    return (
        a,
        b,
        gen_process(rng, a, rng.randint(1, 3)),
        gen_process(rng, b, rng.randint(1, 3)),
    )


@law("concurrency-L1", "concurrency")
def _con_l1(rng, bounds):
    _, _, p, q = _gen_overlapping_pair(rng)
    verdict = _equiv(concur(p, q), concur(q, p), 6)
    return None if verdict.equal else _fmt_procs(p=p, q=q, witness=verdict.witness)


def gen_disjoint_triple(rng, depth: int = 2):
    pool = list(PROCESS_POOL)
    rng.shuffle(pool)
    cuts = sorted(rng.sample(range(1, len(pool)), 2))
    parts = [pool[: cuts[0]], pool[cuts[0] : cuts[1]], pool[cuts[1] :]]
    alphas = [Alphabet.from_iterable(part) for part in parts]
    return [gen_process(rng, a, rng.randint(1, depth)) for a in alphas]


@law("concurrency-L2", "concurrency")
def _con_l2(rng, bounds):
    # associativity is grouping-stable when the three alphabets coincide or
    # are pairwise disjoint (see the concurrency-L2-overlap erratum)
    if rng.random() < 0.5:
        alpha, p, q = gen_same_alphabet_pair(rng, depth=2)
        r = gen_process(rng, alpha, 2)
    else:
        p, q, r = gen_disjoint_triple(rng)
    lhs = concur(p, concur(q, r))
    rhs = concur(concur(p, q), r)
    verdict = _equiv(lhs, rhs, 6)
    return None if verdict.equal else _fmt_procs(p=p, q=q, r=r, witness=verdict.witness)


@erratum("concurrency-L2-overlap", "concurrency")
def _con_l2_overlap(rng, cases):
    # with partially shared alphabets, grouping matters: a deadlocked
    # sub-composition frees its partner under one bracketing only
    a_s = Alphabet.of("a", "s")
    p = Mu("X", a_s, Prefix(eset("a"), Var("X")))
    q = Mu("Y", Alphabet.of("s"), Prefix(eset("s"), Var("Y")))
    r = Mu("Z", Alphabet.of("b"), Prefix(eset("b"), Var("Z")))
    grouped_left = concur(concur(p, q), r)
    grouped_right = concur(p, concur(q, r))
    verdict = equiv_upto(grouped_left, grouped_right, 2)
    assert not verdict.equal, "counterexample no longer refutes general associativity"
    for _ in range(cases):
        if rng.random() < 0.5:
            alpha, gp, gq = gen_same_alphabet_pair(rng, depth=2)
            gr = gen_process(rng, alpha, 2)
        else:
            gp, gq, gr = gen_disjoint_triple(rng)
        v = _equiv(concur(gp, concur(gq, gr)), concur(concur(gp, gq), gr), 4)
        assert v.equal, _fmt_procs(p=gp, q=gq, r=gr, witness=v.witness)
    return (
        "general associativity refuted for partially shared alphabets; holds "
        "for a shared alphabet and for pairwise disjoint alphabets"
    )


@law("concurrency-L3A", "concurrency")
def _con_l3a(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=3)
    verdict = _equiv(concur(p, Stop(alpha)), Stop(alpha), 6)
    return None if verdict.equal else _fmt_procs(p=p, witness=verdict.witness)


@law("concurrency-L3B", "concurrency")
def _con_l3b(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=2, min_size=1)
    p = gen_process(rng, alpha, rng.randint(1, 3))
    verdict = _equiv(concur(p, Run(alpha)), p, 6)
    return None if verdict.equal else _fmt_procs(p=p, witness=verdict.witness)


@law("concurrency-L4", "concurrency")
def _con_l4(rng, bounds):
    # a shared initial event syncs: both alphabets contain c
    shared = rng.choice(PROCESS_POOL)
    extra_p = gen_alphabet(rng, [e for e in PROCESS_POOL if e != shared], max_size=1)
    extra_q = gen_alphabet(rng, [e for e in PROCESS_POOL if e != shared], max_size=1)
    a = extra_p.union(Alphabet.of(shared))
    b = extra_q.union(Alphabet.of(shared))
    c = eset(shared)
    p = gen_process(rng, a, 2)
    q = gen_process(rng, b, 2)
    lhs = concur(Prefix(c, p), Prefix(c, q))
    rhs = Prefix(c, concur(p, q))
    verdict = _equiv(lhs, rhs, 5)
    return None if verdict.equal else _fmt_procs(c=c, p=p, q=q, witness=verdict.witness)


@law("concurrency-L5", "concurrency")
def _con_l5(rng, bounds):
    # private initial events of disjoint processes merge into one set
    a, b, p, q = gen_disjoint_pair(rng, depth=2)
    c = gen_event_set(rng, a.events, 2)
    d = gen_event_set(rng, b.events, 2)
    lhs = concur(Prefix(c, p), Prefix(d, q))
    rhs = Prefix(c.union(d), concur(p, q))
    verdict = _equiv(lhs, rhs, 5)
    return None if verdict.equal else _fmt_procs(c=c, d=d, witness=verdict.witness)


@law("concurrency-L6", "concurrency")
def _con_l6(rng, bounds):
    # singleton-guard menus: shared events sync, private events pair up
    a = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    b = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    pa = {x: gen_process(rng, a, 1) for x in a.events}
    qb = {y: gen_process(rng, b, 1) for y in b.events}
    lhs = concur(
        Menu(tuple((eset(x), body) for x, body in pa.items())),
        Menu(tuple((eset(y), body) for y, body in qb.items())),
    )
    branches = []
    for x in a.events:
        if x in b.events:
            branches.append((eset(x), concur(pa[x], qb[x])))
    for x in a.events:
        if x in b.events:
            continue
        for y in b.events:
            if y in a.events:
                continue
            branches.append((eset(x, y), concur(pa[x], qb[y])))
    rhs: Process = Menu(tuple(branches)) if branches else Stop(a.union(b))
    verdict = _equiv(lhs, rhs, 4)
    return None if verdict.equal else _fmt_procs(A=a, B=b, witness=verdict.witness)


@law("concurrency-traces-L1", "concurrency")
def _con_tr_l1(rng, bounds):
    _, p, q = gen_same_alphabet_pair(rng)
    depth = 4
    lhs = _traces(concur(p, q), depth).traces
    rhs = intersect_sets(_traces(p, depth), _traces(q, depth))
    return None if lhs == rhs else _fmt_procs(p=p, q=q)


def cc_sets_lockstep(p: Process, q: Process, depth: int) -> frozenset[Trace]:
    """Independent oracle for disjoint-alphabet parallel traces: pairwise
    composition, where a strictly shorter side must be stuck after its part."""
    sp = traces_upto(p, depth, max_traces=CASE_TRACE_BUDGET)
    sq = traces_upto(q, depth, max_traces=CASE_TRACE_BUDGET)
    out: set[Trace] = set()
    for s in sp.traces:
        for t in sq.traces:
            if len(s.elements) > len(t.elements):
                if step(after(q, t)):
                    continue
            elif len(t.elements) > len(s.elements):
                if step(after(p, s)):
                    continue
            try:
                out.add(cc(s, t))
            except CompositionError:
                continue
    return frozenset(out)


@erratum("concurrency-traces-L2", "concurrency")
def _con_tr_l2(rng, cases):
    # literal form: parallel traces equal the pairwise composition of the
    # component trace sets.  Under lockstep parallelism a side that can move
    # must move, so compositions against a proper prefix of a still-live
    # partner are unreachable: p={a}->STOP, q={b}->STOP refute equality.
    p = Prefix(eset("a"), Stop(Alphabet.of("a")))
    q = Prefix(eset("b"), Stop(Alphabet.of("b")))
    lhs = traces_upto(concur(p, q), 4).traces
    rhs = cc_sets(traces_upto(p, 4), traces_upto(q, 4))
    assert trace(["a"]) in rhs and trace(["a"]) not in lhs, (
        "counterexample no longer refutes the literal form"
    )
    assert lhs != rhs, "counterexample no longer refutes the literal form"
    assert lhs < rhs, "inclusion direction changed"
    for _ in range(cases):
        _, _, gp, gq = gen_disjoint_pair(rng, depth=2)
        got = traces_upto(concur(gp, gq), 4, max_traces=CASE_TRACE_BUDGET).traces
        pairwise = cc_sets(
            traces_upto(gp, 4, max_traces=CASE_TRACE_BUDGET),
            traces_upto(gq, 4, max_traces=CASE_TRACE_BUDGET),
        )
        assert got <= pairwise, _fmt_procs(p=gp, q=gq)
        assert got == cc_sets_lockstep(gp, gq, 4), _fmt_procs(p=gp, q=gq)
    return (
        "literal pairwise form refuted under lockstep; inclusion and the "
        "stuck-side-aware composition hold"
    )


@law("concurrency-traces-L3", "concurrency")
def _con_tr_l3(rng, bounds):
    a, b, p, q = _gen_overlapping_pair(rng)
    composite = concur(p, q)
    choices = sorted(
        _traces(composite, 2).traces, key=lambda t: (len(t.elements), format_trace(t))
    )
    s = choices[rng.randrange(len(choices))]
    lhs = after(composite, s)
    rhs = concur(after(p, restrict(s, a)), after(q, restrict(s, b)))
    verdict = _equiv(lhs, rhs, 4)
    return None if verdict.equal else _fmt_procs(p=p, q=q, s=s)


@erratum("concurrency-traces-L4", "concurrency")
def _con_tr_l4(rng, cases):
    # literal form: parallel traces are exactly the star of the united
    # alphabet; refuted by STOP || STOP, which has only the empty trace
    p, q = Stop(Alphabet.of("a")), Stop(Alphabet.of("b"))
    lhs = traces_upto(concur(p, q), 2).traces
    assert trace(["a"]) not in lhs and star_member(trace(["a"]), Alphabet.of("a", "b")), (
        "counterexample no longer refutes the literal form"
    )
    for _ in range(cases):
        a, b, gp, gq = _gen_overlapping_pair(rng)
        union = a.union(b)
        for t in traces_upto(concur(gp, gq), 4, max_traces=CASE_TRACE_BUDGET).traces:
            assert star_member(t, union), _fmt_procs(p=gp, q=gq, t=t)
    return "literal star equality refuted; the inclusion direction holds"


# ---------------------------------------------------------------------------
# satisfaction laws


@law("satisfaction-L1", "satisfaction")
def _sat_l1(rng, bounds):
    _, p = gen_rooted_process(rng, depth=3)
    report = pr.sat_check(p, pr.Const(True), 6, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(p=p)


@law("satisfaction-L2A", "satisfaction")
def _sat_l2a(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=3)
    s = gen_predicate(rng, alpha, tautology_bias=0.5)
    t = gen_predicate(rng, alpha, tautology_bias=0.5)
    depth = 6
    if (
        pr.sat_check(p, s, depth, max_traces=CASE_TRACE_BUDGET).holds
        and pr.sat_check(p, t, depth, max_traces=CASE_TRACE_BUDGET).holds
    ):
        both = pr.sat_check(p, pr.And(s, t), depth, max_traces=CASE_TRACE_BUDGET)
        if not both.holds:
            return _fmt_procs(p=p, witness=both.witness)
    return None


@law("satisfaction-L2-finite", "satisfaction")
def _sat_l2(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=2)
    family = [pr.Not(pr.LengthCmp(pr.TraceVar(), "=", n)) for n in range(7, 10)]
    depth = 5
    if all(
        pr.sat_check(p, s, depth, max_traces=CASE_TRACE_BUDGET).holds for s in family
    ):
        conj: pr.TracePredicate = family[0]
        for s in family[1:]:
            conj = pr.And(conj, s)
        if not pr.sat_check(p, conj, depth, max_traces=CASE_TRACE_BUDGET).holds:
            return _fmt_procs(p=p)
    return None


@law("satisfaction-L3", "satisfaction")
def _sat_l3(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=3)
    s = gen_predicate(rng, alpha, tautology_bias=0.5)
    weaker = pr.Or(s, gen_predicate(rng, alpha))
    depth = 6
    enumerated = _traces(p, depth).traces
    premise = all(
        pr.evaluate(pr.Implies(s, weaker), t) for t in enumerated
    )
    if not premise:
        return _fmt_procs(p=p)
    if pr.sat_check(p, s, depth, max_traces=CASE_TRACE_BUDGET).holds:
        report = pr.sat_check(p, weaker, depth, max_traces=CASE_TRACE_BUDGET)
        if not report.holds:
            return _fmt_procs(p=p, witness=report.witness)
    return None


@law("satisfaction-L4A", "satisfaction")
def _sat_l4a(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL)
    report = pr.sat_check(
        Stop(alpha), pr.TraceEquals(pr.TraceVar(), pr.Lit(EMPTY)), 6
    )
    return None if report.holds else _fmt_procs(alpha=alpha)


@law("satisfaction-L4B", "satisfaction")
def _sat_l4b(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=2)
    if not len(alpha):
        return None
    s = gen_predicate(rng, alpha, tautology_bias=0.5)
    depth = 5
    if not pr.sat_check(p, s, depth, max_traces=CASE_TRACE_BUDGET).holds:
        return None
    guard = gen_event_set(rng, alpha.events, 2)
    lifted = pr.prefix_transform(guard, s)
    report = pr.sat_check(Prefix(guard, p), lifted, depth + 1, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(p=p, guard=guard, witness=report.witness)


@law("satisfaction-L4C", "satisfaction")
def _sat_l4c(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=2)
    if not len(alpha):
        return None
    s = gen_predicate(rng, alpha, tautology_bias=0.5)
    depth = 4
    if not pr.sat_check(p, s, depth, max_traces=CASE_TRACE_BUDGET).holds:
        return None
    c = gen_event_set(rng, alpha.events, 2)
    d = gen_event_set(rng, alpha.events, 2)
    lit = pr.Lit(Trace.of(c, d))
    formula = pr.Or(
        pr.PrefixOf(pr.TraceVar(), lit),
        pr.And(
            pr.PrefixOf(lit, pr.TraceVar()),
            pr.shift_trace_var(s, pr.Tail(pr.Tail(pr.TraceVar()))),
        ),
    )
    process = Prefix(c, Prefix(d, p))
    report = pr.sat_check(process, formula, depth + 2, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(p=p, c=c, d=d, witness=report.witness)


@law("satisfaction-L4D", "satisfaction")
def _sat_l4d(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=2)
    guards = _distinct_guards(rng, alpha, 2)
    if len(guards) < 2:
        return None
    p = gen_process(rng, alpha, 2)
    q = gen_process(rng, alpha, 2)
    s = gen_predicate(rng, alpha, tautology_bias=0.5)
    t = gen_predicate(rng, alpha, tautology_bias=0.5)
    depth = 5
    if not (
        pr.sat_check(p, s, depth, max_traces=CASE_TRACE_BUDGET).holds
        and pr.sat_check(q, t, depth, max_traces=CASE_TRACE_BUDGET).holds
    ):
        return None
    menu = Menu(((guards[0], p), (guards[1], q)))
    formula = pr.choice_transform(((guards[0], s), (guards[1], t)))
    report = pr.sat_check(menu, formula, depth + 1, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(menu=menu, witness=report.witness)


@law("satisfaction-L4-menu", "satisfaction")
def _sat_l4menu(rng, bounds):
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
    guards = _distinct_guards(rng, alpha, rng.randint(1, 3))
    branches = tuple((g, gen_process(rng, alpha, 1)) for g in guards)
    spec_branches = tuple(
        (g, gen_predicate(rng, alpha, tautology_bias=0.6)) for g in guards
    )
    depth = 4
    for (g, body), (_, s) in zip(branches, spec_branches):
        if not pr.sat_check(body, s, depth, max_traces=CASE_TRACE_BUDGET).holds:
            return None
    formula = pr.choice_transform(spec_branches)
    report = pr.sat_check(Menu(branches), formula, depth + 1, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(witness=report.witness)


@law("satisfaction-L5", "satisfaction")
def _sat_l5(rng, bounds):
    alpha, p = gen_rooted_process(rng, depth=3)
    s_pred = gen_predicate(rng, alpha, tautology_bias=0.5)
    depth = 4
    prefixes = sorted(
        _traces(p, 2).traces, key=lambda t: (len(t.elements), format_trace(t))
    )
    s = prefixes[rng.randrange(len(prefixes))]
    if not pr.sat_check(
        p, s_pred, depth + len(s.elements), max_traces=CASE_TRACE_BUDGET
    ).holds:
        return None
    residual = after(p, s)
    for t in _traces(residual, depth).traces:
        if not pr.evaluate(s_pred, catenate(s, t)):
            return _fmt_procs(p=p, s=s, t=t)
    return None


@law("satisfaction-L6-recursion", "satisfaction")
def _sat_l6(rng, bounds):
    # recursion induction on a concrete looping process
    alpha = gen_alphabet(rng, PROCESS_POOL, max_size=2, min_size=1)
    guard = gen_event_set(rng, alpha.events, 2)
    body_of = lambda hole: Prefix(guard, hole)
    spec = pr.InStar(pr.TraceVar(), alpha)
    depth = 5
    if not pr.sat_check(Stop(alpha), spec, depth).holds:
        return _fmt_procs(alpha=alpha, stage="base")
    stage: Process = Stop(alpha)
    for _ in range(3):
        stage = body_of(stage)
        if not pr.sat_check(stage, spec, depth, max_traces=CASE_TRACE_BUDGET).holds:
            return _fmt_procs(alpha=alpha, stage=stage)
    m = Mu("X", alpha, body_of(Var("X")))
    report = pr.sat_check(m, spec, depth, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(m=m, witness=report.witness)


@law("spec-concurrency-L1", "spec-concurrency")
def _spec_con_l1(rng, bounds):
    a, b, p, q = _gen_overlapping_pair(rng)
    sp = gen_predicate(rng, a, tautology_bias=0.5)
    sq = gen_predicate(rng, b, tautology_bias=0.5)
    depth = 5
    if not (
        pr.sat_check(p, sp, depth, max_traces=CASE_TRACE_BUDGET).holds
        and pr.sat_check(q, sq, depth, max_traces=CASE_TRACE_BUDGET).holds
    ):
        return None
    joint = pr.concur_spec(sp, sq, a, b)
    report = pr.sat_check(concur(p, q), joint, depth, max_traces=CASE_TRACE_BUDGET)
    return None if report.holds else _fmt_procs(p=p, q=q, witness=report.witness)


def _offers_everywhere(p: Process, depth: int) -> bool:
    frontier = [p]
    for _ in range(depth):
        nxt = []
        for proc in frontier:
            offers = step(proc)
            if not offers:
                return False
            nxt.extend(o.next for o in offers)
        frontier = list(dict.fromkeys(nxt))
    return True


@law("spec-concurrency-L2", "spec-concurrency")
def _spec_con_l2(rng, bounds):
    # never-stops composition, on composable pairs: disjoint alphabets, a
    # RUN partner covering the alphabet, or two copies of one process
    depth = 5
    mode = rng.randrange(3)
    if mode == 0:
        a, b, _, _ = gen_disjoint_pair(rng)
        p, q = gen_total_process(rng, a), gen_total_process(rng, b)
    elif mode == 1:
        a = gen_alphabet(rng, PROCESS_POOL, max_size=2, min_size=1)
        p = gen_total_process(rng, a)
        q = Run(a.union(gen_alphabet(rng, PROCESS_POOL, max_size=1)))
    else:
        a = gen_alphabet(rng, PROCESS_POOL, max_size=3, min_size=1)
        p = gen_total_process(rng, a)
        q = p
    if not (_offers_everywhere(p, depth) and _offers_everywhere(q, depth)):
        return _fmt_procs(p=p, q=q, stage="premise")
    if _offers_everywhere(concur(p, q), depth):
        return None
    return _fmt_procs(p=p, q=q)


# ---------------------------------------------------------------------------
# suite runner


def run_suite(seed: int, cases: int) -> list[LawResult]:
    results = []
    for entry in REGISTRY:
        rng = random.Random(f"{seed}:{entry.name}")
        results.append(entry.fn(rng, cases))
    return results


def format_report(results: list[LawResult], seed: int, cases: int) -> str:
    lines = [f"law suite: seed={seed} cases={cases} laws={len(results)}"]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        tag = " [erratum]" if r.kind == "erratum" else ""
        suffix = ""
        if r.skipped:
            suffix += f" skipped={r.skipped}"
        if r.detail:
            suffix += f" :: {r.detail}"
        lines.append(f"{status} {r.name}{tag} cases={r.cases}{suffix}")
    ok = sum(1 for r in results if r.ok)
    failed = len(results) - ok
    errata = sum(1 for r in results if r.kind == "erratum")
    lines.append(
        f"summary: {len(results)} laws, {ok} ok, {failed} failed, "
        f"{errata} errata confirmed"
    )
    return "\n".join(lines) + "\n"
