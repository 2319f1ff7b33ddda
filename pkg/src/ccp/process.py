"""Process terms, structural validation, and the operational step function.

Terms are immutable. `step` realizes the lockstep reading of parallel
composition: when both sides can move they must move together, agreeing on
the shared alphabet, and their event sets are merged by union.  A side with
no offers idles, and its partner may then proceed only with events outside
the idle side's alphabet.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from .errors import InterfaceError, NotATraceError, ShapeError, ValidationError
from .traces import Alphabet, EventSet, Trace, format_event_set


@dataclass(frozen=True, slots=True)
class Stop:
    """Deadlock: never engages in any event of its alphabet."""

    alphabet: Alphabet


@dataclass(frozen=True, slots=True)
class Run:
    """Offers every nonempty subset of its alphabet, forever."""

    alphabet: Alphabet


@dataclass(frozen=True, slots=True)
class Prefix:
    """Engage in all events of `guard` simultaneously, then behave as `body`."""

    guard: EventSet
    body: "Process"


@dataclass(frozen=True, slots=True)
class Menu:
    """Deterministic choice among branches with pairwise distinct guards."""

    branches: tuple[tuple[EventSet, "Process"], ...]


@dataclass(frozen=True, slots=True)
class Var:
    """A recursion variable, bound by an enclosing Mu."""

    name: str


@dataclass(frozen=True, slots=True)
class Mu:
    """Guarded recursion: the unique solution of name = body."""

    name: str
    alphabet: Alphabet
    body: "Process"


@dataclass(frozen=True, slots=True)
class Par:
    """Lockstep parallel composition; alphabets may differ."""

    left: "Process"
    right: "Process"


Process = Union[Stop, Run, Prefix, Menu, Var, Mu, Par]


@dataclass(frozen=True, slots=True)
class StepOffer:
    guard: EventSet
    next: "Process"


@dataclass(frozen=True, slots=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.path or '<root>'}: {self.message}"


def alphabet(p: Process, env: dict[str, Alphabet] | None = None) -> Alphabet:
    """The set of events `p` may engage in (declared or derived)."""
    env = env or {}
    match p:
        case Stop(a) | Run(a):
            return a
        case Prefix(_, body):
            return alphabet(body, env)
        case Menu(branches):
            if not branches:
                raise ValidationError([Violation("", "menu has no branches")])
            return alphabet(branches[0][1], env)
        case Var(name):
            if name not in env:
                raise ValidationError([Violation("", f"unbound process variable {name}")])
            return env[name]
        case Mu(_, a, _):
            return a
        case Par(left, right):
            return alphabet(left, env).union(alphabet(right, env))
    raise TypeError(f"not a process: {p!r}")


def validate(p: Process) -> list[Violation]:
    """Collect every violated structural invariant, with term paths."""
    out: list[Violation] = []
    _validate(p, "", {}, out)
    return out


def _validate(p: Process, path: str, env: dict[str, Alphabet], out: list[Violation]) -> None:
    match p:
        case Stop(_) | Run(_):
            return
        case Var(name):
            if name not in env:
                out.append(Violation(path, f"unbound process variable {name}"))
        case Prefix(guard, body):
            _validate(body, _join(path, "body"), env, out)
            body_alpha = _alphabet_or_none(body, env)
            if body_alpha is not None and not body_alpha.covers(guard):
                out.append(
                    Violation(
                        path,
                        f"guard {format_event_set(guard)} is not contained in the "
                        f"body alphabet {body_alpha}",
                    )
                )
        case Menu(branches):
            if not branches:
                out.append(Violation(path, "menu has no branches"))
                return
            seen: set[EventSet] = set()
            alphas: list[Alphabet] = []
            for i, (guard, body) in enumerate(branches):
                bpath = _join(path, f"branch[{i}]")
                if guard in seen:
                    out.append(
                        Violation(bpath, f"duplicate menu guard {format_event_set(guard)}")
                    )
                seen.add(guard)
                _validate(body, bpath, env, out)
                body_alpha = _alphabet_or_none(body, env)
                if body_alpha is not None:
                    alphas.append(body_alpha)
                    if not body_alpha.covers(guard):
                        out.append(
                            Violation(
                                bpath,
                                f"guard {format_event_set(guard)} is not contained in "
                                f"the branch alphabet {body_alpha}",
                            )
                        )
            if alphas and any(a != alphas[0] for a in alphas):
                out.append(Violation(path, "menu branches must share one alphabet"))
        case Mu(name, a, body):
            inner = dict(env)
            inner[name] = a
            _validate(body, _join(path, "body"), inner, out)
            if not _guarded(body, name, False):
                out.append(Violation(path, f"unguarded recursion on {name}"))
            body_alpha = _alphabet_or_none(body, inner)
            if body_alpha is not None and body_alpha != a:
                out.append(
                    Violation(
                        path,
                        f"recursion declares alphabet {a} but its body has "
                        f"alphabet {body_alpha}",
                    )
                )
        case Par(left, right):
            _validate(left, _join(path, "left"), env, out)
            _validate(right, _join(path, "right"), env, out)
        case _:
            out.append(Violation(path, f"not a process term: {p!r}"))


def _join(path: str, part: str) -> str:
    return f"{path}.{part}" if path else part


def _alphabet_or_none(p: Process, env: dict[str, Alphabet]) -> Alphabet | None:
    try:
        return alphabet(p, env)
    except ValidationError:
        return None


def _guarded(p: Process, name: str, under_guard: bool) -> bool:
    """Every occurrence of Var(name) must sit beneath at least one guard."""
    match p:
        case Var(n):
            return under_guard or n != name
        case Prefix(_, body):
            return _guarded(body, name, True)
        case Menu(branches):
            return all(_guarded(body, name, True) for _, body in branches)
        case Mu(n, _, body):
            if n == name:
                return True
            return _guarded(body, name, under_guard)
        case Par(left, right):
            return _guarded(left, name, under_guard) and _guarded(right, name, under_guard)
        case _:
            return True


def ensure_valid(p: Process) -> None:
    violations = validate(p)
    if violations:
        raise ValidationError(violations)


def substitute(p: Process, name: str, replacement: Process) -> Process:
    """Replace free occurrences of Var(name); inner binders of `name` shadow."""
    match p:
        case Var(n):
            return replacement if n == name else p
        case Stop(_) | Run(_):
            return p
        case Prefix(guard, body):
            return Prefix(guard, substitute(body, name, replacement))
        case Menu(branches):
            return Menu(
                tuple((g, substitute(b, name, replacement)) for g, b in branches)
            )
        case Mu(n, a, body):
            if n == name:
                return p
            return Mu(n, a, substitute(body, name, replacement))
        case Par(left, right):
            return Par(
                substitute(left, name, replacement),
                substitute(right, name, replacement),
            )
    raise TypeError(f"not a process: {p!r}")


def _subsets(events: tuple[str, ...]) -> Iterator[tuple[str, ...]]:
    n = len(events)
    for mask in range(1, 1 << n):
        yield tuple(events[i] for i in range(n) if mask >> i & 1)


def _offer_key(offer: StepOffer) -> tuple[str, ...]:
    return offer.guard.events


@lru_cache(maxsize=65536)
def step(p: Process) -> tuple[StepOffer, ...]:
    """All single-instant moves of `p`, sorted by guard for determinism."""
    match p:
        case Stop(_):
            return ()
        case Run(a):
            return tuple(
                sorted(
                    (StepOffer(EventSet(sub), p) for sub in _subsets(a.events)),
                    key=_offer_key,
                )
            )
        case Prefix(guard, body):
            return (StepOffer(guard, body),)
        case Menu(branches):
            if len({g for g, _ in branches}) != len(branches):
                raise ValidationError(
                    [Violation("", "duplicate menu guards reached the step function")]
                )
            return tuple(
                sorted((StepOffer(g, b) for g, b in branches), key=_offer_key)
            )
        case Var(name):
            raise ValidationError([Violation("", f"unbound process variable {name}")])
        case Mu(name, _, body):
            return step(substitute(body, name, p))
        case Par(left, right):
            return _step_par(left, right)
    raise TypeError(f"not a process: {p!r}")


def _step_par(left: Process, right: Process) -> tuple[StepOffer, ...]:
    sl, sr = step(left), step(right)
    a, b = alphabet(left), alphabet(right)
    offers: list[StepOffer] = []
    if sl and sr:
        a_names, b_names = set(a.events), set(b.events)
        for ol in sl:
            shared_l = tuple(sorted(e for e in ol.guard.events if e in b_names))
            for orr in sr:
                shared_r = tuple(sorted(e for e in orr.guard.events if e in a_names))
                if shared_l == shared_r:
                    offers.append(
                        StepOffer(ol.guard.union(orr.guard), Par(ol.next, orr.next))
                    )
    elif sr:
        offers = [
            StepOffer(o.guard, Par(left, o.next))
            for o in sr
            if not any(e in a for e in o.guard.events)
        ]
    elif sl:
        offers = [
            StepOffer(o.guard, Par(o.next, right))
            for o in sl
            if not any(e in b for e in o.guard.events)
        ]
    return tuple(sorted(offers, key=_offer_key))


def after(p: Process, s: Trace) -> Process:
    """The process `p` becomes once it has performed the trace `s`."""
    if not s.is_plain:
        raise ShapeError("after requires a plain trace")
    current = p
    for i, el in enumerate(s.elements):
        chosen = None
        for offer in step(current):
            if offer.guard == el.labels:
                chosen = offer
                break
        if chosen is None:
            raise NotATraceError(
                f"element {i} ({format_event_set(el.labels)}) is not offered here"
            )
        current = chosen.next
    return current


def interact(p: Process, q: Process) -> Process:
    """Parallel composition of processes sharing one alphabet."""
    pa, qa = alphabet(p), alphabet(q)
    if pa != qa:
        raise InterfaceError(
            f"interact requires equal alphabets ({pa} vs {qa}); use concur for "
            "processes with different alphabets"
        )
    return Par(p, q)


def concur(p: Process, q: Process) -> Process:
    """Parallel composition; alphabets may differ."""
    return Par(p, q)
