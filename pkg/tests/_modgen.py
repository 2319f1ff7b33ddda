"""Random module generator for parser round-trip tests.

Generated modules are valid by construction: one event pool per module, one
alphabet declaration covering the pool, annotations only with that alphabet,
guards drawn from the pool, menu guards distinct, recursion variables only
beneath guards.
"""

import random

from ccp.dsl import (
    AlphaDecl,
    CheckDecl,
    ModuleSource,
    PChoice,
    PMu,
    PPar,
    PPrefix,
    PRef,
    PRun,
    PStop,
    ProcDecl,
    SConst,
    SAnd,
    SHeadIs,
    SImplies,
    SInStar,
    SLengthCmp,
    SLit,
    SNot,
    SOr,
    SPrefixOf,
    SRestrict,
    STail,
    STraceEquals,
    STraceVar,
    SetLit,
    SetRef,
    SpecDecl,
    SSubscriptIs,
    print_module,
)
from ccp.traces import Trace, EventSet

POOLS = [("a", "b"), ("a", "b", "c"), ("p", "q", "r", "s")]


def gen_guard(rng: random.Random, pool) -> tuple[str, ...]:
    size = rng.randint(1, min(2, len(pool)))
    return tuple(sorted(rng.sample(pool, size)))


def gen_pexpr(rng, pool, depth, mu_scope, proc_names, under_guard):
    roll = rng.random()
    if depth <= 0:
        if mu_scope and under_guard and roll < 0.4:
            return PRef(rng.choice(mu_scope))
        if proc_names and roll < 0.55:
            return PRef(rng.choice(proc_names))
        return PStop() if roll < 0.85 else PRun()
    if roll < 0.35:
        return PPrefix(
            gen_guard(rng, pool),
            gen_pexpr(rng, pool, depth - 1, mu_scope, proc_names, True),
        )
    if roll < 0.55:
        guards = []
        seen = set()
        for _ in range(rng.randint(2, 3)):
            g = gen_guard(rng, pool)
            if g not in seen:
                seen.add(g)
                guards.append(g)
        return PChoice(
            tuple(
                (g, gen_pexpr(rng, pool, depth - 1, mu_scope, proc_names, True))
                for g in guards
            )
        )
    if roll < 0.7 and depth >= 2:
        name = f"X{len(mu_scope)}"
        return PMu(
            name,
            gen_pexpr(rng, pool, depth - 1, mu_scope + [name], proc_names, False),
        )
    if roll < 0.8:
        return PPar(
            gen_pexpr(rng, pool, depth - 1, mu_scope, proc_names, under_guard),
            gen_pexpr(rng, pool, depth - 1, mu_scope, proc_names, under_guard),
        )
    return PStop()


def gen_setexpr(rng, pool, alpha_name):
    if rng.random() < 0.5:
        return SetRef(alpha_name)
    return SetLit(gen_guard(rng, pool))


def gen_stexpr(rng, pool, alpha_name, depth=1):
    roll = rng.random()
    if roll < 0.5 or depth <= 0:
        return STraceVar()
    if roll < 0.7:
        return STail(gen_stexpr(rng, pool, alpha_name, depth - 1))
    if roll < 0.85:
        return SRestrict(
            gen_stexpr(rng, pool, alpha_name, depth - 1),
            gen_setexpr(rng, pool, alpha_name),
        )
    elements = [EventSet(gen_guard(rng, pool)) for _ in range(rng.randint(0, 2))]
    return SLit(Trace.of(*elements))


def gen_spred(rng, pool, alpha_name, depth=2):
    roll = rng.random()
    if depth > 0 and roll < 0.4:
        kind = rng.randrange(4)
        left = gen_spred(rng, pool, alpha_name, depth - 1)
        right = gen_spred(rng, pool, alpha_name, depth - 1)
        return (SAnd, SOr, SImplies, lambda a, _b: SNot(a))[kind](left, right)
    kind = rng.randrange(7)
    expr = gen_stexpr(rng, pool, alpha_name)
    if kind == 0:
        return SConst(rng.random() < 0.5)
    if kind == 1:
        return SInStar(expr, gen_setexpr(rng, pool, alpha_name))
    if kind == 2:
        return SLengthCmp(expr, rng.choice(("=", "<=", ">=", "<", ">")), rng.randint(0, 5))
    if kind == 3:
        return SHeadIs(expr, gen_guard(rng, pool))
    if kind == 4:
        lit = SLit(Trace.of(*[EventSet(gen_guard(rng, pool)) for _ in range(1)]))
        return SPrefixOf(expr, lit)
    if kind == 5:
        return SSubscriptIs(expr, rng.randint(0, 3), gen_guard(rng, pool))
    return STraceEquals(expr, SLit(Trace.of()))


def gen_module(rng: random.Random) -> ModuleSource:
    pool = rng.choice(POOLS)
    alpha_name = "SIGMA"
    decls = [AlphaDecl(alpha_name, tuple(sorted(pool)))]
    proc_names: list[str] = []
    for i in range(rng.randint(1, 4)):
        name = f"P{i}"
        annotated = alpha_name if rng.random() < 0.4 else None
        expr = gen_pexpr(rng, pool, rng.randint(1, 3), [], list(proc_names), False)
        decls.append(ProcDecl(name, annotated, expr))
        proc_names.append(name)
    spec_names: list[str] = []
    for i in range(rng.randint(0, 2)):
        name = f"S{i}"
        decls.append(SpecDecl(name, gen_spred(rng, pool, alpha_name)))
        spec_names.append(name)
    for _ in range(rng.randint(0, 2)):
        if spec_names and rng.random() < 0.5:
            decls.append(
                CheckDecl(
                    "sat",
                    rng.choice(proc_names),
                    rng.choice(spec_names),
                    rng.choice((None, rng.randint(0, 8))),
                )
            )
        else:
            decls.append(
                CheckDecl(
                    "eq",
                    rng.choice(proc_names),
                    rng.choice(proc_names),
                    rng.choice((None, rng.randint(0, 8))),
                )
            )
    return ModuleSource(decls=tuple(decls))


def gen_module_text(rng: random.Random) -> str:
    return print_module(gen_module(rng))
