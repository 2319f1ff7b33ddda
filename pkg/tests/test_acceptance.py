"""Acceptance suite: one test per release criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see one verdict line per
criterion.  Criterion 3's disjoint-alphabet half asserts the pairwise
composition oracle exactly as specified; under lockstep parallelism (which
criteria 4's identities pin down) that equality does not hold for live
partners, so that single test fails by design and the companion test shows
the corrected stuck-side-aware oracle passing on the same pairs.
"""

import random
import time

from ccp import predicates as pr
from ccp.cli import main
from ccp.laws import (
    cc_sets_lockstep,
    gen_disjoint_pair,
    gen_predicate,
    gen_process,
    gen_rooted_process,
    gen_same_alphabet_pair,
    gen_total_process,
    run_suite,
)
from ccp.process import (
    Menu,
    Mu,
    Prefix,
    Run,
    Stop,
    Var,
    after,
    alphabet,
    concur,
    interact,
    step,
    substitute,
)
from ccp.semantics import cc_sets, equiv_upto, intersect_sets, traces_upto
from ccp.traces import (
    Alphabet,
    EventSet,
    Trace,
    catenate,
    eset,
    length,
    restrict,
    star_member,
    trace,
)

DEPTH = 6


def _verdict(name: str) -> None:
    print(f"CRITERION PASS: {name}")


# ---------------------------------------------------------------------------
# criterion 1: the law suite at seed 1, 200 cases, within one minute


def test_criterion1_law_suite_seed1_200cases_under_60s():
    started = time.monotonic()
    results = run_suite(1, 200)
    elapsed = time.monotonic() - started
    failures = [r.name for r in results if not r.ok]
    assert failures == [], f"failing laws: {failures}"
    non_errata = [r for r in results if r.kind == "law"]
    assert len(non_errata) >= 90
    assert elapsed <= 60, f"law suite took {elapsed:.1f}s"
    _verdict(
        f"law suite: {len(non_errata)} laws + "
        f"{len(results) - len(non_errata)} errata in {elapsed:.1f}s"
    )


# ---------------------------------------------------------------------------
# criterion 2: errata regression


def test_criterion2_errata_regression():
    # restriction composed through a union: refuted; intersection form holds
    s = trace(["a"])
    a, b = Alphabet.of("a"), Alphabet.of("b")
    assert restrict(restrict(s, a), b) != restrict(s, a.union(b))
    rng = random.Random(2024)
    from ccp.laws import gen_alphabet, gen_trace

    for _ in range(300):
        t = gen_trace(rng)
        x, y = gen_alphabet(rng), gen_alphabet(rng)
        assert restrict(restrict(t, x), y) == restrict(t, x.intersection(y))

    # length inclusion-exclusion: refuted on a set element; holds on singletons
    t2 = trace(["a", "b"])
    lhs = length(restrict(t2, a.union(b)))
    rhs = (
        length(restrict(t2, a))
        + length(restrict(t2, b))
        - length(restrict(t2, a.intersection(b)))
    )
    assert (lhs, rhs) == (1, 2)
    for _ in range(300):
        names = [rng.choice("abcde") for _ in range(rng.randint(0, 6))]
        single = Trace.of(*[[n] for n in names])
        x, y = gen_alphabet(rng), gen_alphabet(rng)
        got = length(restrict(single, x.union(y)))
        want = (
            length(restrict(single, x))
            + length(restrict(single, y))
            - length(restrict(single, x.intersection(y)))
        )
        assert got == want

    # parallel traces as the full star of the united alphabet: refuted;
    # the inclusion direction holds
    stops = concur(Stop(a), Stop(b))
    assert traces_upto(stops, 3).traces == {Trace.of()}
    assert star_member(trace(["a"]), a.union(b))
    for _ in range(100):
        aa, bb, p, q = gen_disjoint_pair(rng)
        union = aa.union(bb)
        assert all(
            star_member(t, union) for t in traces_upto(concur(p, q), 4).traces
        )
    _verdict("errata regression: three documented counterexamples + corrected forms")


# ---------------------------------------------------------------------------
# criterion 3: concurrency oracles (exact set equality, zero tolerance)


def test_criterion3_same_alphabet_pairs_match_intersection():
    rng = random.Random(31)
    for _ in range(100):
        _, p, q = gen_same_alphabet_pair(rng)
        lhs = traces_upto(interact(p, q), 4).traces
        rhs = intersect_sets(traces_upto(p, 4), traces_upto(q, 4))
        assert lhs == rhs, f"intersection oracle mismatch for {p!r} / {q!r}"
    _verdict("concurrency oracle: 100 same-alphabet pairs equal the intersection")


def test_criterion3_disjoint_pairs_match_pairwise_composition_as_specified():
    # the literal oracle: pairwise composition of the component trace sets;
    # under lockstep parallelism a live partner must move, so this is
    # expected to fail (see the companion lockstep-oracle test and the
    # concurrency-traces-L2 erratum entry)
    rng = random.Random(32)
    mismatches = []
    for i in range(100):
        _, _, p, q = gen_disjoint_pair(rng)
        lhs = traces_upto(concur(p, q), 4).traces
        rhs = cc_sets(traces_upto(p, 4), traces_upto(q, 4))
        if lhs != rhs:
            mismatches.append((i, p, q))
    assert not mismatches, (
        f"{len(mismatches)}/100 disjoint pairs refute the pairwise composition "
        f"oracle under lockstep parallelism; first: {mismatches[0]!r}"
    )
    _verdict("concurrency oracle: 100 disjoint pairs equal the pairwise composition")


def test_criterion3_disjoint_pairs_match_lockstep_aware_composition():
    rng = random.Random(32)  # the same 100 pairs as the literal test
    for _ in range(100):
        _, _, p, q = gen_disjoint_pair(rng)
        lhs = traces_upto(concur(p, q), 4).traces
        rhs = cc_sets_lockstep(p, q, 4)
        assert lhs == rhs, f"lockstep oracle mismatch for {p!r} / {q!r}"
        assert lhs <= cc_sets(traces_upto(p, 4), traces_upto(q, 4))
    _verdict(
        "concurrency oracle: 100 disjoint pairs equal the stuck-side-aware "
        "composition (and are included in the pairwise one)"
    )


# ---------------------------------------------------------------------------
# criterion 4: algebraic identities at depth 6, exact


def _battery() -> list:
    t = Alphabet.of("t")
    ab = Alphabet.of("a", "b")
    abc = Alphabet.of("a", "b", "c")
    return [
        Stop(ab),
        Run(ab),
        Mu("X", t, Prefix(eset("t"), Var("X"))),
        Prefix(eset("a"), Prefix(eset("b"), Stop(ab))),
        Menu(((eset("a"), Stop(ab)), (eset("b"), Run(ab)))),
        Mu(
            "X",
            abc,
            Menu(
                (
                    (eset("a"), Var("X")),
                    (eset("b", "c"), Prefix(eset("a"), Var("X"))),
                )
            ),
        ),
    ]


def test_criterion4_parallel_commutes():
    rng = random.Random(41)
    battery = _battery()
    for p in battery:
        for q in battery:
            assert equiv_upto(concur(p, q), concur(q, p), DEPTH).equal
    for _ in range(30):
        a1 = Alphabet.from_iterable(rng.sample("abcd", rng.randint(1, 3)))
        a2 = Alphabet.from_iterable(rng.sample("abcd", rng.randint(1, 3)))
        p = gen_process(rng, a1, rng.randint(1, 3))
        q = gen_process(rng, a2, rng.randint(1, 3))
        assert equiv_upto(concur(p, q), concur(q, p), DEPTH).equal
    _verdict("parallel composition commutes at depth 6")


def test_criterion4_parallel_associates_in_its_sound_regimes():
    rng = random.Random(42)
    from ccp.laws import gen_disjoint_triple

    for _ in range(20):
        alpha, p, q = gen_same_alphabet_pair(rng, depth=2)
        r = gen_process(rng, alpha, 2)
        lhs = concur(p, concur(q, r))
        rhs = concur(concur(p, q), r)
        assert equiv_upto(lhs, rhs, DEPTH).equal
    for _ in range(20):
        p, q, r = gen_disjoint_triple(rng)
        lhs = concur(p, concur(q, r))
        rhs = concur(concur(p, q), r)
        assert equiv_upto(lhs, rhs, DEPTH).equal
    _verdict(
        "parallel composition associates at depth 6 (shared and pairwise "
        "disjoint alphabets; the partial-overlap boundary is an erratum entry)"
    )


def test_criterion4_run_is_identity_and_stop_annihilates():
    rng = random.Random(43)
    battery = [p for p in _battery() if len(alphabet(p)) <= 3]
    extra = [gen_rooted_process(rng, max_alpha=2)[1] for _ in range(15)]
    for p in battery + extra:
        alpha = alphabet(p)
        assert equiv_upto(interact(p, Run(alpha)), p, DEPTH).equal
        assert equiv_upto(interact(p, Stop(alpha)), Stop(alpha), DEPTH).equal
    _verdict("RUN is a parallel identity and STOP annihilates, at depth 6")


def test_criterion4_disjoint_singleton_prefixes_merge():
    rng = random.Random(44)
    for _ in range(25):
        c, d = rng.sample("abcd", 2)
        ca, da = Alphabet.of(c), Alphabet.of(d)
        p = gen_process(rng, ca, rng.randint(0, 3))
        q = gen_process(rng, da, rng.randint(0, 3))
        lhs = concur(Prefix(eset(c), p), Prefix(eset(d), q))
        rhs = Prefix(eset(c, d), concur(p, q))
        assert equiv_upto(lhs, rhs, DEPTH).equal
    _verdict("a pair of private prefixes merges into one simultaneous set")


def test_criterion4_recursion_unfolds():
    rng = random.Random(45)
    checked = 0
    while checked < 20:
        alpha = Alphabet.from_iterable(rng.sample("abcd", rng.randint(1, 2)))
        body = gen_process(rng, alpha, rng.randint(1, 3), ("X",), False)
        m = Mu("X", alpha, body)
        from ccp.process import validate

        if validate(m):
            continue
        unfolded = substitute(body, "X", m)
        assert equiv_upto(m, unfolded, DEPTH).equal
        checked += 1
    _verdict("recursion equals its one-step unfolding at depth 6")


# ---------------------------------------------------------------------------
# criterion 5: satisfaction theorems at depth 6 on 50 random pairs


def test_criterion5_satisfaction_theorems():
    rng = random.Random(51)
    exercised = {"conj": 0, "weaken": 0, "prefix": 0, "choice": 0, "after": 0, "par": 0}
    for _ in range(50):
        alpha, p = gen_rooted_process(rng, depth=3)
        s = gen_predicate(rng, alpha, tautology_bias=0.5)
        t = gen_predicate(rng, alpha, tautology_bias=0.5)

        if (
            pr.sat_check(p, s, DEPTH).holds
            and pr.sat_check(p, t, DEPTH).holds
        ):
            exercised["conj"] += 1
            assert pr.sat_check(p, pr.And(s, t), DEPTH).holds

        weaker = pr.Or(s, t)
        if pr.sat_check(p, s, DEPTH).holds:
            exercised["weaken"] += 1
            assert pr.sat_check(p, weaker, DEPTH).holds

        if len(alpha) and pr.sat_check(p, s, DEPTH).holds:
            guard = EventSet.from_iterable(
                rng.sample(alpha.events, rng.randint(1, min(2, len(alpha))))
            )
            exercised["prefix"] += 1
            assert pr.sat_check(
                Prefix(guard, p), pr.prefix_transform(guard, s), DEPTH + 1
            ).holds

        if len(alpha) >= 2:
            from ccp.laws import _distinct_guards

            guards = _distinct_guards(rng, alpha, 2)
            if len(guards) == 2:
                q = gen_process(rng, alpha, 2)
                if (
                    pr.sat_check(p, s, DEPTH).holds
                    and pr.sat_check(q, t, DEPTH).holds
                ):
                    exercised["choice"] += 1
                    menu = Menu(((guards[0], p), (guards[1], q)))
                    formula = pr.choice_transform(((guards[0], s), (guards[1], t)))
                    assert pr.sat_check(menu, formula, DEPTH + 1).holds

        short = sorted(
            traces_upto(p, 2).traces, key=lambda x: (len(x.elements), str(x))
        )
        prefix_trace = short[rng.randrange(len(short))]
        if prefix_trace.elements and pr.sat_check(
            p, s, DEPTH + len(prefix_trace.elements)
        ).holds:
            exercised["after"] += 1
            residual = after(p, prefix_trace)
            for suffix in traces_upto(residual, DEPTH).traces:
                assert pr.evaluate(s, catenate(prefix_trace, suffix))

        bb, _, q2 = gen_same_alphabet_pair(rng, depth=2)
        sq = gen_predicate(rng, bb, tautology_bias=0.5)
        if (
            pr.sat_check(p, s, DEPTH).holds
            and pr.sat_check(q2, sq, DEPTH).holds
        ):
            exercised["par"] += 1
            joint = pr.concur_spec(s, sq, alpha, bb)
            assert pr.sat_check(concur(p, q2), joint, DEPTH).holds

    assert all(count >= 10 for count in exercised.values()), exercised
    _verdict(f"satisfaction theorems at depth 6 (non-vacuous cases: {exercised})")


def test_criterion5_never_stops_composition():
    rng = random.Random(52)

    def offers_everywhere(p, depth):
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

    checked = 0
    for _ in range(20):
        mode = rng.randrange(3)
        if mode == 0:
            a, b, _, _ = gen_disjoint_pair(rng)
            p, q = gen_total_process(rng, a), gen_total_process(rng, b)
        elif mode == 1:
            a = Alphabet.from_iterable(rng.sample("abcd", rng.randint(1, 2)))
            p = gen_total_process(rng, a)
            q = Run(a)
        else:
            a = Alphabet.from_iterable(rng.sample("abcd", rng.randint(1, 3)))
            p = gen_total_process(rng, a)
            q = p
        assert offers_everywhere(p, DEPTH) and offers_everywhere(q, DEPTH)
        assert offers_everywhere(concur(p, q), DEPTH)
        checked += 1
    assert checked == 20
    _verdict("never-stopping components compose into a never-stopping parallel")


# ---------------------------------------------------------------------------
# criterion 6: DSL round-trip and golden errors


def test_criterion6_parse_print_identity_on_500_modules():
    from _modgen import gen_module_text
    from ccp.dsl import parse_module, print_module

    rng = random.Random(61)
    for _ in range(500):
        text = gen_module_text(rng)
        module = parse_module(text)
        printed = print_module(module)
        again = parse_module(printed)
        assert again.decls == module.decls
        assert print_module(again) == printed
    _verdict("parse-print identity on 500 generated modules")


def test_criterion6_golden_parse_errors_byte_stable():
    import os

    from ccp.dsl import DslParseError, parse_module

    here = os.path.dirname(__file__)
    source = open(os.path.join(here, "golden", "broken.ccp"), encoding="utf-8").read()
    expected = open(
        os.path.join(here, "golden", "broken.errors.txt"), encoding="utf-8"
    ).read()
    try:
        parse_module(source)
        raise AssertionError("the broken module parsed")
    except DslParseError as exc:
        rendered = "".join(f"{e}\n" for e in exc.errors)
    assert rendered == expected
    _verdict("golden parse errors are byte-stable")


# ---------------------------------------------------------------------------
# criterion 7: CLI determinism


def test_criterion7_cli_determinism(capsys, tmp_path):
    import os

    samples = os.path.join(os.path.dirname(__file__), "..", "samples")

    def run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    commands = [
        ("laws", "--seed", "1", "--cases", "15"),
        ("check", os.path.join(samples, "vending.ccp")),
        ("traces", os.path.join(samples, "vending.ccp"), "--process", "SESSION",
         "--depth", "4", "--format", "json"),
        ("traces", os.path.join(samples, "clock.ccp"), "--process", "CLK"),
    ]
    for argv in commands:
        first = run(*argv)
        second = run(*argv)
        assert first == second, f"nondeterministic output for {argv}"
    _verdict("CLI outputs are byte-identical across reruns")
