"""Unit tests for process terms, validation, stepping, and composition."""

import pytest

from ccp.errors import InterfaceError, NotATraceError, ValidationError
from ccp.process import (
    Menu,
    Mu,
    Par,
    Prefix,
    Run,
    Stop,
    StepOffer,
    Var,
    after,
    alphabet,
    concur,
    interact,
    step,
    substitute,
    validate,
)
from ccp.traces import EMPTY, Alphabet, eset, trace

A = Alphabet.of("a")
B = Alphabet.of("b")
AB = Alphabet.of("a", "b")


def clock(name="tick"):
    alpha = Alphabet.of(name)
    return Mu("X", alpha, Prefix(eset(name), Var("X")))


class TestAlphabet:
    def test_declared(self):
        assert alphabet(Stop(AB)) == AB

    def test_prefix_takes_body_alphabet(self):
        assert alphabet(Prefix(eset("a"), Stop(AB))) == AB

    def test_par_unions(self):
        assert alphabet(Par(Stop(A), Stop(B))) == AB

    def test_mu_declares(self):
        assert alphabet(clock()) == Alphabet.of("tick")


class TestValidate:
    def test_unguarded_recursion(self):
        bad = Mu("X", A, Var("X"))
        messages = [v.message for v in validate(bad)]
        assert any("unguarded" in m for m in messages)

    def test_duplicate_menu_guards(self):
        bad = Menu(((eset("a"), Stop(AB)), (eset("a"), Run(AB))))
        messages = [v.message for v in validate(bad)]
        assert any("duplicate" in m for m in messages)

    def test_valid_prefix(self):
        assert validate(Prefix(eset("a"), Stop(A))) == []

    def test_guard_outside_alphabet(self):
        bad = Prefix(eset("b"), Stop(A))
        assert any("not contained" in v.message for v in validate(bad))

    def test_unbound_variable(self):
        assert any("unbound" in v.message for v in validate(Var("X")))

    def test_menu_alphabet_mismatch(self):
        bad = Menu(((eset("a"), Stop(A)), (eset("b"), Stop(B))))
        assert any("share one alphabet" in v.message for v in validate(bad))

    def test_mu_body_alphabet_mismatch(self):
        bad = Mu("X", A, Prefix(eset("b"), Stop(B)))
        assert any("declares alphabet" in v.message for v in validate(bad))

    def test_violation_paths_point_into_the_term(self):
        bad = Par(Stop(A), Mu("X", A, Var("X")))
        paths = [v.path for v in validate(bad)]
        assert "right" in paths


class TestStep:
    def test_stop_offers_nothing(self):
        assert step(Stop(A)) == ()

    def test_prefix_offers_its_guard(self):
        p = Prefix(eset("a", "b"), Stop(AB))
        assert step(p) == (StepOffer(eset("a", "b"), Stop(AB)),)

    def test_run_offers_every_nonempty_subset(self):
        offers = step(Run(AB))
        assert {o.guard for o in offers} == {eset("a"), eset("b"), eset("a", "b")}
        assert all(o.next == Run(AB) for o in offers)

    def test_menu_offers_branches(self):
        m = Menu(((eset("a"), Stop(AB)), (eset("b"), Run(AB))))
        assert {(o.guard, o.next) for o in step(m)} == {
            (eset("a"), Stop(AB)),
            (eset("b"), Run(AB)),
        }

    def test_mu_unfolds_once(self):
        c = clock()
        offers = step(c)
        assert len(offers) == 1
        assert offers[0].guard == eset("tick")
        assert offers[0].next == c

    def test_par_merges_disjoint_prefixes(self):
        p = Par(Prefix(eset("a"), Stop(A)), Prefix(eset("b"), Stop(B)))
        offers = step(p)
        assert len(offers) == 1
        assert offers[0].guard == eset("a", "b")
        assert offers[0].next == Par(Stop(A), Stop(B))

    def test_par_deadlocks_on_shared_disagreement(self):
        p = Par(Prefix(eset("a"), Stop(AB)), Prefix(eset("b"), Stop(AB)))
        assert step(p) == ()

    def test_par_syncs_on_shared_guard(self):
        p = Par(Prefix(eset("a"), Stop(AB)), Prefix(eset("a"), Stop(AB)))
        offers = step(p)
        assert len(offers) == 1
        assert offers[0].guard == eset("a")

    def test_idle_side_constrains_partner(self):
        # the live side may only move with events outside the stuck side's alphabet
        p = Par(Stop(AB), Prefix(eset("b"), Stop(B)))
        assert step(p) == ()
        q = Par(Stop(A), Prefix(eset("b"), Stop(B)))
        assert [o.guard for o in step(q)] == [eset("b")]

    def test_offers_have_distinct_guards(self):
        terms = [
            Par(Run(A), Run(B)),
            Par(Run(AB), Run(AB)),
            Par(Menu(((eset("a"), Stop(AB)), (eset("b"), Stop(AB)))), Run(AB)),
        ]
        for t in terms:
            guards = [o.guard for o in step(t)]
            assert len(guards) == len(set(guards))

    def test_unbound_var_raises(self):
        with pytest.raises(ValidationError):
            step(Var("X"))


class TestAfter:
    def test_empty_trace_is_identity(self):
        p = Prefix(eset("a"), Stop(A))
        assert after(p, EMPTY) == p

    def test_single_step(self):
        p = Prefix(eset("c"), Stop(Alphabet.of("c")))
        assert after(p, trace(["c"])) == Stop(Alphabet.of("c"))

    def test_not_a_trace_names_the_failing_element(self):
        with pytest.raises(NotATraceError) as err:
            after(Stop(A), trace(["a"]))
        assert "element 0" in str(err.value)

    def test_catenation_folds(self):
        p = Prefix(eset("a"), Prefix(eset("b"), Stop(AB)))
        s, t = trace(["a"]), trace(["b"])
        from ccp.traces import catenate

        assert after(p, catenate(s, t)) == after(after(p, s), t)


class TestSubstitute:
    def test_direct_hit(self):
        assert substitute(Var("X"), "X", Stop(A)) == Stop(A)

    def test_shadowed_binder_untouched(self):
        m = Mu("X", A, Prefix(eset("a"), Var("X")))
        assert substitute(m, "X", Stop(A)) == m

    def test_other_variables_untouched(self):
        assert substitute(Var("Y"), "X", Stop(A)) == Var("Y")


class TestCompositionOperators:
    def test_interact_requires_equal_alphabets(self):
        with pytest.raises(InterfaceError) as err:
            interact(Stop(A), Stop(B))
        assert "concur" in str(err.value)

    def test_interact_builds_par(self):
        assert interact(Stop(A), Run(A)) == Par(Stop(A), Run(A))

    def test_concur_accepts_any_alphabets(self):
        assert concur(Stop(A), Stop(B)) == Par(Stop(A), Stop(B))
