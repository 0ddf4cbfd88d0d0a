import random

import pytest
from hypothesis import given, settings, strategies as st

from bcplus.action import ActionDescription, action, regular, statically_determined
from bcplus.formula import BOTTOM, And, Atom, Var, atoms, choice, conj, expand_cardinality, neg, models
from bcplus.translate import TimedAtom, rule, timed_signature, timestamp, translate, uec_timed

from generators import random_simple_description


def t(i, c, v="t"):
    return Var(TimedAtom(i, Atom(c, v)))


def test_timestamp():
    assert timestamp(Var(Atom("a", "t")), 0) == t(0, "a")
    assert timestamp(BOTTOM, 3) == BOTTOM
    p, q = Var(Atom("p", "t")), Var(Atom("q", "t"))
    assert timestamp(And(p, neg(q)), 2) == And(t(2, "p"), neg(t(2, "q")))


def test_sd_horizon_one(sd):
    parts = [c.formula for c in translate(sd, 1).conjuncts]
    expected = [
        choice(t(0, "a")), choice(t(0, "a", "f")),
        rule(t(0, "p"), choice(t(1, "p"))), rule(t(0, "p", "f"), choice(t(1, "p", "f"))),
        choice(t(0, "p")), choice(t(0, "p", "f")),
        rule(t(0, "a"), t(1, "p")),
    ]
    for f in expected:
        assert f in parts
    uec_p1 = rule(neg(expand_cardinality(1, [TimedAtom(1, Atom("p", "t")), TimedAtom(1, Atom("p", "f"))], 1)), BOTTOM)
    assert uec_p1 in parts
    assert len(parts) == 10


def test_conjunct_order(sd):
    origins = [c.origin for c in translate(sd, 2).conjuncts]
    assert origins == sorted(origins, key=["law", "init", "uec"].index)


def test_horizon_zero_has_no_actions(sd):
    th = translate(sd, 0)
    assert all(a.atom.constant != "a" for a in th.signature)
    assert all(not c.dynamic for c in th.conjuncts)
    assert all(a.step == 0 for a in atoms(th.formula))


def test_negative_horizon():
    with pytest.raises(ValueError):
        translate(ActionDescription([regular("p")]), -1)


def test_statically_determined_fluents_get_no_initial_choice():
    d = ActionDescription([statically_determined("nc"), regular("p")])
    inits = [c for c in translate(d, 1).conjuncts if c.origin == "init"]
    assert {c.constant for c in inits} == {"p"}


def test_uec_actions_stop_before_horizon():
    d = ActionDescription([regular("p"), action("a")])
    steps = {(c.constant, c.step) for c in uec_timed(d.constants, 2)}
    assert ("a", 2) not in steps and ("a", 1) in steps and ("p", 2) in steps


def test_uec_models_are_total_valuations():
    d = ActionDescription([regular("p"), action("a")])
    f = conj(c.formula for c in uec_timed(d.constants, 1))
    ms = models(f, timed_signature(d.constants, 1))
    assert len(ms) == 2 * 2 * 2
    assert all(len(m) == 3 for m in ms)


def test_signature_steps(sd):
    sig = translate(sd, 2).signature
    assert TimedAtom(2, Atom("p", "t")) in sig
    assert TimedAtom(2, Atom("a", "t")) not in sig
    assert len(sig) == 2 * 3 + 2 * 2


def test_dump_names_provenance(sd):
    text = translate(sd, 1).dump(sd.laws)
    assert text.startswith("% timed theory, horizon 1")
    assert "initial choice for p" in text
    assert "1:p=t <- 0:a=t.  % law 5, step 0" in text


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 3))
def test_prefix_property(seed, k):
    d = random_simple_description(random.Random(seed))
    big = translate(d, 3)
    small = translate(d, k)
    laws_big = [c for c in big.restricted_to(k) if c.origin == "law"]
    laws_small = [c for c in small.conjuncts if c.origin == "law"]
    assert sorted(map(repr, laws_big)) == sorted(map(repr, laws_small))
    assert atoms(big.formula) <= big.signature
