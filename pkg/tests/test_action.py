import random

import pytest
from hypothesis import given, settings, strategies as st

from bcplus.action import (
    ActionDescription, CausalLaw, ConstantDecl, Form, Kind, Signature, action, always, caused, causes,
    classify, constraint, default, exogenous, inertial, nonexecutable, regular, statically_determined,
    validate_law,
)
from bcplus.errors import DeclarationError, DescriptionError
from bcplus.formula import BOTTOM, TOP, And, Implies, Atom, Or, Var, choice, neg

from generators import random_simple_description

LOC = ConstantDecl("loc(b1)", Kind.REGULAR, ("b1", "b2", "table"))
SIG = Signature([regular("p"), statically_determined("nc"), action("a1"), action("a2"), LOC])


def v(c, val="t"):
    return Var(Atom(c, val))


def test_constant_declarations():
    assert regular("p").domain == ("t", "f")
    assert regular("p").is_boolean
    with pytest.raises(DeclarationError):
        ConstantDecl("c", Kind.REGULAR, ("x",))
    assert SIG.fluents == [SIG["p"], SIG["nc"], LOC]
    assert SIG.actions == [SIG["a1"], SIG["a2"]]


def test_static_law_with_action_in_head_is_rejected():
    law = CausalLaw(Form.STATIC, v("a1"))
    assert any("action constant in static head" in p for p in validate_law(law, SIG))


def test_fluent_dynamic_on_statically_determined_head_is_rejected():
    law = CausalLaw(Form.FLUENT_DYNAMIC, v("nc"), TOP, v("a1"))
    problems = validate_law(law, SIG)
    assert problems == ["statically determined constant in fluent dynamic head: nc"]


def test_action_formula_under_after_is_fine():
    law = always(SIG, neg(And(v("a1"), neg(v("a2")))))[0]
    assert validate_law(CausalLaw(Form.FLUENT_DYNAMIC, BOTTOM, TOP, And(v("a1"), neg(v("a2")))), SIG) == []
    assert validate_law(law, SIG) == []


def test_unknown_atoms_and_values():
    assert validate_law(CausalLaw(Form.STATIC, v("zz")), SIG) == ["unknown atom zz=t"]
    assert validate_law(CausalLaw(Form.STATIC, v("p", "x")), SIG) == ["x is not in the domain of p"]


def test_action_dynamic_head_needs_an_action():
    problems = validate_law(CausalLaw(Form.ACTION_DYNAMIC, v("p")), SIG)
    assert problems == ["fluent constant in action dynamic head: p"]


def test_after_only_for_fluent_dynamic():
    with pytest.raises(DescriptionError):
        CausalLaw(Form.STATIC, v("p"), TOP, v("p"))
    with pytest.raises(DescriptionError):
        CausalLaw(Form.FLUENT_DYNAMIC, v("p"))


def test_description_reports_every_problem():
    with pytest.raises(DescriptionError) as e:
        ActionDescription(SIG.constants, [CausalLaw(Form.STATIC, v("a1")), CausalLaw(Form.STATIC, v("zz"))])
    assert "law 1" in str(e.value) and "law 2" in str(e.value)


def test_inertial_expands_per_value():
    laws = inertial(SIG, "loc(b1)")
    assert len(laws) == 3
    for law, value in zip(laws, LOC.domain):
        a = Var(Atom("loc(b1)", value))
        assert law == CausalLaw(Form.FLUENT_DYNAMIC, choice(a), TOP, a)


def test_exogenous_expands_to_action_defaults():
    laws = exogenous(SIG, "a1")
    assert [law.form for law in laws] == [Form.ACTION_DYNAMIC] * 2
    assert laws[0].head == choice(v("a1"))


def test_kind_mismatch_in_abbreviations():
    with pytest.raises(DescriptionError):
        inertial(SIG, "nc")
    with pytest.raises(DescriptionError):
        exogenous(SIG, "p")
    with pytest.raises(DescriptionError):
        causes(SIG, v("p"), v("p"))


def test_default_with_after():
    amount = Signature([ConstantDecl("amount", Kind.REGULAR, ("0", "1", "2", "3"))])
    law = default(amount, Atom("amount", "1"), after=Var(Atom("amount", "3")))[0]
    assert law == CausalLaw(Form.FLUENT_DYNAMIC, choice(Var(Atom("amount", "1"))), TOP, Var(Atom("amount", "3")))


def test_other_abbreviations():
    assert constraint(SIG, v("p"))[0] == CausalLaw(Form.STATIC, BOTTOM, neg(v("p")))
    assert always(SIG, v("p"))[0] == CausalLaw(Form.FLUENT_DYNAMIC, BOTTOM, TOP, neg(v("p")))
    assert nonexecutable(SIG, v("a1"), v("p"))[0].after == And(v("a1"), v("p"))
    assert causes(SIG, v("a1"), v("p"))[0] == CausalLaw(Form.FLUENT_DYNAMIC, v("p"), TOP, v("a1"))
    assert caused(SIG, v("a1")).form is Form.ACTION_DYNAMIC
    assert caused(SIG, v("p")).form is Form.STATIC


def test_expansion_is_deterministic():
    assert inertial(SIG, "loc(b1)") == inertial(SIG, "loc(b1)")


def test_classify(sd):
    assert classify(sd).definite and classify(sd).simple
    disjunctive = ActionDescription(SIG.constants, [CausalLaw(Form.STATIC, Or(v("p"), v("p", "f")))])
    assert not classify(disjunctive).definite
    complex_body = ActionDescription(SIG.constants, [CausalLaw(Form.STATIC, v("p"), Implies(v("nc"), v("p")))])
    c = classify(complex_body)
    assert c.definite and not c.simple


def test_false_head_bodies_are_exempt_from_simplicity():
    d = ActionDescription(SIG.constants, [CausalLaw(Form.STATIC, BOTTOM, Or(v("nc"), v("p")))])
    assert classify(d).simple


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_generated_descriptions_are_simple(seed):
    d = random_simple_description(random.Random(seed))
    c = classify(d)
    assert c.simple and c.definite
    for law in d.laws:
        assert validate_law(law, d.signature) == []


def test_degenerate_aggregates_count_as_simple():
    d = ActionDescription(SIG.constants, [CausalLaw(Form.STATIC, v("p"), And(neg(TOP), v("nc")))])
    assert classify(d).simple
