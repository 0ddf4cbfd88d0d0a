import random

import pytest
from hypothesis import given, settings, strategies as st

from bcplus import frontends as fe
from bcplus.action import ActionDescription, ConstantDecl, Form, Kind, Signature, action, default, regular
from bcplus.errors import DescriptionError
from bcplus.formula import BOTTOM, And, Atom, Or, Var, choice, neg
from bcplus.grounder import load
from bcplus.stable import stable_models
from bcplus.transition import states, transitions

from conftest import PROGRAMS
from generators import ATOMS, random_bc_description, random_cplus_description, random_formula

P, Q = Var("p"), Var("q")


def pf_states(f):
    r = fe.pf2bcp(f)
    return {r.to_state(x) for x in stable_models(f)}, set(states(r.description)), r


def test_pf2bcp_conjunction():
    expected, got, r = pf_states(And(P, Q))
    assert got == expected == {frozenset({Atom("p", "t"), Atom("q", "t")})}
    assert r.from_state(next(iter(got))) == {"p", "q"}


def test_pf2bcp_false_has_no_states():
    r = fe.pf2bcp(BOTTOM, signature={"p"})
    assert states(r.description) == []


def test_pf2bcp_choice_has_two_states():
    expected, got, _ = pf_states(choice(P))
    assert got == expected and len(got) == 2


def test_pf2bcp_disjunction():
    expected, got, r = pf_states(Or(P, Q))
    assert got == expected
    assert {r.from_state(s) for s in got} == {frozenset("p"), frozenset("q")}


def test_pf2bcp_rejects_foreign_signature():
    with pytest.raises(DescriptionError):
        fe.pf2bcp(P, signature={"q"})


def test_pf2bcp_shape():
    d = fe.pf2bcp(Or(P, Q)).description
    assert all(c.kind is Kind.STATIC and c.is_boolean for c in d.constants)
    assert len(d.laws) == 3
    assert d.laws[1].head == choice(Var(Atom("p", "f")))


def leaking_container(k=1, top=3):
    amount = ConstantDecl("amount", Kind.REGULAR, tuple(str(i) for i in range(top + 1)))
    return amount, k, top


def test_leaking_container_default_matches_bc_law():
    amount, k, top = leaking_container()
    sig = Signature([amount])
    bc_laws = []
    bcp_laws = []
    for x in range(top + 1 - k):
        a = Atom("amount", str(x))
        after = Atom("amount", str(x + k))
        bc_laws.append(fe.BcLaw("dynamic", a, (after,), (a,)))
        bcp_laws += default(sig, a, after=Var(after))
    bc = fe.BcDescription([amount], bc_laws)
    bcp = ActionDescription([amount], bcp_laws)
    assert set(transitions(bc)) == set(transitions(bcp)) == set(transitions(fe.bc2bcp(bc)))
    assert len(transitions(bcp)) == top + 1 - k


def test_empty_bc_description():
    bc = fe.BcDescription([regular("p")])
    assert states(bc) == states(fe.bc2bcp(bc))
    assert transitions(bc) == transitions(fe.bc2bcp(bc)) == []


def test_bc_requires_boolean_actions():
    with pytest.raises(DescriptionError):
        fe.BcDescription([regular("p"), action("a", ("x", "y", "z"))])


def test_bc_law_provisos():
    sig = Signature([regular("p"), action("a")])
    assert fe.validate_bc_law(fe.BcLaw("static", Atom("a", "t")), sig)
    assert fe.validate_bc_law(fe.BcLaw("dynamic", Atom("p", "t"), (Atom("a", "f"),)), sig)
    assert fe.validate_bc_law(fe.BcLaw("static", Atom("p", "t"), (), (Atom("a", "t"),)), sig)
    assert fe.validate_bc_law(fe.BcLaw("dynamic", Atom("p", "t"), (Atom("a", "t"),)), sig) == []
    with pytest.raises(DescriptionError):
        fe.BcLaw("sometimes", None)


def test_bc_abbreviations():
    sig = Signature([regular("p"), action("a")])
    p, a = Atom("p", "t"), Atom("a", "t")
    assert fe.bc_inertial(sig, "p")[0] == fe.BcLaw("dynamic", p, (p,), (p,))
    assert fe.bc_causes(a, p) == [fe.BcLaw("dynamic", p, (a,))]
    assert fe.bc_default(p) == [fe.BcLaw("static", p, (), (p,))]
    assert fe.bc_nonexecutable([a, p]) == [fe.BcLaw("dynamic", None, (a, p))]
    assert fe.bc_constraint(sig, [(True, p)]) == [fe.BcLaw("static", None, (Atom("p", "f"),))]


def test_pf_bc_has_exogeneity_disjunction():
    bc = fe.BcDescription([regular("p"), action("a")])
    th = fe.pf_bc(bc, 1)
    exog = [c for c in th.conjuncts if c.origin == "exog"]
    assert len(exog) == 1 and exog[0].constant == "a"
    assert "action values for a" in th.dump(bc.laws)


def test_switch_in_cplus_mode_has_five_transitions():
    program = load(PROGRAMS / "switch.bcp", mode="c+")
    start = frozenset({Atom("sw_status(s1)", "off"), Atom("sw_status(s2)", "on")})
    cp = program.description
    via_reference = [t for t in transitions(cp) if t.source == start]
    via_embedding = [t for t in transitions(program.bcplus()) if t.source == start]
    assert len(via_reference) == 5
    assert set(via_reference) == set(via_embedding)
    assert any(not any(a.value == "t" for a in t.event) and t.target != start for t in via_reference)


def test_switch_in_bcplus_mode_has_four():
    d = load(PROGRAMS / "switch.bcp").bcplus()
    start = frozenset({Atom("sw_status(s1)", "off"), Atom("sw_status(s2)", "on")})
    assert len([t for t in transitions(d) if t.source == start]) == 4


def test_cp2bcp_is_a_local_rewrite():
    cp = random_cplus_description(random.Random(7))
    out = fe.cp2bcp(cp)
    assert len(out.laws) == len(cp.laws)
    assert [law.form for law in out.laws] == [law.form for law in cp.laws]
    assert all(o.if_ == neg(neg(c.if_)) for o, c in zip(out.laws, cp.laws))


def test_nondefinite_cplus_is_rejected():
    sig = [regular("p"), regular("q")]
    from bcplus.action import CausalLaw
    cp = fe.CplusDescription(sig, [CausalLaw(Form.STATIC, choice(Var(Atom("p", "t"))))])
    assert not cp.is_definite
    with pytest.raises(DescriptionError):
        fe.cp2bcp(cp)
    with pytest.raises(DescriptionError):
        fe.pf_cplus(cp, 1)


def test_cplus_abbreviations():
    sig = Signature([regular("p"), action("a")])
    p = Atom("p", "t")
    law = fe.cplus_inertial(sig, "p")[0]
    assert (law.head, law.if_, law.after) == (Var(p), Var(p), Var(p))
    assert fe.cplus_exogenous(sig, "a")[0].if_ == Var(Atom("a", "t"))
    assert fe.cplus_default(sig, p)[0].if_ == Var(p)
    with pytest.raises(DescriptionError):
        fe.cplus_inertial(sig, "a")


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_pf2bcp_states_are_stable_models(seed):
    f = random_formula(random.Random(seed), ATOMS[:5])
    expected, got, _ = pf_states(f)
    assert got == expected


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_bc_embedding(seed):
    bc = random_bc_description(random.Random(seed))
    bcp = fe.bc2bcp(bc)
    assert states(bc) == states(bcp)
    assert transitions(bc) == transitions(bcp)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_cplus_embedding(seed):
    cp = random_cplus_description(random.Random(seed))
    bcp = fe.cp2bcp(cp)
    assert states(cp) == states(bcp)
    assert transitions(cp) == transitions(bcp)
