import random

import pytest
from hypothesis import given, settings, strategies as st

from bcplus.action import ActionDescription, regular
from bcplus.grounder import load
from bcplus.formula import Atom
from bcplus.transition import (
    Transition, edge_list, is_state, is_transition, join_path, paths, split_path, states, to_dot,
    transition_graph, transitions,
)
from bcplus.translate import TimedAtom

import oracles
from conftest import PROGRAMS
from generators import random_simple_description

P, NP, A, NA = Atom("p", "t"), Atom("p", "f"), Atom("a", "t"), Atom("a", "f")


def fs(*atoms):
    return frozenset(atoms)


def test_sd_states(sd):
    assert set(states(sd)) == {fs(P), fs(NP)}
    assert set(states(sd)) == oracles.states(sd)


def test_sd_transitions(sd):
    ts = set(transitions(sd))
    assert Transition(fs(NP), fs(NA), fs(NP)) in ts
    assert Transition(fs(NP), fs(A), fs(P)) in ts
    assert ts == oracles.transitions(sd)
    assert len(ts) == 4


def test_sd_paths(sd):
    ps = paths(sd, 2)
    x = fs(TimedAtom(0, NP), TimedAtom(0, NA), TimedAtom(1, NP), TimedAtom(1, A), TimedAtom(2, P))
    assert x in ps
    assert len(ps) == 8
    assert set(ps) == {join_path(c) for c in oracles.chains(oracles.transitions(sd), 2)}


def test_paths_of_length_one_are_transitions(sd):
    assert {split_path(sd, x, 1)[0] for x in paths(sd, 1)} == set(transitions(sd))
    with pytest.raises(ValueError):
        paths(sd, 0)


def test_split_and_join_are_inverse(sd):
    for x in paths(sd, 3):
        assert join_path(split_path(sd, x, 3)) == x


def test_single_checks(sd):
    assert is_state(sd, fs(P))
    assert not is_state(sd, fs(P, NP))
    assert is_transition(sd, Transition(fs(P), fs(NA), fs(P)))
    assert not is_transition(sd, Transition(fs(P), fs(NA), fs(NP)))
    assert not is_transition(sd, Transition(fs(Atom("zz", "t")), fs(), fs()))


def test_empty_description_one_regular_fluent():
    d = ActionDescription([regular("p")])
    assert len(states(d)) == 2
    assert transitions(d) == []


def test_two_switches():
    d = load(PROGRAMS / "switch.bcp").bcplus()
    vs = states(d)
    assert len(vs) == 2
    for s in vs:
        values = sorted(a.value for a in s)
        assert values == ["off", "on"]
    start = fs(Atom("sw_status(s1)", "off"), Atom("sw_status(s2)", "on"))
    out = [t for t in transitions(d) if t.source == start]
    assert len(out) == 4
    events = {frozenset(a.constant for a in t.event if a.value == "t") for t in out}
    assert events == {frozenset(), frozenset({"flip(s1)"}), frozenset({"flip(s2)"}),
                      frozenset({"flip(s1)", "flip(s2)"})}


def test_graph_exports(sd):
    g = transition_graph(sd)
    assert len(g.vertices) == 2 and len(g.edges) == 4
    text = edge_list(g)
    assert text.count("-->") == 4
    assert "{~p} --[{a}]--> {p}" in text
    dot = to_dot(g)
    assert dot.startswith("digraph T {") and dot.rstrip().endswith("}")
    assert dot.count("->") == 4
    assert len(g.successors(fs(NP))) == 2


def test_reachability_filter():
    d = load(PROGRAMS / "switch.bcp").bcplus()
    start = fs(Atom("sw_status(s1)", "off"), Atom("sw_status(s2)", "on"))
    g = transition_graph(d, reachable_from=[start])
    assert len(g.vertices) == 2


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**9))
def test_transition_endpoints_are_states(seed):
    d = random_simple_description(random.Random(seed))
    vs = set(states(d))
    for t in transitions(d):
        assert t.source in vs and t.target in vs


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([2, 3]))
def test_paths_are_transition_chains(seed, m):
    d = random_simple_description(random.Random(seed))
    ts = transitions(d)
    assert set(paths(d, m)) == {join_path(c) for c in oracles.chains(ts, m)}


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_transitions_match_oracle(seed):
    d = random_simple_description(random.Random(seed))
    assert set(transitions(d)) == oracles.transitions(d)
    assert set(states(d)) == oracles.states(d)
