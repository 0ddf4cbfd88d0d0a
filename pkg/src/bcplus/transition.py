"""States, transitions and paths of the transition system of a description.

Everything here is read off stable models of the timed theory: states
from horizon 0, transitions from horizon 1, paths from horizon ``m``.
Any object with ``constants`` and ``timed_theory(m)`` works as a
description, so the reference translations of BC and C+ can be fed in
directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .action import Kind
from .formula import Atom, natural_key
from .stable import DEFAULT_BUDGET, StableQuery, canonical_key, is_stable_model, stable_models
from .translate import TimedAtom


class Transition(NamedTuple):
    source: frozenset
    event: frozenset
    target: frozenset


def state_key(s) -> tuple:
    return canonical_key(s)


def transition_key(t: Transition) -> tuple:
    return (canonical_key(t.source), canonical_key(t.event), canonical_key(t.target))


def _kinds(d) -> dict[str, Kind]:
    return {c.name: c.kind for c in d.constants}


def _query(d, m: int) -> StableQuery:
    theory = d.timed_theory(m)
    return StableQuery(theory.formula, theory.signature)


def at_step(model, step: int, kinds: dict[str, Kind], actions: bool) -> frozenset:
    return frozenset(
        t.atom for t in model
        if t.step == step and (kinds[t.atom.constant] is Kind.ACTION) == actions
    )


def timed(step: int, atoms) -> set:
    return {TimedAtom(step, a) for a in atoms}


def states(d, budget: int = DEFAULT_BUDGET) -> list[frozenset]:
    """Every ``s`` such that ``0:s`` is a stable model of the horizon-0 theory."""
    models = stable_models(_query(d, 0), budget)
    return sorted((frozenset(t.atom for t in x) for x in models), key=state_key)


def transitions(d, budget: int = DEFAULT_BUDGET) -> list[Transition]:
    kinds = _kinds(d)
    out = []
    for x in stable_models(_query(d, 1), budget):
        out.append(Transition(at_step(x, 0, kinds, False), at_step(x, 0, kinds, True),
                              at_step(x, 1, kinds, False)))
    return sorted(out, key=transition_key)


def is_transition(d, t: Transition) -> bool:
    """Check one triple against the horizon-1 theory."""
    x = timed(0, t.source) | timed(0, t.event) | timed(1, t.target)
    q = _query(d, 1)
    if not x <= q.atoms:
        return False
    return is_stable_model(x, q)


def is_state(d, s) -> bool:
    q = _query(d, 0)
    x = timed(0, s)
    return x <= q.atoms and is_stable_model(x, q)


def paths(d, m: int, budget: int = DEFAULT_BUDGET) -> list[frozenset]:
    """Stable models of the horizon-``m`` theory."""
    if m < 1:
        raise ValueError(f"paths need a horizon of at least 1, got {m}")
    return stable_models(_query(d, m), budget)


def split_path(d, x, m: int) -> list[Transition]:
    """Cut a horizon-``m`` interpretation into its ``m`` consecutive triples."""
    kinds = _kinds(d)
    return [
        Transition(at_step(x, i, kinds, False), at_step(x, i, kinds, True),
                   at_step(x, i + 1, kinds, False))
        for i in range(m)
    ]


def join_path(chain) -> frozenset:
    """Inverse of ``split_path`` for a chain of composable transitions."""
    out = set()
    for i, t in enumerate(chain):
        out |= timed(i, t.source) | timed(i, t.event) | timed(i + 1, t.target)
    return frozenset(out)


@dataclass(frozen=True)
class TransitionGraph:
    vertices: tuple[frozenset, ...]
    edges: tuple[Transition, ...]

    def successors(self, s) -> list[Transition]:
        return [t for t in self.edges if t.source == s]


def transition_graph(d, budget: int = DEFAULT_BUDGET, reachable_from=None) -> TransitionGraph:
    """The labeled graph of states and transitions.

    With ``reachable_from`` (a collection of states) only vertices and
    edges reachable from them are kept.
    """
    vs = states(d, budget)
    es = transitions(d, budget)
    if reachable_from is not None:
        seen = set(map(frozenset, reachable_from))
        frontier = list(seen)
        while frontier:
            s = frontier.pop()
            for t in es:
                if t.source == s and t.target not in seen:
                    seen.add(t.target)
                    frontier.append(t.target)
        vs = [s for s in vs if s in seen]
        es = [t for t in es if t.source in seen]
    return TransitionGraph(tuple(vs), tuple(es))


def atom_text(a: Atom) -> str:
    if a.value == "t":
        return a.constant
    if a.value == "f":
        return "~" + a.constant
    return str(a)


def set_text(atoms) -> str:
    return "{" + ", ".join(atom_text(a) for a in sorted(atoms, key=natural_key)) + "}"


def edge_list(g: TransitionGraph) -> str:
    """One ``state --[event]--> state`` line per edge, isolated states on their own line."""
    lines = []
    used = set()
    for t in g.edges:
        lines.append(f"{set_text(t.source)} --[{set_text(t.event)}]--> {set_text(t.target)}")
        used.update((t.source, t.target))
    lines += [set_text(s) for s in g.vertices if s not in used]
    return "\n".join(lines) + "\n"


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: TransitionGraph, name: str = "T") -> str:
    """Graphviz text: one line per vertex, one line per edge."""
    ids = {s: f"s{i}" for i, s in enumerate(g.vertices)}
    lines = [f"digraph {name} {{"]
    for s, ident in ids.items():
        lines.append(f"  {ident} [label={_dot_quote(set_text(s))}];")
    for t in g.edges:
        lines.append(f"  {ids[t.source]} -> {ids[t.target]} [label={_dot_quote(set_text(t.event))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
