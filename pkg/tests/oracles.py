"""Brute-force reference implementations, written independently of the engine.

Everything here follows the textbook definitions literally: enumerate
every candidate, build the reduct by hand, and look for a smaller model by
trying every subset.  Only usable on tiny signatures.
"""

from __future__ import annotations

import itertools

from bcplus.action import Kind
from bcplus.formula import And, Falsity, Implies, Or, Var
from bcplus.transition import Transition
from bcplus.translate import TimedAtom


def holds(x, f) -> bool:
    t = type(f)
    if t is Falsity:
        return False
    if t is Var:
        return f.atom in x
    if t is And:
        return holds(x, f.left) and holds(x, f.right)
    if t is Or:
        return holds(x, f.left) or holds(x, f.right)
    return (not holds(x, f.antecedent)) or holds(x, f.consequent)


def reduct(f, x):
    if not holds(x, f):
        return Falsity()
    t = type(f)
    if t is Var:
        return f
    if t is And:
        return And(reduct(f.left, x), reduct(f.right, x))
    if t is Or:
        return Or(reduct(f.left, x), reduct(f.right, x))
    return Implies(reduct(f.antecedent, x), reduct(f.consequent, x))


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


def is_stable(x, f, intensional=None) -> bool:
    """``x`` satisfies ``f`` and no ``j <^p x`` satisfies the reduct."""
    x = frozenset(x)
    if not holds(x, f):
        return False
    red = reduct(f, x)
    p = x if intensional is None else x & frozenset(intensional)
    outside = x - p
    for j in subsets(p):
        if j < p and holds(outside | j, red):
            return False
    return True


def stable_models(f, universe, intensional=None) -> set[frozenset]:
    return {x for x in subsets(universe) if is_stable(x, f, intensional)}


def minimal_models(f, universe) -> set[frozenset]:
    ms = [x for x in subsets(universe) if holds(x, f)]
    return {x for x in ms if not any(y < x for y in ms)}


def valuations(constants):
    """Every assignment of one value to each constant, as a set of atoms."""
    constants = list(constants)
    for combo in itertools.product(*(c.atoms() for c in constants)):
        yield frozenset(combo)


def transitions(d) -> set[Transition]:
    """Check every candidate triple against the horizon-1 theory by brute force."""
    fluents = [c for c in d.constants if c.kind is not Kind.ACTION]
    actions = [c for c in d.constants if c.kind is Kind.ACTION]
    f = d.timed_theory(1).formula
    out = set()
    for s in valuations(fluents):
        for e in valuations(actions):
            for s2 in valuations(fluents):
                x = {TimedAtom(0, a) for a in s | e} | {TimedAtom(1, a) for a in s2}
                if is_stable(x, f):
                    out.add(Transition(s, e, s2))
    return out


def states(d) -> set[frozenset]:
    fluents = [c for c in d.constants if c.kind is not Kind.ACTION]
    f = d.timed_theory(0).formula
    return {s for s in valuations(fluents) if is_stable({TimedAtom(0, a) for a in s}, f)}


def chains(trans, m: int) -> list[tuple]:
    """All sequences of ``m`` transitions where each ends where the next starts."""
    by_source: dict = {}
    for t in trans:
        by_source.setdefault(t.source, []).append(t)
    out = [(t,) for t in trans]
    for _ in range(m - 1):
        out = [c + (t,) for c in out for t in by_source.get(c[-1].target, [])]
    return out
