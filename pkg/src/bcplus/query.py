"""Labeled queries over the timed translation.

A query is a list of timed constraints ``i: F`` (or ``maxstep: F``) and an
optional fixed horizon.  Constraints are conjoined as ``not not (i:F)``,
so they filter stable models without supporting any atom.  Without a
fixed horizon, horizons ``0, 1, ..., cap`` are tried in turn and the first
one with a solution is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .action import Kind
from .errors import QueryError
from .formula import Formula, atoms, conj, conjuncts, neg
from .stable import DEFAULT_BUDGET, StableQuery, has_stable_model, stable_models
from .translate import timestamp

DEFAULT_HORIZON_CAP = 20

Step = Union[int, str]  # an integer or "maxstep"


@dataclass(frozen=True)
class QuerySpec:
    label: str | None
    maxstep: int | None = None
    constraints: tuple[tuple[Step, Formula], ...] = ()
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Solution:
    horizon: int
    states: tuple[frozenset, ...]  # s_0 .. s_m
    events: tuple[frozenset, ...]  # e_0 .. e_{m-1}
    model: frozenset = field(compare=False, repr=False)

    @classmethod
    def from_model(cls, model, m: int, kinds: dict[str, Kind]) -> "Solution":
        states = [set() for _ in range(m + 1)]
        events = [set() for _ in range(m)]
        for t in model:
            if kinds[t.atom.constant] is Kind.ACTION:
                events[t.step].add(t.atom)
            else:
                states[t.step].add(t.atom)
        return cls(m, tuple(map(frozenset, states)), tuple(map(frozenset, events)), frozenset(model))

    def triples(self):
        return [(self.states[i], self.events[i], self.states[i + 1]) for i in range(self.horizon)]


@dataclass(frozen=True)
class QueryResult:
    solutions: tuple[Solution, ...]
    horizon: int | None  # the horizon the solutions belong to
    exhausted_cap: int | None = None  # set when no horizon up to the cap had a solution

    @property
    def found(self) -> bool:
        return bool(self.solutions)

    def describe(self) -> str:
        if self.found:
            return f"{len(self.solutions)} solution(s) at horizon {self.horizon}"
        if self.exhausted_cap is not None:
            return f"no solution up to horizon {self.exhausted_cap}"
        return f"no solution at horizon {self.horizon}"


def solution_order(models) -> list:
    """Order models so that, of two, the one holding the greatest atom on which
    they differ comes first (atoms compared by step, then name)."""
    return sorted(models, key=lambda x: sorted((a.sort_key() for a in x), reverse=True), reverse=True)


def _constraint_formula(q: QuerySpec, m: int, signature: frozenset) -> Formula | None:
    """``not not (i:F)`` for every conjunct; None when a step does not fit horizon ``m``."""
    parts = []
    for step, f in q.constraints:
        i = m if step == "maxstep" else step
        if i < 0 or i > m:
            return None
        for g in conjuncts(f):
            timed = timestamp(g, i)
            if not atoms(timed) <= signature:
                return None
            parts.append(neg(neg(timed)))
    return conj(parts)


def _query_at(d, q: QuerySpec, m: int) -> StableQuery | None:
    theory = d.timed_theory(m)
    extra = _constraint_formula(q, m, theory.signature)
    if extra is None:
        return None
    return StableQuery(theory.formula & extra, theory.signature)


def solve(d, q: QuerySpec, limit: int = 0, horizon_cap: int = DEFAULT_HORIZON_CAP,
          budget: int = DEFAULT_BUDGET) -> QueryResult:
    """Solutions of ``q`` against ``d`` (0 for ``limit`` means all of them)."""
    if limit < 0:
        raise QueryError(f"solution limit must be nonnegative, got {limit}")
    kinds = {c.name: c.kind for c in d.constants}
    if q.maxstep is not None:
        if q.maxstep < 0:
            raise QueryError(f"maxstep must be nonnegative, got {q.maxstep}")
        sq = _query_at(d, q, q.maxstep)
        if sq is None:
            raise QueryError(f"query {q.label!r} refers to a step outside horizon {q.maxstep}")
        return _collect(sq, q.maxstep, kinds, limit, budget)
    if horizon_cap < 0:
        raise QueryError(f"horizon cap must be nonnegative, got {horizon_cap}")
    for m in range(horizon_cap + 1):
        sq = _query_at(d, q, m)
        if sq is not None and has_stable_model(sq, budget):
            return _collect(sq, m, kinds, limit, budget)
    return QueryResult((), None, exhausted_cap=horizon_cap)


def _collect(sq: StableQuery, m: int, kinds, limit: int, budget: int) -> QueryResult:
    models = solution_order(stable_models(sq, budget))
    if limit:
        models = models[:limit]
    return QueryResult(tuple(Solution.from_model(x, m, kinds) for x in models), m)

