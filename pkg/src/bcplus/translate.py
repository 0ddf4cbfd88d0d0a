"""The timed propositional theory of an action description.

For a horizon ``m`` the theory has atoms ``i:c=v`` for fluent constants at
steps ``0..m`` and for action constants at steps ``0..m-1``.  Conjuncts
come in a fixed order: laws in declaration order (steps ascending within a
law), then the initial choices for regular fluents, then the
uniqueness/existence constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .action import ActionDescription, ConstantDecl, Form, Kind
from .formula import (
    BOTTOM,
    TOP,
    Atom,
    Formula,
    Implies,
    Var,
    choice,
    conj,
    expand_cardinality,
    natural_key,
    neg,
    substitute,
    to_text,
)


@dataclass(frozen=True, slots=True, order=True)
class TimedAtom:
    step: int
    atom: Atom

    def __str__(self) -> str:
        return f"{self.step}:{self.atom}"

    def sort_key(self) -> tuple:
        return (self.step, natural_key(self.atom))


def timestamp(f: Formula, step: int) -> Formula:
    """Prefix every atom of ``f`` with ``step:``."""
    return substitute(f, lambda a: TimedAtom(step, a))


def rule(body: Formula, head: Formula) -> Formula:
    """``head <- body``, stored as ``body -> head``; a ``true`` body is left out."""
    return head if body == TOP else Implies(body, head)


@dataclass(frozen=True)
class Conjunct:
    formula: Formula
    origin: str  # "law", "exog", "init" or "uec"
    step: int
    law: int | None = None  # index into the description's laws
    constant: str | None = None
    dynamic: bool = False  # spans steps step and step+1, or an action atom at step


@dataclass(frozen=True)
class TimedTheory:
    horizon: int
    conjuncts: tuple[Conjunct, ...]
    signature: frozenset

    @property
    def formula(self) -> Formula:
        return conj(c.formula for c in self.conjuncts)

    def restricted_to(self, k: int) -> list[Conjunct]:
        """Conjuncts whose steps fit within horizon ``k``."""
        return [c for c in self.conjuncts if (c.step < k if c.dynamic else c.step <= k)]

    def dump(self, laws=None) -> str:
        lines = [f"% timed theory, horizon {self.horizon}"]
        for c in self.conjuncts:
            if c.origin == "law":
                tag = f"law {c.law + 1}"
                if laws is not None and laws[c.law].source:
                    tag += f" ({laws[c.law].source})"
            elif c.origin == "init":
                tag = f"initial choice for {c.constant}"
            elif c.origin == "exog":
                tag = f"action values for {c.constant}"
            else:
                tag = f"uniqueness/existence for {c.constant}"
            lines.append(f"{_rule_text(c.formula)}.  % {tag}, step {c.step}")
        return "\n".join(lines) + "\n"


def _rule_text(f: Formula) -> str:
    if type(f) is Implies and f.consequent != BOTTOM:
        return f"{to_text(f.consequent)} <- {to_text(f.antecedent)}"
    if type(f) is Implies and f.antecedent != BOTTOM:
        return f"false <- {to_text(f.antecedent)}"
    return to_text(f)


def timed_signature(constants: Iterable[ConstantDecl], m: int) -> frozenset:
    out = set()
    for c in constants:
        last = m - 1 if c.kind is Kind.ACTION else m
        for i in range(last + 1):
            out.update(TimedAtom(i, a) for a in c.atoms())
    return frozenset(out)


def uec_timed_constant(c: ConstantDecl, step: int) -> Formula:
    """``false <- not (1 <= {i:c=v1, ..., i:c=vn} <= 1)``."""
    values = [TimedAtom(step, a) for a in c.atoms()]
    return rule(neg(expand_cardinality(1, values, 1)), BOTTOM)


def uec_timed(constants: Iterable[ConstantDecl], m: int) -> list[Conjunct]:
    out = []
    constants = list(constants)
    for i in range(m + 1):
        for c in constants:
            if c.kind is Kind.ACTION and i >= m:
                continue
            out.append(Conjunct(uec_timed_constant(c, i), "uec", i, constant=c.name,
                                dynamic=c.kind is Kind.ACTION))
    return out


def initial_choices(constants: Iterable[ConstantDecl]) -> list[Conjunct]:
    return [
        Conjunct(choice(Var(TimedAtom(0, a))), "init", 0, constant=c.name)
        for c in constants
        if c.kind is Kind.REGULAR
        for a in c.atoms()
    ]


def assemble(constants, law_parts: list[Conjunct], m: int) -> TimedTheory:
    """Add the initial choices and uniqueness constraints to translated laws."""
    constants = list(constants)
    parts = law_parts + initial_choices(constants) + uec_timed(constants, m)
    return TimedTheory(m, tuple(parts), timed_signature(constants, m))


def translate(d: ActionDescription, m: int) -> TimedTheory:
    if m < 0:
        raise ValueError(f"horizon must be nonnegative, got {m}")
    parts: list[Conjunct] = []
    for k, law in enumerate(d.laws):
        if law.form is Form.STATIC:
            for i in range(m + 1):
                f = rule(timestamp(law.if_, i), timestamp(law.head, i))
                parts.append(Conjunct(f, "law", i, law=k))
        elif law.form is Form.ACTION_DYNAMIC:
            for i in range(m):
                f = rule(timestamp(law.if_, i), timestamp(law.head, i))
                parts.append(Conjunct(f, "law", i, law=k, dynamic=True))
        else:
            for i in range(m):
                body = timestamp(law.after, i)
                if law.if_ != TOP:
                    body = timestamp(law.if_, i + 1) & body
                f = rule(body, timestamp(law.head, i + 1))
                parts.append(Conjunct(f, "law", i, law=k, dynamic=True))
    return assemble(d.constants, parts, m)
