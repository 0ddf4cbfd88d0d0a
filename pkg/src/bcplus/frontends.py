"""Embeddings of other formalisms into BC+, plus their reference translations.

* ``pf2bcp`` turns a propositional formula into a BC+ description whose
  states are its stable models.
* ``bc2bcp`` turns a BC description into BC+; ``pf_bc`` is BC's own
  timed translation, kept as a differential oracle.
* ``cp2bcp`` turns a definite C+ description into BC+; ``pf_cplus`` is
  the matching reference translation.

``BcDescription`` and ``CplusDescription`` expose ``constants`` and
``timed_theory(m)`` so the transition-system functions accept them as is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .action import (
    BOOLEAN,
    ActionDescription,
    CausalLaw,
    ConstantDecl,
    Form,
    Kind,
    Signature,
    caused,
    statically_determined,
    validate_law,
)
from .errors import DescriptionError
from .formula import BOTTOM, TOP, Atom, Falsity, Formula, Var, atoms, choice, conj, neg, substitute
from .translate import Conjunct, TimedAtom, TimedTheory, assemble, rule, timestamp


def _nn(f: Formula) -> Formula:
    return neg(neg(f))


def _and(*parts: Formula) -> Formula:
    return conj(p for p in parts if p != TOP)


# --- propositional formulas ---------------------------------------------------


@dataclass(frozen=True)
class Pf2BcpResult:
    """The description built by ``pf2bcp`` and the atom/constant correspondence."""

    description: ActionDescription
    constant_of: dict  # original atom -> constant name

    def to_state(self, interpretation) -> frozenset:
        """``I`` (a set of true atoms) to ``I'`` (one Boolean value per constant)."""
        true = set(interpretation)
        return frozenset(Atom(name, "t" if a in true else "f") for a, name in self.constant_of.items())

    def from_state(self, state) -> frozenset:
        atom_of = {name: a for a, name in self.constant_of.items()}
        return frozenset(atom_of[x.constant] for x in state if x.value == "t")


def _constant_name(a: Hashable) -> str:
    return a if isinstance(a, str) else str(a)


def pf2bcp(f: Formula, signature: Iterable | None = None) -> Pf2BcpResult:
    """Every atom becomes a statically determined Boolean fluent; add ``caused F``
    and ``default c=f`` for every constant."""
    universe = set(atoms(f)) if signature is None else set(signature)
    if not atoms(f) <= universe:
        raise DescriptionError(["formula mentions atoms outside the given signature"])
    constant_of = {}
    for a in sorted(universe, key=_constant_name):
        name = _constant_name(a)
        if name in constant_of.values():
            raise DescriptionError([f"two atoms share the constant name {name}"])
        constant_of[a] = name
    body = substitute(f, lambda a: Atom(constant_of[a], "t"))
    constants = [statically_determined(n) for n in constant_of.values()]
    laws = [CausalLaw(Form.STATIC, body, TOP, None, "caused F")]
    laws += [CausalLaw(Form.STATIC, choice(Var(Atom(n, "f"))), TOP, None, f"default ~{n}")
             for n in constant_of.values()]
    return Pf2BcpResult(ActionDescription(constants, laws), constant_of)


# --- language BC ------------------------------------------------------------------


@dataclass(frozen=True)
class BcLaw:
    """``A0 if A1..Am ifcons Am+1..An`` (static) or ``A0 after A1..Am ifcons ...`` (dynamic).

    A ``None`` head stands for ``false``; plain BC has no such laws, but
    constraints and nonexecutability are written with it.
    """

    form: str  # "static" or "dynamic"
    head: Atom | None
    if_atoms: tuple[Atom, ...] = ()
    ifcons_atoms: tuple[Atom, ...] = ()
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.form not in ("static", "dynamic"):
            raise DescriptionError([f"BC law form must be static or dynamic, got {self.form}"])
        object.__setattr__(self, "if_atoms", tuple(self.if_atoms))
        object.__setattr__(self, "ifcons_atoms", tuple(self.ifcons_atoms))

    def __str__(self) -> str:
        text = "false" if self.head is None else str(self.head)
        if self.if_atoms or self.form == "dynamic":
            word = "after" if self.form == "dynamic" else "if"
            text += f" {word} " + (", ".join(map(str, self.if_atoms)) or "true")
        if self.ifcons_atoms:
            text += " ifcons " + ", ".join(map(str, self.ifcons_atoms))
        return text


def validate_bc_law(law: BcLaw, sig: Signature) -> list[str]:
    problems = []
    for a in (law.head, *law.if_atoms, *law.ifcons_atoms):
        if a is None:
            continue
        if a.constant not in sig:
            problems.append(f"unknown atom {a}")
        elif a.value not in sig[a.constant].domain:
            problems.append(f"{a.value} is not in the domain of {a.constant}")
    if problems:
        return problems

    def kind(a):
        return sig[a.constant].kind

    if law.head is not None:
        if law.form == "static" and not kind(law.head).is_fluent:
            problems.append(f"static law head is not a fluent atom: {law.head}")
        if law.form == "dynamic" and kind(law.head) is not Kind.REGULAR:
            problems.append(f"dynamic law head is not a regular fluent atom: {law.head}")
    for a in law.if_atoms:
        if kind(a) is Kind.ACTION:
            if law.form == "static":
                problems.append(f"action atom in static law body: {a}")
            elif a.value != "t":
                problems.append(f"action atom in dynamic law body must be a=t: {a}")
    for a in law.ifcons_atoms:
        if kind(a) is Kind.ACTION:
            problems.append(f"action atom in ifcons part: {a}")
    return problems


class BcDescription:
    """A BC signature (Boolean actions only) and a list of BC laws."""

    def __init__(self, constants: Iterable[ConstantDecl], laws: Iterable[BcLaw] = ()):
        self.signature = Signature(constants)
        self.laws = tuple(laws)
        problems = [f"action constant {c.name} is not Boolean"
                    for c in self.signature.actions if tuple(c.domain) != BOOLEAN]
        for i, law in enumerate(self.laws):
            problems += [f"law {i + 1}: {p}" for p in validate_bc_law(law, self.signature)]
        if problems:
            raise DescriptionError(problems)

    @property
    def constants(self) -> tuple[ConstantDecl, ...]:
        return self.signature.constants

    def timed_theory(self, m: int) -> TimedTheory:
        return pf_bc(self, m)


def _bc_head(law: BcLaw) -> Formula:
    return BOTTOM if law.head is None else Var(law.head)


def _bc_if(law: BcLaw) -> Formula:
    return conj(Var(a) for a in law.if_atoms)


def _bc_ifcons(law: BcLaw) -> Formula:
    return conj(_nn(Var(a)) for a in law.ifcons_atoms)


def pf_bc(d: BcDescription, m: int) -> TimedTheory:
    """BC's own timed translation, with ``i:(a=t | a=f)`` for every action."""
    if m < 0:
        raise ValueError(f"horizon must be nonnegative, got {m}")
    parts: list[Conjunct] = []
    for k, law in enumerate(d.laws):
        head = _bc_head(law)
        if law.form == "static":
            body = _and(_bc_if(law), _bc_ifcons(law))
            for i in range(m + 1):
                parts.append(Conjunct(rule(timestamp(body, i), timestamp(head, i)), "law", i, law=k))
        else:
            for i in range(m):
                body = _and(timestamp(_bc_if(law), i), timestamp(_bc_ifcons(law), i + 1))
                parts.append(Conjunct(rule(body, timestamp(head, i + 1)), "law", i, law=k, dynamic=True))
    for i in range(m):
        for c in d.signature.actions:
            f = Var(TimedAtom(i, c.atom("t"))) | Var(TimedAtom(i, c.atom("f")))
            parts.append(Conjunct(f, "exog", i, constant=c.name, dynamic=True))
    return assemble(d.constants, parts, m)


def bc2bcp(d: BcDescription) -> ActionDescription:
    laws = []
    for law in d.laws:
        if law.form == "static":
            body = _and(_bc_if(law), _bc_ifcons(law))
            laws.append(CausalLaw(Form.STATIC, _bc_head(law), body, None, law.source))
        else:
            laws.append(CausalLaw(Form.FLUENT_DYNAMIC, _bc_head(law), _bc_ifcons(law), _bc_if(law),
                                  law.source))
    for c in d.signature.actions:
        laws += [CausalLaw(Form.ACTION_DYNAMIC, choice(Var(a)), TOP, None, f"exogenous {c.name}")
                 for a in c.atoms()]
    return ActionDescription(d.constants, laws)


def bc_default(head: Atom, after: Sequence[Atom] | None = None, if_: Sequence[Atom] = (),
               ifcons: Sequence[Atom] = (), source: str | None = None) -> list[BcLaw]:
    """``default A0 [if/after ...]`` is ``A0 [if/after ...] ifcons A0``."""
    if after is not None:
        return [BcLaw("dynamic", head, tuple(after), (*ifcons, head), source)]
    return [BcLaw("static", head, tuple(if_), (*ifcons, head), source)]


def bc_inertial(sig: Signature, constant: str, source: str | None = None) -> list[BcLaw]:
    c = sig[constant]
    if c.kind is not Kind.REGULAR:
        raise DescriptionError([f"inertial needs a regular fluent constant, {constant} is a {c.kind.value}"])
    return [BcLaw("dynamic", a, (a,), (a,), source) for a in c.atoms()]


def bc_causes(action: Atom, head: Atom, if_: Sequence[Atom] = (), source: str | None = None) -> list[BcLaw]:
    """``a causes A0 if A1..Am`` is ``A0 after a=t, A1..Am``."""
    return [BcLaw("dynamic", head, (action, *if_), (), source)]


def _negated_literal(sig: Signature, a: Atom) -> list[Atom]:
    """Atoms whose truth makes ``a`` false under uniqueness and existence."""
    return [Atom(a.constant, w) for w in sig[a.constant].domain if w != a.value]


def bc_constraint(sig: Signature, literals: Sequence[tuple[bool, Atom]], after: Sequence[Atom] | None = None,
                  source: str | None = None) -> list[BcLaw]:
    """``constraint L1 & ... & Ln`` for literals ``(positive, atom)``.

    One ``false if ...`` law per way of falsifying a literal: a positive
    ``c=v`` fails when ``c=w`` holds for some ``w != v``, a negated one
    when ``c=v`` holds.  With ``after`` (``always``) the laws are dynamic
    and the literals refer to the start state.
    """
    laws = []
    for positive, a in literals:
        witnesses = _negated_literal(sig, a) if positive else [a]
        for w in witnesses:
            if after is None:
                laws.append(BcLaw("static", None, (w,), (), source))
            else:
                laws.append(BcLaw("dynamic", None, (*after, w), (), source))
    return laws


def bc_nonexecutable(atoms_: Sequence[Atom], source: str | None = None) -> list[BcLaw]:
    """``nonexecutable a if A1..Am`` is ``false after a=t, A1..Am``."""
    return [BcLaw("dynamic", None, tuple(atoms_), (), source)]


# --- definite C+ --------------------------------------------------------------------


def is_definite_cplus_head(head: Formula) -> bool:
    return type(head) is Falsity or type(head) is Var


class CplusDescription:
    """A C+ description: same law shapes and provisos as BC+."""

    def __init__(self, constants: Iterable[ConstantDecl], laws: Iterable[CausalLaw] = ()):
        self.signature = Signature(constants)
        self.laws = tuple(laws)
        problems = []
        for i, law in enumerate(self.laws):
            problems += [f"law {i + 1}: {p}" for p in validate_law(law, self.signature)]
        if problems:
            raise DescriptionError(problems)

    @property
    def constants(self) -> tuple[ConstantDecl, ...]:
        return self.signature.constants

    @property
    def is_definite(self) -> bool:
        return all(is_definite_cplus_head(law.head) for law in self.laws)

    def require_definite(self) -> None:
        bad = [f"law {i + 1}: head {law.head} is neither false nor an atom"
               for i, law in enumerate(self.laws) if not is_definite_cplus_head(law.head)]
        if bad:
            raise DescriptionError(["C+ description is not definite"] + bad)

    def timed_theory(self, m: int) -> TimedTheory:
        return pf_cplus(self, m)


def pf_cplus(d: CplusDescription, m: int) -> TimedTheory:
    """Reference translation: every ``if`` part sits under double negation."""
    if m < 0:
        raise ValueError(f"horizon must be nonnegative, got {m}")
    d.require_definite()
    parts: list[Conjunct] = []
    for k, law in enumerate(d.laws):
        if law.form is Form.STATIC:
            for i in range(m + 1):
                f = rule(_nn(timestamp(law.if_, i)), timestamp(law.head, i))
                parts.append(Conjunct(f, "law", i, law=k))
        elif law.form is Form.ACTION_DYNAMIC:
            for i in range(m):
                f = rule(_nn(timestamp(law.if_, i)), timestamp(law.head, i))
                parts.append(Conjunct(f, "law", i, law=k, dynamic=True))
        else:
            for i in range(m):
                body = _nn(timestamp(law.if_, i + 1)) & timestamp(law.after, i)
                f = rule(body, timestamp(law.head, i + 1))
                parts.append(Conjunct(f, "law", i, law=k, dynamic=True))
    return assemble(d.constants, parts, m)


def cp2bcp(d: CplusDescription) -> ActionDescription:
    """``caused F if G [after H]`` becomes ``caused F if not not G [after H]``."""
    d.require_definite()
    laws = [CausalLaw(law.form, law.head, _nn(law.if_), law.after, law.source) for law in d.laws]
    return ActionDescription(d.constants, laws)


def cplus_inertial(sig: Signature, constant: str, source: str | None = None) -> list[CausalLaw]:
    """``caused c=v if c=v after c=v`` for every value."""
    c = sig[constant]
    if c.kind is not Kind.REGULAR:
        raise DescriptionError([f"inertial needs a regular fluent constant, {constant} is a {c.kind.value}"])
    return [CausalLaw(Form.FLUENT_DYNAMIC, Var(a), Var(a), Var(a), source) for a in c.atoms()]


def cplus_exogenous(sig: Signature, constant: str, source: str | None = None) -> list[CausalLaw]:
    """``caused c=v if c=v`` for every value of an action constant."""
    c = sig[constant]
    if c.kind is not Kind.ACTION:
        raise DescriptionError([f"exogenous needs an action constant, {constant} is a {c.kind.value}"])
    return [CausalLaw(Form.ACTION_DYNAMIC, Var(a), Var(a), None, source) for a in c.atoms()]


def cplus_default(sig: Signature, atom: Atom, if_: Formula = TOP, after: Formula | None = None,
                  source: str | None = None) -> list[CausalLaw]:
    """``default c=v if G [after H]`` is ``caused c=v if c=v & G [after H]``."""
    body = Var(atom) if if_ == TOP else Var(atom) & if_
    return [caused(sig, Var(atom), body, after, source)]
