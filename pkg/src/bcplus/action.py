"""BC+ signatures, causal laws and their abbreviations."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DeclarationError, DescriptionError
from .formula import (
    BOTTOM,
    TOP,
    And,
    Atom,
    Falsity,
    Formula,
    Implies,
    Or,
    Var,
    atoms,
    choice,
    choice_atom,
    conjuncts,
    expand_cardinality,
    is_negation,
    neg,
)

BOOLEAN = ("t", "f")


class Kind(enum.Enum):
    ACTION = "action"
    REGULAR = "regular fluent"
    STATIC = "statically determined fluent"

    @property
    def is_fluent(self) -> bool:
        return self is not Kind.ACTION


class Form(enum.Enum):
    STATIC = "static"
    ACTION_DYNAMIC = "action dynamic"
    FLUENT_DYNAMIC = "fluent dynamic"


@dataclass(frozen=True)
class ConstantDecl:
    name: str
    kind: Kind
    domain: tuple = BOOLEAN

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        if len(self.domain) < 2:
            raise DeclarationError(f"constant {self.name} needs a domain of at least 2 values")
        if len(set(self.domain)) != len(self.domain):
            raise DeclarationError(f"constant {self.name} has repeated domain values")

    @property
    def is_boolean(self) -> bool:
        return set(self.domain) == set(BOOLEAN)

    def atom(self, value) -> Atom:
        value = str(value)
        if value not in self.domain:
            raise DeclarationError(f"{value} is not in the domain of {self.name}")
        return Atom(self.name, value)

    def atoms(self) -> list[Atom]:
        return [Atom(self.name, v) for v in self.domain]


def regular(name: str, domain: Sequence = BOOLEAN) -> ConstantDecl:
    return ConstantDecl(name, Kind.REGULAR, tuple(map(str, domain)))


def statically_determined(name: str, domain: Sequence = BOOLEAN) -> ConstantDecl:
    return ConstantDecl(name, Kind.STATIC, tuple(map(str, domain)))


def action(name: str, domain: Sequence = BOOLEAN) -> ConstantDecl:
    return ConstantDecl(name, Kind.ACTION, tuple(map(str, domain)))


class Signature:
    """Constants indexed by name."""

    def __init__(self, constants: Iterable[ConstantDecl]):
        self.constants: tuple[ConstantDecl, ...] = tuple(constants)
        self._by_name: dict[str, ConstantDecl] = {}
        for c in self.constants:
            if c.name in self._by_name:
                raise DeclarationError(f"constant {c.name} declared twice")
            self._by_name[c.name] = c

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> ConstantDecl:
        return self._by_name[name]

    def __iter__(self):
        return iter(self.constants)

    def get(self, name: str):
        return self._by_name.get(name)

    def of_kind(self, *kinds: Kind) -> list[ConstantDecl]:
        return [c for c in self.constants if c.kind in kinds]

    @property
    def fluents(self) -> list[ConstantDecl]:
        return self.of_kind(Kind.REGULAR, Kind.STATIC)

    @property
    def actions(self) -> list[ConstantDecl]:
        return self.of_kind(Kind.ACTION)

    def domains(self, constants: Iterable[ConstantDecl] | None = None) -> dict[str, tuple]:
        return {c.name: c.domain for c in (self.constants if constants is None else constants)}

    def atoms(self) -> set[Atom]:
        return {a for c in self.constants for a in c.atoms()}

    def fluent_atoms(self) -> set[Atom]:
        return {a for c in self.fluents for a in c.atoms()}

    def action_atoms(self) -> set[Atom]:
        return {a for c in self.actions for a in c.atoms()}

    def kind_of(self, atom: Atom) -> Kind:
        return self._by_name[atom.constant].kind

    def constants_in(self, f: Formula) -> set[str]:
        return {a.constant for a in atoms(f)}


@dataclass(frozen=True)
class CausalLaw:
    """``caused head if if_`` or, for fluent dynamic laws, ``caused head if if_ after after``.

    ``source`` keeps the surface form the law came from, for diagnostics.
    """

    form: Form
    head: Formula
    if_: Formula = TOP
    after: Formula | None = None
    source: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if (self.after is None) == (self.form is Form.FLUENT_DYNAMIC):
            raise DescriptionError(["'after' part must be present exactly for fluent dynamic laws"])

    def __str__(self) -> str:
        text = f"caused {self.head}"
        if self.if_ != TOP:
            text += f" if {self.if_}"
        if self.after is not None:
            text += f" after {self.after}"
        return text


def _unknown(sig: Signature, f: Formula) -> list[str]:
    out = []
    for a in atoms(f):
        if not isinstance(a, Atom) or a.constant not in sig:
            out.append(f"unknown atom {a}")
        elif a.value not in sig[a.constant].domain:
            out.append(f"{a.value} is not in the domain of {a.constant}")
    return out


def is_fluent_formula(sig: Signature, f: Formula) -> bool:
    return all(sig[c].kind.is_fluent for c in sig.constants_in(f))


def is_action_formula(sig: Signature, f: Formula) -> bool:
    kinds = [sig[c].kind for c in sig.constants_in(f)]
    return bool(kinds) and all(k is Kind.ACTION for k in kinds)


def validate_law(law: CausalLaw, sig: Signature) -> list[str]:
    """Diagnostics for every violated proviso; empty when the law is well formed."""
    problems = []
    for part in (law.head, law.if_, law.after):
        if part is not None:
            problems += _unknown(sig, part)
    if problems:
        return problems

    def actions_in(f):
        return sorted(c for c in sig.constants_in(f) if sig[c].kind is Kind.ACTION)

    if law.form is Form.STATIC:
        for c in actions_in(law.head):
            problems.append(f"action constant in static head: {c}")
        for c in actions_in(law.if_):
            problems.append(f"action constant in static body: {c}")
    elif law.form is Form.ACTION_DYNAMIC:
        if not is_action_formula(sig, law.head):
            fluents = sorted(c for c in sig.constants_in(law.head) if sig[c].kind.is_fluent)
            if fluents:
                problems += [f"fluent constant in action dynamic head: {c}" for c in fluents]
            else:
                problems.append("action dynamic head contains no action constant")
    else:
        for c in actions_in(law.head):
            problems.append(f"action constant in fluent dynamic head: {c}")
        for c in actions_in(law.if_):
            problems.append(f"action constant in fluent dynamic 'if' part: {c}")
        for c in sorted(sig.constants_in(law.head)):
            if sig[c].kind is Kind.STATIC:
                problems.append(f"statically determined constant in fluent dynamic head: {c}")
    if law.source and problems:
        problems = [f"{p} (in '{law.source}')" for p in problems]
    return problems


class ActionDescription:
    """A signature and a finite list of causal laws, validated on construction."""

    def __init__(self, constants: Iterable[ConstantDecl], laws: Iterable[CausalLaw] = ()):
        self.signature = Signature(constants)
        self.laws: tuple[CausalLaw, ...] = tuple(laws)
        problems = []
        for i, law in enumerate(self.laws):
            problems += [f"law {i + 1}: {p}" for p in validate_law(law, self.signature)]
        if problems:
            raise DescriptionError(problems)

    @property
    def constants(self) -> tuple[ConstantDecl, ...]:
        return self.signature.constants

    def timed_theory(self, m: int):
        from .translate import translate

        return translate(self, m)

    def __repr__(self) -> str:
        return f"ActionDescription({len(self.constants)} constants, {len(self.laws)} laws)"


# --- building laws ------------------------------------------------------------


def caused(sig: Signature, head: Formula, if_: Formula = TOP, after: Formula | None = None,
           source: str | None = None) -> CausalLaw:
    """A law whose form follows from its parts: ``after`` makes it fluent dynamic,
    an action constant in the head makes it action dynamic, otherwise static."""
    if after is not None:
        form = Form.FLUENT_DYNAMIC
    elif is_action_formula(sig, head):
        form = Form.ACTION_DYNAMIC
    else:
        form = Form.STATIC
    return CausalLaw(form, head, if_, after, source)


def _single_atom(f) -> Atom:
    if isinstance(f, Atom):
        return f
    if type(f) is Var and isinstance(f.atom, Atom):
        return f.atom
    raise DescriptionError([f"expected an atom c=v, got {f}"])


def default(sig: Signature, atom, if_: Formula = TOP, after: Formula | None = None,
            source: str | None = None) -> list[CausalLaw]:
    """``default c=v if F [after G]`` is ``caused {c=v}^ch if F [after G]``."""
    a = _single_atom(atom)
    return [caused(sig, choice(Var(a)), if_, after, source)]


def causes(sig: Signature, act: Formula, effect: Formula, if_: Formula = TOP,
           source: str | None = None) -> list[CausalLaw]:
    """``a causes F [if G]`` is ``caused F if true after a & G``."""
    if not is_action_formula(sig, act):
        raise DescriptionError([f"'causes' needs an action formula, got {act}"])
    after = act if if_ == TOP else And(act, if_)
    return [CausalLaw(Form.FLUENT_DYNAMIC, effect, TOP, after, source)]


def exogenous(sig: Signature, constant: str, source: str | None = None) -> list[CausalLaw]:
    c = sig[constant]
    if c.kind is not Kind.ACTION:
        raise DescriptionError([f"exogenous needs an action constant, {constant} is a {c.kind.value}"])
    return [CausalLaw(Form.ACTION_DYNAMIC, choice(Var(a)), TOP, None, source) for a in c.atoms()]


def inertial(sig: Signature, constant: str, source: str | None = None) -> list[CausalLaw]:
    c = sig[constant]
    if c.kind is not Kind.REGULAR:
        raise DescriptionError([f"inertial needs a regular fluent constant, {constant} is a {c.kind.value}"])
    return [CausalLaw(Form.FLUENT_DYNAMIC, choice(Var(a)), TOP, Var(a), source) for a in c.atoms()]


def constraint(sig: Signature, f: Formula, source: str | None = None) -> list[CausalLaw]:
    """``constraint F`` is the static law ``caused false if not F``."""
    return [CausalLaw(Form.STATIC, BOTTOM, neg(f), None, source)]


def always(sig: Signature, f: Formula, source: str | None = None) -> list[CausalLaw]:
    """``always F`` is ``caused false if true after not F``."""
    return [CausalLaw(Form.FLUENT_DYNAMIC, BOTTOM, TOP, neg(f), source)]


def nonexecutable(sig: Signature, f: Formula, if_: Formula = TOP,
                  source: str | None = None) -> list[CausalLaw]:
    """``nonexecutable F if G`` is ``caused false if true after F & G``."""
    after = f if if_ == TOP else And(f, if_)
    return [CausalLaw(Form.FLUENT_DYNAMIC, BOTTOM, TOP, after, source)]


# --- definite and simple descriptions --------------------------------------------


def is_definite_head(head: Formula) -> bool:
    return type(head) is Falsity or type(head) is Var or choice_atom(head) is not None


def _is_count_aggregate(f: Formula, max_atoms: int = 12) -> bool:
    order = []
    stack = [f]
    while stack:
        g = stack.pop()
        t = type(g)
        if t is Var:
            if g.atom not in order:
                order.append(g.atom)
        elif t is And or t is Or:
            stack.append(g.right)
            stack.append(g.left)
        elif t is Implies:
            stack.append(g.consequent)
            stack.append(g.antecedent)
    if not order or len(order) > max_atoms:
        return False
    n = len(order)
    bounds = [None, *range(n + 2)]
    for lower in bounds:
        for upper in bounds:
            if lower is None and upper is None:
                continue
            try:
                if expand_cardinality(lower, order, upper) == f:
                    return True
            except Exception:
                continue
    return False


def is_simple_conjunction(f: Formula) -> bool:
    """Conjunction of atoms and count aggregates, each possibly negated."""
    if f == TOP:
        return True
    for part in conjuncts(f):
        if part == TOP:
            continue
        inner = part.antecedent if is_negation(part) else part
        # true and false are the count aggregates 0 <= {} and 1 <= {}
        if type(inner) is Var or inner == TOP or type(inner) is Falsity or _is_count_aggregate(inner):
            continue
        return False
    return True


@dataclass(frozen=True)
class Classification:
    definite: bool
    simple: bool


def classify(d: ActionDescription) -> Classification:
    """Definite: every head is false, an atom or a choice of an atom.

    Simple: definite, and every ``if``/``after`` part is a simple
    conjunction.  Laws with head ``false`` are exempt from the body
    condition: ``false <- G`` and ``false <- not not G`` have the same
    stable models in every context, so their bodies never take part in
    deriving atoms.
    """
    definite = all(is_definite_head(law.head) for law in d.laws)
    simple = definite and all(
        type(law.head) is Falsity
        or (is_simple_conjunction(law.if_) and (law.after is None or is_simple_conjunction(law.after)))
        for law in d.laws
    )
    return Classification(definite, simple)
