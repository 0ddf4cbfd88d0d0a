"""Propositional formulas over multi-valued atoms.

Only four node kinds exist: falsity, atom references, conjunction,
disjunction and implication.  Negation, truth, equivalence and choice are
rewritten into those nodes when they are built, so every operation below
(satisfaction, reduct, cardinality expansion) deals with the primitive
syntax only.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import DeclarationError, FormulaError

#: Upper limit on the number of subsets a single cardinality expansion may
#: enumerate.
DEFAULT_SUBSET_LIMIT = 10**6


@dataclass(frozen=True, slots=True, order=True)
class Atom:
    """The atom ``constant=value``."""

    constant: str
    value: str

    def __str__(self) -> str:
        return f"{self.constant}={self.value}"


class Formula:
    __slots__ = ()

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return neg(self)

    def implies(self, other: Formula) -> Formula:
        return Implies(self, other)

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True, slots=True, repr=False)
class Falsity(Formula):
    def __repr__(self) -> str:
        return "BOTTOM"


@dataclass(frozen=True, slots=True, repr=False)
class Var(Formula):
    atom: Hashable

    def __repr__(self) -> str:
        return f"Var({self.atom!r})"


@dataclass(frozen=True, slots=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self) -> str:
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Implies(Formula):
    antecedent: Formula
    consequent: Formula

    def __repr__(self) -> str:
        return f"Implies({self.antecedent!r}, {self.consequent!r})"


BOTTOM: Formula = Falsity()
TOP: Formula = Implies(BOTTOM, BOTTOM)


def var(atom: Hashable) -> Formula:
    return atom if isinstance(atom, Formula) else Var(atom)


def neg(f: Formula) -> Formula:
    return Implies(f, BOTTOM)


def iff(f: Formula, g: Formula) -> Formula:
    return And(Implies(f, g), Implies(g, f))


def choice(f: Formula) -> Formula:
    """``{F}^ch``, i.e. ``F or not F``."""
    return Or(f, neg(f))


def _balanced(items: Sequence[Formula], node) -> Formula:
    # balanced trees keep recursion depth logarithmic for large theories
    if len(items) == 1:
        return items[0]
    mid = len(items) // 2
    return node(_balanced(items[:mid], node), _balanced(items[mid:], node))


def conj(formulas: Iterable[Formula]) -> Formula:
    items = [var(f) for f in formulas]
    return _balanced(items, And) if items else TOP


def disj(formulas: Iterable[Formula]) -> Formula:
    items = [var(f) for f in formulas]
    return _balanced(items, Or) if items else BOTTOM


def is_top(f: Formula) -> bool:
    return f == TOP


def is_negation(f: Formula) -> bool:
    return type(f) is Implies and type(f.consequent) is Falsity


def choice_atom(f: Formula):
    """Return ``a`` when ``f`` is the choice formula ``{a}^ch``, else None."""
    if (
        type(f) is Or
        and type(f.left) is Var
        and is_negation(f.right)
        and f.right.antecedent == f.left
    ):
        return f.left.atom
    return None


def conjuncts(f: Formula) -> list[Formula]:
    """Flatten nested conjunctions, left to right."""
    out: list[Formula] = []
    stack = [f]
    while stack:
        g = stack.pop()
        if type(g) is And:
            stack.append(g.right)
            stack.append(g.left)
        else:
            out.append(g)
    return out


def atoms(f: Formula) -> set:
    found = set()
    stack = [f]
    while stack:
        g = stack.pop()
        t = type(g)
        if t is Var:
            found.add(g.atom)
        elif t is And or t is Or:
            stack.append(g.left)
            stack.append(g.right)
        elif t is Implies:
            stack.append(g.antecedent)
            stack.append(g.consequent)
    return found


def substitute(f: Formula, mapping) -> Formula:
    """Replace every atom ``a`` with ``mapping(a)`` (an atom or a formula)."""
    t = type(f)
    if t is Var:
        return var(mapping(f.atom))
    if t is Falsity:
        return f
    if t is Implies:
        return Implies(substitute(f.antecedent, mapping), substitute(f.consequent, mapping))
    return t(substitute(f.left, mapping), substitute(f.right, mapping))


def _check_signature(f: Formula, signature) -> None:
    if signature is None:
        return
    outside = atoms(f) - set(signature)
    if outside:
        names = ", ".join(sorted(map(str, outside)))
        raise FormulaError(f"atoms outside the signature: {names}")


def satisfies(interpretation, f: Formula, signature=None) -> bool:
    """Classical truth of ``f`` in the interpretation (the set of true atoms)."""
    _check_signature(f, signature)
    return _holds(interpretation, f)


def _holds(x, f: Formula) -> bool:
    t = type(f)
    if t is Var:
        return f.atom in x
    if t is Falsity:
        return False
    if t is And:
        return _holds(x, f.left) and _holds(x, f.right)
    if t is Or:
        return _holds(x, f.left) or _holds(x, f.right)
    return (not _holds(x, f.antecedent)) or _holds(x, f.consequent)


def reduct(f: Formula, interpretation) -> Formula:
    """Replace every maximal subformula not satisfied by ``interpretation`` with falsity."""
    return _reduct(f, interpretation)[1]


def _reduct(f: Formula, x) -> tuple[bool, Formula]:
    t = type(f)
    if t is Var:
        return (True, f) if f.atom in x else (False, BOTTOM)
    if t is Falsity:
        return False, BOTTOM
    if t is Implies:
        ok_a, red_a = _reduct(f.antecedent, x)
        ok_c, red_c = _reduct(f.consequent, x)
        if ok_a and not ok_c:
            return False, BOTTOM
        return True, Implies(red_a, red_c)
    ok_l, red_l = _reduct(f.left, x)
    ok_r, red_r = _reduct(f.right, x)
    ok = (ok_l and ok_r) if t is And else (ok_l or ok_r)
    if not ok:
        return False, BOTTOM
    return True, t(red_l, red_r)


def at_least(lower: int, items: Sequence[Formula], subset_limit: int = DEFAULT_SUBSET_LIMIT) -> Formula:
    if lower <= 0:
        return TOP
    if lower > len(items):
        return BOTTOM
    count = math.comb(len(items), lower)
    if count > subset_limit:
        raise FormulaError(
            f"cardinality expansion needs {count} subsets, above the limit of {subset_limit}"
        )
    return disj(conj(combo) for combo in itertools.combinations(items, lower))


def expand_cardinality(
    lower: int | None,
    elements: Iterable,
    upper: int | None = None,
    subset_limit: int = DEFAULT_SUBSET_LIMIT,
) -> Formula:
    """Expand ``lower <= {elements} <= upper`` into a propositional formula.

    Either bound may be None.  ``Z <= u`` is ``not ((u+1) <= Z)`` and the
    two-sided form is the conjunction of both sides.
    """
    items: list[Formula] = []
    for e in elements:
        f = var(e)
        if f not in items:
            items.append(f)
    for bound in (lower, upper):
        if bound is not None and bound < 0:
            raise FormulaError(f"cardinality bound must be nonnegative, got {bound}")
    parts = []
    if lower is not None:
        parts.append(at_least(lower, items, subset_limit))
    if upper is not None:
        parts.append(neg(at_least(upper + 1, items, subset_limit)))
    if not parts:
        return TOP
    return parts[0] if len(parts) == 1 else And(parts[0], parts[1])


def uec_constant(constant: str, domain: Sequence[str], double_negation: bool = True) -> Formula:
    if len(domain) < 2:
        raise DeclarationError(f"constant {constant} needs a domain of at least 2 values")
    values = [Var(Atom(constant, v)) for v in domain]
    parts = [neg(And(a, b)) for a, b in itertools.combinations(values, 2)]
    exists = disj(values)
    parts.append(neg(neg(exists)) if double_negation else exists)
    return conj(parts)


def uec(domains: Mapping[str, Sequence[str]], double_negation: bool = True) -> Formula:
    """Uniqueness and existence of value constraints for every constant.

    ``double_negation=False`` drops the ``not not`` in front of the
    existence disjunction; it exists for comparison only.
    """
    return conj(uec_constant(c, dom, double_negation) for c, dom in domains.items())


def interpretations(universe: Iterable) -> Iterator[frozenset]:
    """All subsets of ``universe``, smallest first."""
    items = sorted(universe, key=natural_key)
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def models(f: Formula, universe: Iterable | None = None) -> list[frozenset]:
    universe = atoms(f) if universe is None else set(universe)
    return [x for x in interpretations(universe) if _holds(x, f)]


def equivalent(f: Formula, g: Formula) -> bool:
    """Classical equivalence, by comparing every valuation of the mentioned atoms."""
    universe = atoms(f) | atoms(g)
    return all(_holds(x, f) == _holds(x, g) for x in interpretations(universe))


_DIGITS = re.compile(r"(\d+)")


def natural_key(item) -> tuple:
    """Sort key on the text of ``item`` with embedded numbers compared numerically."""
    key = getattr(item, "sort_key", None)
    if key is not None:
        return key()
    parts = _DIGITS.split(str(item))
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts))


def to_text(f: Formula) -> str:
    t = type(f)
    if t is Falsity:
        return "false"
    if t is Var:
        return str(f.atom)
    if f == TOP:
        return "true"
    a = choice_atom(f)
    if a is not None:
        return "{" + str(a) + "}ch"
    if is_negation(f):
        return "not " + _wrap(f.antecedent)
    if t is Implies:
        return f"{_wrap(f.antecedent)} -> {_wrap(f.consequent)}"
    op = " & " if t is And else " | "
    return op.join(_wrap(g) for g in _flatten(f, t))


def _flatten(f: Formula, t) -> list[Formula]:
    if type(f) is t:
        return _flatten(f.left, t) + _flatten(f.right, t)
    return [f]


def _wrap(f: Formula) -> str:
    text = to_text(f)
    if type(f) in (And, Or) or (type(f) is Implies and not is_negation(f) and f != TOP):
        if choice_atom(f) is None:
            return f"({text})"
    return text
