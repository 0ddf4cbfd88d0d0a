"""Stable models of finite propositional formulas.

``is_stable_model`` follows the reduct definition directly: a model ``X``
of ``F`` is stable (relative to the intensional atoms ``p``) when no
``J`` that agrees with ``X`` outside ``p`` and is strictly smaller inside
``p`` satisfies ``F^X``.

``stable_models`` enumerates candidates with a backtracking search over
classical models and hands every complete candidate to that check.  Two
pruning rules keep the search small without affecting the result:

* a conjunct that is already false under the partial assignment closes
  the branch, and a conjunct with a single open atom fixes that atom when
  one of its values falsifies it;
* an intensional atom that occurs in heads of rules ``B -> a`` (or
  ``B -> {a}^ch``) and nowhere else outside the scope of negation cannot
  be in a stable model unless one of those bodies ``B`` is true.  If
  ``X`` contains ``a`` but no such body holds, ``X - {a}`` satisfies
  ``F^X`` by the lemma "``J <= X`` and ``J |= G^X`` imply ``X |= G``".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import BudgetExceeded, FormulaError
from .formula import (
    BOTTOM,
    And,
    Falsity,
    Formula,
    Implies,
    Or,
    Var,
    atoms,
    choice_atom,
    conjuncts,
    is_negation,
    natural_key,
    reduct,
    satisfies,
)

DEFAULT_BUDGET = 2**22


@dataclass(frozen=True)
class StableQuery:
    """A formula with its ambient signature and the intensional atoms.

    ``signature`` defaults to the atoms of the formula and ``intensional``
    to the whole signature, which gives the ordinary stable models.
    """

    formula: Formula
    signature: frozenset | None = None
    intensional: frozenset | None = None
    _sig: frozenset = field(init=False, repr=False, compare=False)
    _p: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        mentioned = frozenset(atoms(self.formula))
        sig = mentioned if self.signature is None else frozenset(self.signature)
        if not mentioned <= sig:
            names = ", ".join(sorted(map(str, mentioned - sig), key=natural_key))
            raise FormulaError(f"atoms outside the signature: {names}")
        p = sig if self.intensional is None else frozenset(self.intensional)
        if not p <= sig:
            raise FormulaError("intensional atoms must belong to the signature")
        object.__setattr__(self, "_sig", sig)
        object.__setattr__(self, "_p", p)

    @property
    def atoms(self) -> frozenset:
        return self._sig

    @property
    def intensional_atoms(self) -> frozenset:
        return self._p


def _as_query(q) -> StableQuery:
    return q if isinstance(q, StableQuery) else StableQuery(q)


def canonical_key(model) -> tuple:
    return tuple(sorted(natural_key(a) for a in model))


# --- three-valued evaluation and simplification -------------------------------


def _eval3(f: Formula, val: dict):
    t = type(f)
    if t is Var:
        return val.get(f.atom)
    if t is Falsity:
        return False
    if t is And:
        left = _eval3(f.left, val)
        if left is False:
            return False
        right = _eval3(f.right, val)
        if right is False:
            return False
        return True if (left and right) else None
    if t is Or:
        left = _eval3(f.left, val)
        if left is True:
            return True
        right = _eval3(f.right, val)
        if right is True:
            return True
        return False if (left is False and right is False) else None
    a = _eval3(f.antecedent, val)
    if a is False:
        return True
    c = _eval3(f.consequent, val)
    if c is True:
        return True
    return False if (a is True and c is False) else None


def _simplify(f: Formula, fixed: dict):
    """Fold atoms with known values; returns True, False or a formula."""
    t = type(f)
    if t is Var:
        return fixed.get(f.atom, f)
    if t is Falsity:
        return False
    if t is Implies:
        a = _simplify(f.antecedent, fixed)
        if a is False:
            return True
        c = _simplify(f.consequent, fixed)
        if c is True:
            return True
        if a is True:
            return c
        if c is False:
            return Implies(a, BOTTOM)
        return Implies(a, c)
    left = _simplify(f.left, fixed)
    right = _simplify(f.right, fixed)
    if t is And:
        if left is False or right is False:
            return False
        if left is True:
            return right
        if right is True:
            return left
        return And(left, right)
    if left is True or right is True:
        return True
    if left is False:
        return right
    if right is False:
        return left
    return Or(left, right)



def _monotone(f: Formula) -> bool:
    stack = [f]
    while stack:
        g = stack.pop()
        t = type(g)
        if t is Var:
            continue
        if t is And or t is Or:
            stack.append(g.left)
            stack.append(g.right)
        else:
            return False
    return True


def _head_atoms_horn(h: Formula):
    if type(h) is Falsity:
        return []
    out = []
    for g in conjuncts(h):
        if type(g) is not Var:
            return None
        out.append(g.atom)
    return out


def _least_model(formula: Formula):
    """Least model of a Horn formula (monotone bodies, atomic heads); None if not Horn."""
    rules = []
    facts = set()
    for c in conjuncts(formula):
        if type(c) is Var:
            facts.add(c.atom)
            continue
        if type(c) is Implies and _monotone(c.antecedent):
            heads = _head_atoms_horn(c.consequent)
            if heads is not None:
                if heads:
                    rules.append((c.antecedent, heads))
                continue
        return None
    model = set(facts)
    changed = True
    while changed:
        changed = False
        for body, heads in rules:
            if all(h in model for h in heads):
                continue
            if satisfies(model, body):
                model.update(heads)
                changed = True
    return model


def _smaller_model_exists(red: Formula, x: frozenset, p: frozenset, budget: int) -> bool:
    """Is there J <^p x satisfying ``red`` (which x satisfies)?"""
    inside = x & p
    red_atoms = atoms(red)
    if inside - red_atoms:
        # an intensional atom the reduct does not mention can simply be dropped
        return True
    fixed = {a: (a in x) for a in red_atoms if a not in inside}
    s = _simplify(red, fixed)
    if s is True:
        return bool(inside)
    if s is False:  # cannot happen when x satisfies the reduct
        return False
    least = _least_model(s)
    if least is not None:
        return least != inside
    return _search_smaller(s, inside, budget)


def _search_smaller(s: Formula, inside: frozenset, budget: int) -> bool:
    """Subsets of ``inside`` in increasing size order, stopping at the first model."""
    items = sorted(inside, key=natural_key)
    n = len(items)
    if 2**n > budget:
        return _dpll_smaller(s, items, budget)
    for k in range(n):
        for combo in itertools.combinations(items, k):
            if satisfies(frozenset(combo), s):
                return True
    return False


def _dpll_smaller(s: Formula, items: list, budget: int) -> bool:
    """Backtracking search for a model of ``s`` that falsifies at least one item."""
    val: dict = {}
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(budget)
        r = _eval3(s, val)
        if r is False:
            return False
        if i == len(items):
            return r is True and not all(val.values())
        a = items[i]
        for v in (False, True):
            val[a] = v
            if rec(i + 1):
                return True
            del val[a]
        return False

    return rec(0)


# --- stable model checks ------------------------------------------------------


def is_stable_model(interpretation: Iterable, q, budget: int = DEFAULT_BUDGET) -> bool:
    """Is ``interpretation`` a stable model of the query's formula (relative to its intensional atoms)?"""
    q = _as_query(q)
    x = frozenset(interpretation)
    if not x <= q.atoms:
        raise FormulaError("interpretation mentions atoms outside the signature")
    if not satisfies(x, q.formula):
        return False
    red = reduct(q.formula, x)
    return not _smaller_model_exists(red, x, q.intensional_atoms, budget)


def is_stable_model_bruteforce(interpretation: Iterable, q) -> bool:
    """Reference check: try every ``J <^p X`` against the reduct, smallest first."""
    q = _as_query(q)
    x = frozenset(interpretation)
    if not satisfies(x, q.formula):
        return False
    red = reduct(q.formula, x)
    inside = sorted(x & q.intensional_atoms, key=natural_key)
    outside = x - q.intensional_atoms
    for k in range(len(inside)):
        for combo in itertools.combinations(inside, k):
            if satisfies(outside | frozenset(combo), red):
                return False
    return True


def stable_models_bruteforce(q) -> list[frozenset]:
    """Reference enumeration over every subset of the formula's atoms."""
    q = _as_query(q)
    free = atoms(q.formula) | (q.atoms - q.intensional_atoms)
    items = sorted(free, key=natural_key)
    found = []
    for k in range(len(items) + 1):
        for combo in itertools.combinations(items, k):
            if is_stable_model_bruteforce(combo, q):
                found.append(frozenset(combo))
    return sorted(found, key=canonical_key)


def stable_models(q, budget: int = DEFAULT_BUDGET, limit: int | None = None) -> list[frozenset]:
    """All stable models in canonical order.

    Atoms of the signature that the formula does not mention are false in
    every result (when they are intensional).  ``limit`` truncates the
    sorted list.
    """
    found = sorted(iter_stable_models(q, budget), key=canonical_key)
    return found if limit is None else found[:limit]


def has_stable_model(q, budget: int = DEFAULT_BUDGET) -> bool:
    return next(iter_stable_models(q, budget), None) is not None


def iter_stable_models(q, budget: int = DEFAULT_BUDGET) -> Iterator[frozenset]:
    """Stable models in search order (not canonical)."""
    q = _as_query(q)
    return _Search(q, budget).run()


def _positive_atoms(f: Formula, out: set) -> None:
    stack = [f]
    while stack:
        g = stack.pop()
        t = type(g)
        if t is Var:
            out.add(g.atom)
        elif t is And or t is Or:
            stack.append(g.left)
            stack.append(g.right)
        elif t is Implies and not is_negation(g):
            stack.append(g.antecedent)
            stack.append(g.consequent)


def _rule_heads(h: Formula):
    """Atoms supported by head ``h`` when it is a conjunction of atoms and choices of atoms."""
    if type(h) is Falsity:
        return []
    out = []
    for g in conjuncts(h):
        if type(g) is Var:
            out.append(g.atom)
            continue
        a = choice_atom(g)
        if a is None:
            return None
        out.append(a)
    return out


class _Search:
    def __init__(self, q: StableQuery, budget: int):
        self.q = q
        self.budget = budget
        self.parts = conjuncts(q.formula)
        p = q.intensional_atoms
        mentioned = atoms(q.formula)
        self.order = sorted(mentioned | (q.atoms - p), key=natural_key)
        self.pos = {a: i for i, a in enumerate(self.order)}
        self.part_atoms = [sorted(atoms(c), key=natural_key) for c in self.parts]
        self.occurs: dict = {a: [] for a in self.order}
        for i, names in enumerate(self.part_atoms):
            for a in names:
                self.occurs[a].append(i)

        supports: dict = {}
        unrestricted = set(q.atoms - p)
        for c in self.parts:
            if type(c) is Implies:
                body, head = c.antecedent, c.consequent
            else:
                body, head = None, c
            heads = _rule_heads(head)
            if heads is None:
                _positive_atoms(head, unrestricted)
                continue
            for a in heads:
                supports.setdefault(a, []).append(body)
        self.supports = {
            a: supports.get(a, []) for a in self.order if a in p and a not in unrestricted
        }
        self.watch: dict = {a: [] for a in self.order}
        for a, bodies in self.supports.items():
            seen = set()
            for b in bodies:
                if b is not None:
                    seen |= atoms(b)
            for b in seen:
                self.watch[b].append(a)

        self.val: dict = {}
        self.trail: list = []
        self.queue: list = []
        self.nodes = 0

    def _assign(self, a, v: bool) -> None:
        self.val[a] = v
        self.trail.append(a)
        self.queue.append(a)

    def _supported(self, a):
        """True if some body may still hold, False if all are false."""
        for body in self.supports[a]:
            if body is None or _eval3(body, self.val) is not False:
                return True
        return False

    def _check_support(self, a) -> bool:
        if self._supported(a):
            return True
        v = self.val.get(a)
        if v is None:
            self._assign(a, False)
            return True
        return v is False

    def _check_part(self, i: int) -> bool:
        part = self.parts[i]
        val = self.val
        r = _eval3(part, val)
        if r is False:
            return False
        if r is None:
            open_atoms = [b for b in self.part_atoms[i] if b not in val]
            if len(open_atoms) == 1:
                b = open_atoms[0]
                val[b] = True
                when_true = _eval3(part, val)
                val[b] = False
                when_false = _eval3(part, val)
                del val[b]
                if when_true is False and when_false is False:
                    return False
                if when_true is False:
                    self._assign(b, False)
                elif when_false is False:
                    self._assign(b, True)
        return True

    def _propagate(self) -> bool:
        while self.queue:
            a = self.queue.pop()
            for i in self.occurs.get(a, ()):
                if not self._check_part(i):
                    return False
            if a in self.supports and not self._check_support(a):
                return False
            for r in self.watch.get(a, ()):
                if not self._check_support(r):
                    return False
        return True

    def _initial(self) -> bool:
        for i in range(len(self.parts)):
            if not self._check_part(i):
                return False
        for a in self.supports:
            if not self._check_support(a):
                return False
        return self._propagate()

    def _undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            del self.val[self.trail.pop()]
        self.queue.clear()

    def _next_open(self, start: int):
        for i in range(start, len(self.order)):
            if self.order[i] not in self.val:
                return i
        return None

    def _leaf(self):
        x = frozenset(a for a, v in self.val.items() if v)
        if not satisfies(x, self.q.formula):
            return None
        red = reduct(self.q.formula, x)
        if _smaller_model_exists(red, x, self.q.intensional_atoms, self.budget):
            return None
        return x

    def run(self) -> Iterator[frozenset]:
        if not self._initial():
            return
        decisions: list = []  # (index, trail mark, second branch taken)
        start = 0
        while True:
            i = self._next_open(start)
            if i is None:
                model = self._leaf()
                if model is not None:
                    yield model
                ok = False
            else:
                self.nodes += 1
                if self.nodes > self.budget:
                    raise BudgetExceeded(self.budget)
                decisions.append((i, len(self.trail), False))
                self._assign(self.order[i], False)
                ok = self._propagate()
                start = i + 1
            while not ok:
                if not decisions:
                    return
                i, mark, second = decisions.pop()
                self._undo(mark)
                if second:
                    continue
                decisions.append((i, mark, True))
                self._assign(self.order[i], True)
                ok = self._propagate()
                start = i + 1
