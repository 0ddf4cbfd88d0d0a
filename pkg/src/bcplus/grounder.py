"""Grounding: from a parsed program and constant bindings to a ground description.

Three modes share one front half (sorts, objects, constants, formulas):

* ``bc+`` builds an ``ActionDescription`` directly;
* ``c+`` builds a ``CplusDescription`` (C+ readings of the abbreviations);
* ``bc`` builds a ``BcDescription`` and only accepts conjunctions of atoms.

Side conditions such as ``X\\=Y`` are folded to true or false while
grounding, and a ground law whose ``if`` or ``after`` part folds to false is
dropped.  An atom whose value is a known object or an integer outside the
constant's domain folds to false; any other unknown name is an error.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

from . import action as bcp
from . import frontends as fe
from . import syntax as ast
from .action import BOOLEAN, ActionDescription, CausalLaw, ConstantDecl, Form, Kind, Signature
from .errors import BcplusError, GroundingError, QueryError
from .formula import (
    BOTTOM,
    DEFAULT_SUBSET_LIMIT,
    TOP,
    And,
    Atom,
    Formula,
    Or,
    Var,
    conjuncts,
    expand_cardinality,
    iff,
    is_negation,
    natural_key,
    neg,
)
from .query import QuerySpec

MODES = ("bc+", "bc", "c+")

_KIND = {
    "simpleFluent": Kind.REGULAR,
    "inertialFluent": Kind.REGULAR,
    "sdFluent": Kind.STATIC,
    "action": Kind.ACTION,
    "exogenousAction": Kind.ACTION,
    "attribute": Kind.ACTION,
}


# --- folding constructors --------------------------------------------------------


def f_and(a: Formula, b: Formula) -> Formula:
    if a == BOTTOM or b == BOTTOM:
        return BOTTOM
    if a == TOP:
        return b
    if b == TOP:
        return a
    return And(a, b)


def f_or(a: Formula, b: Formula) -> Formula:
    if a == TOP or b == TOP:
        return TOP
    if a == BOTTOM:
        return b
    if b == BOTTOM:
        return a
    return Or(a, b)


def f_not(a: Formula) -> Formula:
    if a == TOP:
        return BOTTOM
    if a == BOTTOM:
        return TOP
    return neg(a)


def _is_int(value: str) -> bool:
    return value.lstrip("-").isdigit()


# --- result ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroundProgram:
    mode: str
    description: object  # ActionDescription, BcDescription or CplusDescription
    queries: tuple[QuerySpec, ...]

    def bcplus(self) -> ActionDescription:
        """The BC+ description used for solving: BC and C+ go through their embeddings."""
        if self.mode == "bc":
            return fe.bc2bcp(self.description)
        if self.mode == "c+":
            return fe.cp2bcp(self.description)
        return self.description

    def query(self, label: str) -> QuerySpec:
        for q in self.queries:
            if q.label == label:
                return q
        known = ", ".join(str(q.label) for q in self.queries) or "none"
        raise QueryError(f"unknown query {label!r} (known: {known})")


@dataclass
class _ConstantSchema:
    name: str
    arg_sorts: tuple[str, ...]
    kind: str
    domain: tuple[str, ...]
    parent: ast.Name | None
    pos: tuple
    instances: list  # (ground name, argument values)


class Grounder:
    def __init__(self, program: ast.ProgramAst, bindings: dict[str, int] | None = None, mode: str = "bc+",
                 subset_limit: int = DEFAULT_SUBSET_LIMIT):
        if mode not in MODES:
            raise GroundingError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
        self.program = program
        self.bindings = dict(bindings or {})
        self.mode = mode
        self.subset_limit = subset_limit
        self._declare_sorts()
        self._declare_objects()
        self._declare_variables()
        self._declare_constants()

    # declarations
    def _declare_sorts(self) -> None:
        self.subsorts: dict[str, list[str]] = {}
        for d in self.program.sorts:
            self.subsorts.setdefault(d.name, [])
            for s in d.subsorts:
                self.subsorts.setdefault(s, [])
                if s not in self.subsorts[d.name]:
                    self.subsorts[d.name].append(s)
        # reject cycles
        state: dict[str, int] = {}

        def visit(s, path):
            if state.get(s) == 1:
                raise GroundingError(f"cyclic subsort declarations: {' >> '.join(path + [s])}")
            if state.get(s) == 2:
                return
            state[s] = 1
            for t in self.subsorts[s]:
                visit(t, path + [s])
            state[s] = 2

        for s in self.subsorts:
            visit(s, [])

    def _require_sort(self, sort: str, pos) -> None:
        if sort not in self.subsorts:
            raise GroundingError(f"undeclared sort {sort!r}", *pos)

    def _declare_objects(self) -> None:
        self.direct: dict[str, list[str]] = {s: [] for s in self.subsorts}
        self.objects: set[str] = set()
        self.constructors: set[tuple[str, int]] = set()
        for d in self.program.objects:
            self._require_sort(d.sort, d.pos)
            for t in d.objects:
                for value in self._expand_object(t):
                    if value not in self.direct[d.sort]:
                        self.direct[d.sort].append(value)
                    self.objects.add(value)
        self._sort_cache: dict[str, list[str]] = {}

    def _expand_object(self, t) -> list[str]:
        if type(t) is ast.Range:
            lo, hi = self._int(t.low, {}), self._int(t.high, {})
            return [str(i) for i in range(lo, hi + 1)]
        if type(t) is ast.Name and t.args:
            self.constructors.add((t.name, len(t.args)))
            choices = [self._expand_object(a) for a in t.args]
            return [f"{t.name}({','.join(combo)})" for combo in itertools.product(*choices)]
        if type(t) is ast.Name:
            if t.name in self.bindings:
                return [str(self.bindings[t.name])]
            return [t.name]
        return [self.value(t, {})]

    def objects_of(self, sort: str) -> list[str]:
        if sort not in self._sort_cache:
            found = set(self.direct.get(sort, []))
            for s in self.subsorts.get(sort, []):
                found.update(self.objects_of(s))
            self._sort_cache[sort] = sorted(found, key=natural_key)
        return self._sort_cache[sort]

    def _declare_variables(self) -> None:
        self.variables: dict[str, str] = {}
        for d in self.program.variables:
            self._require_sort(d.sort, d.pos)
            for n in d.names:
                if n in self.variables:
                    raise GroundingError(f"variable {n} declared twice", *d.pos)
                self.variables[n] = d.sort

    def _declare_constants(self) -> None:
        self.schemas: dict[tuple[str, int], _ConstantSchema] = {}
        self.by_name: dict[str, _ConstantSchema] = {}
        self.decls: list[ConstantDecl] = []
        has_attribute = any(d.kind == "attribute" for d in self.program.constants)
        if has_attribute and "none" in self.objects:
            raise GroundingError("object 'none' collides with the value added to attribute domains")
        for d in self.program.constants:
            domain = self._domain(d)
            for n in d.names:
                key = (n.name, len(n.args))
                if key in self.schemas or n.name in self.by_name:
                    raise GroundingError(f"constant {n.name} declared twice", *n.pos)
                if (n.name, len(n.args)) in self.constructors or (not n.args and n.name in self.objects):
                    raise GroundingError(f"{n.name} is declared both as an object and as a constant", *n.pos)
                arg_sorts = tuple(a.name for a in n.args)
                for s in arg_sorts:
                    self._require_sort(s, n.pos)
                    if not self.objects_of(s):
                        raise GroundingError(f"sort {s!r} has no objects", *n.pos)
                schema = _ConstantSchema(n.name, arg_sorts, d.kind, domain, d.parent, n.pos, [])
                for combo in itertools.product(*(self.objects_of(s) for s in arg_sorts)):
                    name = f"{n.name}({','.join(combo)})" if combo else n.name
                    schema.instances.append((name, combo))
                    try:
                        self.decls.append(ConstantDecl(name, _KIND[d.kind], domain))
                    except BcplusError as e:
                        raise GroundingError(str(e), *n.pos) from None
                self.schemas[key] = schema
                self.by_name[n.name] = schema
        self.signature = Signature(self.decls)

    def _domain(self, d: ast.ConstantDeclAst) -> tuple[str, ...]:
        if d.domain.sort == "boolean":
            values = list(BOOLEAN)
        else:
            self._require_sort(d.domain.sort, d.pos)
            values = list(self.objects_of(d.domain.sort))
        if d.kind == "attribute" or d.domain.star:
            values.append("none")
        return tuple(values)

    # terms
    def value(self, t, env: dict[str, str]) -> str:
        """Evaluate a term in value position to an object name or integer text."""
        if type(t) is ast.Int:
            return str(t.value)
        if type(t) is ast.BinOp:
            a, b = self._int(t.left, env), self._int(t.right, env)
            return str({"+": a + b, "-": a - b, "*": a * b}[t.op])
        if type(t) is ast.Range:
            raise GroundingError("a range is not allowed here", *t.pos)
        if t.name in self.by_name or (t.name, len(t.args)) in self.schemas:
            raise GroundingError(f"constant {t.name} used where a value is expected", *t.pos)
        if not t.args:
            if t.name in env:
                return env[t.name]
            if t.name in self.variables:
                raise GroundingError(f"variable {t.name} is not bound here", *t.pos)
            if t.name in self.bindings:
                return str(self.bindings[t.name])
            if t.name == "true":
                return "t"
            if t.name == "false":
                return "f"
            if t.name in self.objects or t.name == "none":
                return t.name
            raise GroundingError(f"unknown name {t.name!r} (unbound symbolic constant?)", *t.pos)
        args = [self.value(a, env) for a in t.args]
        name = f"{t.name}({','.join(args)})"
        if (t.name, len(t.args)) not in self.constructors:
            raise GroundingError(f"unknown object constructor {t.name}/{len(t.args)}", *t.pos)
        return name

    def _known(self, value: str) -> bool:
        return value in self.objects or _is_int(value) or value in ("t", "f", "none")

    def _int(self, t, env) -> int:
        v = self.value(t, env)
        if not _is_int(v):
            raise GroundingError(f"expected an integer, got {v}", *t.pos)
        return int(v)

    def constant(self, t, env) -> str | None:
        """Ground constant name for a constant reference, None if ``t`` is not one.

        Returns "" when the arguments fall outside the declared sorts.
        """
        if type(t) is not ast.Name:
            return None
        key = (t.name, len(t.args))
        if key not in self.schemas:
            if t.name in self.by_name:
                raise GroundingError(f"arity mismatch for constant {t.name}", *t.pos)
            return None
        schema = self.schemas[key]
        args = tuple(self.value(a, env) for a in t.args)
        for a, s in zip(args, schema.arg_sorts):
            if a not in self.objects_of(s):
                return ""
        return f"{t.name}({','.join(args)})" if args else t.name

    def _atom(self, name: str, value: str, pos) -> Formula:
        if name == "":
            return BOTTOM
        decl = self.signature[name]
        if value in decl.domain:
            return Var(Atom(name, value))
        if self._known(value):
            return BOTTOM
        raise GroundingError(f"{value} is not a value of {name}", *pos)

    def _boolean(self, name: str, value: str, pos) -> Formula:
        if name and not self.signature[name].is_boolean:
            raise GroundingError(f"{name} is not Boolean; write {name}=value", *pos)
        return self._atom(name, value, pos)

    # formulas
    def formula(self, e, env: dict[str, str]) -> Formula:
        t = type(e)
        if t is ast.Const:
            return TOP if e.value else BOTTOM
        if t is ast.Not:
            return f_not(self.formula(e.body, env))
        if t is ast.Binary:
            a, b = self.formula(e.left, env), self.formula(e.right, env)
            if e.op == "&":
                return f_and(a, b)
            if e.op == "++":
                return f_or(a, b)
            if a in (TOP, BOTTOM) and b in (TOP, BOTTOM):
                return TOP if a == b else BOTTOM
            return iff(a, b)
        if t is ast.Bare:
            name = self.constant(e.term, env)
            if name is None:
                raise GroundingError("expected a formula, found a value", *e.pos)
            return self._boolean(name, "t", e.pos)
        if t is ast.Tilde:
            name = self.constant(e.term, env)
            if name is None:
                raise GroundingError("'~' needs a Boolean constant", *e.pos)
            return self._boolean(name, "f", e.pos)
        if t is ast.Compare:
            return self._compare(e, env)
        if t is ast.Count:
            return self._count(e, env)
        raise GroundingError(f"unexpected expression {e!r}")

    def _compare(self, e: ast.Compare, env) -> Formula:
        left, right = e.left, e.right
        name = self.constant(left, env)
        if name is None:
            name = self.constant(right, env)
            if name is not None:
                left, right = right, left
        if name is not None:
            if e.op not in ("=", "\\="):
                raise GroundingError(f"'{e.op}' cannot compare a constant", *e.pos)
            if self.constant(right, env) is not None:
                raise GroundingError("a constant cannot be compared with another constant", *e.pos)
            a = self._atom(name, self.value(right, env), e.pos)
            return a if e.op == "=" else f_not(a)
        a, b = self.value(left, env), self.value(right, env)
        if e.op == "=":
            ok = a == b
        elif e.op == "\\=":
            ok = a != b
        else:
            if not (_is_int(a) and _is_int(b)):
                raise GroundingError(f"'{e.op}' needs integers, got {a} and {b}", *e.pos)
            x, y = int(a), int(b)
            ok = {"<": x < y, ">": x > y, "<=": x <= y, ">=": x >= y}[e.op]
        return TOP if ok else BOTTOM

    def _count(self, e: ast.Count, env) -> Formula:
        lower = None if e.lower is None else self._int(e.lower, env)
        upper = None if e.upper is None else self._int(e.upper, env)
        items = []
        if e.variables:
            for v in e.variables:
                if v not in self.variables:
                    raise GroundingError(f"undeclared variable {v}", *e.pos)
            domains = [self.objects_of(self.variables[v]) for v in e.variables]
            for combo in itertools.product(*domains):
                f = self.formula(e.elements[0], {**env, **dict(zip(e.variables, combo))})
                if f != BOTTOM:
                    items.append(f)
        else:
            items = [f for f in (self.formula(x, env) for x in e.elements) if f != BOTTOM]
        try:
            return expand_cardinality(lower, items, upper, self.subset_limit)
        except BcplusError as err:
            raise GroundingError(str(err), *e.pos) from None

    # variables
    def free_variables(self, node, bound=frozenset()) -> list[str]:
        out: list[str] = []

        def walk(n, bound):
            if n is None:
                return
            t = type(n)
            if t is ast.Name:
                if not n.args and n.name in self.variables and n.name not in bound and n.name not in out:
                    out.append(n.name)
                for a in n.args:
                    walk(a, bound)
            elif t in (ast.BinOp, ast.Compare, ast.Binary):
                walk(n.left, bound)
                walk(n.right, bound)
            elif t is ast.Range:
                walk(n.low, bound)
                walk(n.high, bound)
            elif t in (ast.Bare, ast.Tilde):
                walk(n.term, bound)
            elif t is ast.Not:
                walk(n.body, bound)
            elif t is ast.Count:
                walk(n.lower, bound)
                inner = bound | set(n.variables)
                for x in n.elements:
                    walk(x, inner)
                walk(n.upper, bound)

        walk(node, set(bound))
        return out

    def assignments(self, names: list[str]):
        domains = []
        for n in names:
            objs = self.objects_of(self.variables[n])
            if not objs:
                raise GroundingError(f"variable {n} ranges over the empty sort {self.variables[n]!r}")
            domains.append(objs)
        for combo in itertools.product(*domains):
            yield dict(zip(names, combo))

    # laws
    def ground(self) -> tuple[object, tuple[QuerySpec, ...]]:
        laws = []
        for law in self.program.laws:
            parts = [law.action, law.head, law.if_, law.after, law.ifcons]
            names: list[str] = []
            for p in parts:
                for v in self.free_variables(p):
                    if v not in names:
                        names.append(v)
            for env in self.assignments(names):
                try:
                    laws += self._law(law, env)
                except GroundingError:
                    raise
                except BcplusError as err:
                    raise GroundingError(f"{err} (in '{law.text}')", *law.pos) from None
        laws += self._declared_laws()
        queries = tuple(self._query(q) for q in self.program.queries)
        try:
            if self.mode == "bc":
                d = fe.BcDescription(self.decls, laws)
            elif self.mode == "c+":
                d = fe.CplusDescription(self.decls, laws)
            else:
                d = ActionDescription(self.decls, laws)
        except BcplusError as err:
            raise GroundingError(str(err)) from None
        return d, queries

    def _declared_laws(self) -> list:
        out = []
        for d in self.program.constants:
            for n in d.names:
                schema = self.schemas[(n.name, len(n.args))]
                for name, args in schema.instances:
                    if d.kind == "inertialFluent":
                        out += self._inertial(name, f"inertial {name}")
                    elif d.kind == "exogenousAction":
                        out += self._exogenous(name, f"exogenous {name}")
                    elif d.kind == "attribute":
                        out += self._attribute(schema, name, args, d.pos)
        return out

    def _inertial(self, name: str, source: str) -> list:
        if self.mode == "bc":
            return fe.bc_inertial(self.signature, name, source)
        if self.mode == "c+":
            return fe.cplus_inertial(self.signature, name, source)
        return bcp.inertial(self.signature, name, source)

    def _exogenous(self, name: str, source: str) -> list:
        if self.signature[name].kind is not Kind.ACTION:
            raise GroundingError(f"exogenous needs an action constant, {name} is not one")
        if self.mode == "bc":
            return []  # every BC action is exogenous already
        if self.mode == "c+":
            return fe.cplus_exogenous(self.signature, name, source)
        return bcp.exogenous(self.signature, name, source)

    def _attribute(self, schema: _ConstantSchema, name: str, args: tuple, pos) -> list:
        if self.mode == "bc":
            raise GroundingError(f"attribute {schema.name} needs non-Boolean actions, which BC lacks", *pos)
        parent = schema.parent
        key = (parent.name, len(parent.args))
        if key not in self.schemas:
            raise GroundingError(f"unknown parent action {parent.name}", *parent.pos)
        p = self.schemas[key]
        if p.arg_sorts != tuple(a.name for a in parent.args) or len(p.arg_sorts) != len(schema.arg_sorts):
            raise GroundingError(f"parent {parent.name} does not match the arguments of {schema.name}", *parent.pos)
        pname = f"{parent.name}({','.join(args)})" if args else parent.name
        pdecl = self.signature[pname]
        if pdecl.kind is not Kind.ACTION or not pdecl.is_boolean:
            raise GroundingError(f"parent {pname} must be a Boolean action constant", *parent.pos)
        laws = self._exogenous(name, f"exogenous {name}")
        f = iff(Var(Atom(name, "none")), neg(Var(Atom(pname, "t"))))
        laws += bcp.always(self.signature, f, f"always {name}=none <-> -{pname}")
        return laws

    def _law(self, law: ast.LawAst, env) -> list:
        if self.mode == "bc":
            return self._bc_law(law, env)
        if law.ifcons is not None:
            raise GroundingError("'ifcons' is only available in bc mode", *law.pos)
        sig, src, k = self.signature, law.text, law.keyword
        if k in ("exogenous", "inertial"):
            name = self._constant_term(law.head, env)
            return self._exogenous(name, src) if k == "exogenous" else self._inertial(name, src)
        g = self.formula
        head = g(law.head, env)
        if_ = TOP if law.if_ is None else g(law.if_, env)
        after = None if law.after is None else g(law.after, env)
        if if_ == BOTTOM or after == BOTTOM:
            return []
        if k == "caused":
            if head == TOP:
                return []
            return [bcp.caused(sig, head, if_, after, src)]
        if k == "default":
            if head == BOTTOM:
                return []
            if type(head) is not Var:
                raise GroundingError("'default' needs a single atom", *law.pos)
            if self.mode == "c+":
                return fe.cplus_default(sig, head.atom, if_, after, src)
            return bcp.default(sig, head, if_, after, src)
        if k == "causes":
            act = g(law.action, env)
            if act == BOTTOM or head == TOP:
                return []
            return bcp.causes(sig, act, head, if_, src)
        if k == "constraint":
            if head == TOP:
                return []
            if after is not None:
                return [CausalLaw(Form.FLUENT_DYNAMIC, BOTTOM, f_not(head), after, src)]
            return bcp.constraint(sig, head, src)
        if k == "always":
            return [] if head == TOP else bcp.always(sig, head, src)
        if k == "nonexecutable":
            return [] if head == BOTTOM else bcp.nonexecutable(sig, head, if_, src)
        raise GroundingError(f"unknown law keyword {k}", *law.pos)

    def _constant_term(self, t, env) -> str:
        name = self.constant(t, env)
        if not name:
            raise GroundingError("expected a constant", *getattr(t, "pos", (None, None)))
        return name

    # BC mode
    def _atoms(self, f: Formula, what: str, pos) -> list[Atom]:
        if f == TOP:
            return []
        out = []
        for part in conjuncts(f):
            if type(part) is not Var:
                raise GroundingError(f"BC allows only conjunctions of atoms in {what}", *pos)
            out.append(part.atom)
        return out

    def _literals(self, f: Formula, pos) -> list[tuple[bool, Atom]]:
        out = []
        for part in conjuncts(f):
            if type(part) is Var:
                out.append((True, part.atom))
            elif is_negation(part) and type(part.antecedent) is Var:
                out.append((False, part.antecedent.atom))
            else:
                raise GroundingError("BC constraints must be conjunctions of literals", *pos)
        return out

    def _bc_head(self, f: Formula, pos) -> Atom | None:
        if f == BOTTOM:
            return None
        if type(f) is not Var:
            raise GroundingError("BC law heads must be atoms", *pos)
        return f.atom

    def _bc_law(self, law: ast.LawAst, env) -> list:
        sig, src, k, pos = self.signature, law.text, law.keyword, law.pos
        if k in ("exogenous", "inertial"):
            name = self._constant_term(law.head, env)
            return self._exogenous(name, src) if k == "exogenous" else self._inertial(name, src)
        g = self.formula
        head = g(law.head, env)
        if_ = TOP if law.if_ is None else g(law.if_, env)
        after = None if law.after is None else g(law.after, env)
        ifcons = TOP if law.ifcons is None else g(law.ifcons, env)
        if BOTTOM in (if_, after, ifcons):
            return []
        if k in ("caused", "default"):
            if law.if_ is not None and law.after is not None:
                raise GroundingError("a BC law has either 'if' or 'after', not both", *pos)
            if head == TOP:
                return []
            if k == "default" and head == BOTTOM:
                return []
            h = self._bc_head(head, pos)
            cons = self._atoms(ifcons, "'ifcons'", pos)
            if k == "default":
                if h is None:
                    raise GroundingError("'default' needs a single atom", *pos)
                if after is not None:
                    return fe.bc_default(h, after=self._atoms(after, "'after'", pos), ifcons=cons, source=src)
                return fe.bc_default(h, if_=self._atoms(if_, "'if'", pos), ifcons=cons, source=src)
            if after is not None:
                return [fe.BcLaw("dynamic", h, self._atoms(after, "'after'", pos), cons, src)]
            return [fe.BcLaw("static", h, self._atoms(if_, "'if'", pos), cons, src)]
        if k == "causes":
            act = g(law.action, env)
            if act == BOTTOM or head == TOP:
                return []
            h = self._bc_head(head, pos)
            body = self._atoms(act, "the action part", pos) + self._atoms(if_, "'if'", pos)
            return [fe.BcLaw("dynamic", h, tuple(body), (), src)]
        if k == "constraint":
            if head == TOP:
                return []
            if after is not None:
                raise GroundingError("'constraint ... after' is not available in bc mode", *pos)
            return fe.bc_constraint(sig, self._literals(head, pos), None, src)
        if k == "always":
            if head == TOP:
                return []
            return fe.bc_constraint(sig, self._literals(head, pos), (), src)
        if k == "nonexecutable":
            if head == BOTTOM:
                return []
            body = self._atoms(head, "'nonexecutable'", pos) + self._atoms(if_, "'if'", pos)
            return fe.bc_nonexecutable(body, src)
        raise GroundingError(f"unknown law keyword {k}", *pos)

    # queries
    def _query(self, q: ast.QueryAst) -> QuerySpec:
        constraints = []
        for step, e in q.constraints:
            free = self.free_variables(e)
            if free:
                raise GroundingError(f"query constraint mentions variable {free[0]}", *q.pos)
            constraints.append((step, self.formula(e, {})))
        return QuerySpec(q.label, q.maxstep, tuple(constraints), q.pos)


def ground(program: ast.ProgramAst, bindings: dict[str, int] | None = None, mode: str = "bc+",
           subset_limit: int = DEFAULT_SUBSET_LIMIT) -> GroundProgram:
    d, queries = Grounder(program, bindings, mode, subset_limit).ground()
    return GroundProgram(mode, d, queries)


def load_text(text: str, bindings: dict[str, int] | None = None, mode: str = "bc+", **kw) -> GroundProgram:
    return ground(ast.parse(text), bindings, mode, **kw)


def load(path, bindings: dict[str, int] | None = None, mode: str = "bc+", **kw) -> GroundProgram:
    return load_text(Path(path).read_text(encoding="utf-8"), bindings, mode, **kw)
