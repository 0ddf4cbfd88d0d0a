"""Lexer, AST and parser for the CCalc-style input language.

The accepted grammar is a small documented subset::

    program    := section*
    section    := ":-" ("sorts" | "objects" | "constants" | "variables" | "query") items "."
                | law "."
    law        := ["caused"] F ["if" F] ["after" F] ["ifcons" F]
                | "default" F ["if" F] ["after" F]
                | F "causes" F ["if" F]
                | ("constraint" | "always") F ["after" F]
                | "nonexecutable" F ["if" F]
                | ("exogenous" | "inertial") term
    F          := F "<->" F | F "++" F | F "&" F | ("-" | "~") F | primary
    primary    := "true" | "false" | "(" F ")" | [bound] "{" set "}" [bound]
                | term [("=" | "\\=" | "<" | ">" | "<=" | ">=") term]

``~`` applied to a term is the Boolean atom ``c=f``; applied to anything
else it is an error.  ``-`` is formula negation.  Terms allow ``+``,
``-`` and ``*`` with the usual precedence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .errors import ParseError

KEYWORDS = {
    "caused", "if", "after", "ifcons", "default", "causes", "constraint", "always",
    "nonexecutable", "exogenous", "inertial", "true", "false", "of", "maxstep", "label",
}

KINDS = {"simpleFluent", "inertialFluent", "sdFluent", "action", "exogenousAction", "attribute"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\f]+)
  | (?P<nl>\n)
  | (?P<comment>%[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>:-|::|>>|\.\.|<->|\\=|<=|>=|\+\+|[=<>&|~\-+*(){}\[\],;.:])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    out = []
    line, start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            start = m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind, m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# --- AST -------------------------------------------------------------------------

Pos = tuple  # (line, column)


@dataclass(frozen=True)
class Name:
    """``f`` or ``f(t1, ..., tn)``: a constant, object, variable or symbol, resolved when grounding."""

    name: str
    args: tuple = ()
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Int:
    value: int
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Range:
    low: "Term"
    high: "Term"
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Term"
    right: "Term"
    pos: Pos = field(default=(0, 0), compare=False)


Term = Union[Name, Int, BinOp, Range]


@dataclass(frozen=True)
class Const:
    value: bool
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Compare:
    """``t1 op t2``; an atom when ``t1`` is a constant, a side condition otherwise."""

    op: str
    left: Term
    right: Term
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Bare:
    """A term used as a formula: the Boolean atom ``c=t``."""

    term: Term
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Tilde:
    """``~c``: the Boolean atom ``c=f``."""

    term: Term
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Not:
    body: "Expr"
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Binary:
    op: str  # "&", "++" or "<->"
    left: "Expr"
    right: "Expr"
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Count:
    """``[lower] {V1,...,Vk | F} [upper]`` or ``[lower] {F1, ..., Fn} [upper]``."""

    lower: Term | None
    variables: tuple[str, ...]
    elements: tuple["Expr", ...]
    upper: Term | None
    pos: Pos = field(default=(0, 0), compare=False)


Expr = Union[Const, Compare, Bare, Tilde, Not, Binary, Count]


@dataclass(frozen=True)
class SortDecl:
    name: str
    subsorts: tuple[str, ...] = ()
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ObjectDecl:
    objects: tuple[Term, ...]
    sort: str
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class DomainRef:
    sort: str  # "boolean" for Boolean constants
    star: bool = False


@dataclass(frozen=True)
class ConstantDeclAst:
    names: tuple[Name, ...]  # arguments are sort names
    kind: str
    domain: DomainRef
    parent: Name | None = None  # for attributes
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class VariableDecl:
    names: tuple[str, ...]
    sort: str
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class LawAst:
    """A schematic law; ``keyword`` is "caused", "default", "causes", "constraint",
    "always", "nonexecutable", "exogenous" or "inertial"."""

    keyword: str
    head: Expr | Term | None
    if_: Expr | None = None
    after: Expr | None = None
    ifcons: Expr | None = None
    action: Expr | None = None  # for "causes"
    text: str = ""
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class QueryAst:
    label: str | None
    maxstep: int | None
    constraints: tuple[tuple[object, Expr], ...]  # step is an int or "maxstep"
    pos: Pos = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ProgramAst:
    sorts: tuple[SortDecl, ...]
    objects: tuple[ObjectDecl, ...]
    constants: tuple[ConstantDeclAst, ...]
    variables: tuple[VariableDecl, ...]
    laws: tuple[LawAst, ...]
    queries: tuple[QueryAst, ...]


# --- parser ------------------------------------------------------------------------


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    # token helpers
    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def at(self, *texts: str) -> bool:
        t = self.tok
        return t.kind in ("op", "name") and t.text in texts

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        t = tok or self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        return ParseError(f"{message}, found {found}", t.line, t.column)

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected {text!r}")
        return self.advance()

    def name(self) -> Token:
        if self.tok.kind != "name":
            raise self.error("expected a name")
        return self.advance()

    @staticmethod
    def pos(t: Token) -> Pos:
        return (t.line, t.column)

    # program
    def program(self) -> ProgramAst:
        parts: dict[str, list] = {k: [] for k in ("sorts", "objects", "constants", "variables", "laws", "queries")}
        while self.tok.kind != "eof":
            if self.at(":-"):
                self.advance()
                section = self.name()
                handler = {
                    "sorts": self.sort_items,
                    "objects": self.object_items,
                    "constants": self.constant_items,
                    "variables": self.variable_items,
                    "query": self.query_items,
                }.get(section.text)
                if handler is None:
                    raise ParseError(f"unknown section ':- {section.text}'", section.line, section.column)
                key = "queries" if section.text == "query" else section.text
                parts[key] += handler(section)
                # a section runs until the next ':-' or the first law
            else:
                parts["laws"].append(self.law())
        return ProgramAst(*(tuple(parts[k]) for k in ("sorts", "objects", "constants", "variables", "laws", "queries")))

    def _items(self, item):
        """``item (; item)* .``"""
        out = [item()]
        while self.at(";"):
            self.advance()
            out.append(item())
        self.expect(".")
        return out

    def sort_items(self, _section) -> list[SortDecl]:
        def item():
            chain = [self.name()]
            while self.at(">>"):
                self.advance()
                chain.append(self.name())
            decls = [SortDecl(a.text, (b.text,), self.pos(a)) for a, b in zip(chain, chain[1:])]
            decls.append(SortDecl(chain[-1].text, (), self.pos(chain[-1])))
            return decls

        out = []
        for group in self._items(lambda: self._comma(item)):
            for decls in group:
                out += decls
        return out

    def _comma(self, item):
        out = [item()]
        while self.at(","):
            self.advance()
            out.append(item())
        return out

    def object_items(self, _section) -> list[ObjectDecl]:
        def item():
            start = self.tok
            objs = self._comma(self.object_term)
            self.expect("::")
            sort = self.name()
            return ObjectDecl(tuple(objs), sort.text, self.pos(start))

        return self._items(item)

    def object_term(self) -> Term:
        t = self.term()
        if self.at(".."):
            tok = self.advance()
            return Range(t, self.term(), self.pos(tok))
        return t

    def constant_items(self, _section) -> list[ConstantDeclAst]:
        def item():
            start = self.tok
            names = self._comma(self.schema)
            self.expect("::")
            kind = self.name()
            if kind.text not in KINDS:
                raise ParseError(f"unknown constant kind {kind.text!r}", kind.line, kind.column)
            domain = DomainRef("boolean")
            if self.at("("):
                self.advance()
                sort = self.name()
                star = False
                if self.at("*"):
                    self.advance()
                    star = True
                self.expect(")")
                domain = DomainRef(sort.text, star)
            parent = None
            if kind.text == "attribute":
                self.expect("of")
                parent = self.schema()
            return ConstantDeclAst(tuple(names), kind.text, domain, parent, self.pos(start))

        return self._items(item)

    def schema(self) -> Name:
        """``f`` or ``f(sort, ..., sort)``."""
        n = self.name()
        args = []
        if self.at("("):
            self.advance()
            args = [Name(s.text, (), self.pos(s)) for s in self._comma(self.name)]
            self.expect(")")
        return Name(n.text, tuple(args), self.pos(n))

    def variable_items(self, _section) -> list[VariableDecl]:
        def item():
            start = self.tok
            names = [t.text for t in self._comma(self.name)]
            self.expect("::")
            sort = self.name()
            return VariableDecl(tuple(names), sort.text, self.pos(start))

        return self._items(item)

    def query_items(self, section) -> list[QueryAst]:
        label = None
        maxstep = None
        constraints = []

        def item():
            nonlocal label, maxstep
            if self.at("label") and self.peek().text == "::":
                self.advance()
                self.advance()
                t = self.advance()
                if t.kind not in ("name", "int"):
                    raise self.error("expected a query label", t)
                label = t.text
            elif self.at("maxstep") and self.peek().text == "::":
                self.advance()
                self.advance()
                if self.tok.kind != "int":
                    raise self.error("expected an integer maxstep")
                maxstep = int(self.advance().text)
            else:
                if self.at("maxstep"):
                    self.advance()
                    step = "maxstep"
                elif self.tok.kind == "int":
                    step = int(self.advance().text)
                else:
                    raise self.error("expected a step ('0:', 'maxstep:'), 'label ::' or 'maxstep ::'")
                self.expect(":")
                constraints.append((step, self.formula()))

        self._items(item)
        return [QueryAst(label, maxstep, tuple(constraints), self.pos(section))]

    # laws
    def law(self) -> LawAst:
        start = self.tok
        first = start.text if start.kind == "name" else None
        if first in ("exogenous", "inertial"):
            self.advance()
            head = self.term()
            return self._finish(LawAst(first, head, pos=self.pos(start)), start)
        if first in ("default", "constraint", "always", "nonexecutable", "caused"):
            self.advance()
            keyword = first
        else:
            keyword = "caused"
        head = self.formula()
        action = None
        if keyword == "caused" and self.at("causes") and first != "caused":
            self.advance()
            action, head = head, self.formula()
            keyword = "causes"
        clauses: dict[str, Expr] = {}
        allowed = {
            "caused": ("if", "after", "ifcons"),
            "default": ("if", "after", "ifcons"),
            "causes": ("if",),
            "constraint": ("after",),
            "always": (),
            "nonexecutable": ("if",),
        }[keyword]
        while self.tok.kind == "name" and self.tok.text in ("if", "after", "ifcons"):
            word = self.tok
            if word.text not in allowed:
                raise ParseError(f"'{word.text}' clause not allowed in a '{keyword}' law", word.line, word.column)
            if word.text in clauses:
                raise ParseError(f"duplicate '{word.text}' clause", word.line, word.column)
            self.advance()
            clauses[word.text] = self.formula()
        law = LawAst(keyword, head, clauses.get("if"), clauses.get("after"), clauses.get("ifcons"),
                     action, pos=self.pos(start))
        return self._finish(law, start)

    def _finish(self, law: LawAst, start: Token) -> LawAst:
        end = self.expect(".")
        text = self._source_text(start, end)
        return LawAst(law.keyword, law.head, law.if_, law.after, law.ifcons, law.action, text, law.pos)

    def _source_text(self, start: Token, end: Token) -> str:
        lines = self.text.split("\n")
        if start.line == end.line:
            raw = lines[start.line - 1][start.column - 1:end.column]
        else:
            raw = "\n".join([lines[start.line - 1][start.column - 1:], *lines[start.line:end.line - 1],
                             lines[end.line - 1][:end.column]])
        return " ".join(raw.split())

    # formulas, loosest first
    def formula(self) -> Expr:
        left = self.disjunction()
        while self.at("<->"):
            t = self.advance()
            left = Binary("<->", left, self.disjunction(), self.pos(t))
        return left

    def disjunction(self) -> Expr:
        left = self.conjunction()
        while self.at("++"):
            t = self.advance()
            left = Binary("++", left, self.conjunction(), self.pos(t))
        return left

    def conjunction(self) -> Expr:
        left = self.unary()
        while self.at("&"):
            t = self.advance()
            left = Binary("&", left, self.unary(), self.pos(t))
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            t = self.advance()
            return Not(self.unary(), self.pos(t))
        if self.at("~"):
            t = self.advance()
            if self.at("(", "-", "~", "true", "false", "{"):
                raise self.error("'~' applies to a Boolean constant only")
            return Tilde(self.term(), self.pos(t))
        return self.primary()

    def primary(self) -> Expr:
        t = self.tok
        if self.at("true", "false") and self.peek().text not in ("=", "\\="):
            self.advance()
            return Const(t.text == "true", self.pos(t))
        if self.at("("):
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if self.at("{"):
            return self.count(None)
        left = self.term()
        if self.at("{"):
            return self.count(left)
        if self.at("=", "\\=", "<", ">", "<=", ">="):
            op = self.advance()
            return Compare(op.text, left, self.term(), self.pos(op))
        return Bare(left, self.pos(t))

    def count(self, lower: Term | None) -> Count:
        start = self.expect("{")
        items = self._comma(self.formula)
        variables: tuple[str, ...] = ()
        if self.at("|"):
            bar = self.advance()
            for item in items:
                if not (type(item) is Bare and type(item.term) is Name and not item.term.args):
                    raise ParseError("expected variables before '|'", bar.line, bar.column)
            variables = tuple(item.term.name for item in items)
            items = [self.formula()]
        self.expect("}")
        upper = None
        if self.tok.kind == "int" or (self.tok.kind == "name" and self.tok.text not in KEYWORDS) or self.at("("):
            upper = self.factor()
        return Count(lower, variables, tuple(items), upper, self.pos(start))

    # terms
    def term(self) -> Term:
        left = self.product()
        while self.at("+", "-"):
            op = self.advance()
            left = BinOp(op.text, left, self.product(), self.pos(op))
        return left

    def product(self) -> Term:
        left = self.factor()
        while self.at("*"):
            op = self.advance()
            left = BinOp("*", left, self.factor(), self.pos(op))
        return left

    def factor(self) -> Term:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Int(int(t.text), self.pos(t))
        if self.at("("):
            self.advance()
            inner = self.term()
            self.expect(")")
            return inner
        if t.kind == "name" and t.text not in KEYWORDS - {"true", "false"}:
            self.advance()
            args = ()
            if self.at("("):
                self.advance()
                args = tuple(self._comma(self.object_term))
                self.expect(")")
            return Name(t.text, args, self.pos(t))
        raise self.error("expected a term")


def parse(text: str) -> ProgramAst:
    return Parser(text).program()
