"""Surface syntax for sets and session commands.

    expr  := '{' [expr {',' expr}] '}' | NAT | IDENT
    stmt  := 'let' IDENT '=' rhs | CMD arg {arg} | arg [('in'|'sub'|'eq') arg]
    rhs   := CMD arg {arg} | arg

Numerals are shorthand for their von Neumann sets. Commands: canon, rank,
ord?, transitive?, in, sub, phi, psi, tomewo, tov, eq, dot, json; the
relational ones may also be written infix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

COMMANDS = (
    "canon",
    "rank",
    "ord?",
    "transitive?",
    "in",
    "sub",
    "phi",
    "psi",
    "tomewo",
    "tov",
    "eq",
    "dot",
    "json",
)
INFIX_COMMANDS = ("in", "sub", "eq")


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class EmptySet:
    pass


@dataclass(frozen=True)
class Braces:
    items: tuple


@dataclass(frozen=True)
class Numeral:
    value: int


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Op:
    name: str
    args: tuple


@dataclass(frozen=True)
class Let:
    name: str
    value: object


Expr = object  # EmptySet | Braces | Numeral | Ident | Op


# -- tokenizer ----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nat>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*\??)
  | (?P<punct>[{},=;\n])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(line, col, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        value = m.group()
        if kind not in ("ws", "comment"):
            if kind == "punct":
                kind = {"\n": "newline", ";": "newline"}.get(value, value)
            toks.append(_Tok(kind, value, line, col))
        if value == "\n":
            line += 1
            col = 1
        else:
            col += len(value)
        pos = m.end()
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected) -> ParseError:
        tok = self.peek()
        found = repr(tok.text) if tok.kind != "eof" else "end of input"
        return ParseError(tok.line, tok.col, f"found {found}", expected)

    def expect(self, kind: str, expected) -> _Tok:
        if self.peek().kind != kind:
            raise self.fail(expected)
        return self.next()

    # expr := '{' [expr {',' expr}] '}' | NAT | IDENT
    def expr(self) -> Expr:
        tok = self.peek()
        if tok.kind == "{":
            self.next()
            if self.peek().kind == "}":
                self.next()
                return EmptySet()
            items = [self.expr()]
            while self.peek().kind == ",":
                self.next()
                items.append(self.expr())
            self.expect("}", ("'}'", "','"))
            return Braces(tuple(items))
        if tok.kind == "nat":
            self.next()
            return Numeral(int(tok.text))
        if tok.kind == "ident" and tok.text not in COMMANDS and tok.text != "let":
            self.next()
            return Ident(tok.text)
        raise self.fail(("'{'", "number", "identifier"))

    def command_args(self, name: str) -> Op:
        args = [self.expr()]
        while self.peek().kind in ("{", "nat") or (
            self.peek().kind == "ident" and self.peek().text not in COMMANDS
        ):
            args.append(self.expr())
        return Op(name, tuple(args))

    def rhs(self) -> Expr:
        tok = self.peek()
        if tok.kind == "ident" and tok.text in COMMANDS:
            self.next()
            return self.command_args(tok.text)
        return self.maybe_infix(self.expr())

    def maybe_infix(self, first: Expr) -> Expr:
        tok = self.peek()
        if tok.kind == "ident" and tok.text in INFIX_COMMANDS:
            self.next()
            return Op(tok.text, (first, self.expr()))
        return first

    def stmt(self):
        tok = self.peek()
        if tok.kind == "ident" and tok.text == "let":
            self.next()
            name = self.expect("ident", ("identifier",)).text
            if name in COMMANDS:
                raise ParseError(tok.line, tok.col, f"{name!r} is a reserved command name")
            self.expect("=", ("'='",))
            return Let(name, self.rhs())
        if tok.kind == "ident" and tok.text in COMMANDS:
            self.next()
            return self.command_args(tok.text)
        return self.maybe_infix(self.expr())

    def program(self) -> list:
        stmts = []
        while True:
            while self.peek().kind == "newline":
                self.next()
            if self.peek().kind == "eof":
                return stmts
            stmts.append(self.stmt())
            if self.peek().kind not in ("newline", "eof"):
                raise self.fail(("end of statement",))


def parse(text: str) -> Expr:
    """Parse a single expression (or command application)."""
    p = _Parser(text)
    while p.peek().kind == "newline":
        p.next()
    tok = p.peek()
    if tok.kind == "ident" and tok.text in COMMANDS:
        p.next()
        result = p.command_args(tok.text)
    else:
        result = p.maybe_infix(p.expr())
    while p.peek().kind == "newline":
        p.next()
    p.expect("eof", ("end of input",))
    return result


def parse_program(text: str) -> list:
    return _Parser(text).program()


def format_expr(e: Expr) -> str:
    """Structure-preserving printer; parse(format_expr(e)) == e."""
    if isinstance(e, EmptySet):
        return "{}"
    if isinstance(e, Braces):
        return "{" + ", ".join(format_expr(x) for x in e.items) + "}"
    if isinstance(e, Numeral):
        return str(e.value)
    if isinstance(e, Ident):
        return e.name
    if isinstance(e, Op):
        return e.name + " " + " ".join(format_expr(a) for a in e.args)
    if isinstance(e, Let):
        return f"let {e.name} = {format_expr(e.value)}"
    raise TypeError(f"not an AST node: {e!r}")
