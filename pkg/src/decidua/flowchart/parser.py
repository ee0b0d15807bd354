"""Recursive-descent parser for the flowchart language.

    program := decl* stmt
    decl    := "var" IDENT "in" INT ".." INT ";"
    stmt    := simple (";" simple)*
    simple  := "skip" | IDENT ":=" aexp | "(" stmt ")"
             | "if" pred "then" stmt "else" stmt "fi"
             | "while" pred "do" stmt "od"
    pred    := conj ("or" conj)*
    conj    := unary ("and" unary)*
    unary   := "not" unary | "true" | "false" | "undef"
             | aexp ("=" | "<" | "<=") aexp | "(" pred ")"
    aexp    := term (("+" | "-") term)*
    term    := atom ("*" atom)*
    atom    := INT | IDENT | "(" aexp ")"
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import (
    DEFAULT_STATE_CAP,
    Assign,
    BinOp,
    Cmp,
    FlowchartError,
    If,
    Name,
    Num,
    PAnd,
    PFalse,
    PNot,
    POr,
    PTrue,
    PUndef,
    Program,
    Seq,
    Skip,
    StateCapExceededError,
    StateSpace,
    While,
)

KEYWORDS = frozenset(
    "var in skip if then else fi while do od true false undef not and or".split()
)

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>:=|\.\.|<=|[;()+\-*=<])
    """,
    re.VERBOSE,
)


class FlowchartSyntaxError(FlowchartError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


class UndeclaredVariableError(FlowchartError):
    pass


class BoundOverflowError(StateCapExceededError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # int, ident, kw, sym, eof
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN_RE.match(source, pos)
        if m is None:
            raise FlowchartSyntaxError(
                f"unexpected character {source[pos]!r}", line, pos - line_start + 1
            )
        kind = m.lastgroup
        text = m.group()
        if kind != "ws":
            if kind == "ident" and text in KEYWORDS:
                kind = "kw"
            tokens.append(Token(kind, text, line, pos - line_start + 1))
        newlines = text.count("\n")
        if newlines:
            line += newlines
            line_start = pos + text.rfind("\n") + 1
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0
        self.declared: set[str] = set()

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str, tok: Token = None):
        tok = tok or self.tok
        found = tok.text or "end of input"
        raise FlowchartSyntaxError(f"{message}, found {found!r}", tok.line, tok.col)

    def at(self, text: str) -> bool:
        return self.tok.kind in ("kw", "sym") and self.tok.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.pos += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        tok = self.tok
        self.pos += 1
        return tok

    def expect_kind(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.error(f"expected {'an integer' if kind == 'int' else 'an identifier'}")
        tok = self.tok
        self.pos += 1
        return tok

    # declarations

    def decls(self, cap: int) -> StateSpace:
        vars_ = []
        while self.at("var"):
            self.pos += 1
            name = self.expect_kind("ident")
            if name.text in self.declared:
                self.error(f"variable {name.text!r} declared twice", name)
            self.expect("in")
            lo = self.expect_kind("int")
            self.expect("..")
            hi = self.expect_kind("int")
            self.expect(";")
            if int(lo.text) != 0:
                self.error("variable ranges must start at 0", lo)
            self.declared.add(name.text)
            vars_.append((name.text, int(hi.text)))
        size = 1
        for _, b in vars_:
            size *= b + 1
            if size > cap:
                raise BoundOverflowError(
                    f"declared variables give more than {cap} states"
                )
        return StateSpace(tuple(vars_), cap=cap)

    # statements

    def stmt(self) -> Program:
        prog = self.simple()
        while self.accept(";"):
            prog = Seq(prog, self.simple())
        return prog

    def simple(self) -> Program:
        tok = self.tok
        if self.accept("skip"):
            return Skip()
        if self.accept("if"):
            cond = self.pred()
            self.expect("then")
            then = self.stmt()
            self.expect("else")
            orelse = self.stmt()
            self.expect("fi")
            return If(cond, then, orelse)
        if self.accept("while"):
            cond = self.pred()
            self.expect("do")
            body = self.stmt()
            self.expect("od")
            return While(cond, body)
        if self.accept("("):
            prog = self.stmt()
            self.expect(")")
            return prog
        if tok.kind == "ident":
            self.pos += 1
            self.check_declared(tok)
            self.expect(":=")
            return Assign(tok.text, self.aexp())
        self.error("expected a statement")

    # predicates

    def pred(self):
        p = self.pred_conj()
        while self.accept("or"):
            p = POr(p, self.pred_conj())
        return p

    def pred_conj(self):
        p = self.pred_unary()
        while self.accept("and"):
            p = PAnd(p, self.pred_unary())
        return p

    def pred_unary(self):
        if self.accept("not"):
            return PNot(self.pred_unary())
        if self.accept("true"):
            return PTrue()
        if self.accept("false"):
            return PFalse()
        if self.accept("undef"):
            return PUndef()
        if self.at("("):
            # "(" may open an arithmetic operand of a comparison or a predicate
            saved = self.pos
            try:
                return self.comparison()
            except FlowchartSyntaxError:
                self.pos = saved
            self.pos += 1
            p = self.pred()
            self.expect(")")
            return p
        return self.comparison()

    def comparison(self):
        left = self.aexp()
        for op in ("<=", "<", "="):
            if self.accept(op):
                return Cmp(left, op, self.aexp())
        self.error("expected a comparison operator")

    # arithmetic

    def aexp(self):
        e = self.term()
        while self.at("+") or self.at("-"):
            op = self.tok.text
            self.pos += 1
            e = BinOp(op, e, self.term())
        return e

    def term(self):
        e = self.factor()
        while self.accept("*"):
            e = BinOp("*", e, self.factor())
        return e

    def factor(self):
        tok = self.tok
        if tok.kind == "int":
            self.pos += 1
            return Num(int(tok.text))
        if tok.kind == "ident":
            self.pos += 1
            self.check_declared(tok)
            return Name(tok.text)
        if self.accept("("):
            e = self.aexp()
            self.expect(")")
            return e
        self.error("expected an arithmetic expression")

    def check_declared(self, tok: Token) -> None:
        if tok.text not in self.declared:
            raise UndeclaredVariableError(
                f"undeclared variable {tok.text!r} at line {tok.line}, column {tok.col}"
            )


def parse(source: str, cap: int = DEFAULT_STATE_CAP) -> tuple[StateSpace, Program]:
    """Parse a flowchart program into its state space and syntax tree."""
    parser = _Parser(source)
    space = parser.decls(cap)
    program = parser.stmt()
    if parser.tok.kind != "eof":
        parser.error("expected end of program")
    return space, program
