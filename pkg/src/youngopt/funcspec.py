"""Build function tables from expressions in ``k``, table files, or builtin names.

Expression grammar (whitespace is ignored)::

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | atom ('^' integer)?
    atom   := integer | 'k' | '(' expr ')'

Unary minus sits at the factor level so ``-k^2`` reads as ``-(k^2)``.
Exponents must be non-negative integer literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .core import VALUE_BOUND, FuncTable, InputError

BUILTINS = {
    "square": "k^2",
    "identity": "k",
    "zero": "0",
}


class ExprSyntaxError(InputError):
    def __init__(self, message: str, src: str, pos: int):
        self.src = src
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {src!r}")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of '+', '-', '*'
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(src):
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            ch = m.group(2)
            if ch not in "k+-*^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", src, m.start(2))
            tokens.append((ch, ch, m.start(2)))
    tokens.append(("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str):
        raise ExprSyntaxError(message, self.src, self.tokens[self.i][2])

    def expr(self) -> Expr:
        node = self.term()
        while self.peek() in "+-":
            op = self.take()[0]
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek() == "*":
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.peek() == "-":
            self.take()
            return Neg(self.factor())
        node = self.atom()
        if self.peek() == "^":
            self.take()
            if self.peek() != "int":
                self.error("exponent must be a non-negative integer literal")
            node = Pow(node, int(self.take()[1]))
        return node

    def atom(self) -> Expr:
        kind = self.peek()
        if kind == "int":
            return Num(int(self.take()[1]))
        if kind == "k":
            self.take()
            return Var()
        if kind == "(":
            self.take()
            node = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.take()
            return node
        if kind == "end":
            self.error("unexpected end of expression")
        self.error(f"unexpected token {self.tokens[self.i][1]!r}")


def parse_expr(src: str) -> Expr:
    if not src.strip():
        raise ExprSyntaxError("empty expression", src, 0)
    src = BUILTINS.get(src.strip(), src)
    parser = _Parser(src)
    node = parser.expr()
    if parser.peek() != "end":
        parser.error(f"unexpected token {parser.tokens[parser.i][1]!r}")
    return node


def evaluate(e: Expr, k: int) -> int:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return k
    if isinstance(e, Neg):
        return -evaluate(e.operand, k)
    if isinstance(e, Pow):
        return evaluate(e.base, k) ** e.exponent
    a, b = evaluate(e.left, k), evaluate(e.right, k)
    if e.op == "+":
        return a + b
    if e.op == "-":
        return a - b
    return a * b


def to_source(e: Expr) -> str:
    """Canonical, fully parenthesized text; ``parse_expr(to_source(e)) == e``."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return "k"
    if isinstance(e, Neg):
        return f"(-{to_source(e.operand)})"
    if isinstance(e, Pow):
        return f"({to_source(e.base)}^{e.exponent})"
    return f"({to_source(e.left)}{e.op}{to_source(e.right)})"


def tabulate(e: Expr, n: int) -> FuncTable:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    values = []
    for k in range(1, n + 1):
        v = evaluate(e, k)
        if abs(v) > VALUE_BOUND:
            raise InputError(f"value {v} at k={k} exceeds the magnitude bound 2^31")
        values.append(v)
    return FuncTable(tuple(values))


def load_table(path, n: int) -> FuncTable:
    """Read exactly ``n`` whitespace-separated integers as f(1), ..., f(n)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read table {path}: {exc.strerror or exc}")
    tokens = text.split()
    if len(tokens) != n:
        raise InputError(f"expected {n} values, found {len(tokens)} in {path}")
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise InputError(f"non-integer token {tok!r} in {path}")
    return FuncTable(tuple(values))


def resolve(spec: str, n: int) -> FuncTable:
    """Turn a CLI function specifier into a table of length ``n``.

    Accepted forms: a builtin name (``square``, ``identity``, ``zero``),
    ``expr:<expression>`` or ``table:<path>``.
    """
    if spec in BUILTINS:
        return tabulate(parse_expr(BUILTINS[spec]), n)
    kind, sep, rest = spec.partition(":")
    if sep and kind == "expr":
        return tabulate(parse_expr(rest), n)
    if sep and kind == "table":
        return load_table(rest, n)
    raise InputError(
        f"unknown function specifier {spec!r}; use one of "
        f"{', '.join(sorted(BUILTINS))}, expr:<expression> or table:<path>"
    )
