"""
A small expression language for functions of x.

Grammar, loosest binding first, left-associative within a level::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INTEGER)*
    atom   := NUMBER | "x" | FUNC "(" expr ")" | "(" expr ")"

FUNC is one of sin, cos, tan, exp, log, sqrt, abs, sign, tanh. Evaluation is
vectorised over numpy arrays; leaving a function's domain raises
``ExprEvaluationError`` instead of producing NaN.
"""

import math
import re
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..basis.base import ExprEvaluationError, ExprSyntaxError

FUNCTIONS: dict[str, Callable[[NDArray[np.float64]], NDArray[np.float64]]] = {
    "sin": np.sin,
    "cos": np.cos,
    "tan": np.tan,
    "exp": np.exp,
    "log": np.log,
    "sqrt": np.sqrt,
    "abs": np.abs,
    "sign": np.sign,
    "tanh": np.tanh,
}

_ATOM_START = frozenset({"number", "x", "function", "(", "-"})

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<number>(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?)
    |(?P<name>[A-Za-z_][A-Za-z_0-9]*)
    |(?P<op>[-+*/^()])
    """,
    re.VERBOSE | re.ASCII,
)


@dataclass(frozen=True)
class Token:
    kind: str  # number, name, op, end
    text: str
    offset: int


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Call:
    func: str
    arg: "ExprAst"


ExprAst = Union[Num, Var, Neg, BinOp, Pow, Call]


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        match = _TOKEN_RE.match(src, pos)
        if match is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", pos)
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def _fail(self, expected: frozenset[str]) -> ExprSyntaxError:
        token = self.current
        what = "end of input" if token.kind == "end" else repr(token.text)
        return ExprSyntaxError(f"unexpected {what}", token.offset, expected)

    def parse(self) -> ExprAst:
        node = self.expression()
        if self.current.kind != "end":
            raise self._fail(frozenset({"+", "-", "*", "/", "^", "end of input"}))
        return node

    def expression(self) -> ExprAst:
        node = self.term()
        while self._at_op("+", "-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> ExprAst:
        node = self.unary()
        while self._at_op("*", "/"):
            op = self._advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> ExprAst:
        if self._at_op("-"):
            self._advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> ExprAst:
        node = self.atom()
        while self._at_op("^"):
            self._advance()
            token = self.current
            if token.kind != "number" or not token.text.isdigit():
                raise self._fail(frozenset({"non-negative integer exponent"}))
            self._advance()
            node = Pow(node, int(token.text))
        return node

    def atom(self) -> ExprAst:
        token = self.current
        if token.kind == "number":
            self._advance()
            value = float(token.text)
            if not math.isfinite(value):
                raise ExprSyntaxError(f"number {token.text} out of range", token.offset)
            return Num(value)
        if token.kind == "name":
            self._advance()
            if token.text == "x":
                return Var()
            if token.text not in FUNCTIONS:
                raise ExprSyntaxError(
                    f"unknown identifier {token.text!r}",
                    token.offset,
                    frozenset({"x", *FUNCTIONS}),
                )
            self._expect("(")
            arg = self.expression()
            self._expect(")")
            return Call(token.text, arg)
        if self._at_op("("):
            self._advance()
            node = self.expression()
            self._expect(")")
            return node
        raise self._fail(_ATOM_START)

    def _expect(self, op: str) -> None:
        if not self._at_op(op):
            raise self._fail(frozenset({op}))
        self._advance()


def parse_expr(src: str) -> ExprAst:
    """
    Parse an expression in x.

    :raises ExprSyntaxError: with the offending offset and the expected tokens
    """
    return _Parser(src).parse()


# ---------------------------------------------------------------------------
# Printing and evaluation
# ---------------------------------------------------------------------------


def format_expr(node: ExprAst) -> str:
    """
    Canonical text of an AST.

    Binary operations are always parenthesised, so parsing the output yields
    the same tree and printing it again yields the same text.
    """
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "x"
    if isinstance(node, Neg):
        return "-" + format_expr(node.operand)
    if isinstance(node, BinOp):
        return f"({format_expr(node.left)} {node.op} {format_expr(node.right)})"
    if isinstance(node, Pow):
        base = format_expr(node.base)
        if isinstance(node.base, (Neg, Pow)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    return f"{node.func}({format_expr(node.arg)})"


def _domain_error(
    message: str, bad: NDArray[np.bool_], xs: NDArray[np.float64], node: ExprAst
) -> ExprEvaluationError:
    index = int(np.flatnonzero(np.broadcast_to(bad, xs.shape))[0])
    return ExprEvaluationError(message, float(xs.flat[index]), format_expr(node))


def _evaluate(node: ExprAst, xs: NDArray[np.float64]) -> NDArray[np.float64]:
    if isinstance(node, Num):
        return np.full_like(xs, node.value)
    if isinstance(node, Var):
        return xs
    if isinstance(node, Neg):
        return -_evaluate(node.operand, xs)
    if isinstance(node, BinOp):
        left = _evaluate(node.left, xs)
        right = _evaluate(node.right, xs)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        if np.any(right == 0.0):
            raise _domain_error("division by zero", right == 0.0, xs, node)
        return left / right
    if isinstance(node, Pow):
        return _evaluate(node.base, xs) ** node.exponent
    arg = _evaluate(node.arg, xs)
    if node.func == "log" and np.any(arg <= 0.0):
        raise _domain_error("log of a non-positive number", arg <= 0.0, xs, node)
    if node.func == "sqrt" and np.any(arg < 0.0):
        raise _domain_error("sqrt of a negative number", arg < 0.0, xs, node)
    return FUNCTIONS[node.func](arg)


def evaluate_expr(node: ExprAst, x: ArrayLike) -> Any:
    """
    Evaluate an AST at a point or an array of points.

    :raises ExprEvaluationError: on a domain violation or a non-finite result,
        naming the first offending x
    """
    xs = np.asarray(x, dtype=np.float64)
    with np.errstate(all="ignore"):
        values = _evaluate(node, xs.ravel()).reshape(xs.shape)
    if not np.all(np.isfinite(values)):
        raise _domain_error("non-finite value", ~np.isfinite(values), xs, node)
    return float(values) if xs.ndim == 0 else values


def compile_expr(src: str) -> Callable[[ArrayLike], Any]:
    """Parse once and return a vectorised function of x."""
    node = parse_expr(src)

    def evaluate(x: ArrayLike) -> Any:
        return evaluate_expr(node, x)

    return evaluate
