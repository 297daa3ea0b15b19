"""A small expression language for holomorphic maps.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' integer)? | '-' factor
    atom   := number | 'i' | 'pi' | 'e' | 's' | 'p' | 'z'
            | ident '(' expr ')' | '(' expr ')'
    ident  := 'exp' | 'conj'

Every subexpression free of variables is folded to a single complex literal
while parsing, so ``exp`` and ``conj`` only ever touch constants and the
resulting maps are holomorphic by construction.
"""
from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from ..errors import ExprSyntaxError, PoleHit, UnknownIdentifier

VARIABLES = ("s", "p", "z")
CONSTANTS = {"i": 1j, "pi": complex(math.pi), "e": complex(math.e)}
FUNCTIONS = {"exp": cmath.exp, "conj": lambda w: w.conjugate()}
POLE_THRESHOLD = 1e-300


@dataclass(frozen=True)
class Num:
    value: complex


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos))
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


def _byte_offset(src: str, pos: int) -> int:
    return len(src[:pos].encode("utf-8"))


def _binary(op: str, a: complex, b: complex) -> complex:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if abs(b) < POLE_THRESHOLD:
        raise PoleHit("division by zero")
    return a / b


def _power(a: complex, n: int) -> complex:
    if n < 0:
        if abs(a) < POLE_THRESHOLD:
            raise PoleHit("negative power of zero")
        return 1 / a ** (-n)
    return a ** n


def _make_binop(op, left, right):
    if isinstance(left, Num) and isinstance(right, Num):
        return Num(_binary(op, left.value, right.value))
    return BinOp(op, left, right)


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def error(self, message, tok=None, cls=ExprSyntaxError):
        tok = tok or self.peek()
        return cls(message, _byte_offset(self.src, tok[2]))

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise self.error(f"expected {value!r}, found {tok[1] or 'end of input'!r}")
        self.i += 1
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            node = _make_binop(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] in ("*", "/"):
            tok = self.take()
            right = self.factor()
            try:
                node = _make_binop(tok[1], node, right)
            except PoleHit:
                raise self.error("division by a zero constant", tok) from None
        return node

    def factor(self):
        if self.peek()[1] == "-":
            self.take()
            operand = self.factor()
            return Num(-operand.value) if isinstance(operand, Num) else Neg(operand)
        base = self.atom()
        if self.peek()[1] == "^":
            tok = self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            num = self.peek()
            if num[0] != "number" or not num[1].isdigit():
                raise self.error("exponent must be an integer literal")
            self.take()
            n = sign * int(num[1])
            if isinstance(base, Num):
                try:
                    return Num(_power(base.value, n))
                except PoleHit:
                    raise self.error("negative power of zero", tok) from None
            return Pow(base, n)
        return base

    def atom(self):
        tok = self.peek()
        kind, text = tok[0], tok[1]
        if kind == "number":
            self.take()
            return Num(complex(float(text)))
        if text == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        if kind == "name":
            self.take()
            if text in VARIABLES:
                return Var(text)
            if text in CONSTANTS:
                return Num(CONSTANTS[text])
            if text in FUNCTIONS:
                self.take("(")
                arg = self.expr()
                self.take(")")
                if not isinstance(arg, Num):
                    raise self.error(f"{text}() only accepts constant arguments", tok)
                return Num(complex(FUNCTIONS[text](arg.value)))
            raise self.error(f"unknown identifier {text!r}", tok, UnknownIdentifier)
        raise self.error(f"unexpected {text or 'end of input'!r}")


def parse(src: str) -> Expr:
    """Parse ``src`` into an expression tree (constants folded)."""
    return _Parser(src).parse()


def _format_real(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite constant {x!r}")
    return repr(float(x))


def _format_num(w: complex) -> str:
    # signed zeros are written as +0 so that text round-trips
    re_, im = w.real + 0.0, w.imag + 0.0
    if im == 0 and not math.copysign(1.0, im) < 0:
        text = _format_real(abs(re_))
        return f"(-{text})" if math.copysign(1.0, re_) < 0 else text
    sign = "-" if math.copysign(1.0, im) < 0 else "+"
    lead = _format_real(abs(re_))
    if math.copysign(1.0, re_) < 0:
        lead = "-" + lead
    return f"({lead}{sign}{_format_real(abs(im))}*i)"


def serialize(node: Expr) -> str:
    """Text that parses back to an equal tree.  Fully parenthesized."""
    if isinstance(node, Num):
        return _format_num(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return f"(-{serialize(node.operand)})"
    if isinstance(node, Pow):
        return f"({serialize(node.base)})^{node.exponent}" if node.exponent >= 0 \
            else f"({serialize(node.base)})^-{-node.exponent}"
    return f"({serialize(node.left)} {node.op} {serialize(node.right)})"


def variables(node: Expr) -> set[str]:
    """Variable names used by ``node``.  Shared subtrees are visited once."""
    seen: set[int] = set()
    names: set[str] = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if id(n) in seen:
            continue
        seen.add(id(n))
        if isinstance(n, Var):
            names.add(n.name)
        elif isinstance(n, Neg):
            stack.append(n.operand)
        elif isinstance(n, Pow):
            stack.append(n.base)
        elif isinstance(n, BinOp):
            stack.extend((n.left, n.right))
    return names


def substitute(node: Expr, env: dict[str, Expr]) -> Expr:
    """Replace variables by trees, refolding constants.

    The replacement trees are shared, not copied, so repeated substitution
    builds a DAG whose size grows additively.
    """
    memo: dict[int, Expr] = {}

    def walk(n):
        key = id(n)
        if key in memo:
            return memo[key]
        if isinstance(n, Num):
            out = n
        elif isinstance(n, Var):
            out = env.get(n.name, n)
        elif isinstance(n, Neg):
            inner = walk(n.operand)
            out = Num(-inner.value) if isinstance(inner, Num) else Neg(inner)
        elif isinstance(n, Pow):
            base = walk(n.base)
            out = Num(_power(base.value, n.exponent)) if isinstance(base, Num) else Pow(base, n.exponent)
        else:
            out = _make_binop(n.op, walk(n.left), walk(n.right))
        memo[key] = out
        return out

    return walk(node)


def _div(a: complex, b: complex) -> complex:
    if abs(b) < POLE_THRESHOLD:
        raise PoleHit("division by zero")
    return a / b


def compile_exprs(nodes, names) -> Callable[..., tuple]:
    """Straight-line Python function of ``names`` returning every node's value.

    Each distinct node object becomes one assignment, so shared subtrees are
    evaluated once.
    """
    consts: dict[str, complex] = {}
    lines: list[str] = []
    memo: dict[int, str] = {}

    def emit(n) -> str:
        key = id(n)
        if key in memo:
            return memo[key]
        if isinstance(n, Num):
            ref = f"k{len(consts)}"
            consts[ref] = n.value
            memo[key] = ref
            return ref
        if isinstance(n, Var):
            if n.name not in names:
                raise UnknownIdentifier(f"variable {n.name!r} is not an input", None)
            memo[key] = n.name
            return n.name
        if isinstance(n, Neg):
            rhs = f"-{emit(n.operand)}"
        elif isinstance(n, Pow):
            rhs = f"_pow({emit(n.base)}, {n.exponent})"
        elif n.op == "/":
            rhs = f"_div({emit(n.left)}, {emit(n.right)})"
        else:
            rhs = f"{emit(n.left)} {n.op} {emit(n.right)}"
        ref = f"t{len(lines)}"
        lines.append(f"    {ref} = {rhs}")
        memo[key] = ref
        return ref

    outs = [emit(n) for n in nodes]
    src = (f"def _compiled({', '.join(names)}):\n" + "\n".join(lines)
           + ("\n" if lines else "") + f"    return ({', '.join(outs)},)\n")
    namespace = {"_div": _div, "_pow": _power, **consts}
    exec(src, namespace)
    return namespace["_compiled"]


def compile_gradients(nodes, names) -> Callable[..., tuple]:
    """Like :func:`compile_exprs` but also returns exact partial derivatives.

    Forward-mode differentiation: every intermediate carries one tangent per
    input.  The compiled function returns ``(values, grads)`` where
    ``grads[i][j]`` is the derivative of node ``i`` with respect to ``names[j]``.
    """
    consts: dict[str, complex] = {}
    lines: list[str] = []
    memo: dict[int, tuple[str, list[str]]] = {}
    k = len(names)
    zero = ["0j"] * k

    def emit(n):
        key = id(n)
        if key in memo:
            return memo[key]
        if isinstance(n, Num):
            ref = f"k{len(consts)}"
            consts[ref] = n.value
            memo[key] = (ref, zero)
            return memo[key]
        if isinstance(n, Var):
            if n.name not in names:
                raise UnknownIdentifier(f"variable {n.name!r} is not an input", None)
            j = names.index(n.name)
            memo[key] = (n.name, ["1" if i == j else "0j" for i in range(k)])
            return memo[key]
        if isinstance(n, Neg):
            v, dv = emit(n.operand)
            ref = f"t{len(lines)}"
            val = f"-{v}"
            ders = [f"-{d}" for d in dv]
        elif isinstance(n, Pow):
            v, dv = emit(n.base)
            e = n.exponent
            ref = f"t{len(lines)}"
            val = f"_pow({v}, {e})"
            ders = ["0j" if e == 0 else f"{e} * _pow({v}, {e - 1}) * {d}" for d in dv]
        else:
            a, da = emit(n.left)
            b, db = emit(n.right)
            ref = f"t{len(lines)}"
            if n.op == "+":
                val, ders = f"{a} + {b}", [f"{x} + {y}" for x, y in zip(da, db)]
            elif n.op == "-":
                val, ders = f"{a} - {b}", [f"{x} - {y}" for x, y in zip(da, db)]
            elif n.op == "*":
                val = f"{a} * {b}"
                ders = [f"{x} * {b} + {a} * {y}" for x, y in zip(da, db)]
            else:
                val = f"_div({a}, {b})"
                ders = [f"({x} - {ref} * {y}) / {b}" for x, y in zip(da, db)]
        lines.append(f"    {ref} = {val}")
        drefs = []
        for j, d in enumerate(ders):
            drefs.append(f"{ref}_d{j}")
            lines.append(f"    {ref}_d{j} = {d}")
        memo[key] = (ref, drefs)
        return memo[key]

    outs = [emit(n) for n in nodes]
    vals = ", ".join(o[0] for o in outs)
    grads = ", ".join("(" + ", ".join(o[1]) + ",)" for o in outs)
    src = (f"def _compiled({', '.join(names)}):\n" + "\n".join(lines)
           + ("\n" if lines else "") + f"    return ({vals},), ({grads},)\n")
    namespace = {"_div": _div, "_pow": _power, **consts}
    exec(src, namespace)
    return namespace["_compiled"]


@dataclass(frozen=True)
class Jet:
    """Value, gradient and Hessian of an expression at one point."""

    value: complex
    grad: np.ndarray
    hess: np.ndarray

    def __add__(self, o):
        return Jet(self.value + o.value, self.grad + o.grad, self.hess + o.hess)

    def __sub__(self, o):
        return Jet(self.value - o.value, self.grad - o.grad, self.hess - o.hess)

    def __neg__(self):
        return Jet(-self.value, -self.grad, -self.hess)

    def __mul__(self, o):
        cross = np.outer(self.grad, o.grad)
        return Jet(self.value * o.value, self.grad * o.value + self.value * o.grad,
                   self.hess * o.value + self.value * o.hess + cross + cross.T)

    def chain(self, f0: complex, f1: complex, f2: complex) -> "Jet":
        """``phi o self`` given ``phi`` and its first two derivatives at ``self.value``."""
        return Jet(f0, f1 * self.grad, f1 * self.hess + f2 * np.outer(self.grad, self.grad))


def _jet_pow(x: Jet, e: int) -> Jet:
    if e == 0:
        return Jet(1 + 0j, 0 * x.grad, 0 * x.hess)
    v = x.value
    second = 0j if e == 1 else e * (e - 1) * _power(v, e - 2)
    return x.chain(_power(v, e), e * _power(v, e - 1), second)


def _jet_inv(x: Jet) -> Jet:
    v = x.value
    if abs(v) < POLE_THRESHOLD:
        raise PoleHit("division by zero")
    return x.chain(1 / v, -1 / v ** 2, 2 / v ** 3)


def evaluate_jets(nodes, names, args) -> list[Jet]:
    """Second-order forward-mode evaluation of ``nodes`` at ``args``."""
    k = len(names)
    zero_g, zero_h = np.zeros(k, dtype=complex), np.zeros((k, k), dtype=complex)
    memo: dict[int, Jet] = {}

    def walk(n) -> Jet:
        key = id(n)
        if key in memo:
            return memo[key]
        if isinstance(n, Num):
            out = Jet(n.value, zero_g, zero_h)
        elif isinstance(n, Var):
            if n.name not in names:
                raise UnknownIdentifier(f"variable {n.name!r} is not an input", None)
            j = names.index(n.name)
            out = Jet(complex(args[j]), np.eye(k, dtype=complex)[j], zero_h)
        elif isinstance(n, Neg):
            out = -walk(n.operand)
        elif isinstance(n, Pow):
            out = _jet_pow(walk(n.base), n.exponent)
        elif n.op == "+":
            out = walk(n.left) + walk(n.right)
        elif n.op == "-":
            out = walk(n.left) - walk(n.right)
        elif n.op == "*":
            out = walk(n.left) * walk(n.right)
        else:
            out = walk(n.left) * _jet_inv(walk(n.right))
        memo[key] = out
        return out

    return [walk(n) for n in nodes]


def evaluate(node: Expr, env: dict[str, complex]) -> complex:
    """Evaluate with variable bindings ``env``.  Raises PoleHit on division by ~0."""
    names = tuple(sorted(env))
    return compile_exprs([node], names)(*(complex(env[k]) for k in names))[0]
