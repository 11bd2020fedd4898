"""Expression grammar for elements, scalars and tensors.

    expr    := ['+'|'-'] tensor (('+'|'-') tensor)*
    tensor  := product (TENSOR product)*          TENSOR is '(x)', 'ox' or '⊗'
    product := power (('*' | '/' | <juxtaposition>) power)*
    power   := atom ['^' exponent]                exponent := ['-'] INT | '(' ['-'] INT ')'
    atom    := INT | SYMBOL | '(' expr ')'

Symbols: K Kb L Lb E F k kinv e f P Q q and the unit 1.  A run of letters
is split greedily into symbols, so ``KKbK`` reads as ``K*Kb*K``.  Tensor
binds looser than products and tighter than sums.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExpressionSyntaxError, MixedPresentation
from .scalars import Scalar

SYMBOLS = ("kinv", "Kb", "Lb", "K", "L", "E", "F", "k", "e", "f", "P", "Q", "q")
_TOKEN = re.compile(r"\s*(?:(\(x\))|(⊗)|(\d+)|([A-Za-z]+)|(\S))")


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*', '/'
    left: object
    right: object
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int
    pos: int = 0


@dataclass(frozen=True)
class Tensor:
    legs: tuple
    pos: int = 0


def _split_letters(run, start, text):
    if run == "ox":
        return [("TENSOR", "ox", start)]
    out = []
    i = 0
    while i < len(run):
        for s in SYMBOLS:
            if run.startswith(s, i):
                out.append(("SYM", s, start + i))
                i += len(s)
                break
        else:
            raise ExpressionSyntaxError(f"unknown symbol in {run!r}", text, start + i)
    return out


_OVERLINED = {"K\u0304": "Kb", "L\u0304": "Lb", "K\u0305": "Kb", "L\u0305": "Lb"}


def tokenize(text):
    # overlined letters are two code points, like their ASCII spellings
    for bar, ascii_name in _OVERLINED.items():
        text = text.replace(bar, ascii_name)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            pos = m.end()
            continue
        start = m.start(m.lastindex)
        if m.group(1) or m.group(2):
            tokens.append(("TENSOR", m.group(m.lastindex), start))
        elif m.group(3):
            tokens.append(("INT", int(m.group(3)), start))
        elif m.group(4):
            tokens.extend(_split_letters(m.group(4), start, text))
        else:
            ch = m.group(5)
            if ch not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.error(f"expected {kind!r}, found {tok[1] if tok[1] is not None else 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def error(self, message, pos):
        raise ExpressionSyntaxError(message, self.text, pos)

    def parse(self):
        if self.peek()[0] == "EOF":
            self.error("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok[0] != "EOF":
            self.error(f"unexpected {tok[1]!r}", tok[2])
        return node

    def expr(self):
        tok = self.peek()
        if tok[0] in "+-" and len(tok[0]) == 1:
            self.take()
            node = self.tensor()
            if tok[0] == "-":
                node = Neg(node)
        else:
            node = self.tensor()
        while self.peek()[0] in ("+", "-"):
            op = self.take()
            node = BinOp(op[0], node, self.tensor(), op[2])
        return node

    def tensor(self):
        start = self.peek()[2]
        legs = [self.product()]
        while self.peek()[0] == "TENSOR":
            self.take()
            legs.append(self.product())
        return legs[0] if len(legs) == 1 else Tensor(tuple(legs), start)

    def _starts_atom(self, tok):
        return tok[0] in ("INT", "SYM", "(")

    def product(self):
        node = self.power()
        while True:
            tok = self.peek()
            if tok[0] in ("*", "/"):
                self.take()
                node = BinOp(tok[0], node, self.power(), tok[2])
            elif self._starts_atom(tok):
                node = BinOp("*", node, self.power(), tok[2])
            else:
                return node

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            pos = self.take()[2]
            return Pow(base, self.exponent(), pos)
        return base

    def exponent(self):
        paren = False
        if self.peek()[0] == "(":
            self.take()
            paren = True
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        value = self.take("INT")[1] * sign
        if paren:
            self.take(")")
        return value

    def atom(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return Num(tok[1])
        if tok[0] == "SYM":
            self.take()
            return Sym(tok[1], tok[2])
        if tok[0] == "(":
            self.take()
            node = self.expr()
            self.take(")")
            return node
        what = "end of input" if tok[0] == "EOF" else repr(tok[1])
        self.error(f"expected a number, symbol or '(', found {what}", tok[2])


def parse(text):
    """Parse ``text`` into an expression tree."""
    return _Parser(text).parse()


# -- evaluation ---------------------------------------------------------------


def _is_scalar(v):
    return isinstance(v, (Scalar, int, Fraction))


def evaluate(node, algebra, text=""):
    """Evaluate an expression tree in ``algebra`` (or a free algebra).

    ``algebra`` needs ``field``, ``gen(symbol)`` and ``one()``; results are
    Scalars, Elements or TensorElements.
    """
    field = algebra.field

    def ev(n):
        if isinstance(n, Num):
            return field.scalar(n.value)
        if isinstance(n, Sym):
            if n.name == "q":
                return field.q
            try:
                return algebra.gen(n.name)
            except MixedPresentation as exc:
                raise MixedPresentation(f"{exc} (column {n.pos + 1})") from None
        if isinstance(n, Neg):
            return -ev(n.operand)
        if isinstance(n, Pow):
            base = ev(n.base)
            if _is_scalar(base):
                return base**n.exponent
            if n.exponent < 0:
                raise ExpressionSyntaxError("negative powers apply to scalars only", text, n.pos)
            return base**n.exponent
        if isinstance(n, Tensor):
            from .tensor import TensorElement

            legs = []
            for leg in n.legs:
                v = ev(leg)
                if _is_scalar(v):
                    v = algebra.one() * v
                legs.append(v)
            return TensorElement.pure(*legs)
        if isinstance(n, BinOp):
            a, b = ev(n.left), ev(n.right)
            if n.op == "+":
                return _add(a, b)
            if n.op == "-":
                return _add(a, -b)
            if n.op == "*":
                if _is_scalar(a) and not _is_scalar(b):
                    return b * a  # scalars are central
                return a * b
            if n.op == "/":
                if not _is_scalar(b):
                    raise ExpressionSyntaxError("only scalars can divide", text, n.pos)
                if b.is_zero():
                    from .errors import DivisionByZero

                    raise DivisionByZero(f"division by zero at column {n.pos + 1}")
                return a * b.inverse() if not _is_scalar(a) else a / b
        raise TypeError(f"unknown node {n!r}")

    return ev(node)


def _add(a, b):
    if _is_scalar(a) and not _is_scalar(b):
        return b + a
    return a + b


def parse_element(text, algebra):
    """Parse and evaluate ``text``; scalars are promoted to multiples of 1."""
    value = evaluate(parse(text), algebra, text)
    if _is_scalar(value):
        value = algebra.one() * value
    return value


class _ScalarsOnly:
    def __init__(self, field):
        self.field = field

    def gen(self, symbol):
        raise MixedPresentation(f"{symbol!r} is not a scalar")

    def one(self):
        raise MixedPresentation("tensors are not scalars")


def parse_scalar(text, field=None):
    """Parse a scalar such as ``(q^2-1)/q`` into ``field`` (default Q(q))."""
    from .scalars import GENERIC

    field = GENERIC if field is None else field
    value = evaluate(parse(text), _ScalarsOnly(field), text)
    return field.scalar(value)
