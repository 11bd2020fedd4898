"""Exact coefficients: the rational function field Q(q) and Q[q]/Phi_n(q).

Two representations share the :class:`Scalar` front end.

* Generic mode stores ``q^low * N(q) / D(q)`` with integer polynomials
  ``N``, ``D``, both with nonzero constant term, ``gcd(N, D) = 1`` over
  ``Z[q]`` and ``D`` having positive leading coefficient.  Powers of ``q``
  never sit in the denominator.
* Cyclotomic mode stores a coefficient vector of length ``phi(n)`` over
  ``Z`` together with a positive integer denominator, reduced mod
  ``Phi_n``.  Inverses are resolved through the extended Euclidean
  algorithm against ``Phi_n``.

Polynomial helpers below work on plain tuples (constant term first); they
are the hot path of the whole package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DivisionByZero, InvalidSpec, ZeroQuantumInteger

# ---------------------------------------------------------------------------
# dense integer polynomial helpers


def _trim(c):
    i = len(c)
    while i and not c[i - 1]:
        i -= 1
    return tuple(c[:i])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, x in enumerate(b):
        r[i] += x
    return _trim(r)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        x = a[0]
        return tuple(x * y for y in b)
    if len(b) == 1:
        y = b[0]
        return tuple(x * y for x in a)
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return tuple(r)


def _shift(a, k):
    return (0,) * k + a if k else a


def _content(a):
    return gcd(*a) if a else 0


def _primitive(a):
    c = _content(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple(x // c for x in a)


def _prem(a, b):
    """Pseudo-remainder of ``a`` by ``b``."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while a and len(a) - 1 >= db:
        d = len(a) - 1 - db
        la = a[-1]
        a = [x * lb for x in a]
        for i, y in enumerate(b):
            a[i + d] -= la * y
        while a and not a[-1]:
            a.pop()
    return tuple(a)


def _pgcd(a, b):
    """gcd in Z[q], positive leading coefficient."""
    if not a:
        return _primitive(b) if b else ()
    if not b:
        return _primitive(a)
    c = gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else ())
        if not b:
            break
    if b:  # nonzero constant: coprime primitive parts
        a = (1,)
    return tuple(c * x for x in a)


def _pdivexact(a, b):
    """Quotient of ``a`` by ``b`` assuming ``b`` divides ``a`` in Z[q]."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    out = [0] * (len(a) - db)
    for d in range(len(a) - 1 - db, -1, -1):
        c, rem = divmod(a[d + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[d] = c
        if c:
            for i, y in enumerate(b):
                a[i + d] -= c * y
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return tuple(out)


def _laurent_strip(low, c):
    """Normalise ``q^low * c`` so that c[0] != 0."""
    c = _trim(c)
    if not c:
        return 0, ()
    i = 0
    while not c[i]:
        i += 1
    return low + i, c[i:]


# ---------------------------------------------------------------------------
# public polynomial type


class QPolynomial:
    """Laurent polynomial in ``q`` with integer coefficients (immutable)."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coefficients=None):
        if coefficients is None:
            coefficients = {}
        if not coefficients:
            self.low, self.coeffs = 0, ()
            return
        lo = min(coefficients)
        hi = max(coefficients)
        c = [0] * (hi - lo + 1)
        for e, v in coefficients.items():
            c[e - lo] += int(v)
        self.low, self.coeffs = _laurent_strip(lo, c)

    @classmethod
    def _raw(cls, low, coeffs):
        p = cls.__new__(cls)
        p.low, p.coeffs = _laurent_strip(low, coeffs)
        return p

    @property
    def coefficients(self):
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def __add__(self, other):
        m = min(self.low, other.low)
        a = _shift(self.coeffs, self.low - m)
        b = _shift(other.coeffs, other.low - m)
        return QPolynomial._raw(m, _padd(a, b))

    def __neg__(self):
        return QPolynomial._raw(self.low, _pneg(self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return QPolynomial._raw(self.low + other.low, _pmul(self.coeffs, other.coeffs))

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __str__(self):
        return _format_laurent(self.low, self.coeffs)

    def __repr__(self):
        return f"QPolynomial({self.coefficients!r})"


def _format_monomial(c, e, var="q"):
    if e == 0:
        return str(abs(c))
    power = var if e == 1 else (f"{var}^{e}" if e > 0 else f"{var}^({e})")
    return power if abs(c) == 1 else f"{abs(c)}*{power}"


def _format_laurent(low, coeffs, var="q"):
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        term = _format_monomial(c, low + i, var)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts)


# ---------------------------------------------------------------------------
# fields


class GenericField:
    """The field Q(q) of rational functions."""

    mode = "generic"
    n = None

    def __init__(self):
        self.zero = Scalar(self, (0, ()), (1,))
        self.one = Scalar(self, (0, (1,)), (1,))
        self.q = Scalar(self, (1, (1,)), (1,))

    def __repr__(self):
        return "GenericField()"

    def __reduce__(self):
        return (_generic_field, ())

    # raw operations -------------------------------------------------------
    def _normalize(self, low, num, den):
        low, num = _laurent_strip(low, num)
        if not num:
            return Scalar(self, (0, ()), (1,))
        dlow, den = _laurent_strip(0, den)
        if not den:
            raise DivisionByZero("zero denominator")
        low -= dlow
        if den != (1,):
            g = _pgcd(num, den)
            if g != (1,):
                num = _pdivexact(num, g)
                den = _pdivexact(den, g)
            if den[-1] < 0:
                num, den = _pneg(num), _pneg(den)
        return Scalar(self, (low, num), den)

    def _add(self, x, y):
        (al, a), d1 = x._a, x._b
        (bl, b), d2 = y._a, y._b
        if not a:
            return y
        if not b:
            return x
        m = al if al < bl else bl
        a = _shift(a, al - m)
        b = _shift(b, bl - m)
        if d1 == d2:
            num = _padd(a, b)
            if d1 == (1,):
                low, num = _laurent_strip(m, num)
                return Scalar(self, (low, num), d1)
            return self._normalize(m, num, d1)
        return self._normalize(m, _padd(_pmul(a, d2), _pmul(b, d1)), _pmul(d1, d2))

    def _mul(self, x, y):
        (al, a), d1 = x._a, x._b
        (bl, b), d2 = y._a, y._b
        if not a or not b:
            return self.zero
        num = _pmul(a, b)
        if d1 == (1,) and d2 == (1,):
            return Scalar(self, (al + bl, num), d1)
        return self._normalize(al + bl, num, _pmul(d1, d2))

    def _neg(self, x):
        low, a = x._a
        return Scalar(self, (low, _pneg(a)), x._b)

    def _inv(self, x):
        low, a = x._a
        if not a:
            raise DivisionByZero("inverse of zero")
        return self._normalize(-low, x._b, a)

    def _is_zero(self, x):
        return not x._a[1]

    # constructors ---------------------------------------------------------
    def scalar(self, value):
        if isinstance(value, Scalar):
            if value.field is not self:
                raise TypeError(f"cannot coerce {value.field!r} scalar into {self!r}")
            return value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Scalar(self, _laurent_strip(0, (value,)), (1,))
        if isinstance(value, Fraction):
            return self._normalize(0, (value.numerator,), (value.denominator,))
        raise TypeError(f"cannot coerce {type(value).__name__} into a scalar")

    def fraction(self, num: QPolynomial, den: QPolynomial | None = None):
        if den is None:
            return Scalar(self, (num.low, num.coeffs), (1,))
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        return self._normalize(num.low - den.low, num.coeffs, den.coeffs)

    def q_power(self, k):
        return Scalar(self, (k, (1,)), (1,))

    def quantum_integer(self, m):
        if m < 0:
            raise ValueError("quantum integers are defined for m >= 0")
        if m == 0:
            return self.zero
        c = [0] * (2 * m - 1)
        c[::2] = [1] * m
        return Scalar(self, (-(m - 1), tuple(c)), (1,))

    def quantum_factorial(self, m):
        out = self.one
        for i in range(1, m + 1):
            out = out * self.quantum_integer(i)
        return out


def _generic_field():
    return GENERIC



@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n, constant term first, by recursive division."""
    if n < 1:
        raise ValueError("n must be positive")
    num = (-1,) + (0,) * (n - 1) + (1,)
    for d in range(1, n):
        if n % d == 0:
            num = _pdivexact(num, cyclotomic_polynomial(d))
    return num


class CyclotomicField:
    """Q[q]/Phi_n(q) with q a primitive n-th root of unity; n odd, n >= 3."""

    mode = "cyclotomic"

    def __new__(cls, n):
        return _cyclotomic_field(n)

    @classmethod
    def _create(cls, n):
        if n < 3 or n % 2 == 0:
            raise InvalidSpec(
                f"root-of-unity order must be odd and >= 3 (got n={n}); "
                "even orders need small-quantum-group conventions that are not supported"
            )
        self = object.__new__(cls)
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        self.dim = len(self.phi) - 1
        self._powers = []
        for i in range(n):
            c = [0] * i + [1]
            self._powers.append(self._reduce_list(c))
        self.zero = Scalar(self, (0,) * self.dim, 1)
        self.one = Scalar(self, self._powers[0], 1)
        self.q = Scalar(self, self._powers[1 % n], 1)
        return self

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def __reduce__(self):
        return (CyclotomicField, (self.n,))

    def _reduce_list(self, r):
        r = list(r)
        dim, phi = self.dim, self.phi
        for i in range(len(r) - 1, dim - 1, -1):
            c = r[i]
            if c:
                base = i - dim
                for t in range(dim):
                    r[base + t] -= c * phi[t]
        r = r[:dim]
        r.extend([0] * (dim - len(r)))
        return tuple(r)

    def _make(self, coeffs, den):
        if den != 1:
            g = gcd(den, *coeffs)
            if g != 1:
                coeffs = tuple(x // g for x in coeffs)
                den //= g
        return Scalar(self, coeffs, den)

    def _add(self, x, y):
        a, d1 = x._a, x._b
        b, d2 = y._a, y._b
        if d1 == d2:
            return self._make(tuple(u + v for u, v in zip(a, b)), d1)
        return self._make(tuple(u * d2 + v * d1 for u, v in zip(a, b)), d1 * d2)

    def _mul(self, x, y):
        a, b = x._a, y._a
        dim = self.dim
        r = [0] * (2 * dim - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    if v:
                        r[i + j] += u * v
        return self._make(self._reduce_list(r), x._b * y._b)

    def _neg(self, x):
        return Scalar(self, tuple(-u for u in x._a), x._b)

    def _inv(self, x):
        if not any(x._a):
            raise DivisionByZero("inverse of zero")
        # extended Euclid over Q: find s with s*a = 1 mod phi
        a = [Fraction(v) for v in _trim(x._a)]
        b = [Fraction(v) for v in self.phi]
        s0, s1 = [Fraction(1)], []
        r0, r1 = a, b
        while len(r1) > 0:
            qt, rem = _qdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qsub(s0, _qmul(qt, s1))
        # r0 is a nonzero constant
        c = r0[0]
        s = [v / c for v in s0]
        s = self._reduce_fracs(s)
        den = 1
        for v in s:
            den = den * v.denominator // gcd(den, v.denominator)
        # (a/d)^-1 = d * a^-1
        coeffs = tuple(int(v * den) * x._b for v in s)
        return self._make(coeffs, den)

    def _reduce_fracs(self, r):
        r = list(r)
        dim, phi = self.dim, self.phi
        for i in range(len(r) - 1, dim - 1, -1):
            c = r[i]
            if c:
                base = i - dim
                for t in range(dim):
                    r[base + t] -= c * phi[t]
        r = r[:dim]
        r.extend([Fraction(0)] * (dim - len(r)))
        return r

    def _is_zero(self, x):
        return not any(x._a)

    # constructors ---------------------------------------------------------
    def scalar(self, value):
        if isinstance(value, Scalar):
            if value.field is self:
                return value
            if value.field is GENERIC:
                return self.reduce(value)
            raise TypeError(f"cannot coerce {value.field!r} scalar into {self!r}")
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return Scalar(self, tuple(value * u for u in self._powers[0]), 1)
        if isinstance(value, Fraction):
            return self._make(tuple(value.numerator * u for u in self._powers[0]), value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into a scalar")

    def q_power(self, k):
        return Scalar(self, self._powers[k % self.n], 1)

    def _laurent(self, low, coeffs):
        acc = [0] * self.dim
        for i, c in enumerate(coeffs):
            if c:
                p = self._powers[(low + i) % self.n]
                for t in range(self.dim):
                    acc[t] += c * p[t]
        return Scalar(self, tuple(acc), 1)

    def reduce(self, value: Scalar):
        """Image of a generic scalar; the denominator must be a unit mod Phi_n."""
        if value.field is self:
            return value
        low, num = value._a
        n = self._laurent(low, num)
        d = self._laurent(0, value._b)
        if d.is_zero():
            raise DivisionByZero(f"denominator of {value} vanishes at a primitive {self.n}-th root of unity")
        return n / d

    def fraction(self, num: QPolynomial, den: QPolynomial | None = None):
        out = self._laurent(num.low, num.coeffs)
        if den is not None:
            d = self._laurent(den.low, den.coeffs)
            out = out / d
        return out

    def quantum_integer(self, m):
        if m < 0:
            raise ValueError("quantum integers are defined for m >= 0")
        if m == 0:
            return self.zero
        c = [0] * (2 * m - 1)
        c[::2] = [1] * m
        out = self._laurent(-(m - 1), c)
        if out.is_zero():
            raise ZeroQuantumInteger(f"[{m}] vanishes at a primitive {self.n}-th root of unity")
        return out

    def quantum_factorial(self, m):
        out = self.one
        for i in range(1, m + 1):
            out = out * self.quantum_integer(i)
        return out


@lru_cache(maxsize=None)
def _cyclotomic_field(n):
    return CyclotomicField._create(n)


def _qtrim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _qdivmod(a, b):
    a = list(a)
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        out[d] = c
        for i, y in enumerate(b):
            a[i + d] -= c * y
        a = _qtrim(a)
    return _qtrim(out), a


def _qmul(a, b):
    if not a or not b:
        return []
    r = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            r[i + j] += x * y
    return _qtrim(r)


def _qsub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return _qtrim(a)


# ---------------------------------------------------------------------------


class Scalar:
    """An exact element of Q(q) or of a cyclotomic field (immutable)."""

    __slots__ = ("field", "_a", "_b")

    def __init__(self, field, a, b):
        self.field = field
        self._a = a
        self._b = b

    @property
    def mode(self):
        return self.field.mode

    @property
    def numerator(self) -> QPolynomial:
        if self.field is GENERIC:
            low, c = self._a
            return QPolynomial._raw(low, c)
        return QPolynomial._raw(0, self._a)

    @property
    def denominator(self) -> QPolynomial:
        if self.field is GENERIC:
            return QPolynomial._raw(0, self._b)
        return QPolynomial._raw(0, (self._b,))

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise TypeError(f"mixed scalar fields: {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._add(self, self.field._neg(o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._add(o, self.field._neg(self))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._mul(self, o)

    __rmul__ = __mul__

    def __neg__(self):
        return self.field._neg(self)

    def inverse(self):
        return self.field._inv(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._mul(self, self.field._inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.field._mul(o, self.field._inv(self))

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self):
        return self.field._is_zero(self)

    def __bool__(self):
        return not self.field._is_zero(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field is other.field and self._a == other._a and self._b == other._b

    def __hash__(self):
        return hash((self.field.mode, self.field.n, self._a, self._b))

    def is_one(self):
        return self == self.field.one

    def is_atomic(self):
        """True when printing needs no parentheses inside a product."""
        if self.field is GENERIC:
            return len([c for c in self._a[1] if c]) <= 1 and self._b == (1,)
        return sum(1 for c in self._a if c) <= 1 and self._b == 1

    def __str__(self):
        if self.field is GENERIC:
            low, num = self._a
            top = _format_laurent(low, num)
            if self._b == (1,):
                return top
            bottom = _format_laurent(0, self._b)
            if len([c for c in num if c]) > 1:
                top = f"({top})"
            if len(self._b) > 1:
                bottom = f"({bottom})"
            return f"{top}/{bottom}"
        top = _format_laurent(0, _trim(self._a))
        if self._b == 1:
            return top
        if sum(1 for c in self._a if c) > 1:
            top = f"({top})"
        return f"{top}/{self._b}"

    def __repr__(self):
        return f"Scalar({self}, {self.field!r})"


def as_scalar(field, value):
    return field.scalar(value)


GENERIC = GenericField()
