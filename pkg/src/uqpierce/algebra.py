"""The three algebras, their PBW monomials, and multiplication.

A basis monomial is ``NormalMonomial(side, z, j, k)`` and stands for

* ``k^z e^j f^k`` in U_q(sl2) (``side`` is ``None``);
* ``C e^j f^k`` in the extended algebras, where the Cartan factor ``C`` is
  ``K^z`` (z > 0), ``P`` (z = 0) or ``Kb^-z`` (z < 0) on the K side
  (``side == 0``) and the same with ``L``, ``Q``, ``Lb`` on the L side.

The unit of the extended algebras is ``P + Q``.

Products are computed from closed rules rather than by rewriting words:
a Cartan factor moves left through ``E^j F^k`` picking up
``q^{2z(k-j)}`` (and, in the twisted algebra, a side flip for every
letter passed), and ``F^a E^b`` is expanded once per pair ``(a, b)``
inside the copy of U_q(sl2) generated by ``K+L``, ``Kb+Lb``, ``E``, ``F``.
:mod:`uqpierce.rewriting` re-derives the same normal forms from the
defining relations; the test-suite holds both routes against each other.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import NamedTuple

from .errors import MixedPresentation
from .scalars import GENERIC, Scalar


class Presentation(enum.Enum):
    UQSL2 = "uqsl2"
    NORM = "norm"
    TWIST = "twist"

    @property
    def extended(self):
        return self is not Presentation.UQSL2

    @property
    def symbols(self):
        return CLASSICAL_SYMBOLS if self is Presentation.UQSL2 else EXTENDED_SYMBOLS

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown presentation {value!r}; expected uqsl2, norm or twist") from None


CLASSICAL_SYMBOLS = ("k", "kinv", "e", "f")
EXTENDED_SYMBOLS = ("K", "Kb", "L", "Lb", "E", "F")
UNIT_SYMBOL = "1"

KSIDE = 0
LSIDE = 1


class NormalMonomial(NamedTuple):
    side: int | None
    z: int
    j: int
    k: int

    @property
    def degree(self):
        return abs(self.z) + self.j + self.k


def _acc(out, m, c):
    if c.is_zero():
        return
    v = out.get(m)
    if v is None:
        out[m] = c
    else:
        v = v + c
        if v.is_zero():
            del out[m]
        else:
            out[m] = v


class Algebra:
    """One of U_q(sl2), U_{K,L,norm}, U_{K,L,twist} over a coefficient field.

    With ``n`` set the algebra is the quotient at a primitive n-th root of
    unity: Cartan exponents are read mod ``n`` and monomials with ``E`` or
    ``F`` degree at least ``n`` vanish.  See :mod:`uqpierce.quotient`.
    """

    def __init__(self, presentation, field=GENERIC, n=None, scale=None):
        self.presentation = Presentation.parse(presentation)
        self.field = field
        self.n = n
        # (a, b): aK + bL and Kb/a + Lb/b replace K + L and Kb + Lb in the
        # defining relations
        self.scale = scale
        self._fe = {}
        self._mul = {}
        self._gens = {}
        self._qpow = {}

    @property
    def key(self):
        return (self.presentation, self.field.mode, self.field.n, self.n, self.scale)

    def __eq__(self, other):
        return isinstance(other, Algebra) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        extra = f", n={self.n}" if self.n is not None else ""
        if self.scale is not None:
            extra += f", scale=({self.scale[0]}, {self.scale[1]})"
        return f"Algebra({self.presentation.value}, {self.field!r}{extra})"

    @property
    def extended(self):
        return self.presentation.extended

    # -- scalars ----------------------------------------------------------
    def scalar(self, value):
        return self.field.scalar(value)

    def qpow(self, e):
        v = self._qpow.get(e)
        if v is None:
            v = self.field.one if e == 0 else self.field.q_power(e)
            self._qpow[e] = v
        return v

    # -- monomials --------------------------------------------------------
    def reduce_monomial(self, m):
        """Canonical representative of ``m`` (``None`` if it vanishes)."""
        n = self.n
        if n is None:
            return m
        if m.j >= n or m.k >= n:
            return None
        z = m.z % n
        return m if z == m.z else NormalMonomial(m.side, z, m.j, m.k)

    def _fe_table(self, a, b):
        """``f^a e^b`` expanded as {(z, j, k): coeff} in the PBW order."""
        key = (a, b)
        hit = self._fe.get(key)
        if hit is not None:
            return hit
        one = self.field.one
        out = {}
        if a == 0:
            out[(0, b, 0)] = one
        elif b == 0:
            out[(0, 0, a)] = one
        elif a == 1:
            c0 = (self.field.q - self.field.q.inverse()).inverse()
            for (z, j, k), c in self._fe_table(1, b - 1).items():
                if k == 0:
                    _acc(out, (z, j + 1, 0), c)
                else:
                    # k^z e^j (e f - (k - k^-1)/(q - q^-1))
                    _acc(out, (z, j + 1, 1), c)
                    _acc(out, (z + 1, j, 0), -(c * c0 * self.qpow(-2 * j)))
                    _acc(out, (z - 1, j, 0), c * c0 * self.qpow(2 * j))
        else:
            for (z, j, k), c in self._fe_table(a - 1, b).items():
                # f k^z e^j f^k = q^{2z} k^z (f e^j) f^k
                cz = c * self.qpow(2 * z)
                for (z2, j2, k2), c2 in self._fe_table(1, j).items():
                    _acc(out, (z + z2, j2, k2 + k), cz * c2)
        self._fe[key] = out
        return out

    def mul_monomials(self, a, b):
        """Product of two basis monomials as a tuple of (monomial, coeff)."""
        key = (a, b)
        hit = self._mul.get(key)
        if hit is not None:
            return hit
        s1, z1, j1, k1 = a
        s2, z2, j2, k2 = b
        pres = self.presentation
        if pres is not Presentation.UQSL2:
            t = s2 if pres is Presentation.NORM or not (j1 + k1) % 2 else 1 - s2
            if t != s1:
                self._mul[key] = ()
                return ()
        base = self.qpow(2 * z2 * (k1 - j1))
        scale = None
        if self.scale is not None:
            # In the rescaled twist, a Cartan letter changing sides picks
            # up scale[new]/scale[old]; the factors telescope.
            scale = self.scale[s1]
            if s1 != s2 and z2:
                base = base * (scale / self.scale[s2]) ** z2
        red = self.reduce_monomial
        if k1 == 0 or j2 == 0:
            m = red(NormalMonomial(s1, z1 + z2, j1 + j2, k1 + k2))
            res = () if m is None else ((m, base),)
        else:
            out = {}
            for (z, j, k), c in self._fe_table(k1, j2).items():
                m = red(NormalMonomial(s1, z1 + z2 + z, j1 + j, k + k2))
                if m is not None:
                    v = base * c * self.qpow(-2 * z * j1)
                    if scale is not None and z:
                        v = v * scale**z
                    _acc(out, m, v)
            res = tuple(out.items())
        self._mul[key] = res
        return res

    # -- elements ---------------------------------------------------------
    def element(self, pairs=()):
        out = {}
        for m, c in pairs:
            m = self.reduce_monomial(m)
            if m is not None:
                _acc(out, m, self.field.scalar(c))
        return Element(self, out)

    def monomial(self, side, z=0, j=0, k=0, coeff=1):
        return self.element([(NormalMonomial(side, z, j, k), coeff)])

    def zero(self):
        return Element(self, {})

    def one(self):
        return self.gen(UNIT_SYMBOL)

    def gen(self, symbol):
        hit = self._gens.get(symbol)
        if hit is not None:
            return hit
        if self.extended:
            table = {
                "K": [(0, 1)],
                "Kb": [(0, -1)],
                "L": [(1, 1)],
                "Lb": [(1, -1)],
                "P": [(0, 0)],
                "Q": [(1, 0)],
            }
            if symbol in table:
                (side, z), = table[symbol]
                el = self.monomial(side, z)
            elif symbol == "E":
                el = self.element([(NormalMonomial(s, 0, 1, 0), 1) for s in (0, 1)])
            elif symbol == "F":
                el = self.element([(NormalMonomial(s, 0, 0, 1), 1) for s in (0, 1)])
            elif symbol == UNIT_SYMBOL:
                el = self.element([(NormalMonomial(s, 0, 0, 0), 1) for s in (0, 1)])
            else:
                raise MixedPresentation(f"symbol {symbol!r} does not belong to the {self.presentation.value} presentation")
        else:
            table = {"k": (1, 0, 0), "kinv": (-1, 0, 0), "e": (0, 1, 0), "f": (0, 0, 1), UNIT_SYMBOL: (0, 0, 0)}
            if symbol not in table:
                raise MixedPresentation(f"symbol {symbol!r} does not belong to the uqsl2 presentation")
            el = self.monomial(None, *table[symbol])
        self._gens[symbol] = el
        return el

    def P(self):
        return self.gen("P")

    def Q(self):
        return self.gen("Q")

    def check_word(self, word):
        allowed = set(self.presentation.symbols) | {UNIT_SYMBOL}
        for s in word:
            if s not in allowed:
                raise MixedPresentation(
                    f"symbol {s!r} does not belong to the {self.presentation.value} presentation"
                )

    def word(self, word):
        """Product of the generators in ``word`` (an iterable of symbols)."""
        word = tuple(word)
        self.check_word(word)
        out = self.one()
        for s in word:
            out = out * self.gen(s)
        return out

    def multiply(self, x, y):
        if x.algebra is not self or y.algebra is not self:
            if not (x.algebra == self and y.algebra == self):
                raise MixedPresentation(f"cannot multiply elements of {x.algebra!r} and {y.algebra!r}")
        one = self.field.one
        out = {}
        mul = self.mul_monomials
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                prod = mul(a, b)
                if not prod:
                    continue
                cab = ca * cb
                for m, c in prod:
                    _acc(out, m, cab if c is one else cab * c)
        return Element(self, out)


_ALGEBRAS = {}


def get_algebra(presentation, field=GENERIC, scale=None):
    """Shared algebra instance (so multiplication caches are reused).

    ``scale=(a, b)`` selects the algebra in which ``aK + bL`` and
    ``Kb/a + Lb/b`` play the roles of ``K + L`` and ``Kb + Lb``.
    """
    presentation = Presentation.parse(presentation)
    if scale is not None:
        scale = (field.scalar(scale[0]), field.scalar(scale[1]))
        if scale[0].is_zero() or scale[1].is_zero():
            from .errors import DivisionByZero

            raise DivisionByZero("rescaling parameters must be nonzero")
        if not presentation.extended:
            raise MixedPresentation("rescaling parameters apply to the extended presentations")
        if scale[0].is_one() and scale[1].is_one():
            scale = None
    key = (presentation, field.mode, field.n, None, scale)
    alg = _ALGEBRAS.get(key)
    if alg is None:
        alg = Algebra(presentation, field, scale=scale)
        _ALGEBRAS[key] = alg
    return alg


class Element:
    """Sparse linear combination of PBW monomials (immutable by convention)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    @property
    def presentation(self):
        return self.algebra.presentation

    def _same(self, other):
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise MixedPresentation(f"cannot combine elements of {self.algebra!r} and {other.algebra!r}")

    def _lift(self, other):
        if isinstance(other, Element):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction, Scalar)):
            return self.algebra.one().scale(other)
        return None

    def scale(self, c):
        c = self.algebra.field.scalar(c)
        if c.is_zero():
            return Element(self.algebra, {})
        return Element(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            _acc(out, m, c)
        return Element(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(self.algebra.field.scalar(other).inverse())
        return NotImplemented

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = self.algebra.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = self.algebra.one().scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coefficient(self, m):
        return self.terms.get(m, self.algebra.field.zero)

    def monomials(self):
        return sorted(self.terms, key=monomial_sort_key)

    def items(self):
        return [(m, self.terms[m]) for m in self.monomials()]

    def __len__(self):
        return len(self.terms)

    def degree(self):
        return max((m.degree for m in self.terms), default=0)

    def __str__(self):
        from .printing import format_element

        return format_element(self)

    def __repr__(self):
        return f"Element({self}, {self.algebra.presentation.value})"


def monomial_sort_key(m):
    return (-1 if m.side is None else m.side, m.z, m.j, m.k)


# -- module-level operations ---------------------------------------------------


def normal_form(word, algebra):
    """Reduce a word in the generators to its PBW normal form."""
    return algebra.word(word)


def multiply(x, y):
    return x.algebra.multiply(x, y)


def _side_symbol(side):
    if side in ("P", "K", KSIDE):
        return KSIDE
    if side in ("Q", "L", LSIDE):
        return LSIDE
    raise ValueError(f"Pierce idempotent must be P or Q, got {side!r}")


def pierce_project(x, left, right):
    """``left * x * right`` for ``left, right`` in {P, Q}."""
    alg = x.algebra
    if not alg.extended:
        raise MixedPresentation("Pierce projections need an extended presentation")
    idem = {KSIDE: alg.P(), LSIDE: alg.Q()}
    return idem[_side_symbol(left)] * x * idem[_side_symbol(right)]


def pierce_block(m, presentation):
    """The Pierce component (left, right) a basis monomial lies in."""
    presentation = Presentation.parse(presentation)
    if presentation is Presentation.NORM or (m.j + m.k) % 2 == 0:
        return (m.side, m.side)
    return (m.side, 1 - m.side)


def enumerate_pbw(presentation, degree_bound):
    """Basis monomials with ``|z| + j + k <= degree_bound``, sorted."""
    presentation = Presentation.parse(presentation)
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    sides = (None,) if presentation is Presentation.UQSL2 else (KSIDE, LSIDE)
    out = []
    for side in sides:
        for z in range(-degree_bound, degree_bound + 1):
            rest = degree_bound - abs(z)
            for j in range(rest + 1):
                for k in range(rest - j + 1):
                    out.append(NormalMonomial(side, z, j, k))
    out.sort(key=monomial_sort_key)
    return out
