"""Sparse tensor powers (arity 2 or 3) of an algebra."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .algebra import Element, _acc, monomial_sort_key
from .errors import MixedPresentation
from .scalars import Scalar


class TensorElement:
    """Linear combination of tuples of basis monomials, one per leg."""

    __slots__ = ("algebra", "arity", "terms")

    def __init__(self, algebra, arity, terms):
        self.algebra = algebra
        self.arity = arity
        self.terms = terms

    # -- construction -----------------------------------------------------
    @classmethod
    def zero(cls, algebra, arity=2):
        return cls(algebra, arity, {})

    @classmethod
    def pure(cls, *legs):
        """``legs[0] ⊗ legs[1] ⊗ ...`` for Elements of one algebra."""
        alg = legs[0].algebra
        for x in legs[1:]:
            if x.algebra != alg:
                raise MixedPresentation("tensor legs belong to different algebras")
        out = {}
        for combo in itertools.product(*(x.terms.items() for x in legs)):
            c = combo[0][1]
            for _, v in combo[1:]:
                c = c * v
            _acc(out, tuple(m for m, _ in combo), c)
        return cls(alg, len(legs), out)

    @classmethod
    def one(cls, algebra, arity=2):
        return cls.pure(*([algebra.one()] * arity))

    @classmethod
    def from_pairs(cls, algebra, arity, pairs):
        out = {}
        for key, c in pairs:
            red = tuple(algebra.reduce_monomial(m) for m in key)
            if any(m is None for m in red):
                continue
            _acc(out, red, algebra.field.scalar(c))
        return cls(algebra, arity, out)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, TensorElement):
            raise TypeError(f"expected a TensorElement, got {type(other).__name__}")
        if other.arity != self.arity or other.algebra != self.algebra:
            raise MixedPresentation("tensor operands differ in algebra or arity")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = TensorElement.one(self.algebra, self.arity).scale(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return TensorElement(self.algebra, self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement(self.algebra, self.arity, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = TensorElement.one(self.algebra, self.arity).scale(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.algebra.field.scalar(c)
        if c.is_zero():
            return TensorElement(self.algebra, self.arity, {})
        return TensorElement(self.algebra, self.arity, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        self._check(other)
        return TensorElement(self.algebra, self.arity, _tensor_product(self, other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(self.algebra.field.scalar(other).inverse())

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.algebra == other.algebra and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def keys_sorted(self):
        return sorted(self.terms, key=lambda t: tuple(monomial_sort_key(m) for m in t))

    def items(self):
        return [(t, self.terms[t]) for t in self.keys_sorted()]

    # -- structural operations ----------------------------------------------
    def permute(self, perm):
        """Reorder legs: leg ``i`` of the result is leg ``perm[i]`` of self."""
        return TensorElement(
            self.algebra, self.arity, {tuple(t[p] for p in perm): c for t, c in self.terms.items()}
        )

    def flip(self):
        if self.arity != 2:
            raise ValueError("flip is defined on the tensor square")
        return self.permute((1, 0))

    def embed(self, legs, arity=3):
        """Place the legs of self at positions ``legs``; other positions get 1.

        ``R.embed((0, 2))`` is R_13 in the tensor cube.
        """
        if len(legs) != self.arity:
            raise ValueError("one position per leg is required")
        unit = list(self.algebra.one().terms.items())
        free = [i for i in range(arity) if i not in legs]
        out = {}
        for t, c in self.terms.items():
            for fill in itertools.product(unit, repeat=len(free)):
                key = [None] * arity
                for pos, m in zip(legs, t):
                    key[pos] = m
                coeff = c
                for pos, (m, v) in zip(free, fill):
                    key[pos] = m
                    coeff = coeff * v
                _acc(out, tuple(key), coeff)
        return TensorElement(self.algebra, arity, out)

    def map_legs(self, *maps, arity=None):
        """Apply one linear map per leg.

        Each map sends a basis monomial to an Element, a TensorElement
        (the result gains legs) or a Scalar (the leg disappears).  ``None``
        leaves a leg untouched.  ``arity`` is only consulted when self is 0.
        """
        out = {}
        width = arity
        one = self.algebra.field.one
        for t, c in self.terms.items():
            parts = []
            width = 0
            for m, f in zip(t, maps):
                if f is None:
                    w, pairs = 1, [((m,), one)]
                else:
                    w, pairs = _as_pairs(f(m))
                width += w
                parts.append(pairs)
            for combo in itertools.product(*parts):
                coeff = c
                key = ()
                for k, v in combo:
                    key += k
                    coeff = coeff * v
                _acc(out, key, coeff)
        if width is None:
            raise ValueError("arity of the image of a zero tensor is ambiguous; pass arity=")
        if width == 1:
            return Element(self.algebra, {k[0]: v for k, v in out.items()})
        if width == 0:
            return out.get((), self.algebra.field.zero)
        return TensorElement(self.algebra, width, out)

    def multiply_legs(self):
        """μ: collapse a tensor square into the algebra."""
        if self.arity != 2:
            raise ValueError("multiply_legs needs the tensor square")
        alg = self.algebra
        out = {}
        one = alg.field.one
        for (a, b), c in self.terms.items():
            for m, v in alg.mul_monomials(a, b):
                _acc(out, m, c if v is one else c * v)
        return Element(alg, out)

    def leg_blocks(self):
        """Set of side-tag tuples occurring in the support."""
        return {tuple(m.side for m in t) for t in self.terms}

    def __str__(self):
        from .printing import format_tensor

        return format_tensor(self)

    def __repr__(self):
        return f"TensorElement({self})"


def _as_pairs(value):
    if isinstance(value, Element):
        return 1, [((m,), c) for m, c in value.terms.items()]
    if isinstance(value, TensorElement):
        return value.arity, list(value.terms.items())
    if isinstance(value, Scalar):
        return 0, ([((), value)] if not value.is_zero() else [])
    raise TypeError(f"leg map returned {type(value).__name__}")


def _tensor_product(x, y):
    alg = x.algebra
    mul = alg.mul_monomials
    one = alg.field.one
    out = {}
    if x.arity == 2:
        for (a1, a2), ca in x.terms.items():
            for (b1, b2), cb in y.terms.items():
                p1 = mul(a1, b1)
                if not p1:
                    continue
                p2 = mul(a2, b2)
                if not p2:
                    continue
                cab = ca * cb
                for m1, v1 in p1:
                    c1 = cab if v1 is one else cab * v1
                    for m2, v2 in p2:
                        _acc(out, (m1, m2), c1 if v2 is one else c1 * v2)
        return out
    for ta, ca in x.terms.items():
        for tb, cb in y.terms.items():
            prods = []
            for a, b in zip(ta, tb):
                p = mul(a, b)
                if not p:
                    break
                prods.append(p)
            else:
                cab = ca * cb
                for combo in itertools.product(*prods):
                    c = cab
                    for _, v in combo:
                        if v is not one:
                            c = c * v
                    _acc(out, tuple(m for m, _ in combo), c)
    return out
