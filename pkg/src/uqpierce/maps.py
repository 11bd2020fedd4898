"""Maps defined by generator images and extended (anti)multiplicatively."""

from __future__ import annotations

import enum

from .algebra import Element, Presentation, UNIT_SYMBOL, get_algebra
from .errors import MixedPresentation
from .tensor import TensorElement


class ExtensionMode(enum.Enum):
    HOMOMORPHISM = "homomorphism"
    ANTIHOMOMORPHISM = "antihomomorphism"
    COUNIT_SCALAR = "counit"
    COPRODUCT_TENSOR = "coproduct"


def _zero_like(mode, target, arity):
    if mode is ExtensionMode.COUNIT_SCALAR:
        return target.field.zero
    if mode is ExtensionMode.COPRODUCT_TENSOR:
        return TensorElement.zero(target, arity)
    return target.zero()


def _unit_like(mode, target, arity):
    if mode is ExtensionMode.COUNIT_SCALAR:
        return target.field.one
    if mode is ExtensionMode.COPRODUCT_TENSOR:
        return TensorElement.one(target, arity)
    return target.one()


class StructureMap:
    """A linear map fixed by its values on generators.

    ``images`` maps generator symbols of ``source`` to Elements of
    ``target`` (homomorphisms and antihomomorphisms), Scalars (counit) or
    TensorElements (coproduct).  Values on PBW monomials are computed by
    walking the word ``C E^j F^k`` and cached.
    """

    def __init__(self, name, source, images, mode, target=None, arity=2):
        self.name = name
        self.source = source
        self.target = target if target is not None else source
        self.mode = ExtensionMode(mode)
        self.arity = arity
        missing = set(source.presentation.symbols) - set(images)
        if missing:
            raise ValueError(f"{name}: no image for {sorted(missing)}")
        self.images = dict(images)
        self._cache = {}

    def __repr__(self):
        return f"StructureMap({self.name}, {self.mode.value})"

    def _combine(self, acc, g):
        if self.mode is ExtensionMode.ANTIHOMOMORPHISM:
            return g * acc
        return acc * g

    def image_of_symbol(self, s):
        if s == UNIT_SYMBOL:
            return _unit_like(self.mode, self.target, self.arity)
        return self.images[s]

    def on_word(self, word):
        acc = _unit_like(self.mode, self.target, self.arity)
        for s in word:
            acc = self._combine(acc, self.image_of_symbol(s))
        return acc

    def on_monomial(self, m):
        hit = self._cache.get(m)
        if hit is not None:
            return hit
        side, z, j, k = m
        ext = self.source.extended
        if k > 0:
            val = self._combine(self.on_monomial(m._replace(k=k - 1)), self.images["F" if ext else "f"])
        elif j > 0:
            val = self._combine(self.on_monomial(m._replace(j=j - 1)), self.images["E" if ext else "e"])
        elif ext:
            pos, neg = ("K", "Kb") if side == 0 else ("L", "Lb")
            if z > 0:
                g = self.images[pos]
                val = g if z == 1 else self._combine(self.on_monomial(m._replace(z=z - 1)), g)
            elif z < 0:
                g = self.images[neg]
                val = g if z == -1 else self._combine(self.on_monomial(m._replace(z=z + 1)), g)
            else:
                val = self._combine(self.images[pos], self.images[neg])
        else:
            if z > 0:
                val = self._combine(self.on_monomial(m._replace(z=z - 1)), self.images["k"])
            elif z < 0:
                val = self._combine(self.on_monomial(m._replace(z=z + 1)), self.images["kinv"])
            else:
                val = _unit_like(self.mode, self.target, self.arity)
        self._cache[m] = val
        return val

    def __call__(self, x):
        if not isinstance(x, Element):
            raise TypeError(f"{self.name} expects an Element")
        if x.algebra != self.source:
            raise MixedPresentation(f"{self.name} is defined on {self.source!r}, got {x.algebra!r}")
        out = _zero_like(self.mode, self.target, self.arity)
        for m, c in x.terms.items():
            out = out + self.on_monomial(m) * c
        return out


# -- the algebra morphisms ---------------------------------------------------


def _ext_images(alg, K, Kb, L, Lb, E=None, F=None):
    return {
        "K": K,
        "Kb": Kb,
        "L": L,
        "Lb": Lb,
        "E": alg.gen("E") if E is None else E,
        "F": alg.gen("F") if F is None else F,
    }


_MORPHISMS = {}


def _cached(key, build):
    m = _MORPHISMS.get(key)
    if m is None:
        m = _MORPHISMS[key] = build()
    return m


def upsilon_map(algebra):
    if not algebra.extended:
        raise MixedPresentation("the side flip is defined on the extended presentations")
    g = algebra.gen

    def build():
        images = _ext_images(algebra, g("L"), g("Lb"), g("K"), g("Kb"))
        return StructureMap("upsilon", algebra, images, ExtensionMode.HOMOMORPHISM)

    return _cached(("upsilon", algebra.key), build)


def upsilon(x):
    """Automorphism fixing E, F and exchanging K <-> L, Kb <-> Lb."""
    return upsilon_map(x.algebra)(x)


def phi_map(target, source=None):
    if not target.extended:
        raise MixedPresentation("phi lands in an extended presentation")
    if source is None:
        source = get_algebra(Presentation.UQSL2, target.field)
    g = target.gen

    def build():
        images = {"k": g("K") + g("L"), "kinv": g("Kb") + g("Lb"), "e": g("E"), "f": g("F")}
        return StructureMap("phi", source, images, ExtensionMode.HOMOMORPHISM, target=target)

    return _cached(("phi", source.key, target.key), build)


def phi_embed(x, target):
    """Image of a U_q(sl2) element under k -> K+L, kinv -> Kb+Lb, e -> E, f -> F."""
    if x.algebra.presentation is not Presentation.UQSL2:
        raise MixedPresentation("phi_embed expects a uqsl2 element")
    if isinstance(target, (str, Presentation)):
        target = get_algebra(target, x.algebra.field)
    return phi_map(target, x.algebra)(x)


def psi_map(algebra, a, b):
    """Isomorphism from ``algebra`` onto its (a, b)-rescaled version."""
    target = get_algebra(algebra.presentation, algebra.field, scale=(a, b))
    a = algebra.field.scalar(a)
    b = algebra.field.scalar(b)
    g = target.gen
    images = _ext_images(target, g("K") * a, g("Kb") * a.inverse(), g("L") * b, g("Lb") * b.inverse())
    return StructureMap("psi", algebra, images, ExtensionMode.HOMOMORPHISM, target=target)


def psi_rescale(a, b, x):
    """K -> aK, Kb -> Kb/a, L -> bL, Lb -> Lb/b; E, F fixed.

    The image lives in the algebra where ``aK + bL`` takes over the role
    of ``K + L`` in the commutator of E and F.
    """
    if not x.algebra.extended:
        raise MixedPresentation("psi_rescale acts on the extended presentations")
    return psi_map(x.algebra, a, b)(x)
