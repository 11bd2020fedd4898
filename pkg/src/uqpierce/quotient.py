"""Finite-dimensional quotients at q a primitive n-th root of unity (n odd).

Ideals:

* classical (U_q(sl2)):  k^n - 1, e^n, f^n
* merged (norm, twist):   K^n + L^n - 1, E^n, F^n
* pierce (norm only):     K^n - P, L^n - Q, E^n, F^n

In every case the quotient map on PBW monomials reads the Cartan exponent
mod n (so Kb becomes K^(n-1)) and kills monomials with E- or F-degree >= n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Algebra, Element, KSIDE, LSIDE, NormalMonomial, Presentation, get_algebra, monomial_sort_key
from .errors import CoidealCheckFailed, InvalidSpec, MixedPresentation
from .report import Report
from .scalars import CyclotomicField
from .tensor import TensorElement


class Ideal(enum.Enum):
    CLASSICAL = "classical"
    MERGED = "merged"
    PIERCE = "pierce"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidSpec(f"unknown ideal {value!r}") from None


_ALLOWED = {
    Ideal.CLASSICAL: (Presentation.UQSL2,),
    Ideal.MERGED: (Presentation.NORM, Presentation.TWIST),
    Ideal.PIERCE: (Presentation.NORM,),
}


@dataclass(frozen=True)
class QuotientSpec:
    n: int
    base: Presentation
    ideal: Ideal = None

    def __post_init__(self):
        base = Presentation.parse(self.base)
        ideal = self.ideal
        if ideal is None:
            ideal = Ideal.CLASSICAL if base is Presentation.UQSL2 else Ideal.MERGED
        ideal = Ideal.parse(ideal)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "ideal", ideal)
        if not isinstance(self.n, int) or self.n < 3 or self.n % 2 == 0:
            raise InvalidSpec(f"n must be an odd integer >= 3, got {self.n!r}")
        if base not in _ALLOWED[ideal]:
            allowed = ", ".join(p.value for p in _ALLOWED[ideal])
            raise InvalidSpec(f"the {ideal.value} ideal applies to {allowed}, not {base.value}")


class QuotientAlgebra(Algebra):
    """The quotient as an Algebra with an enumerated basis."""

    def __init__(self, spec: QuotientSpec):
        super().__init__(spec.base, CyclotomicField(spec.n), n=spec.n)
        self.spec = spec
        n = spec.n
        sides = (None,) if spec.base is Presentation.UQSL2 else (KSIDE, LSIDE)
        self.basis = sorted(
            (NormalMonomial(s, z, j, k) for s in sides for z in range(n) for j in range(n) for k in range(n)),
            key=monomial_sort_key,
        )
        self.index = {m: i for i, m in enumerate(self.basis)}

    @property
    def dimension(self):
        return len(self.basis)

    def __repr__(self):
        return f"QuotientAlgebra({self.spec.base.value}, n={self.spec.n}, {self.spec.ideal.value})"

    def basis_element(self, i):
        return Element(self, {self.basis[i]: self.field.one})


_QUOTIENTS = {}


def ideal_generators(spec, algebra=None):
    """The ideal generators as Elements of the unreduced algebra over Q[q]/Phi_n."""
    if algebra is None:
        algebra = Algebra(spec.base, CyclotomicField(spec.n))
    n = spec.n
    g = algebra.gen
    one = algebra.one()
    if spec.ideal is Ideal.CLASSICAL:
        gens = [("k^n - 1", g("k") ** n - one), ("e^n", g("e") ** n), ("f^n", g("f") ** n)]
    elif spec.ideal is Ideal.MERGED:
        gens = [("K^n + L^n - 1", g("K") ** n + g("L") ** n - one), ("E^n", g("E") ** n), ("F^n", g("F") ** n)]
    else:
        gens = [
            ("K^n - P", g("K") ** n - g("P")),
            ("L^n - Q", g("L") ** n - g("Q")),
            ("E^n", g("E") ** n),
            ("F^n", g("F") ** n),
        ]
    return gens


def _assert_merged_is_pierce(n):
    """For the norm algebra, P (K^n + L^n - 1) = K^n - P and Q (...) = L^n - Q."""
    alg = get_algebra(Presentation.NORM)
    K, L, P, Q, one = alg.gen("K"), alg.gen("L"), alg.P(), alg.Q(), alg.one()
    merged = K**n + L**n - one
    pierce = (K**n - P, L**n - Q)
    ok = (
        P * merged == pierce[0]
        and Q * merged == pierce[1]
        and merged * P == pierce[0]
        and pierce[0] + pierce[1] == merged
    )
    if not ok:
        raise InvalidSpec(f"merged and pierce ideals differ for the norm algebra at n={n}")


def build_quotient(spec) -> QuotientAlgebra:
    if not isinstance(spec, QuotientSpec):
        spec = QuotientSpec(*spec)
    hit = _QUOTIENTS.get(spec)
    if hit is not None:
        return hit
    if spec.base is Presentation.NORM:
        _assert_merged_is_pierce(spec.n)
    A = QuotientAlgebra(spec)
    _QUOTIENTS[spec] = A
    return A


# -- coordinates and operators -----------------------------------------------------


def reduce_into(x, A):
    """Image of ``x`` (an Element over Q(q) or Q[q]/Phi_n) in the quotient A."""
    if x.algebra == A:
        return x
    if x.algebra.presentation is not A.presentation:
        raise MixedPresentation(f"cannot reduce a {x.algebra.presentation.value} element into {A!r}")
    return A.element((m, A.field.scalar(c)) for m, c in x.terms.items())


def reduce_tensor_into(t, A):
    if t.algebra.presentation is not A.presentation:
        raise MixedPresentation(f"cannot reduce a {t.algebra.presentation.value} tensor into {A!r}")
    return TensorElement.from_pairs(A, t.arity, ((k, A.field.scalar(c)) for k, c in t.terms.items()))


def to_vector(x, A):
    """Coordinates of ``x`` in the basis of A (dense list of Scalars)."""
    x = reduce_into(x, A)
    vec = [A.field.zero] * len(A.basis)
    for m, c in x.terms.items():
        vec[A.index[m]] = c
    return vec


def from_vector(vec, A):
    if len(vec) != len(A.basis):
        raise ValueError(f"vector has length {len(vec)}, quotient has dimension {len(A.basis)}")
    return A.element((A.basis[i], c) for i, c in enumerate(vec) if not A.field.scalar(c).is_zero())


def sparse_vector(x, A):
    x = reduce_into(x, A)
    return {A.index[m]: c for m, c in x.terms.items()}


class LinearOperator:
    """Sparse square matrix {(row, col): Scalar} in a quotient basis."""

    def __init__(self, dim, entries, field):
        self.dim = dim
        self.entries = entries
        self.field = field

    @classmethod
    def identity(cls, A):
        return cls(len(A.basis), {(i, i): A.field.one for i in range(len(A.basis))}, A.field)

    def columns(self):
        cols = [{} for _ in range(self.dim)]
        for (r, c), v in self.entries.items():
            cols[c][r] = v
        return cols

    def __matmul__(self, other):
        rows = {}
        for (r, c), v in other.entries.items():
            rows.setdefault(r, []).append((c, v))
        out = {}
        for (i, k), a in self.entries.items():
            for j, b in rows.get(k, ()):
                key = (i, j)
                w = out.get(key)
                w = a * b if w is None else w + a * b
                if w.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = w
        return LinearOperator(self.dim, out, self.field)

    def __add__(self, other):
        out = dict(self.entries)
        for key, v in other.entries.items():
            w = out.get(key)
            w = v if w is None else w + v
            if w.is_zero():
                out.pop(key, None)
            else:
                out[key] = w
        return LinearOperator(self.dim, out, self.field)

    def __eq__(self, other):
        return isinstance(other, LinearOperator) and self.dim == other.dim and self.entries == other.entries

    __hash__ = None

    def is_zero(self):
        return not self.entries

    def triplets(self):
        return [(r, c, str(v)) for (r, c), v in sorted(self.entries.items())]


def left_mult_operator(x, A) -> LinearOperator:
    """Matrix of y -> x*y in the basis of A."""
    x = reduce_into(x, A)
    entries = {}
    for j, b in enumerate(A.basis):
        for m, c in (x * Element(A, {b: A.field.one})).terms.items():
            entries[(A.index[m], j)] = c
    return LinearOperator(len(A.basis), entries, A.field)


# -- coideal check -------------------------------------------------------------------


def verify_coideal(spec) -> Report:
    """eps(g) = 0, Delta(g) in I(x)A + A(x)I and antipode(g) in I for each generator g."""
    from .coalgebra import antipode_map, coproduct_map, counit_map

    if not isinstance(spec, QuotientSpec):
        spec = QuotientSpec(*spec)
    A = build_quotient(spec)
    big = Algebra(spec.base, A.field)
    report = Report("coideal", spec.base.value, {"n": spec.n, "ideal": spec.ideal.value})
    delta, eps, anti = coproduct_map(big), counit_map(big), antipode_map(big)
    for name, g in ideal_generators(spec, big):
        e = eps(g)
        report.add(f"eps({name}) = 0", e.is_zero(), None if e.is_zero() else f"eps = {e}")
        d = reduce_tensor_into(delta(g), A)
        report.add(f"delta({name}) = 0 in A (x) A", d.is_zero(), None if d.is_zero() else f"residue: {d}")
        s = reduce_into(anti(g), A)
        report.add(f"{anti.name}({name}) = 0 in A", s.is_zero(), None if s.is_zero() else f"residue: {s}")
    return report


def require_coideal(spec):
    report = verify_coideal(spec)
    if not report.passed:
        bad = "; ".join(c.id for c in report.failures)
        raise CoidealCheckFailed(f"ideal of {spec} is not a Hopf ideal: {bad}")
    return report
