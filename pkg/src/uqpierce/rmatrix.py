"""R-matrices of the root-of-unity quotients and their verification.

Four kinds, all built from the coefficients

    A_m^{ij} = (1/n) (q - q^-1)^m / [m]!  q^(m(m-1)/2 + 2m(i-j) - 2ij)

* ``uqsl2``:  sum A e^m k^i (x) f^m k^j                    (classical quotient)
* ``hopf``:   sum A E^m (K^i + L^i) (x) F^m (K^j + L^j)    (twist, merged ideal)
* ``vnhopf``: the same formula in the norm quotient
* ``pierce``: sum A (E^m K^i (x) F^m K^j + E^m L^i (x) F^m L^j), which is
  (P (x) P + Q (x) Q) times the vnhopf matrix.  It is not invertible; its
  partner is a Moore-Penrose inverse.

``K^0`` stands for ``P`` and ``L^0`` for ``Q``, so ``K^0 + L^0 = 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Element, KSIDE, LSIDE, NormalMonomial, Presentation
from .coalgebra import antipode_map, coproduct_map
from .errors import BlockInversionFailed, InvalidSpec, NotInvertible
from .linalg import solve
from .maps import upsilon_map
from .quotient import Ideal, QuotientSpec, build_quotient, require_coideal
from .report import Report
from .scalars import CyclotomicField
from .tensor import TensorElement


class RKind(enum.Enum):
    UQSL2 = "uqsl2"
    HOPF = "hopf"
    VNHOPF = "vnhopf"
    PIERCE = "pierce"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        aliases = {"piercenear": "pierce", "vn-hopf": "vnhopf", "vn": "vnhopf"}
        v = str(value).lower()
        try:
            return cls(aliases.get(v, v))
        except ValueError:
            raise InvalidSpec(f"unknown R-matrix kind {value!r} (uqsl2, hopf, vnhopf, pierce)") from None


_SPECS = {
    RKind.UQSL2: (Presentation.UQSL2, Ideal.CLASSICAL),
    RKind.HOPF: (Presentation.TWIST, Ideal.MERGED),
    RKind.VNHOPF: (Presentation.NORM, Ideal.MERGED),
    RKind.PIERCE: (Presentation.NORM, Ideal.PIERCE),
}


def quotient_spec(kind, n):
    base, ideal = _SPECS[RKind.parse(kind)]
    return QuotientSpec(n, base, ideal)


def kassel_coefficient(m, i, j, n):
    if not (0 <= m < n and 0 <= i < n and 0 <= j < n):
        raise ValueError(f"indices must lie in [0, {n}), got m={m}, i={i}, j={j}")
    F = CyclotomicField(n)
    q = F.q
    exponent = m * (m - 1) // 2 + 2 * m * (i - j) - 2 * i * j
    return (q - q.inverse()) ** m / F.quantum_factorial(m) * F.q_power(exponent) / F.scalar(n)


@dataclass
class RMatrix:
    value: TensorElement
    kind: RKind
    n: int
    algebra: object

    def __str__(self):
        return str(self.value)


def _cartan(A, side, i):
    """K^i (side 0) or L^i (side 1), with exponent 0 read as P or Q."""
    return Element(A, {NormalMonomial(side, i, 0, 0): A.field.one})


def _terms(kind, A, n):
    """Yield (coefficient, left, right) for each (m, i, j)."""
    g = A.gen
    for m in range(n):
        if A.extended:
            Em, Fm = g("E") ** m, g("F") ** m
        else:
            em, fm = g("e") ** m, g("f") ** m
        for i in range(n):
            for j in range(n):
                c = kassel_coefficient(m, i, j, n)
                if kind is RKind.UQSL2:
                    k = g("k")
                    yield c, [(em * k**i, fm * k**j)]
                elif kind is RKind.PIERCE:
                    yield c, [(Em * _cartan(A, s, i), Fm * _cartan(A, s, j)) for s in (KSIDE, LSIDE)]
                else:
                    yield c, [
                        (
                            Em * (_cartan(A, KSIDE, i) + _cartan(A, LSIDE, i)),
                            Fm * (_cartan(A, KSIDE, j) + _cartan(A, LSIDE, j)),
                        )
                    ]


def _assemble(kind, A, n):
    out = TensorElement.zero(A)
    for c, pairs in _terms(kind, A, n):
        for a, b in pairs:
            out = out + TensorElement.pure(a, b).scale(c)
    return out


_CACHE = {}


def build_r_matrix(kind, n) -> RMatrix:
    kind = RKind.parse(kind)
    key = (kind, n)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    spec = quotient_spec(kind, n)
    require_coideal(spec)
    A = build_quotient(spec)
    value = _assemble(kind, A, n)
    if kind is RKind.PIERCE:
        vn = build_r_matrix(RKind.VNHOPF, n).value
        P, Q = A.P(), A.Q()
        proj = TensorElement.pure(P, P) + TensorElement.pure(Q, Q)
        if not proj * vn == value:
            raise AssertionError("pierce R-matrix differs from (P(x)P + Q(x)Q) R_vnhopf")
    R = RMatrix(value, kind, n, A)
    _CACHE[key] = R
    return R


# -- verification -------------------------------------------------------------------


def check_quasi_cocommutativity(R: RMatrix, basis=None) -> Report:
    """Delta^cop(b) R = R Delta(b) for every quotient basis element b."""
    A = R.algebra
    delta = coproduct_map(A)
    report = Report("rmatrix-intertwine", A.presentation.value, {"n": R.n, "kind": R.kind.value})
    for m in A.basis if basis is None else basis:
        d = delta.on_monomial(m)
        b = Element(A, {m: A.field.one})
        report.check_equal(f"delta^cop({b}) R = R delta({b})", d.flip() * R.value, R.value * d)
    return report


def _legs(R):
    t = R.value
    return t.embed((0, 1)), t.embed((0, 2)), t.embed((1, 2))


def _block_projector3(A):
    P, Q = A.P(), A.Q()
    return TensorElement.pure(P, P, P) + TensorElement.pure(Q, Q, Q)


def check_hexagon(R: RMatrix) -> Report:
    """(Delta (x) id)(R) = R13 R23 and (id (x) Delta)(R) = R13 R12.

    For the pierce kind the identities hold after projecting onto the
    P(x)P(x)P and Q(x)Q(x)Q blocks; the unprojected form fails because
    Delta(Q) leaks into P(x)Q + Q(x)P.  Both outcomes are recorded.
    """
    A = R.algebra
    delta = coproduct_map(A)
    report = Report("hexagon", A.presentation.value, {"n": R.n, "kind": R.kind.value})
    r12, r13, r23 = _legs(R)
    left1 = R.value.map_legs(delta.on_monomial, None, arity=3)
    right1 = r13 * r23
    left2 = R.value.map_legs(None, delta.on_monomial, arity=3)
    right2 = r13 * r12
    if R.kind is RKind.PIERCE:
        pi = _block_projector3(A)
        report.check_equal("(delta (x) id)(R) = R13 R23 on the PPP and QQQ blocks", pi * left1, right1)
        report.check_equal("(id (x) delta)(R) = R13 R12 on the PPP and QQQ blocks", pi * left2, right2)
        report.note(f"unprojected (delta (x) id)(R) = R13 R23: {left1 == right1}")
        report.note(f"unprojected (id (x) delta)(R) = R13 R12: {left2 == right2}")
    else:
        report.check_equal("(delta (x) id)(R) = R13 R23", left1, right1)
        report.check_equal("(id (x) delta)(R) = R13 R12", left2, right2)
    return report


def check_ybe(R: RMatrix) -> Report:
    A = R.algebra
    report = Report("ybe", A.presentation.value, {"n": R.n, "kind": R.kind.value})
    r12, r13, r23 = _legs(R)
    report.check_equal("R12 R13 R23 = R23 R13 R12", r12 * r13 * r23, r23 * r13 * r12)
    return report


def _tensor_basis_solve(R):
    """Exact solve of R X = 1 (x) 1 over the tensor-square basis."""
    A = R.algebra
    t = R.value
    index = {}
    columns = []
    keys = [(a, b) for a in A.basis for b in A.basis]
    for key in keys:
        col = {}
        for k2, c in (t * TensorElement(A, 2, {key: A.field.one})).terms.items():
            col[index.setdefault(k2, len(index))] = c
        columns.append(col)
    target = {}
    for k2, c in TensorElement.one(A).terms.items():
        target[index.setdefault(k2, len(index))] = c
    x = solve(columns, target)
    if x is None:
        return None
    return TensorElement(A, 2, {keys[j]: c for j, c in x.items()})


def invert_r(R: RMatrix, fallback=True) -> TensorElement:
    """(antipode (x) id)(R), checked against R; exact solve if that fails."""
    if R.kind is RKind.PIERCE:
        raise NotInvertible("the pierce near-R-matrix is not invertible; use moore_penrose")
    A = R.algebra
    one = TensorElement.one(A)
    anti = antipode_map(A)
    cand = R.value.map_legs(anti.on_monomial, None)
    if R.value * cand == one and cand * R.value == one:
        return cand
    if not fallback:
        raise NotInvertible(f"(antipode (x) id)(R) is not an inverse for kind {R.kind.value}")
    x = _tensor_basis_solve(R)
    if x is None or not (x * R.value == one):
        raise NotInvertible(f"R of kind {R.kind.value} has no two-sided inverse")
    return x


def pierce_blocks(R: RMatrix):
    A = R.algebra
    P, Q = A.P(), A.Q()
    return TensorElement.pure(P, P) * R.value, TensorElement.pure(Q, Q) * R.value


def moore_penrose(R: RMatrix):
    """Blockwise partner R^+ = R_PP^+ + R_QQ^+ with R_XX^+ = (T (x) id)(R_XX)."""
    if R.kind is not RKind.PIERCE:
        raise InvalidSpec("moore_penrose applies to the pierce near-R-matrix")
    A = R.algebra
    anti = antipode_map(A)
    P, Q = A.P(), A.Q()
    out = TensorElement.zero(A)
    for X, block in zip((P, Q), pierce_blocks(R)):
        proj = TensorElement.pure(X, X)
        inv = block.map_legs(anti.on_monomial, None)
        if not (block * inv == proj and inv * block == proj):
            raise BlockInversionFailed(f"block inverse failed on the {'P' if X is P else 'Q'} block")
        out = out + inv
    return out


def check_near_r_regularity(R: RMatrix) -> Report:
    A = R.algebra
    report = Report("near-r-regularity", A.presentation.value, {"n": R.n, "kind": R.kind.value})
    P, Q = A.P(), A.Q()
    proj = TensorElement.pure(P, P) + TensorElement.pure(Q, Q)
    rpp, rqq = pierce_blocks(R)
    dag = moore_penrose(R)
    pp_dag = TensorElement.pure(P, P) * dag
    qq_dag = TensorElement.pure(Q, Q) * dag
    r = R.value
    report.check_equal("R_PP R_PP+ = P (x) P", rpp * pp_dag, TensorElement.pure(P, P))
    report.check_equal("R_QQ R_QQ+ = Q (x) Q", rqq * qq_dag, TensorElement.pure(Q, Q))
    report.check_equal("R R+ R = R", r * dag * r, r)
    report.check_equal("R+ R R+ = R+", dag * r * dag, dag)
    report.check_equal("R R+ = P (x) P + Q (x) Q", r * dag, proj)
    report.check_equal("R+ R = P (x) P + Q (x) Q", dag * r, proj)
    report.add("R R+ != 1 (x) 1", not (r * dag == TensorElement.one(A)))
    blocks = r.leg_blocks()
    report.add("support avoids P(x)Q and Q(x)P", blocks <= {(KSIDE, KSIDE), (LSIDE, LSIDE)}, f"blocks {sorted(blocks)}")
    ups = upsilon_map(A)
    report.check_equal("(Y (x) Y)(R_PP) = R_QQ", rpp.map_legs(ups.on_monomial, ups.on_monomial), rqq)
    return report


def check_inverse(R: RMatrix) -> Report:
    A = R.algebra
    report = Report("r-inverse", A.presentation.value, {"n": R.n, "kind": R.kind.value})
    inv = invert_r(R)
    one = TensorElement.one(A)
    report.check_equal("R R^-1 = 1 (x) 1", R.value * inv, one)
    report.check_equal("R^-1 R = 1 (x) 1", inv * R.value, one)
    anti = antipode_map(A)
    report.check_equal("R^-1 = (antipode (x) id)(R)", inv, R.value.map_legs(anti.on_monomial, None))
    return report


def check_m0_slice(R: RMatrix) -> Report:
    """The m = 0 part of R against (1/n) sum_{i,j} q^(-2ij) C_i (x) C_j by a separate loop."""
    A = R.algebra
    n = R.n
    F = A.field
    report = Report("m0-slice", A.presentation.value, {"n": n, "kind": R.kind.value})
    got = TensorElement(A, 2, {t: c for t, c in R.value.terms.items() if t[0].j == 0 and t[1].k == 0})
    want = TensorElement.zero(A)
    inv_n = F.scalar(n).inverse()
    for i in range(n):
        for j in range(n):
            c = F.q_power(-2 * i * j) * inv_n
            if R.kind is RKind.UQSL2:
                pairs = [(A.gen("k") ** i, A.gen("k") ** j)]
            elif R.kind is RKind.PIERCE:
                pairs = [(_cartan(A, s, i), _cartan(A, s, j)) for s in (KSIDE, LSIDE)]
            else:
                pairs = [(_cartan(A, KSIDE, i) + _cartan(A, LSIDE, i), _cartan(A, KSIDE, j) + _cartan(A, LSIDE, j))]
            for a, b in pairs:
                want = want + TensorElement.pure(a, b).scale(c)
    report.check_equal("m = 0 slice", got, want)
    return report


def r_matrix_triplets(R: RMatrix):
    """Deterministic (left, right, coefficient) strings."""
    from .printing import format_monomial

    return [(format_monomial(a), format_monomial(b), str(c)) for (a, b), c in R.value.items()]
