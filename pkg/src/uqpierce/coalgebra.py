"""Coproducts, counits, antipodes, convolution and the axiom suites.

The antipode of the twist algebra is an honest Hopf antipode ``S``; the
norm algebra has none, and carries instead a von Neumann regular antipode
``T`` with ``id * T * id = id`` and ``T * id * T = T`` (``*`` the
convolution).  On generators ``S`` and ``T`` are given by the same formulas.
"""

from __future__ import annotations

from .algebra import Element, Presentation, enumerate_pbw, get_algebra
from .errors import MixedPresentation
from .maps import ExtensionMode, StructureMap
from .presentations import FreeAlgebra, defining_relations
from .report import Report
from .tensor import TensorElement

_VARIANTS = {
    "norm": Presentation.NORM,
    "twist": Presentation.TWIST,
    "uqsl2": Presentation.UQSL2,
    "t": Presentation.NORM,
    "s": Presentation.TWIST,
    "s0": Presentation.UQSL2,
}


def _variant(variant):
    if isinstance(variant, Presentation):
        return variant
    try:
        return _VARIANTS[str(variant).lower()]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}") from None


def _check_variant(algebra, variant, what):
    if variant is None:
        return
    if _variant(variant) is not algebra.presentation:
        raise MixedPresentation(f"{what} variant {variant!r} does not match {algebra.presentation.value} element")


_MAPS = {}


def _cached(kind, algebra, build):
    key = (kind, algebra.key)
    m = _MAPS.get(key)
    if m is None:
        m = _MAPS[key] = build()
    return m


def _pure(*legs):
    return TensorElement.pure(*legs)


def coproduct_map(algebra):
    def build():
        g = algebra.gen
        one = algebra.one()
        if algebra.presentation is Presentation.UQSL2:
            images = {
                "k": _pure(g("k"), g("k")),
                "kinv": _pure(g("kinv"), g("kinv")),
                "e": _pure(one, g("e")) + _pure(g("e"), g("k")),
                "f": _pure(g("f"), one) + _pure(g("kinv"), g("f")),
            }
        else:
            K, Kb, L, Lb, E, F = (g(s) for s in ("K", "Kb", "L", "Lb", "E", "F"))
            if algebra.presentation is Presentation.NORM:
                images = {
                    "K": _pure(K, K),
                    "Kb": _pure(Kb, Kb),
                    "L": _pure(L, L) + _pure(L, K) + _pure(K, L),
                    "Lb": _pure(Lb, Lb) + _pure(Lb, Kb) + _pure(Kb, Lb),
                }
            else:
                images = {
                    "K": _pure(K, K) + _pure(L, L),
                    "Kb": _pure(Kb, Kb) + _pure(Lb, Lb),
                    "L": _pure(L, K) + _pure(K, L),
                    "Lb": _pure(Lb, Kb) + _pure(Kb, Lb),
                }
            images["E"] = _pure(one, E) + _pure(E, K + L)
            images["F"] = _pure(F, one) + _pure(Kb + Lb, F)
        return StructureMap("delta", algebra, images, ExtensionMode.COPRODUCT_TENSOR)

    return _cached("delta", algebra, build)


def counit_map(algebra):
    def build():
        f = algebra.field
        if algebra.presentation is Presentation.UQSL2:
            images = {"k": f.one, "kinv": f.one, "e": f.zero, "f": f.zero}
        else:
            # first of the two consistent choices: eps(P) = 1, eps(Q) = 0
            images = {"K": f.one, "Kb": f.one, "L": f.zero, "Lb": f.zero, "E": f.zero, "F": f.zero}
        return StructureMap("epsilon", algebra, images, ExtensionMode.COUNIT_SCALAR)

    return _cached("epsilon", algebra, build)


def antipode_map(algebra):
    """S (twist), T (norm) or the U_q(sl2) antipode, as an antihomomorphism."""

    def build():
        g = algebra.gen
        if algebra.presentation is Presentation.UQSL2:
            images = {"k": g("kinv"), "kinv": g("k"), "e": -(g("e") * g("kinv")), "f": -(g("k") * g("f"))}
            name = "S0"
        else:
            images = {
                "K": g("Kb"),
                "Kb": g("K"),
                "L": g("Lb"),
                "Lb": g("L"),
                "E": -(g("E") * (g("Kb") + g("Lb"))),
                "F": -((g("K") + g("L")) * g("F")),
            }
            name = "T" if algebra.presentation is Presentation.NORM else "S"
        return StructureMap(name, algebra, images, ExtensionMode.ANTIHOMOMORPHISM)

    return _cached("antipode", algebra, build)


def coproduct(x: Element, variant=None) -> TensorElement:
    _check_variant(x.algebra, variant, "coproduct")
    return coproduct_map(x.algebra)(x)


def counit(x: Element):
    return counit_map(x.algebra)(x)


def antipode(x: Element, variant=None) -> Element:
    """``variant`` is 's' (twist), 't' (norm) or None (use the element's algebra)."""
    _check_variant(x.algebra, variant, "antipode")
    return antipode_map(x.algebra)(x)


# -- linear maps and convolution ------------------------------------------------


class LinearMap:
    """Linear endomorphism given monomial by monomial (values cached)."""

    def __init__(self, name, algebra, on_monomial):
        self.name = name
        self.algebra = algebra
        self._f = on_monomial
        self._cache = {}

    def __repr__(self):
        return f"LinearMap({self.name})"

    def on_monomial(self, m):
        v = self._cache.get(m)
        if v is None:
            v = self._cache[m] = self._f(m)
        return v

    def __call__(self, x):
        if x.algebra != self.algebra:
            raise MixedPresentation(f"{self.name} is defined on {self.algebra!r}, got {x.algebra!r}")
        out = self.algebra.zero()
        for m, c in x.terms.items():
            out = out + self.on_monomial(m).scale(c)
        return out

    def star(self, other):
        return convolution_map(self, other)

    __matmul__ = star


def identity_map(algebra):
    return _cached("id", algebra, lambda: LinearMap("id", algebra, lambda m: Element(algebra, {m: algebra.field.one})))


def antipode_linear(algebra):
    s = antipode_map(algebra)
    return _cached("antipode-linear", algebra, lambda: LinearMap(s.name, algebra, s.on_monomial))


def unit_counit(algebra):
    """eta o epsilon: x -> eps(x) 1, the unit for convolution."""
    eps = counit_map(algebra)
    return _cached("eta-eps", algebra, lambda: LinearMap("eta_eps", algebra, lambda m: algebra.one().scale(eps.on_monomial(m))))


def convolution_map(f, g):
    """``mu o (f (x) g) o Delta`` as a LinearMap."""
    if f.algebra != g.algebra:
        raise MixedPresentation("convolution of maps on different algebras")
    alg = f.algebra
    delta = coproduct_map(alg)

    def on_monomial(m):
        out = alg.zero()
        for (a, b), c in delta.on_monomial(m).terms.items():
            out = out + (f.on_monomial(a) * g.on_monomial(b)).scale(c)
        return out

    return LinearMap(f"({f.name}*{g.name})", alg, on_monomial)


def convolution(f, g, x):
    """(f * g)(x) for LinearMaps f, g."""
    return convolution_map(f, g)(x)


def named_map(name, algebra):
    """Resolve 'id', 'S', 'T', 'S0', 'eps' (eta o eps) or a chain 'T*id*T'."""
    parts = [p.strip() for p in name.replace("⋆", "*").split("*")]
    maps = []
    for p in parts:
        if p == "id":
            maps.append(identity_map(algebra))
        elif p in ("eps", "eta_eps", "etaeps"):
            maps.append(unit_counit(algebra))
        elif p in ("S", "T", "S0"):
            expected = {"S": Presentation.TWIST, "T": Presentation.NORM, "S0": Presentation.UQSL2}[p]
            if algebra.presentation is not expected:
                raise MixedPresentation(f"map {p} is not defined on the {algebra.presentation.value} algebra")
            maps.append(antipode_linear(algebra))
        else:
            raise ValueError(f"unknown map {p!r} (use id, S, T, S0, eps)")
    out = maps[0]
    for m in maps[1:]:
        out = convolution_map(out, m)
    return out


# -- verification suites -----------------------------------------------------------


def _free_image(structure_map, free_element):
    """Apply a generator-defined map word by word (no normal form on the input)."""
    out = None
    for w, c in free_element.terms.items():
        v = structure_map.on_word(w) * c
        out = v if out is None else out + v
    return out


def _is_zero(v):
    return v.is_zero()


def check_relation_preservation(algebra, report=None):
    """Delta, eps and the antipode send every defining relation to zero."""
    report = report or Report("relation-preservation", algebra.presentation.value, {})
    free = FreeAlgebra(algebra.presentation, algebra.field)
    maps = (coproduct_map(algebra), counit_map(algebra), antipode_map(algebra))
    for rel in defining_relations(algebra.presentation):
        r = rel.free(free)
        for mp in maps:
            v = _free_image(mp, r)
            report.add(f"{mp.name} preserves {rel.text}", _is_zero(v), None if _is_zero(v) else f"image: {v}")
    return report


def verify_bialgebra(variant, degree_bound=6, product_degree=2):
    pres = _variant(variant)
    alg = get_algebra(pres)
    report = Report("bialgebra", pres.value, {"degree": degree_bound, "product_degree": product_degree})
    delta = coproduct_map(alg)
    eps = counit_map(alg)
    one = alg.one()
    report.check_equal("delta(1) = 1 (x) 1", delta(one), TensorElement.one(alg))
    report.check_equal("eps(1) = 1", eps(one), alg.field.one)
    basis = enumerate_pbw(pres, degree_bound)
    gens = [alg.gen(s) for s in pres.symbols]
    for m in basis:
        x = Element(alg, {m: alg.field.one})
        d = delta.on_monomial(m)
        label = str(x)
        left = d.map_legs(delta.on_monomial, None, arity=3)
        right = d.map_legs(None, delta.on_monomial, arity=3)
        report.check_equal(f"coassociativity on {label}", left, right)
        report.check_equal(f"(eps (x) id) delta on {label}", d.map_legs(eps.on_monomial, None), x)
        report.check_equal(f"(id (x) eps) delta on {label}", d.map_legs(None, eps.on_monomial), x)
        if m.degree < degree_bound:
            for g, s in zip(gens, pres.symbols):
                gx = g * x
                report.check_equal(f"delta({s}*{label}) = delta({s}) delta({label})", delta(gx), delta(g) * d)
                report.check_equal(f"eps({s}*{label}) = eps({s}) eps({label})", eps(gx), eps(g) * eps.on_monomial(m))
    small = enumerate_pbw(pres, product_degree)
    for a in small:
        xa = Element(alg, {a: alg.field.one})
        for b in small:
            xb = Element(alg, {b: alg.field.one})
            report.check_equal(f"delta multiplicative on ({xa})({xb})", delta(xa * xb), delta(xa) * delta(xb))
    check_relation_preservation(alg, report)
    return report


def verify_antipode_twist(degree_bound=6):
    alg = get_algebra(Presentation.TWIST)
    S, ident, ee = antipode_linear(alg), identity_map(alg), unit_counit(alg)
    s_id, id_s = convolution_map(S, ident), convolution_map(ident, S)
    report = Report("hopf-twist", alg.presentation.value, {"degree": degree_bound})
    for m in enumerate_pbw(Presentation.TWIST, degree_bound):
        label = str(Element(alg, {m: alg.field.one}))
        target = ee.on_monomial(m)
        report.check_equal(f"(S*id)({label}) = eps 1", s_id.on_monomial(m), target)
        report.check_equal(f"(id*S)({label}) = eps 1", id_s.on_monomial(m), target)
    report.extend(twist_identities())
    return report


def verify_vn_antipode_norm(degree_bound=6):
    alg = get_algebra(Presentation.NORM)
    T, ident = antipode_linear(alg), identity_map(alg)
    id_t = convolution_map(ident, T)
    t_id = convolution_map(T, ident)
    id_t_id = convolution_map(id_t, ident)
    t_id_t = convolution_map(t_id, T)
    report = Report("vn-norm", alg.presentation.value, {"degree": degree_bound})
    for m in enumerate_pbw(Presentation.NORM, degree_bound):
        x = Element(alg, {m: alg.field.one})
        label = str(x)
        report.check_equal(f"(id*T*id)({label}) = {label}", id_t_id.on_monomial(m), x)
        report.check_equal(f"(T*id*T)({label}) = T({label})", t_id_t.on_monomial(m), T.on_monomial(m))
    report.extend(norm_identities())
    return report


def _identity_cases(alg, map_name, expected):
    report = Report(f"identities-{map_name}", alg.presentation.value, {})
    ident, A = identity_map(alg), antipode_linear(alg)
    a_id, id_a = convolution_map(A, ident), convolution_map(ident, A)
    for sym, want in expected:
        x = alg.gen(sym)
        w = want(alg)
        report.check_equal(f"({map_name}*id)({sym}) = {w}", a_id(x), w)
        report.check_equal(f"(id*{map_name})({sym}) = {w}", id_a(x), w)
    return report


def norm_identities():
    alg = get_algebra(Presentation.NORM)
    return _identity_cases(
        alg,
        "T",
        [
            ("K", lambda a: a.P()),
            ("Kb", lambda a: a.P()),
            ("L", lambda a: a.Q()),
            ("Lb", lambda a: a.Q()),
            ("E", lambda a: a.zero()),
            ("F", lambda a: a.zero()),
        ],
    )


def twist_identities():
    alg = get_algebra(Presentation.TWIST)
    return _identity_cases(
        alg,
        "S",
        [
            ("K", lambda a: a.one()),
            ("Kb", lambda a: a.one()),
            ("L", lambda a: a.zero()),
            ("Lb", lambda a: a.zero()),
            ("E", lambda a: a.zero()),
            ("F", lambda a: a.zero()),
        ],
    )


def check_convolution_laws(variant, degree_bound=4):
    """Associativity of convolution and the unit eta o eps on monomials."""
    pres = _variant(variant)
    alg = get_algebra(pres)
    report = Report("convolution-laws", pres.value, {"degree": degree_bound})
    ident, A, ee = identity_map(alg), antipode_linear(alg), unit_counit(alg)
    maps = (ident, A, ee)
    basis = enumerate_pbw(pres, degree_bound)
    for f in maps:
        for g in maps:
            for h in maps:
                left = convolution_map(convolution_map(f, g), h)
                right = convolution_map(f, convolution_map(g, h))
                bad = [m for m in basis if not left.on_monomial(m) == right.on_monomial(m)]
                report.add(f"({f.name}*{g.name})*{h.name} = {f.name}*({g.name}*{h.name})", not bad, _first(alg, bad))
    for name, mp in (("eta_eps*id", convolution_map(ee, ident)), ("id*eta_eps", convolution_map(ident, ee))):
        bad = [m for m in basis if not mp.on_monomial(m) == Element(alg, {m: alg.field.one})]
        report.add(f"{name} = id", not bad, _first(alg, bad))
    return report


def _first(alg, bad):
    if not bad:
        return None
    return f"fails on {Element(alg, {bad[0]: alg.field.one})} and {len(bad) - 1} more"


def check_norm_no_antipode(n=3):
    """Why the norm algebra has no antipode: P is a non-invertible grouplike."""
    from .quotient import QuotientSpec, build_quotient, left_mult_operator
    from .linalg import rank

    alg = get_algebra(Presentation.NORM)
    P, Q = alg.P(), alg.Q()
    report = Report("no-antipode-norm", alg.presentation.value, {"n": n})
    report.check_equal("eps(P) = 1", counit(P), alg.field.one)
    report.check_equal("delta(P) = P (x) P", coproduct(P), TensorElement.pure(P, P))
    pq = P * Q
    report.add("P*Q = 0 and Q != 0", pq.is_zero() and not Q.is_zero(), None if pq.is_zero() else f"P*Q = {pq}")
    report.note("an antipode would need S(P)*P = eps(P) 1 = 1, but then Q = S(P)*P*Q = 0")
    A = build_quotient(QuotientSpec(n, Presentation.NORM, "merged"))
    r = rank(left_mult_operator(A.P(), A))
    dim = len(A.basis)
    report.add(f"left multiplication by P in the n={n} quotient has rank {r} < {dim}", r == n**3 and r < dim, f"rank {r}")
    report.note("eps(P) = 1")
    report.note("delta(P) = P (x) P")
    report.note("P*Q = 0 with Q != 0")
    report.note(f"rank of left multiplication by P: {r} of {dim}")
    return report
