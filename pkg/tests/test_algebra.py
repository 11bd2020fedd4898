from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from uqpierce.algebra import (
    Element,
    KSIDE,
    LSIDE,
    NormalMonomial,
    Presentation,
    enumerate_pbw,
    get_algebra,
    normal_form,
    pierce_block,
    pierce_project,
)
from uqpierce.errors import DivisionByZero, MixedPresentation
from uqpierce.maps import phi_embed, phi_map, psi_rescale, upsilon
from uqpierce.parser import parse_element
from uqpierce.presentations import UQSL2_RELATIONS, FreeAlgebra
from uqpierce.rewriting import rewrite_normal_form

NORM = get_algebra("norm")
TWIST = get_algebra("twist")
UQ = get_algebra("uqsl2")


def el(text, alg):
    return parse_element(text, alg)


def test_cartan_collapse(extended):
    assert normal_form(["K", "Kb", "K"], extended) == extended.gen("K")


def test_cross_side_products_vanish(extended):
    assert normal_form(["K", "L"], extended).is_zero()
    for w in (["Lb", "K"], ["L", "K"], ["K", "Lb"]):
        assert normal_form(w, extended).is_zero()


def test_norm_commutator_expands_onto_four_sides():
    fe = normal_form(["F", "E"], NORM)
    expected = el("E*F - ((K+L)-(Kb+Lb))/(q-q^(-1))", NORM)
    assert fe == expected
    c = NORM.field.q - NORM.field.q.inverse()
    assert fe.coefficient(NormalMonomial(KSIDE, 1, 0, 0)) == -c.inverse()
    assert fe.coefficient(NormalMonomial(LSIDE, -1, 0, 0)) == c.inverse()
    assert fe.coefficient(NormalMonomial(KSIDE, 0, 1, 1)) == 1


def test_twist_k_past_e():
    ke = normal_form(["K", "E"], TWIST)
    el_ = normal_form(["E", "L"], TWIST)
    q2 = TWIST.field.q_power(2)
    assert ke == el_ * q2
    # in the Cartan-first basis K*E is itself a basis monomial
    assert ke == TWIST.monomial(KSIDE, 1, 1, 0)
    # E*L is the K-side monomial K*E scaled by q^-2
    assert el_ == TWIST.monomial(KSIDE, 1, 1, 0, TWIST.field.q_power(-2))


def test_norm_k_past_e():
    assert normal_form(["K", "E"], NORM) == normal_form(["E", "K"], NORM) * NORM.field.q_power(2)


def test_unit_and_idempotents(extended):
    one = extended.one()
    assert (extended.gen("K") + extended.gen("L")) * (extended.gen("Kb") + extended.gen("Lb")) == one
    assert (extended.P() * extended.Q()).is_zero()
    assert extended.P() * extended.P() == extended.P()
    assert one == extended.P() + extended.Q()
    assert str(one) == "P + Q"


def test_mixed_presentations_rejected():
    with pytest.raises(MixedPresentation):
        normal_form(["K", "k"], NORM)
    with pytest.raises(MixedPresentation):
        NORM.gen("K") * TWIST.gen("K")
    with pytest.raises(MixedPresentation):
        pierce_project(UQ.gen("k"), "P", "P")


def test_pierce_projection_examples():
    assert pierce_project(NORM.gen("E"), "P", "P") == NORM.P() * NORM.gen("E")
    assert pierce_project(TWIST.gen("E"), "P", "P").is_zero()
    for alg in (NORM, TWIST):
        assert pierce_project(alg.one(), "P", "P") == alg.P()


def test_upsilon_examples(extended):
    assert upsilon(extended.gen("K")) == extended.gen("L")
    assert upsilon(extended.P()) == extended.Q()
    assert upsilon(extended.gen("E")) == extended.gen("E")


def test_phi_examples(extended):
    assert phi_embed(UQ.gen("k"), extended) == extended.gen("K") + extended.gen("L")
    assert phi_embed(UQ.gen("kinv") * UQ.gen("k"), extended) == extended.one()
    ef = el("e*f - f*e", UQ)
    assert phi_embed(ef, extended) == el("((K+L)-(Kb+Lb))/(q-q^(-1))", extended)


def test_phi_preserves_uqsl2_relations(extended):
    phi = phi_map(extended)
    free = FreeAlgebra("uqsl2")
    for rel in UQSL2_RELATIONS:
        image = extended.zero()
        for w, c in rel.free(free).terms.items():
            image = image + phi.on_word(w).scale(c)
        assert image.is_zero(), rel.text


def test_psi_examples(extended):
    F = extended.field
    a, b = F.q + 2, F.scalar(3)
    K = extended.gen("K")
    target = psi_rescale(a, b, K).algebra
    assert psi_rescale(a, b, K) == target.gen("K").scale(a)
    assert psi_rescale(a, b, extended.P()) == target.P()
    x = el("K*E*F + Lb*F^2 - 3*Q*E", extended)
    assert psi_rescale(1, 1, x) == x
    with pytest.raises(DivisionByZero):
        psi_rescale(0, 1, K)


@pytest.mark.parametrize(
    "pres,bound,count",
    [("norm", 0, 2), ("norm", 1, 10), ("twist", 1, 10), ("uqsl2", 1, 5), ("uqsl2", 0, 1)],
)
def test_enumerate_pbw_counts(pres, bound, count):
    assert len(enumerate_pbw(pres, bound)) == count


def test_enumerate_pbw_degree_one_norm():
    names = [str(Element(NORM, {m: NORM.field.one})) for m in enumerate_pbw("norm", 1)]
    assert sorted(names) == sorted(["P", "Q", "K", "Kb", "L", "Lb", "P*E", "P*F", "Q*E", "Q*F"])
    names = [str(Element(UQ, {m: UQ.field.one})) for m in enumerate_pbw("uqsl2", 1)]
    assert sorted(names) == sorted(["1", "k", "kinv", "e", "f"])


def test_enumerate_pbw_is_deterministic():
    assert enumerate_pbw("twist", 3) == enumerate_pbw("twist", 3)


def test_norm_idempotents_are_central():
    for m in enumerate_pbw("norm", 6):
        x = Element(NORM, {m: NORM.field.one})
        assert NORM.P() * x == x * NORM.P()
        assert NORM.Q() * x == x * NORM.Q()


def test_twist_idempotents_swap_past_e():
    P, Q, E, F = TWIST.P(), TWIST.Q(), TWIST.gen("E"), TWIST.gen("F")
    assert P * E == E * Q
    assert Q * E == E * P
    assert P * F == F * Q


def test_twist_basis_parity():
    for m in enumerate_pbw("twist", 5):
        x = Element(TWIST, {m: TWIST.field.one})
        blk = pierce_block(m, "twist")
        assert pierce_project(x, blk[0], blk[1]) == x
        assert (m.j + m.k) % 2 == 0 or blk[0] != blk[1]


# -- two routes to the normal form ---------------------------------------------------


def _words(symbols, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(symbols, repeat=n)


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
def test_rewriting_agrees_with_structural_product(pres):
    alg = get_algebra(pres)
    for w in _words(Presentation.parse(pres).symbols, 4):
        assert rewrite_normal_form(w, alg) == normal_form(w, alg), w


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
@given(data=st.data())
def test_rewriting_agrees_on_long_words(pres, data):
    syms = Presentation.parse(pres).symbols
    w = data.draw(st.lists(st.sampled_from(syms), min_size=5, max_size=9))
    alg = get_algebra(pres)
    assert rewrite_normal_form(w, alg) == normal_form(w, alg)


# -- properties --------------------------------------------------------------------------


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
@given(data=st.data())
def test_multiplication_is_associative(pres, data):
    x, y, z = (data.draw(elements(pres)) for _ in range(3))
    assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
@given(data=st.data())
def test_unit_is_two_sided(pres, data):
    x = data.draw(elements(pres))
    one = x.algebra.one()
    assert one * x == x == x * one


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
@given(data=st.data())
def test_normal_form_is_idempotent(pres, data):
    alg = get_algebra(pres)
    w = data.draw(st.lists(st.sampled_from(Presentation.parse(pres).symbols), max_size=7))
    x = normal_form(w, alg)
    assert parse_element(str(x), alg) == x


@pytest.mark.parametrize("pres", ["norm", "twist"])
@given(data=st.data())
def test_upsilon_is_involutive_automorphism(pres, data):
    x, y = data.draw(elements(pres)), data.draw(elements(pres))
    assert upsilon(x * y) == upsilon(x) * upsilon(y)
    assert upsilon(upsilon(x)) == x


@pytest.mark.parametrize("pres", ["norm", "twist"])
@given(data=st.data())
def test_phi_is_multiplicative(pres, data):
    x, y = data.draw(elements("uqsl2")), data.draw(elements("uqsl2"))
    tgt = get_algebra(pres)
    assert phi_embed(x * y, tgt) == phi_embed(x, tgt) * phi_embed(y, tgt)


@pytest.mark.parametrize("pres", ["norm", "twist"])
@given(data=st.data())
def test_psi_is_multiplicative(pres, data):
    x, y = data.draw(elements(pres, degree=2)), data.draw(elements(pres, degree=2))
    F = x.algebra.field
    a, b = F.q + 1, F.scalar(-2)
    assert psi_rescale(a, b, x * y) == psi_rescale(a, b, x) * psi_rescale(a, b, y)


@given(data=st.data())
def test_norm_pierce_direct_sum(data):
    x = data.draw(elements("norm"))
    assert pierce_project(x, "P", "Q").is_zero()
    assert pierce_project(x, "Q", "P").is_zero()
    assert pierce_project(x, "P", "P") + pierce_project(x, "Q", "Q") == x


@given(data=st.data())
def test_twist_pierce_sum(data):
    x = data.draw(elements("twist"))
    total = sum((pierce_project(x, l, r) for l in "PQ" for r in "PQ"), TWIST.zero())
    assert total == x
