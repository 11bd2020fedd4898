import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from uqpierce.algebra import get_algebra
from uqpierce.coalgebra import (
    _free_image,
    antipode,
    antipode_map,
    check_convolution_laws,
    check_norm_no_antipode,
    check_relation_preservation,
    convolution,
    coproduct,
    coproduct_map,
    counit,
    identity_map,
    named_map,
    norm_identities,
    twist_identities,
    verify_antipode_twist,
    verify_bialgebra,
    verify_vn_antipode_norm,
)
from uqpierce.errors import MixedPresentation
from uqpierce.maps import ExtensionMode, StructureMap
from uqpierce.parser import parse_element
from uqpierce.presentations import FreeAlgebra, defining_relations
from uqpierce.tensor import TensorElement

NORM = get_algebra("norm")
TWIST = get_algebra("twist")


def pure(*xs):
    return TensorElement.pure(*xs)


def test_norm_coproduct_of_cartan():
    K, L = NORM.gen("K"), NORM.gen("L")
    assert coproduct(K) == pure(K, K)
    assert coproduct(L) == pure(L, L) + pure(L, K) + pure(K, L)
    assert coproduct(NORM.P()) == pure(NORM.P(), NORM.P())


def test_twist_coproduct_of_idempotents():
    P, Q = TWIST.P(), TWIST.Q()
    assert coproduct(P) == pure(P, P) + pure(Q, Q)
    assert coproduct(Q) == pure(P, Q) + pure(Q, P)


def test_coproduct_of_e():
    for alg in (NORM, TWIST):
        E, one = alg.gen("E"), alg.one()
        assert coproduct(E) == pure(one, E) + pure(E, alg.gen("K") + alg.gen("L"))


def test_counit_values():
    assert counit(NORM.P()) == NORM.field.one
    assert counit(NORM.Q()).is_zero()
    assert counit(parse_element("3*K^2 + L - E", NORM)) == NORM.field.scalar(3)


def test_antipode_on_generators():
    assert antipode(TWIST.gen("K")) == TWIST.gen("Kb")
    assert antipode(NORM.gen("E"), "t") == -(NORM.gen("E") * (NORM.gen("Kb") + NORM.gen("Lb")))
    with pytest.raises(MixedPresentation):
        antipode(NORM.gen("E"), "s")
    with pytest.raises(MixedPresentation):
        coproduct(TWIST.gen("E"), "norm")


def test_convolution_examples():
    assert convolution(named_map("T", NORM), identity_map(NORM), NORM.gen("K")) == NORM.P()
    assert convolution(named_map("S", TWIST), identity_map(TWIST), TWIST.gen("K")) == TWIST.one()
    assert named_map("T*id*T", NORM)(NORM.gen("E")) == antipode(NORM.gen("E"))
    with pytest.raises(MixedPresentation):
        named_map("S", NORM)
    with pytest.raises(ValueError):
        named_map("R", NORM)


def test_identity_tables():
    assert norm_identities().passed
    assert twist_identities().passed


@pytest.mark.parametrize("pres", ["norm", "twist", "uqsl2"])
def test_structure_maps_respect_relations(pres):
    assert check_relation_preservation(get_algebra(pres)).passed


@pytest.mark.parametrize("pres", ["norm", "twist", "uqsl2"])
def test_bialgebra_small_degree(pres):
    report = verify_bialgebra(pres, degree_bound=3, product_degree=1)
    assert report.passed, report.failures[:2]


def test_hopf_and_vn_suites_small_degree():
    assert verify_antipode_twist(3).passed
    assert verify_vn_antipode_norm(3).passed


@pytest.mark.parametrize("pres", ["norm", "twist"])
def test_convolution_laws(pres):
    assert check_convolution_laws(pres, 2).passed


def test_no_antipode_obstruction():
    report = check_norm_no_antipode(3)
    assert report.passed
    assert any("27 of 54" in f for f in report.facts)


def test_mutated_coproduct_is_caught():
    alg = NORM
    good = coproduct_map(alg)
    images = {s: good.image_of_symbol(s) for s in alg.presentation.symbols}
    L, K = alg.gen("L"), alg.gen("K")
    images["L"] = pure(L, L) + pure(K, L)  # drop one leg
    bad = StructureMap("delta", alg, images, ExtensionMode.COPRODUCT_TENSOR)
    free = FreeAlgebra(alg.presentation)
    broken = [r.text for r in defining_relations("norm") if not _free_image(bad, r.free(free)).is_zero()]
    assert broken


@pytest.mark.parametrize("pres", ["norm", "twist"])
@given(data=st.data())
def test_coproduct_is_multiplicative(pres, data):
    x, y = data.draw(elements(pres, degree=2)), data.draw(elements(pres, degree=2))
    assert coproduct(x * y) == coproduct(x) * coproduct(y)


@pytest.mark.parametrize("pres", ["norm", "twist", "uqsl2"])
@given(data=st.data())
def test_coassociative_and_counital(pres, data):
    x = data.draw(elements(pres))
    alg = x.algebra
    delta = coproduct_map(alg)
    d = coproduct(x)
    assert d.map_legs(delta.on_monomial, None, arity=3) == d.map_legs(None, delta.on_monomial, arity=3)
    assert d.map_legs(lambda m: counit(alg.element([(m, 1)])), None) == x


@pytest.mark.parametrize("pres", ["norm", "twist", "uqsl2"])
@given(data=st.data())
def test_antipode_is_antimultiplicative(pres, data):
    x, y = data.draw(elements(pres)), data.draw(elements(pres))
    S = antipode_map(x.algebra)
    assert S(x * y) == S(y) * S(x)


@given(data=st.data())
def test_twist_hopf_axiom_on_random_elements(data):
    x = data.draw(elements("twist"))
    eps_one = TWIST.one().scale(counit(x))
    assert named_map("S*id", TWIST)(x) == eps_one == named_map("id*S", TWIST)(x)


@given(data=st.data())
def test_norm_von_neumann_on_random_elements(data):
    x = data.draw(elements("norm"))
    assert named_map("id*T*id", NORM)(x) == x
    assert named_map("T*id*T", NORM)(x) == antipode(x)
