import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqpierce.algebra import Algebra, get_algebra
from uqpierce.coalgebra import coproduct_map
from uqpierce.errors import InvalidSpec
from uqpierce.quotient import (
    Ideal,
    QuotientSpec,
    build_quotient,
    from_vector,
    ideal_generators,
    left_mult_operator,
    reduce_into,
    reduce_tensor_into,
    to_vector,
    verify_coideal,
)
from uqpierce.linalg import rank
from uqpierce.sampling import random_element


@pytest.mark.parametrize("n", [3, 5])
@pytest.mark.parametrize("base,factor", [("uqsl2", 1), ("norm", 2), ("twist", 2)])
def test_dimensions(n, base, factor):
    assert build_quotient(QuotientSpec(n, base)).dimension == factor * n**3


def test_default_ideals():
    assert QuotientSpec(3, "uqsl2").ideal is Ideal.CLASSICAL
    assert QuotientSpec(3, "twist").ideal is Ideal.MERGED
    assert QuotientSpec(3, "norm", "pierce").ideal is Ideal.PIERCE


@pytest.mark.parametrize(
    "args",
    [(4, "norm"), (1, "norm"), (2, "uqsl2"), (3, "twist", "pierce"), (3, "norm", "classical"), (3, "uqsl2", "merged"), (3, "norm", "bogus")],
)
def test_invalid_specs(args):
    with pytest.raises(InvalidSpec):
        QuotientSpec(*args)


def test_build_is_cached():
    assert build_quotient(QuotientSpec(3, "norm")) is build_quotient(QuotientSpec(3, "norm"))


@pytest.mark.parametrize("base", ["norm", "twist"])
def test_reduction_of_powers(base):
    A = build_quotient(QuotientSpec(3, base))
    big = get_algebra(base)
    K, L, E = big.gen("K"), big.gen("L"), big.gen("E")
    assert reduce_into(K**3, A) == A.P()
    assert reduce_into(K**3 + L**3, A) == A.one()
    assert reduce_into(E**3, A).is_zero()
    assert reduce_into(big.gen("Kb"), A) == A.gen("K") ** 2


def test_uqsl2_reduction():
    A = build_quotient(QuotientSpec(5, "uqsl2"))
    k = A.gen("k")
    assert k**5 == A.one()
    assert A.gen("kinv") == k**4
    assert (A.gen("f") ** 5).is_zero()


@pytest.mark.parametrize("spec", [(3, "uqsl2"), (3, "twist"), (3, "norm"), (3, "norm", "pierce"), (5, "twist"), (5, "norm", "pierce")])
def test_coideal(spec):
    report = verify_coideal(QuotientSpec(*spec))
    assert report.passed, report.failures


@pytest.mark.parametrize("base", ["norm", "twist"])
def test_coproduct_of_e_power_vanishes(base):
    spec = QuotientSpec(3, base)
    A = build_quotient(spec)
    big = Algebra(base, A.field)
    d = coproduct_map(big)(big.gen("E") ** 3)
    assert not d.is_zero()
    assert reduce_tensor_into(d, A).is_zero()


def test_ideal_generators_listed():
    names = [name for name, _ in ideal_generators(QuotientSpec(3, "norm", "pierce"))]
    assert names == ["K^n - P", "L^n - Q", "E^n", "F^n"]


def test_vector_round_trip():
    A = build_quotient(QuotientSpec(3, "twist"))
    x = random_element(A, 7, terms=6)
    assert from_vector(to_vector(x, A), A) == x
    with pytest.raises(ValueError):
        from_vector([0], A)


def test_left_multiplication_is_a_representation():
    A = build_quotient(QuotientSpec(3, "norm"))
    x, y = random_element(A, 1, terms=3, degree=2), random_element(A, 2, terms=3, degree=2)
    assert left_mult_operator(x, A) @ left_mult_operator(y, A) == left_mult_operator(x * y, A)
    assert rank(left_mult_operator(A.one(), A)) == A.dimension
    assert rank(left_mult_operator(A.P(), A)) == 27


@pytest.mark.parametrize("base", ["uqsl2", "norm", "twist"])
@given(seed=st.integers(0, 10**6))
def test_quotient_associative(base, seed):
    A = build_quotient(QuotientSpec(3, base))
    x, y, z = (random_element(A, seed + i, terms=3, degree=4) for i in range(3))
    assert (x * y) * z == x * (y * z)


@pytest.mark.parametrize("base", ["norm", "twist"])
@given(seed=st.integers(0, 10**6))
def test_reduction_is_multiplicative(base, seed):
    big = get_algebra(base)
    A = build_quotient(QuotientSpec(3, base))
    x, y = random_element(big, seed, terms=3, degree=3), random_element(big, seed + 1, terms=3, degree=3)
    assert reduce_into(x * y, A) == reduce_into(x, A) * reduce_into(y, A)
