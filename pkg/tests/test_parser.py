import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import elements
from uqpierce.algebra import get_algebra
from uqpierce.coalgebra import coproduct
from uqpierce.errors import DivisionByZero, ExpressionSyntaxError, MixedPresentation
from uqpierce.linalg import rank, solve
from uqpierce.parser import parse_element, parse_scalar
from uqpierce.printing import format_value
from uqpierce.scalars import GENERIC

NORM = get_algebra("norm")


def test_overlined_input():
    assert parse_element("K̄*L̄", NORM) == parse_element("Kb*Lb", NORM)


def test_juxtaposed_letters_split():
    assert parse_element("KKbK", NORM) == parse_element("K*Kb*K", NORM)


def test_scalar_parsing():
    assert str(parse_scalar("(q^2-1)/q")) == "q - q^(-1)"
    assert parse_scalar("q^(-2)*q^2") == GENERIC.one
    with pytest.raises(MixedPresentation):
        parse_scalar("K")


@pytest.mark.parametrize("sep", ["(x)", "ox", "⊗"])
def test_tensor_separators(sep):
    t = parse_element(f"K {sep} K + L {sep} L + L {sep} K + K {sep} L", NORM)
    assert t == coproduct(NORM.gen("K")) + coproduct(NORM.gen("L"))


def test_tensor_binds_tighter_than_sum():
    t = parse_element("2*K (x) E - P (x) 1", NORM)
    assert format_value(t) == "-P (x) P - P (x) Q + 2*K (x) P*E + 2*K (x) Q*E"


@pytest.mark.parametrize("text", ["K +", "K ** E", "(K", "K^x", "K $ E", ""])
def test_syntax_errors(text):
    with pytest.raises(ExpressionSyntaxError):
        parse_element(text, NORM)


def test_syntax_error_position():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_element("K + (E * )", NORM)
    assert info.value.pos == 9


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        parse_element("K/(q^2 - q*q)", NORM)


def test_mixed_symbols_rejected():
    with pytest.raises(MixedPresentation):
        parse_element("K*e", NORM)


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
@given(data=st.data(), uni=st.booleans())
def test_print_parse_round_trip(pres, data, uni):
    x = data.draw(elements(pres))
    assert parse_element(format_value(x, unicode=uni), x.algebra) == x


@pytest.mark.parametrize("pres", ["norm", "twist"])
@given(data=st.data())
def test_tensor_round_trip(pres, data):
    x = data.draw(elements(pres, terms=2, degree=2))
    assume(not x.is_zero())  # "0" reads back as an element, not a tensor
    t = coproduct(x)
    assert parse_element(format_value(t), x.algebra) == t


# -- exact linear algebra against sympy ---------------------------------------


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6))
def test_rank_matches_sympy(rows):
    vecs = [{i: GENERIC.scalar(v) for i, v in enumerate(r) if v} for r in rows]
    assert rank(vecs) == sympy.Matrix(rows).rank()


@given(
    st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3),
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
)
def test_solve_matches_sympy(cols, target):
    M = sympy.Matrix(cols).T
    columns = [{i: GENERIC.scalar(v) for i, v in enumerate(c) if v} for c in cols]
    x = solve(columns, {i: GENERIC.scalar(v) for i, v in enumerate(target) if v})
    consistent = M.rank() == M.row_join(sympy.Matrix(target)).rank()
    assert (x is not None) == consistent
    if x is not None:
        got = [sum((columns[j].get(i, GENERIC.zero) * c for j, c in x.items()), GENERIC.zero) for i in range(3)]
        assert got == [GENERIC.scalar(v) for v in target]
