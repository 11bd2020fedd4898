from __future__ import annotations

import random

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from uqpierce.algebra import get_algebra
from uqpierce.sampling import random_element

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

Q_SYM = sympy.Symbol("q")


def to_sympy(s):
    """Independent view of a Scalar as a sympy rational function of q."""
    num = sum(c * Q_SYM**e for e, c in s.numerator.coefficients.items())
    den = sum(c * Q_SYM**e for e, c in s.denominator.coefficients.items())
    return sympy.sympify(num) / sympy.sympify(den)


def sympy_equal(s, expr):
    return sympy.simplify(to_sympy(s) - expr) == 0


def cyclotomic_oracle(expr, n):
    """Reduce a rational function of q modulo Phi_n with sympy alone."""
    phi = sympy.cyclotomic_poly(n, Q_SYM)
    num, den = sympy.fraction(sympy.together(expr))
    inv = sympy.invert(sympy.Poly(den, Q_SYM), sympy.Poly(phi, Q_SYM))
    return sympy.rem(sympy.expand(num * inv.as_expr()), phi, Q_SYM)


def cyclotomic_matches(s, expr, n):
    phi = sympy.cyclotomic_poly(n, Q_SYM)
    ours = sympy.rem(sympy.expand(to_sympy(s)), phi, Q_SYM)
    return sympy.expand(ours - cyclotomic_oracle(expr, n)) == 0


@st.composite
def elements(draw, presentation, terms=4, degree=3):
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    alg = get_algebra(presentation)
    return random_element(alg, random.Random(seed), terms=terms, degree=degree)


@pytest.fixture(params=["norm", "twist"])
def extended(request):
    return get_algebra(request.param)
