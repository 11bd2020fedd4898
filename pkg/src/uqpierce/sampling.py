"""Seeded random elements for property checks."""

from __future__ import annotations

import random

from .algebra import Element, KSIDE, LSIDE, NormalMonomial, _acc


def random_scalar(field, rng):
    c = field.scalar(rng.choice([-3, -2, -1, 1, 2, 3]))
    e = rng.randint(-2, 2)
    return c * field.q_power(e) if e else c


def random_monomial(algebra, rng, degree=3):
    side = None if not algebra.extended else rng.choice((KSIDE, LSIDE))
    z = rng.randint(-degree, degree)
    rest = degree - abs(z)
    j = rng.randint(0, rest)
    k = rng.randint(0, rest - j)
    return NormalMonomial(side, z, j, k)


def random_element(algebra, rng=None, terms=4, degree=3):
    """A nonzero-ish element with up to ``terms`` monomials of degree <= ``degree``."""
    if rng is None:
        rng = random.Random()
    elif isinstance(rng, int):
        rng = random.Random(rng)
    out = {}
    for _ in range(terms):
        m = algebra.reduce_monomial(random_monomial(algebra, rng, degree))
        if m is not None:
            _acc(out, m, random_scalar(algebra.field, rng))
    return Element(algebra, out)
