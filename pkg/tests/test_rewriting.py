import itertools

import pytest

from uqpierce.linalg import rank
from uqpierce.algebra import Presentation, get_algebra, normal_form
from uqpierce.presentations import defining_relations, relation_value
from uqpierce.rewriting import check_confluence, rewrite_normal_form, rewriting_system


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
def test_confluent_up_to_length_six(pres):
    report = check_confluence(pres, 6)
    assert report.passed, [c.witness for c in report.failures][:3]
    assert len(report.cases) > 0


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
def test_rules_respect_defining_relations(pres):
    alg = get_algebra(pres)
    for rel in defining_relations(pres):
        assert relation_value(rel, alg).is_zero(), rel.text


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
def test_every_rule_decreases_words(pres):
    system = rewriting_system(pres)
    for rule in system.rules:
        for _, w in rule.rhs:
            assert system.sort_key(w) < system.sort_key(rule.lhs), rule


@pytest.mark.parametrize("pres", ["uqsl2", "norm", "twist"])
def test_irreducible_words_are_independent(pres):
    system = rewriting_system(pres)
    syms = Presentation.parse(pres).symbols
    irred = [w for n in range(4) for w in itertools.product(syms, repeat=n) if system.is_irreducible(w)]
    alg = get_algebra(pres)
    images = [dict(rewrite_normal_form(w, alg).terms) for w in irred]
    assert rank(images) == len(irred)


def test_reduction_is_memoised_and_stable():
    alg = get_algebra("twist")
    w = ("F", "F", "E", "K", "Lb", "E")
    assert rewrite_normal_form(w, alg) == rewrite_normal_form(w, alg) == normal_form(w, alg)


def test_known_reductions():
    alg = get_algebra("norm")
    assert rewrite_normal_form(("K", "Kb", "K"), alg) == alg.gen("K")
    assert rewrite_normal_form(("Lb", "K"), alg).is_zero()
    uq = get_algebra("uqsl2")
    assert rewrite_normal_form(("kinv", "k"), uq) == uq.one()
