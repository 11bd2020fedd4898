"""Algebra-level suites: injectivity of phi and the Pierce decomposition."""

from __future__ import annotations

import random

from .algebra import Element, NormalMonomial, Presentation, enumerate_pbw, get_algebra, pierce_block, pierce_project
from .linalg import rank
from .maps import phi_map, upsilon_map
from .report import Report
from .sampling import random_element


def uqsl2_box(s_bound, mn_bound):
    """Monomials k^s e^m f^n with |s| <= s_bound and 0 <= m, n <= mn_bound."""
    return [
        NormalMonomial(None, s, m, k)
        for s in range(-s_bound, s_bound + 1)
        for m in range(mn_bound + 1)
        for k in range(mn_bound + 1)
    ]


def check_phi_injectivity(degree_bound=None, box=None, targets=(Presentation.NORM, Presentation.TWIST)):
    """Exact rank of the phi-images of a family of U_q(sl2) basis monomials.

    Either ``degree_bound`` (all monomials with |s| + m + n <= bound) or
    ``box = (s_bound, mn_bound)`` selects the family.
    """
    if (degree_bound is None) == (box is None):
        raise ValueError("give exactly one of degree_bound and box")
    if box is not None:
        monos = uqsl2_box(*box)
        params = {"s_bound": box[0], "mn_bound": box[1]}
    else:
        monos = enumerate_pbw(Presentation.UQSL2, degree_bound)
        params = {"degree": degree_bound}
    src = get_algebra(Presentation.UQSL2)
    report = Report("phi-injectivity", None, dict(params, count=len(monos)))
    for target in targets:
        tgt = get_algebra(target)
        phi = phi_map(tgt, src)
        images = [phi.on_monomial(m) for m in monos]
        r = rank([dict(x.terms) for x in images])
        report.add(f"{tgt.presentation.value}: rank {r} = {len(monos)} images", r == len(monos), f"rank {r}")
        ups = upsilon_map(tgt)
        fixed = all(ups(x) == x for x in images)
        report.add(f"{tgt.presentation.value}: images are fixed by the side flip", fixed)
    return report


def check_pierce_decomposition(samples=100, seed=0, degree=4):
    report = Report("pierce-decomposition", None, {"samples": samples, "seed": seed, "degree": degree})
    rng = random.Random(seed)

    norm = get_algebra(Presentation.NORM)
    bad = []
    for _ in range(samples):
        x = random_element(norm, rng, terms=5, degree=degree)
        pp, pq = pierce_project(x, "P", "P"), pierce_project(x, "P", "Q")
        qp, qq = pierce_project(x, "Q", "P"), pierce_project(x, "Q", "Q")
        if not (pq.is_zero() and qp.is_zero() and pp + qq == x):
            bad.append(str(x))
    report.add(f"norm: PxQ = QxP = 0 and PxP + QxQ = x on {samples} samples", not bad, bad[0] if bad else None)

    twist = get_algebra(Presentation.TWIST)
    bad = []
    seen = {blk: False for blk in ("PP", "PQ", "QP", "QQ")}
    for _ in range(samples):
        x = random_element(twist, rng, terms=5, degree=degree)
        parts = {l + r: pierce_project(x, l, r) for l in "PQ" for r in "PQ"}
        total = twist.zero()
        for name, part in parts.items():
            total = total + part
            seen[name] = seen[name] or not part.is_zero()
        if not total == x:
            bad.append(str(x))
    report.add(f"twist: the four components sum to x on {samples} samples", not bad, bad[0] if bad else None)
    for name, hit in seen.items():
        report.add(f"twist: component {name[0]}x{name[1]} is nonzero for some sample", hit)

    for pres, alg in ((Presentation.NORM, norm), (Presentation.TWIST, twist)):
        wrong = []
        for m in enumerate_pbw(pres, degree):
            x = Element(alg, {m: alg.field.one})
            blk = pierce_block(m, pres)
            for l in (0, 1):
                for r in (0, 1):
                    part = pierce_project(x, l, r)
                    if not (part == x if (l, r) == blk else part.is_zero()):
                        wrong.append(str(x))
        report.add(f"{pres.value}: every basis monomial lies in its predicted Pierce block", not wrong, wrong[0] if wrong else None)
    return report
