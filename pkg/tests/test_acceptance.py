"""One test per acceptance criterion; each prints a PASS/FAIL line (see -s or the captured output)."""

import time

import pytest

from uqpierce.algebra import enumerate_pbw
from uqpierce.checks import check_phi_injectivity
from uqpierce.cli import run_suite
from uqpierce.quotient import QuotientSpec, build_quotient
from uqpierce.rmatrix import build_r_matrix, check_quasi_cocommutativity, check_ybe, kassel_coefficient
from uqpierce.scalars import CyclotomicField


def verdict(number, title, ok, seconds=None, budget=None, detail=""):
    timing = "" if seconds is None else f" [{seconds:.1f}s"
    if budget is not None:
        timing += f" / {budget}s budget"
    timing += "]" if timing else ""
    within = budget is None or seconds <= budget
    status = "PASS" if ok and within else "FAIL"
    print(f"\nACCEPTANCE {number:>2} {status}: {title}{timing}{' ' + detail if detail else ''}")
    assert ok, f"criterion {number} failed: {detail}"
    assert within, f"criterion {number} exceeded its {budget}s budget ({seconds:.1f}s)"


class timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def failures(report):
    return "; ".join(f"{c.id}: {c.witness}" for c in report.failures[:3])


def test_01_confluence():
    with timer() as t:
        report = run_suite("confluence", {"degree": 6})
    verdict(1, "rewriting systems are confluent up to overlap length 6", report.passed, t.seconds, 60, failures(report))


def test_02_pbw_counts_and_dimensions():
    counts = {p: len(enumerate_pbw(p, 1)) for p in ("norm", "uqsl2")}
    dims = {(b, n): build_quotient(QuotientSpec(n, b)).dimension for b in ("uqsl2", "norm", "twist") for n in (3, 5)}
    ok = counts == {"norm": 10, "uqsl2": 5} and all(d == (1 if b == "uqsl2" else 2) * n**3 for (b, n), d in dims.items())
    verdict(2, "PBW counts 10/5 and quotient dimensions 2n^3 / n^3", ok, detail=f"{counts} {dims}")


def test_03_presentation_equivalence():
    with timer() as t:
        report = run_suite("presentation-equivalence")
    derived = [c.id for c in report.cases if "K*E = q^2*E" in c.id and c.passed]
    ok = report.passed and len(derived) == 2
    verdict(3, "sandwiched relations reduce to 0 and the converse identities hold", ok, t.seconds, 10, failures(report))


def test_04_pierce_decomposition():
    report = run_suite("pierce-decomposition")
    verdict(4, "Pierce decomposition on 100 random norm and 100 random twist elements", report.passed, detail=failures(report))


def test_05_hopf_twist():
    with timer() as t:
        report = run_suite("hopf-twist", {"degree": 6})
    verdict(5, "(S*id) = (id*S) = eps 1 on twist monomials of degree <= 6", report.passed, t.seconds, 120, failures(report))


def test_06_vn_norm():
    with timer() as t:
        report = run_suite("vn-norm", {"degree": 6})
    ids = [c for c in report.cases if "*id)(" in c.id and "(T*id)" in c.id]
    ok = report.passed and len(ids) == 6
    verdict(6, "id*T*id = id, T*id*T = T on norm monomials of degree <= 6, plus the T identities", ok, t.seconds, 120, failures(report))


def test_07_no_antipode_norm():
    report = run_suite("no-antipode-norm", {"n": 3})
    verdict(7, "eps(P) = 1, delta(P) = P(x)P, PQ = 0, rank of P-multiplication 27 < 54", report.passed, detail=failures(report))


@pytest.mark.parametrize("n", [3, 5])
def test_08_coideal(n):
    report = run_suite("coideal", {"n": n})
    e_cases = [c for c in report.cases if c.id.lower().endswith("delta(e^n) = 0 in a (x) a")]
    ok = report.passed and len(e_cases) == 4
    verdict(8, f"ideal generators form a Hopf ideal at n={n}", ok, detail=failures(report))


def test_09_rmatrix_suite_n3():
    with timer() as t:
        reports = [
            run_suite("rmatrix-intertwine", {"n": 3}),
            run_suite("hexagon", {"n": 3}),
            run_suite("ybe", {"n": 3}),
            run_suite("r-inverse", {"n": 3}),
            run_suite("near-r-regularity", {"n": 3}),
        ]
    ok = all(r.passed for r in reports)
    kinds = {c.id.split(":")[0] for r in reports[:3] for c in r.cases}
    ok = ok and kinds == {"uqsl2/uqsl2", "twist/hopf", "norm/vnhopf", "norm/pierce"}
    verdict(9, "intertwining, hexagons, YBE, inverses and near-regularity at n=3", ok, t.seconds, 300,
            "; ".join(failures(r) for r in reports if not r.passed))


def test_10_rmatrix_hopf_n5():
    with timer() as t:
        R = build_r_matrix("hopf", 5)
        ybe = check_ybe(R)
        inter = check_quasi_cocommutativity(R)
    ok = ybe.passed and inter.passed and len(inter.cases) == 250
    verdict(10, "YBE and intertwining for the Hopf R-matrix at n=5", ok, t.seconds, 1800, failures(ybe) + failures(inter))


def test_11_phi_injectivity():
    with timer() as t:
        report = check_phi_injectivity(box=(3, 6))
        small = check_phi_injectivity(box=(3, 3))
    ok = report.passed and report.params["count"] == 343 and small.passed and small.params["count"] == 112
    verdict(11, "phi images of 343 monomials (|s| <= 3, m, n <= 6) and of 112 (m, n <= 3) are independent",
            ok, t.seconds, 120, failures(report))


@pytest.mark.parametrize("n", [3, 5])
def test_12_kassel_spot_values(n):
    F = CyclotomicField(n)
    a000 = kassel_coefficient(0, 0, 0, n)
    a100 = kassel_coefficient(1, 0, 0, n)
    ok = a000 == F.scalar(1) / n and a100 == (F.q - F.q.inverse()) / n
    verdict(12, f"A_0^00 = 1/{n} and A_1^00 = (q - q^-1)/{n}", ok, detail=f"{a000}, {a100}")
