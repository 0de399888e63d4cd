"""Acceptance criteria, one test per criterion.

Each test prints a single PASS line (visible with -s / -rA) after asserting
the criterion at its stated tolerance; time-bounded criteria assert their
wall-clock budget too.
"""

import time
from fractions import Fraction as F
from math import comb

import pytest

from pentarc import dirichlet as dmod
from pentarc import forms, hecke, partitions, qseries, rademacher, rankincohen, verify
from pentarc.exactnum import QuadNum, bernoulli


def _report(name, detail=""):
    print(f"ACCEPTANCE {name}: PASS {detail}")


def test_01_euler_equivalence_500():
    start = time.perf_counter()
    table = partitions.partition_table(500)
    pent = [0] * 501
    k = 0
    while partitions.pentagonal(k) <= 500 or partitions.pentagonal(-k) <= 500:
        for kk in ((k, -k) if k else (0,)):
            if partitions.pentagonal(kk) <= 500:
                pent[partitions.pentagonal(kk)] = -1 if kk % 2 else 1
        k += 1
    inverse = qseries.IntQSeries(0, pent).invert()
    assert all(inverse.coeff(n) == table.p(n) for n in range(501))
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _report("1 euler-equivalence", f"({elapsed:.2f}s)")


def test_02_degenerate_brackets():
    p0 = rankincohen.eta_bracket(0, 60)
    p1 = rankincohen.eta_bracket(1, 60)
    assert all(p0.coeff(n) == (1 if n == 0 else 0) for n in range(60))
    assert all(p1.coeff(n) == 0 for n in range(60))
    _report("2 order-0/1 brackets")


def test_03_operator_series_identity():
    start = time.perf_counter()
    for nu in range(11):
        a = rankincohen.eta_bracket(nu, 60)
        b = rankincohen.eta_bracket_from_partitions(nu, 60)
        assert all(a.coeff(n) == b.coeff(n) for n in range(60)), nu
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report("3 operator-vs-series", f"({elapsed:.2f}s)")


def test_04_eisenstein_only_orders():
    for nu in (2, 3, 4, 5, 7):
        prec = 51
        bracket = rankincohen.eta_bracket(nu, prec)
        c = comb(2 * nu - 2, nu - 2)
        factor = -F(4 * nu) / bernoulli(2 * nu) * c
        for n in range(1, 51):
            assert bracket.coeff(n) == factor * partitions.sigma(2 * nu - 1, n), (nu, n)
        cusp = bracket - forms.eisenstein(2 * nu, prec).scale(c)
        assert cusp.is_zero()
    _report("4 eisenstein-only orders")


def test_05_cusp_multiplier_table():
    expected = {
        6: F(-33108590592, 691),
        8: F(-187167592415232, 3617),
        9: F(-28682634201661440, 43867),
        10: F(-8294726176465158144, 174611),
        11: F(-101475065073734516736, 77683),
        13: F(-1195065734266339700244480, 657931),
    }
    for nu, beta in expected.items():
        prec = 16
        bracket = rankincohen.eta_bracket(nu, prec)
        c = comb(2 * nu - 2, nu - 2)
        cusp = bracket - forms.eisenstein(2 * nu, prec).scale(c)
        gen = forms.cusp_generator(2 * nu, prec)
        assert cusp.agrees_with(gen.scale(beta)), nu
    _report("5 cusp multipliers")


def test_06_weight12_traces_and_congruence():
    tr = hecke.trace_series(6, 50)
    beta = F(-33108590592, 691)
    d = forms.delta(51)
    for n in range(1, 51):
        assert tr.value(n) == beta * d.coeff(n)
        assert (d.coeff(n) - partitions.sigma(11, n)) % 691 == 0
    _report("6 weight-12 traces and 691 congruence")


def test_07_weight24_traces_and_projections():
    tr = hecke.trace_series(12, 2)
    assert tr.value(1) == F(-11762326506193377107116032, 236364091)
    assert tr.value(2) == F(-22599437869751987230702829568, 236364091)
    g1, g2 = hecke.eigenform_projections(12)
    a = F(-5881163253096688553558016, 236364091)
    b = F(676990898183648483035840512, 236364091 * 144169)
    assert g1 == QuadNum(a, b, 144169)
    assert g2 == g1.conjugate()
    _report("7 weight-24 traces and projections")


def test_08_recurrence_round_trip():
    n_max = 40
    table = partitions.partition_table(n_max)
    for nu in (6, 8, 9, 10, 11, 12, 13):
        traces = hecke.trace_series(nu, n_max)
        for n in range(1, n_max + 1):
            value = partitions.recurrence_rhs(nu, n, traces.value(n), table)
            assert value == table.p(n), (nu, n)
    _report("8 recurrence round-trip")


def test_09_dirichlet_double_sum_target():
    start = time.perf_counter()
    f = dmod.embedded_eigenforms(6, 2000)[0]
    value = dmod.dirichlet_double_sum(f, 6, 100, 2000)
    elapsed = time.perf_counter() - start
    assert value == pytest.approx(-49.608382, abs=1e-5)
    assert elapsed < 30.0
    _report("9 dirichlet target", f"(value {value:.8f}, {elapsed:.2f}s)")


def test_10_petersson_norm_target():
    est = dmod.petersson_norm_estimate(6)
    assert est.estimates[0] == pytest.approx(1.035362e-6, abs=1e-9)
    _report("10 petersson norm", f"(value {est.estimates[0]:.8e})")


def test_11_rademacher_rounds_to_50():
    start = time.perf_counter()
    table = partitions.partition_table(50)
    for n in range(1, 51):
        r = rademacher.rademacher_pn(n, 50)
        assert r.nearest == table.p(n), n
        assert r.gap < 0.5
        assert r.imag <= 1e-6 * max(1.0, abs(r.estimate))
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    _report("11 rademacher rounding", f"({elapsed:.2f}s)")


def test_12_full_verify_suite():
    start = time.perf_counter()
    report = verify.run_suite("all")
    elapsed = time.perf_counter() - start
    failed = [c["name"] for c in report["checks"] if not c["ok"]]
    assert not failed, failed
    assert elapsed < 600.0
    _report("12 verify suite", f"({len(report['checks'])} checks, {elapsed:.2f}s)")
