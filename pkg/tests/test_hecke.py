from fractions import Fraction as F
from math import comb

import pytest

from pentarc.errors import PrecisionError, UnsupportedHeckeFieldError
from pentarc.exactnum import QuadNum
from pentarc.forms import cusp_generator, delta, eisenstein
from pentarc.hecke import (
    eigenform_projections,
    eigenforms,
    hecke_action,
    hecke_operator,
    trace_series,
)
from pentarc.partitions import sigma
from pentarc.rankincohen import eta_bracket

#: exact cusp-part multipliers for the one-dimensional weights
BETA = {
    6: F(-33108590592, 691),
    8: F(-187167592415232, 3617),
    9: F(-28682634201661440, 43867),
    10: F(-8294726176465158144, 174611),
    11: F(-101475065073734516736, 77683),
    13: F(-1195065734266339700244480, 657931),
}


def test_hecke_t1_is_identity():
    d = delta(20)
    assert hecke_operator(d, 12, 1).agrees_with(d)


def test_hecke_t2_on_delta():
    d = delta(30)
    assert hecke_operator(d, 12, 2).agrees_with(d.scale(-24))


def test_hecke_multiplicativity():
    d = delta(36)
    t6 = hecke_operator(d, 12, 6)
    t2t3 = hecke_operator(hecke_operator(d, 12, 3), 12, 2)
    assert t6.agrees_with(t2t3)
    assert d.coeff(6) == d.coeff(2) * d.coeff(3)


def test_hecke_precision_rules():
    d = delta(30)
    assert hecke_operator(d, 12, 2).prec == 15
    with pytest.raises(PrecisionError):
        hecke_operator(delta(3), 12, 5)


def test_eigenforms_weight12():
    (f,) = eigenforms(12)
    assert f.disc == 1
    assert f.a(1) == 1 and f.a(2) == QuadNum(-24)
    d = delta(f.prec)
    assert all(f.a(n) == QuadNum(d.coeff(n)) for n in range(f.prec))


def test_eigenforms_weight24_field_and_values():
    f1, f2 = eigenforms(24)
    assert f1.disc == f2.disc == 144169
    assert f1.a(2) == QuadNum(540, -12, 144169)
    assert f2.a(2) == QuadNum(540, 12, 144169)
    prec = f1.prec
    de43 = delta(prec) * eisenstein(4, prec).pow(3)
    d2 = delta(prec) * delta(prec)
    for f, sgn in ((f1, -1), (f2, 1)):
        c = QuadNum(-156, 12 * sgn, 144169)
        for n in range(prec):
            assert QuadNum(de43.coeff(n)) + c * d2.coeff(n) == f.a(n)


def test_eigenvector_property():
    for weight in (12, 24):
        for f in eigenforms(weight):
            for m in (2, 3, 5, 7):
                count = f.prec // m
                acted = hecke_action(f.coeffs, weight, m, count)
                lam = f.a(m)
                for n in range(1, count):
                    assert acted[n] == lam * f.a(n)


def test_eigenform_coefficient_multiplicativity():
    f1, _ = eigenforms(24)
    assert f1.a(6) == f1.a(2) * f1.a(3)
    assert f1.a(10) == f1.a(2) * f1.a(5)


def test_eigenforms_weight28_field():
    f1, f2 = eigenforms(28)
    assert f1.disc == f2.disc == 18209
    assert f1.a(2) == QuadNum(-4140, -108, 18209)
    assert f2.a(2) == f1.a(2).conjugate()
    g1, g2 = eigenform_projections(14)
    assert g2 == g1.conjugate()


def test_unsupported_dimension():
    with pytest.raises(UnsupportedHeckeFieldError):
        eigenforms(36)  # dim S_36 = 3


def test_trace_values_weight12():
    tr = trace_series(6, 50)
    assert tr.value(1) == BETA[6]
    assert tr.value(2) == F(794606174208, 691)  # beta_6 * tau(2), tau(2) = -24
    d = delta(51)
    for n in range(1, 51):
        assert tr.value(n) == BETA[6] * d.coeff(n)


def test_trace_values_weight24():
    tr = trace_series(12, 2)
    assert tr.value(1) == F(-11762326506193377107116032, 236364091)
    assert tr.value(2) == F(-22599437869751987230702829568, 236364091)


def test_trace_zero_for_trivial_cusp_spaces():
    for nu in (2, 3, 4, 5, 7):
        tr = trace_series(nu, 12)
        assert all(tr.value(n) == 0 for n in range(1, 13))
        # the defining formula also vanishes identically
        bracket = eta_bracket(nu, 13)
        c = comb(2 * nu - 2, nu - 2)
        from pentarc.exactnum import bernoulli

        for n in range(1, 13):
            formula = bracket.coeff(n) + F(4 * nu) / bernoulli(2 * nu) * c * sigma(2 * nu - 1, n)
            assert formula == 0


def test_cusp_multipliers_exact():
    for nu, beta in BETA.items():
        prec = 16
        bracket = eta_bracket(nu, prec)
        c = comb(2 * nu - 2, nu - 2)
        cusp = bracket - eisenstein(2 * nu, prec).scale(c)
        assert cusp.agrees_with(cusp_generator(2 * nu, prec).scale(beta)), nu


def test_projections_weight12():
    (gamma,) = eigenform_projections(6)
    assert gamma == QuadNum(BETA[6])


def test_projections_weight24_exact_values():
    g1, g2 = eigenform_projections(12)
    a = F(-5881163253096688553558016, 236364091)
    b = F(676990898183648483035840512, 236364091 * 144169)
    assert g1 == QuadNum(a, b, 144169)
    assert g2 == g1.conjugate()


def test_projection_reconstruction():
    for nu in (6, 8, 9, 10, 11, 12, 13):
        prec = 12
        bracket = eta_bracket(nu, prec)
        c = comb(2 * nu - 2, nu - 2)
        eis = eisenstein(2 * nu, prec)
        gammas = eigenform_projections(nu)
        fs = eigenforms(2 * nu)
        for n in range(prec):
            acc = QuadNum(c * eis.coeff(n))
            for g, f in zip(gammas, fs):
                acc = acc + g * f.a(n)
            assert acc == QuadNum(bracket.coeff(n)), (nu, n)


def test_ramanujan_congruence():
    d = delta(51)
    for n in range(1, 51):
        assert (d.coeff(n) - sigma(11, n)) % 691 == 0
