"""Hecke operators, eigenforms over quadratic fields, and the trace series
carried by the cuspidal part of the eta brackets.

The weight-2nu trace sequence is defined for n >= 1 by

    trace(n) = [q^n] eta_bracket(nu) + (4 nu / B_{2nu}) C(2nu-2, nu-2) sigma_{2nu-1}(n),

i.e. the coefficients of the cuspidal part after removing the Eisenstein
component C(2nu-2, nu-2) * E_{2nu}.  ``eigenform_projections`` solves the
trace sequence against the eigenform coefficients, yielding the exact
projection ratios <bracket, f_i> / <f_i, f_i>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

from .errors import PrecisionError, UnsupportedHeckeFieldError
from .exactnum import QuadNum, bernoulli
from .forms import dim_cusp, space_basis
from .partitions import sigma
from .qseries import IntQSeries
from .rankincohen import eta_bracket

__all__ = [
    "Eigenform",
    "TraceSeries",
    "hecke_operator",
    "hecke_action",
    "eigenforms",
    "trace_series",
    "eigenform_projections",
]

#: exact eigenform/trace data never needs many terms for the linear algebra
_EIGEN_PREC = 16


def hecke_action(coeffs, weight: int, m: int, count: int) -> list:
    """Coefficients 0..count-1 of T_m applied to a(0..), any coefficient ring.

    [q^n] T_m f = sum over d | gcd(m, n) of d^(weight-1) a(m n / d^2);
    for n = 0 this is sigma_{weight-1}(m) a(0).
    """
    out = []
    for n in range(count):
        g = m if n == 0 else gcd(m, n)
        acc = None
        for d in range(1, g + 1):
            if g % d == 0:
                term = coeffs[m * n // (d * d)] * d ** (weight - 1)
                acc = term if acc is None else acc + term
        out.append(acc)
    return out


def hecke_operator(f: IntQSeries, weight: int, m: int) -> IntQSeries:
    """The m-th Hecke operator on a level-1 weight-`weight` q-expansion.

    Output precision is floor(f.prec / m).
    """
    if m < 1:
        raise ValueError("Hecke index must be >= 1")
    if f.offset < 0:
        raise ValueError("Hecke action expects exponents >= 0")
    out_prec = f.prec // m
    if out_prec < 1:
        raise PrecisionError(f"precision {f.prec} too small for T_{m}")
    table = [f.coeff(n) for n in range(f.prec)]
    return IntQSeries(0, hecke_action(table, weight, m, out_prec))


@dataclass(frozen=True)
class Eigenform:
    """Normalized Hecke eigenform q-expansion over Q(sqrt(disc))."""

    weight: int
    disc: int
    coeffs: tuple[QuadNum, ...]

    @property
    def prec(self) -> int:
        return len(self.coeffs)

    def a(self, n: int) -> QuadNum:
        return self.coeffs[n]

    def a_float(self, m: int) -> float:
        """Real embedding of a(m) with sqrt(disc) > 0."""
        if m >= len(self.coeffs):
            raise PrecisionError(f"eigenform coefficients stored only to {len(self.coeffs) - 1}")
        return self.coeffs[m].embed()


@dataclass(frozen=True)
class TraceSeries:
    nu: int
    values: tuple[Fraction, ...]  # values[n] for n = 0..N, values[0] = 0

    def value(self, n: int) -> Fraction:
        return self.values[n]


def _squarefree_split(n: int, bound: int = 10**6) -> tuple[int, int]:
    """n = s^2 * d with d squarefree; trial division up to ``bound``.

    Errors when the square part cannot be certified (a prime factor above
    the bound could still appear squared).
    """
    if n <= 0:
        raise ValueError("only positive integers are split")
    s, d = 1, 1
    rest = n
    p = 2
    while p <= bound and p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if rest > 1:
        r = isqrt(rest)
        if r * r == rest:
            s *= r
        elif rest <= bound * bound:
            d *= rest  # no factor <= bound, so rest is squarefree
        else:
            raise UnsupportedHeckeFieldError(
                f"cannot certify squarefree part of {n} with trial division to {bound}"
            )
    return s, d


@lru_cache(maxsize=None)
def eigenforms(weight: int, prec: int = _EIGEN_PREC) -> tuple[Eigenform, ...]:
    """Normalized Hecke eigenforms of S_weight for dim 1 or 2.

    For dim 2 the matrix of T_2 on the echelon cusp basis is diagonalized
    exactly over Q(sqrt(d)); forms are ordered so the first has the negative
    sqrt(d)-part in a(2).  Larger dimensions raise UnsupportedHeckeFieldError.
    """
    if weight < 12 or weight % 2:
        raise ValueError("eigenforms needs an even weight >= 12")
    dim = dim_cusp(weight)
    if dim not in (1, 2):
        raise UnsupportedHeckeFieldError(f"dim S_{weight} = {dim} is not supported")
    space = space_basis(weight, max(prec, 2 * dim + 4))
    h = space.cusp_basis
    if dim == 1:
        coeffs = tuple(QuadNum(h[0].coeff(n)) for n in range(prec))
        forms = (Eigenform(weight, 1, coeffs),)
    else:
        t2 = [hecke_operator(hi, weight, 2) for hi in h]
        # echelon basis makes the matrix entries direct coefficient reads
        m11, m21 = t2[0].coeff(1), t2[0].coeff(2)
        m12, m22 = t2[1].coeff(1), t2[1].coeff(2)
        if m12 == 0:
            raise UnsupportedHeckeFieldError("T_2 matrix is reducible over Q")
        tr = m11 + m22
        det = m11 * m22 - m12 * m21
        disc = tr * tr - 4 * det
        if disc.denominator != 1 or disc < 0:
            raise UnsupportedHeckeFieldError(f"unexpected T_2 discriminant {disc}")
        s, d = _squarefree_split(disc.numerator)
        if d == 1:
            lams = [QuadNum(Fraction(tr - s, 2)), QuadNum(Fraction(tr + s, 2))]
        else:
            lams = [
                QuadNum(Fraction(tr, 2), Fraction(-s, 2), d),
                QuadNum(Fraction(tr, 2), Fraction(s, 2), d),
            ]
        forms = []
        for lam in lams:
            x2 = (lam - m11) / m12
            coeffs = tuple(
                QuadNum(h[0].coeff(n)) + x2 * h[1].coeff(n) for n in range(prec)
            )
            forms.append(Eigenform(weight, d, coeffs))
        forms.sort(key=lambda f: f.a(2).embed())
        forms = tuple(forms)
    for f in forms:
        _check_eigenform(f)
    return forms


def _check_eigenform(f: Eigenform) -> None:
    # a(1) = 1 and the T_2 eigenvalue property through available precision
    if f.a(1) != 1:
        raise UnsupportedHeckeFieldError("eigenform is not normalized")
    count = f.prec // 2
    acted = hecke_action(f.coeffs, f.weight, 2, count)
    lam = f.a(2)
    for n in range(1, count):
        if acted[n] != lam * f.a(n):
            raise UnsupportedHeckeFieldError("T_2 eigenvector check failed")


@lru_cache(maxsize=None)
def trace_series(nu: int, n_max: int) -> TraceSeries:
    """Exact trace values for 1 <= n <= n_max (identically 0 if dim S = 0)."""
    if nu < 2:
        raise ValueError("trace_series needs nu >= 2")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if dim_cusp(2 * nu) == 0:
        return TraceSeries(nu, tuple([Fraction(0)] * (n_max + 1)))
    bracket = eta_bracket(nu, n_max + 1)
    c = comb(2 * nu - 2, nu - 2)
    factor = Fraction(4 * nu) / bernoulli(2 * nu) * c
    values = [Fraction(0)]
    for n in range(1, n_max + 1):
        values.append(bracket.coeff(n) + factor * sigma(2 * nu - 1, n))
    return TraceSeries(nu, tuple(values))


@lru_cache(maxsize=None)
def eigenform_projections(nu: int) -> tuple[QuadNum, ...]:
    """Exact coefficients of the cuspidal part of eta_bracket(nu) in the
    eigenform basis, solved from the first dim coefficients of the traces."""
    dim = dim_cusp(2 * nu)
    if dim not in (1, 2):
        raise UnsupportedHeckeFieldError(f"dim S_{2*nu} = {dim} is not supported")
    traces = trace_series(nu, dim)
    if dim == 1:
        return (QuadNum(traces.value(1)),)
    f1, f2 = eigenforms(2 * nu)
    a1, a2 = f1.a(2), f2.a(2)
    if a1 == a2:
        raise UnsupportedHeckeFieldError("coincident eigenvalues")
    # gamma1 + gamma2 = trace(1); gamma1 a1 + gamma2 a2 = trace(2)
    t1 = QuadNum(traces.value(1))
    t2 = QuadNum(traces.value(2))
    gamma1 = (t2 - t1 * a2) / (a1 - a2)
    gamma2 = t1 - gamma1
    return (gamma1, gamma2)
