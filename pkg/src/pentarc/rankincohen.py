"""Rankin-Cohen brackets of 1/eta with eta and their partition-side expansion.

``eta_bracket(nu, prec)`` builds the weight-2nu holomorphic modular form

    pref(nu) * sum_{r+s=nu} (-1)^r (2r-1) / ((2r)! (2s)!)
               * (24 D)^r (1/eta) * (24 D)^s (eta),

with pref(nu) = (2nu-1) ((2nu-2)_(nu-1))^2 / 2^(2nu-2).  The 24-scaled
derivative keeps every intermediate series integral, and the result lives on
integer exponents (enforced by the down-conversion).  The same form equals
24^nu times the general Rankin-Cohen bracket of (1/eta, eta) at weights
(-1/2, 1/2), which ``rankin_cohen`` implements with exact Gamma-ratio weights.

``eta_bracket_from_partitions`` rebuilds the identical expansion from
partition numbers alone: the q^n coefficient is

    sum_k (-1)^k w_nu(n, k) p(n - omega(k)),

summed over every integer k with omega(k) <= n (k = 0 included).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import GammaPoleError
from .exactnum import falling_factorial
from .partitions import partition_table, pentagonal, recurrence_weight
from .qseries import IntQSeries, QSeries24, eta_expansion, eta_inverse_expansion, to_int_series

__all__ = [
    "eta_bracket",
    "eta_bracket_from_partitions",
    "rankin_cohen",
    "recurrence_weight",
]


def _d24(s: QSeries24) -> QSeries24:
    # 24 * q d/dq: multiply the e/24 coefficient by the integer e
    return QSeries24(s.offset24, [c * (s.offset24 + i) for i, c in enumerate(s.coeffs)])


@lru_cache(maxsize=None)
def _bracket_prefactor(nu: int) -> Fraction:
    return (
        (2 * nu - 1)
        * falling_factorial(2 * nu - 2, nu - 1) ** 2
        / Fraction(4) ** (nu - 1)
    )


@lru_cache(maxsize=None)
def eta_bracket(nu: int, prec: int) -> IntQSeries:
    """The order-nu bracket of (1/eta, eta) as an integer-exponent series.

    Constant term C(2nu-2, nu-2) for nu >= 2; equals 1 at nu = 0 and 0 at
    nu = 1.  All fractional-exponent coefficients must cancel; failure
    raises InternalCancellationError.
    """
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if prec < 2:
        raise ValueError("prec must be >= 2")
    grid = 24 * prec + 2
    inv_chain = [eta_inverse_expansion(grid)]
    eta_chain = [eta_expansion(grid)]
    for _ in range(nu):
        inv_chain.append(_d24(inv_chain[-1]))
        eta_chain.append(_d24(eta_chain[-1]))
    acc = None
    for r in range(nu + 1):
        s = nu - r
        weight = Fraction((-1 if r % 2 else 1) * (2 * r - 1), factorial(2 * r) * factorial(2 * s))
        term = (inv_chain[r] * eta_chain[s]).scale(weight)
        acc = term if acc is None else acc + term
    acc = acc.scale(_bracket_prefactor(nu))
    return to_int_series(acc).truncate(prec)


def eta_bracket_from_partitions(nu: int, prec: int) -> IntQSeries:
    """Reconstruct eta_bracket(nu) purely from partition numbers."""
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if prec < 2:
        raise ValueError("prec must be >= 2")
    ptable = partition_table(prec - 1)
    coeffs = []
    for n in range(prec):
        acc = recurrence_weight(nu, n, 0) * ptable.p(n)
        k = 1
        while True:
            w1, w2 = pentagonal(k), pentagonal(-k)
            if w1 > n and w2 > n:
                break
            sign = -1 if k % 2 else 1
            if w1 <= n:
                acc += sign * recurrence_weight(nu, n, k) * ptable.p(n - w1)
            if w2 <= n:
                acc += sign * recurrence_weight(nu, n, -k) * ptable.p(n - w2)
            k += 1
        coeffs.append(acc)
    return IntQSeries(0, coeffs)


def _require_no_pole(weight_plus_nu: Fraction) -> None:
    if weight_plus_nu.denominator == 1 and weight_plus_nu <= 0:
        raise GammaPoleError(f"Gamma pole at {weight_plus_nu}")


def rankin_cohen(
    f: QSeries24,
    wf: Fraction | int,
    g: QSeries24,
    wg: Fraction | int,
    nu: int,
) -> QSeries24:
    """General order-nu Rankin-Cohen bracket of weights (wf, wg):

        sum_{r+s=nu} (-1)^r (wf+nu-1)_s (wg+nu-1)_r / (s! r!) D^r(f) D^s(g)

    The falling factorials are the Gamma ratios Gamma(w+nu)/Gamma(w+nu-j)
    evaluated exactly in the rationals (pi powers cancel within each ratio).
    """
    if nu < 0:
        raise ValueError("nu must be >= 0")
    wf = Fraction(wf)
    wg = Fraction(wg)
    _require_no_pole(wf + nu)
    _require_no_pole(wg + nu)
    df = [f]
    dg = [g]
    for _ in range(nu):
        df.append(df[-1].deriv())
        dg.append(dg[-1].deriv())
    acc = None
    for r in range(nu + 1):
        s = nu - r
        weight = (
            Fraction(-1 if r % 2 else 1)
            * falling_factorial(wf + nu - 1, s)
            * falling_factorial(wg + nu - 1, r)
            / (factorial(s) * factorial(r))
        )
        term = (df[r] * dg[s]).scale(weight)
        acc = term if acc is None else acc + term
    return acc
