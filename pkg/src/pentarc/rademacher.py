"""Convergent Kloosterman-Bessel evaluation of p(n).

The generating function q^(-1/24) sum p(n) q^n is a weight -1/2 form whose
coefficients admit an exact infinite-series expression.  With cusp width
t = 24 and cusp parameter kappa = 23, the coefficient at series index
N = 24n - 24 (the q^((24n-1)/24) term) is

    a(N) = -i^(5/2) * (2 pi / 24) * (24n-1)^(-3/4)
           * sum_{c>=1} K_c(-24, N) / c * I_{3/2}(pi sqrt(24n-1) / (6c)),

where K_c is the multiplier-weighted exponential sum over matrices with
lower-left entry c enumerated below, and I_{3/2} has the elementary closed
form sqrt(2/(pi x)) (cosh x - sinh x / x).  Partial sums over c <= C round
to p(n); the residual imaginary part is reported, never discarded.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .dirichlet import kronecker_symbol

__all__ = [
    "CUSP_WIDTH",
    "CUSP_PARAMETER",
    "Root24",
    "eta_multiplier",
    "KloostermanSum",
    "kloosterman",
    "bessel_i32",
    "RademacherEstimate",
    "rademacher_pn",
]

CUSP_WIDTH = 24
CUSP_PARAMETER = 23


class Root24:
    """sign * exp(pi i e / 12): an exact sign times a 24th root of unity."""

    __slots__ = ("sign", "e")

    def __init__(self, sign: int, e: int):
        if sign not in (1, -1):
            raise ValueError("sign must be +-1")
        self.sign = sign
        self.e = e % 24

    def __mul__(self, other: "Root24") -> "Root24":
        return Root24(self.sign * other.sign, self.e + other.e)

    def conjugate(self) -> "Root24":
        return Root24(self.sign, -self.e)

    def value(self) -> complex:
        return self.sign * cmath.exp(1j * math.pi * self.e / 12)

    def __eq__(self, other):
        if not isinstance(other, Root24):
            return NotImplemented
        return self.sign == other.sign and self.e == other.e

    def __hash__(self):
        return hash((self.sign, self.e))

    def __repr__(self):
        return f"Root24({'+' if self.sign > 0 else '-'}1, e={self.e})"


def eta_multiplier(a: int, b: int, c: int, d: int) -> Root24:
    """Automorphy multiplier of eta: eta(gamma tau) = eps (c tau + d)^(1/2) eta(tau).

    Two-case closed form with Kronecker-Legendre symbols:

        c odd:  (d|/c/) exp(pi i/12 (c(a+d-3) - bd(c^2-1)))
        c even: (c|/d/) exp(pi i/12 (c(a-2d) - bd(c^2-1) + 3d - 3)) * corr

    where corr = -1 when c < 0 and d < 0, else +1.  (With corr applied at
    c = 0, d < 0 as well, the formula contradicts the principal-branch
    transformation law at the -T^b matrices; checked numerically against
    the q-product.)
    """
    if a * d - b * c != 1:
        raise ValueError("matrix must have determinant 1")
    if c % 2:
        sym = kronecker_symbol(d, abs(c))
        e = c * (a + d - 3) - b * d * (c * c - 1)
        sign = sym
    else:
        sym = kronecker_symbol(c, abs(d))
        e = c * (a - 2 * d) - b * d * (c * c - 1) + 3 * d - 3
        sign = sym if not (c < 0 and d < 0) else -sym
    if sign == 0:
        raise ValueError("degenerate Kronecker symbol; entries not coprime")
    return Root24(sign, e % 24)


@dataclass(frozen=True)
class KloostermanSum:
    c: int
    value: complex
    term_count: int


@lru_cache(maxsize=None)
def _pair_data(c: int):
    """Per-c matrix data: signs, multiplier exponents, and (a, d) columns.

    Enumerates d in [0, 24c) coprime to c and the 24 values a = a0 + t*c
    with a0 = d^(-1) mod c; identical, pair for pair, to the literal double
    loop over (a, d) in [0, 24c)^2 with ad = 1 (mod c).
    """
    signs, es, aa, dd = [], [], [], []
    for d in range(24 * c):
        if gcd(d, c) != 1:
            continue
        a0 = pow(d % c, -1, c) if c > 1 else 0
        for t in range(24):
            a = a0 + t * c
            b = (a * d - 1) // c
            eps = eta_multiplier(a, b, c, d)
            signs.append(eps.sign)
            es.append(eps.e)
            aa.append(a)
            dd.append(d)
    return (
        np.array(signs, dtype=np.int64),
        np.array(es, dtype=np.int64),
        np.array(aa, dtype=np.int64),
        np.array(dd, dtype=np.int64),
    )


@lru_cache(maxsize=None)
def _exp_table(c: int) -> np.ndarray:
    angles = 2.0 * np.pi * np.arange(24 * c) / (24.0 * c)
    return np.exp(1j * angles)


def _phase_numerators(c: int, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(signs, r) with each matrix contributing sign * exp(2 pi i r / (24c)).

    The weight 1/conj(eps) equals eps itself (|eps| = 1), so the phase
    numerator is e*c + (m + kappa) a + (n + kappa) d  (mod 24c).
    """
    signs, es, aa, dd = _pair_data(c)
    r = (es * c + (m + CUSP_PARAMETER) * aa + (n + CUSP_PARAMETER) * dd) % (24 * c)
    return signs, r


def _phase_numerators_literal(c: int, m: int, n: int) -> list[tuple[int, int]]:
    """Reference enumeration: the literal double loop over (a, d)."""
    out = []
    for a in range(24 * c):
        for d in range(24 * c):
            if (a * d - 1) % c:
                continue
            b = (a * d - 1) // c
            eps = eta_multiplier(a, b, c, d)
            r = (eps.e * c + (m + CUSP_PARAMETER) * a + (n + CUSP_PARAMETER) * d) % (24 * c)
            out.append((eps.sign, r))
    return out


def kloosterman(c: int, m: int, n: int) -> KloostermanSum:
    """Multiplier-weighted Kloosterman sum at lower-left entry c."""
    if c < 1:
        raise ValueError("c must be >= 1")
    signs, r = _phase_numerators(c, m, n)
    value = complex(np.sum(signs * _exp_table(c)[r]))
    return KloostermanSum(c, value, len(signs))


def bessel_i32(x: float) -> float:
    """I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x).

    The bracket is evaluated by its even Taylor series for small x, where
    the direct difference loses precision to cancellation.
    """
    if x <= 0:
        raise ValueError("bessel_i32 needs x > 0")
    if x < 1.0:
        # cosh x - sinh x / x = sum_{k>=1} x^(2k) * 2k / (2k+1)!
        core = 0.0
        term = x * x / 3.0  # k = 1
        k = 1
        while True:
            core += term
            k += 1
            term *= x * x * (2 * k) / ((2 * k - 2) * (2 * k) * (2 * k + 1))
            if term < 1e-20 * core:
                break
    else:
        core = math.cosh(x) - math.sinh(x) / x
    return math.sqrt(2.0 / (math.pi * x)) * core


@dataclass(frozen=True)
class RademacherEstimate:
    """Partial-sum evaluation of p(n): estimate, nearest integer, |gap|,
    absolute imaginary residual, and the depth C used."""

    estimate: float
    nearest: int
    gap: float
    imag: float
    depth: int


def rademacher_pn(n: int, depth: int = 50) -> RademacherEstimate:
    """Evaluate p(n) by the partial sum over 1 <= c <= depth.

    The q^((24n-1)/24) coefficient of the generating function corresponds
    to series index 24n - 24 and principal-part argument m = -24.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if depth < 1:
        raise ValueError("depth must be >= 1")
    idx = 24 * n - 24
    x24 = 24 * n - 1
    # The (a, d) range [0, 24c)^2 lists every translation coset exactly
    # CUSP_WIDTH times (the 24 lifts of a carry identical summands --
    # checked in the tests), hence the second 1/CUSP_WIDTH.
    pref = -(1j ** 2.5) * (2.0 * math.pi / CUSP_WIDTH**2) * x24 ** -0.75
    acc = 0j
    for c in range(1, depth + 1):
        kc = kloosterman(c, -24, idx)
        acc += kc.value / c * bessel_i32(math.pi * math.sqrt(x24) / (6.0 * c))
    total = pref * acc
    nearest = round(total.real)
    return RademacherEstimate(
        estimate=total.real,
        nearest=int(nearest),
        gap=abs(total.real - nearest),
        imag=abs(total.imag),
        depth=depth,
    )
