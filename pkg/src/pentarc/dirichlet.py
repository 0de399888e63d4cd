"""Floating-point evaluation of the twisted quadratic Dirichlet series side.

For a weight-2nu eigenform f the partial series is

    D(f, N; s) = sum_{n=1}^{N} (12|n) a_f((n^2-1)/24) / n^s,

where (12|n) is the Kronecker symbol mod 12 (zero unless gcd(n, 12) = 1, in
which case 24 | n^2 - 1).  The weighted double sum

    sum_{j=0}^{nu-2} sum_{m=0}^{M} beta(nu, j, m) D(f, N; 2nu+1+2m+2j)

converges (as M, N grow) to the Petersson pairing of the order-nu eta
bracket against f, scaled by 24^nu; dividing by the exact projection ratio
from the hecke module therefore estimates the Petersson norm of f.

Summation is j-outer, m-inner, n-innermost, with Neumaier-compensated
accumulation so results reproduce across platforms to >= 12 digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ._coeffs import cusp_monomial_coeffs
from .errors import PrecisionError
from .exactnum import PiScalar, QuadNum, gamma_exact, rising_factorial
from .forms import delta, dim_cusp, eisenstein
from .hecke import eigenforms

__all__ = [
    "DEFAULT_BIG_M",
    "default_big_n",
    "kronecker12",
    "kronecker_symbol",
    "dirichlet_weight",
    "dirichlet_weight_float",
    "dirichlet_partial",
    "dirichlet_double_sum",
    "EmbeddedEigenform",
    "embedded_eigenforms",
    "NormEstimate",
    "petersson_norm_estimate",
]

DEFAULT_BIG_M = 100

_KRON12 = (0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1)


def default_big_n(nu: int) -> int:
    """Default Dirichlet truncation; large only where the coefficient tables
    stay sparse (weight 12), desk-scale elsewhere."""
    return 2000 if nu == 6 else 360


def kronecker12(n: int) -> int:
    """Kronecker symbol (12|n): +1 for n = +-1 mod 12, -1 for +-5, else 0."""
    if n < 1:
        raise ValueError("kronecker12 needs n >= 1")
    return _KRON12[n % 12]


def kronecker_symbol(a: int, n: int) -> int:
    """General Kronecker symbol (a|n) for any integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # factor out 2s from n
    twos = 0
    while n % 2 == 0:
        n //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    # Jacobi symbol (a|n) for odd n > 0 by quadratic reciprocity
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def dirichlet_weight(nu: int, j: int, m: int) -> PiScalar:
    """Exact weight multiplying D(f; 2nu+1+2m+2j) in the double sum:

        (-1)^(j+1) Gamma(nu-1/2) Gamma(nu+1/2) / (2 sqrt(pi) Gamma(5/2))
        * (6/pi)^(2nu-1) * (2nu+m-2)! / (j! m! (2nu-j-2)!)
        * rising(nu-j-1, nu) * rising(3/2, j)
          / (rising(-1/2-j, nu) * rising(5/2, j))

    The Gamma block is rational, so the result is a rational multiple of
    pi^(2(1-2nu)).
    """
    if nu < 2:
        raise ValueError("dirichlet_weight needs nu >= 2")
    if not 0 <= j <= nu - 2:
        raise ValueError(f"j must lie in [0, {nu - 2}]")
    if m < 0:
        raise ValueError("m must be >= 0")
    half = Fraction(1, 2)
    gammas = (
        gamma_exact(nu - half)
        * gamma_exact(nu + half)
        / (2 * gamma_exact(half) * gamma_exact(Fraction(5, 2)))
    )
    six_over_pi = PiScalar(Fraction(6) ** (2 * nu - 1), -2 * (2 * nu - 1))
    combinatorial = Fraction(
        math.factorial(2 * nu + m - 2),
        math.factorial(j) * math.factorial(m) * math.factorial(2 * nu - j - 2),
    )
    ratio = (
        rising_factorial(nu - j - 1, nu)
        * rising_factorial(Fraction(3, 2), j)
        / (rising_factorial(-half - j, nu) * rising_factorial(Fraction(5, 2), j))
    )
    sign = -1 if j % 2 == 0 else 1  # (-1)^(j+1)
    return gammas * six_over_pi * (sign * combinatorial * ratio)


def dirichlet_weight_float(nu: int, j: int, m: int, dps: int | None = None) -> float:
    """Float value of dirichlet_weight; optional mpmath evaluation at ``dps``
    decimal digits for wide-precision cross-checks."""
    w = dirichlet_weight(nu, j, m)
    if dps is None:
        return float(w)
    import mpmath

    with mpmath.workdps(dps):
        value = (
            mpmath.mpf(w.coeff.numerator)
            / w.coeff.denominator
            * mpmath.pi ** (mpmath.mpf(w.half_pi_pow) / 2)
        )
        return float(value)


class _Neumaier:
    """Compensated accumulator (Kahan-Babuska-Neumaier)."""

    __slots__ = ("total", "comp")

    def __init__(self):
        self.total = 0.0
        self.comp = 0.0

    def add(self, x: float) -> None:
        t = self.total + x
        if abs(self.total) >= abs(x):
            self.comp += (self.total - t) + x
        else:
            self.comp += (x - t) + self.total
        self.total = t

    def value(self) -> float:
        return self.total + self.comp


def dirichlet_partial(f, N: int, s: int) -> float:
    """Partial sum of the twisted series over 1 <= n <= N.

    ``f`` needs ``weight`` and ``a_float(m)``; coefficients must reach
    (N^2-1)/24.  Requires s >= weight + 1 (absolute convergence).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if s < f.weight + 1:
        raise ValueError(f"s = {s} below absolute-convergence bound {f.weight + 1}")
    acc = _Neumaier()
    for n in range(1, N + 1):
        chi = kronecker12(n)
        if not chi:
            continue
        num = n * n - 1
        if num % 24:
            raise AssertionError(f"24 does not divide {n}^2 - 1 with gcd(n,12)=1")
        # n^(-s) underflows to 0.0 for terms far below representable range
        acc.add(chi * f.a_float(num // 24) * float(n) ** (-s))
    return acc.value()


def dirichlet_double_sum(f, nu: int, M: int, N: int, dps: int | None = None) -> float:
    """The truncated weighted double sum (j outer, m inner, n innermost).

    ``dps`` switches the weight evaluation to mpmath at that many decimal
    digits (the optional wide-float mode); the partial sums stay binary64.
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    acc = _Neumaier()
    for j in range(nu - 1):
        for m in range(M + 1):
            acc.add(
                dirichlet_weight_float(nu, j, m, dps)
                * dirichlet_partial(f, N, 2 * nu + 1 + 2 * m + 2 * j)
            )
    return acc.value()


class EmbeddedEigenform:
    """Real-embedded eigenform coefficients backed by the exact CRT tables."""

    __slots__ = ("weight", "disc", "_table")

    def __init__(self, weight: int, disc: int, table):
        self.weight = weight
        self.disc = disc
        self._table = table

    def a_float(self, m: int) -> float:
        try:
            return self._table[m]
        except KeyError:
            raise PrecisionError(f"coefficient {m} not tabulated") from None


def _monomial_exponents_for_cusp(weight: int) -> list[tuple[int, int]]:
    out = []
    rest_weight = weight - 12
    for a in range(rest_weight // 4 + 1):
        rest = rest_weight - 4 * a
        if rest % 6 == 0:
            out.append((a, rest // 6))
    return out


@lru_cache(maxsize=None)
def _eigenform_monomial_coords(nu: int) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[QuadNum, ...], ...]]:
    """Exact coordinates of each eigenform in the basis Delta * E4^a E6^b."""
    weight = 2 * nu
    exps = tuple(_monomial_exponents_for_cusp(weight))
    dim = len(exps)
    prec = dim + 6
    basis = []
    for a, b in exps:
        series = delta(prec)
        for _ in range(a):
            series = series * eisenstein(4, prec)
        for _ in range(b):
            series = series * eisenstein(6, prec)
        basis.append(series)
    coords = []
    for f in eigenforms(weight):
        # solve sum_j c_j basis_j[n] = a_f(n) for n = 1..dim, then verify
        mat = [[QuadNum(basis[j].coeff(n)) for j in range(dim)] for n in range(1, dim + 1)]
        rhs = [f.a(n) for n in range(1, dim + 1)]
        c = _solve_quadnum(mat, rhs)
        for n in range(1, prec):
            synth = c[0] * basis[0].coeff(n)
            for j in range(1, dim):
                synth = synth + c[j] * basis[j].coeff(n)
            if synth != f.a(n):
                raise AssertionError("eigenform does not match its monomial coordinates")
        coords.append(tuple(c))
    return exps, tuple(coords)


def _solve_quadnum(mat, rhs):
    n = len(mat)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                fac = aug[r][col]
                aug[r] = [v - fac * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


@lru_cache(maxsize=8)
def embedded_eigenforms(nu: int, N: int) -> tuple[EmbeddedEigenform, ...]:
    """Embedded coefficient tables covering every index (n^2-1)/24, n <= N.

    Coefficients are assembled exactly in Q(sqrt(d)) from the CRT monomial
    tables and rounded once at embedding time.
    """
    if dim_cusp(2 * nu) == 0:
        raise ValueError(f"S_{2*nu} is trivial")
    indices = tuple(
        (n * n - 1) // 24 for n in range(1, N + 1) if gcd(n, 12) == 1
    )
    mmax = indices[-1] if indices else 0
    exps, coords = _eigenform_monomial_coords(nu)
    tables = [
        cusp_monomial_coeffs(1, a, b, indices, mmax) for a, b in exps
    ]
    out = []
    for form, c in zip(eigenforms(2 * nu), coords):
        values = {}
        for pos, m in enumerate(indices):
            exact = c[0] * tables[0][pos]
            for j in range(1, len(exps)):
                exact = exact + c[j] * tables[j][pos]
            values[m] = exact.embed()
        out.append(EmbeddedEigenform(form.weight, form.disc, values))
    return tuple(out)


@dataclass(frozen=True)
class NormEstimate:
    """Petersson norm estimates with the truncations that produced them."""

    nu: int
    big_m: int
    big_n: int
    estimates: tuple[float, ...]


def petersson_norm_estimate(
    nu: int, M: int | None = None, N: int | None = None, dps: int | None = None
) -> NormEstimate:
    """Norm estimate per eigenform: double sum divided by the exact
    projection ratio, both embedded with sqrt(d) > 0."""
    from .hecke import eigenform_projections

    M = DEFAULT_BIG_M if M is None else M
    N = default_big_n(nu) if N is None else N
    projections = eigenform_projections(nu)
    forms = embedded_eigenforms(nu, N)
    estimates = []
    for f, gamma in zip(forms, projections):
        estimates.append(dirichlet_double_sum(f, nu, M, N, dps) / gamma.embed())
    return NormEstimate(nu, M, N, tuple(estimates))
