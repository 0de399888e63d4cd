"""Level-1 modular forms as exact q-expansions.

Eisenstein series E_w = 1 - (2w/B_w) sum sigma_{w-1}(n) q^n (the
quasi-modular E_2 is allowed as a series but never enters a space basis),
Delta = eta^24, the one-dimensional cusp-space generators Delta * E-monomial,
and exact monomial bases of M_w with echelonized cusp bases, plus exact
decomposition against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotInSpaceError, PrecisionError
from .exactnum import bernoulli
from .partitions import sigma
from .qseries import IntQSeries, eta_expansion, to_int_series

__all__ = [
    "MFSpace",
    "eisenstein",
    "delta",
    "cusp_generator",
    "dim_modular",
    "dim_cusp",
    "space_basis",
    "decompose",
]

#: weight -> (a, b) with Delta * E4^a * E6^b spanning the cusp space
_DIM1_MONOMIAL = {12: (0, 0), 16: (1, 0), 18: (0, 1), 20: (2, 0), 22: (1, 1), 26: (2, 1)}


@lru_cache(maxsize=None)
def eisenstein(w: int, prec: int) -> IntQSeries:
    """Weight-w Eisenstein series, exact through q^(prec-1)."""
    if w < 2 or w % 2:
        raise ValueError("Eisenstein weight must be a positive even integer")
    if prec < 1:
        raise ValueError("prec must be >= 1")
    factor = -Fraction(2 * w) / bernoulli(w)
    coeffs = [Fraction(1)] + [factor * sigma(w - 1, n) for n in range(1, prec)]
    return IntQSeries(0, coeffs)


@lru_cache(maxsize=None)
def delta(prec: int) -> IntQSeries:
    """The discriminant form eta^24 = q - 24q^2 + 252q^3 - ..."""
    if prec < 2:
        raise ValueError("prec must be >= 2")
    eta = eta_expansion(24 * prec + 2)
    return to_int_series(eta.pow(24)).truncate(prec)


def cusp_generator(weight: int, prec: int) -> IntQSeries:
    """Normalized generator of a one-dimensional cusp space.

    Defined for weight in {12, 16, 18, 20, 22, 26} as Delta times the unique
    E4^a E6^b monomial of weight (weight - 12); leading coefficient 1 at q.
    """
    if weight not in _DIM1_MONOMIAL:
        raise ValueError(f"weight {weight} does not have a 1-dimensional cusp space")
    a, b = _DIM1_MONOMIAL[weight]
    out = delta(prec)
    for _ in range(a):
        out = out * eisenstein(4, prec)
    for _ in range(b):
        out = out * eisenstein(6, prec)
    return out


def _monomial_exponents(weight: int) -> list[tuple[int, int]]:
    out = []
    for a in range(weight // 4 + 1):
        rest = weight - 4 * a
        if rest % 6 == 0:
            out.append((a, rest // 6))
    return out


def dim_modular(weight: int) -> int:
    """dim M_weight for even weight >= 0 (0 for odd or negative)."""
    if weight < 0 or weight % 2:
        return 0
    return len(_monomial_exponents(weight))


def dim_cusp(weight: int) -> int:
    """dim S_weight; one less than dim M_weight for weight >= 4."""
    if weight < 12:
        return 0
    return dim_modular(weight) - 1


@dataclass(frozen=True)
class MFSpace:
    """Monomial basis of M_weight with an echelonized cusp basis.

    ``basis`` holds E4^a E6^b in lexicographic (a, b) order; ``cusp_basis``
    is row-reduced with unit leading coefficients at q, q^2, ...
    """

    weight: int
    dim_total: int
    dim_cusp: int
    basis: tuple[IntQSeries, ...]
    cusp_basis: tuple[IntQSeries, ...]
    prec: int


def _rref(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact reduced row echelon form over Fraction."""
    rows = [row[:] for row in rows]
    n_cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [v / lead for v in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [row for row in rows if any(row)]


@lru_cache(maxsize=None)
def space_basis(weight: int, prec: int) -> MFSpace:
    """Monomial basis of M_weight and echelonized basis of S_weight."""
    if weight < 4 or weight % 2:
        raise ValueError("space_basis needs an even weight >= 4")
    exps = _monomial_exponents(weight)
    dim_total = len(exps)
    n_cusp = dim_total - 1
    if prec <= dim_total + 2:
        raise PrecisionError(f"prec {prec} too small for weight-{weight} space")
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    one = IntQSeries(0, [1] + [0] * (prec - 1))
    e4_pows = [one]
    for _ in range(max(a for a, _ in exps)):
        e4_pows.append(e4_pows[-1] * e4)
    e6_pows = [one]
    for _ in range(max(b for _, b in exps)):
        e6_pows.append(e6_pows[-1] * e6)
    basis = tuple(e4_pows[a] * e6_pows[b] for a, b in exps)

    ew = eisenstein(weight, prec)
    rows = [[(m.coeff(n) - ew.coeff(n)) for n in range(prec)] for m in basis]
    reduced = _rref(rows)
    if len(reduced) != n_cusp:
        raise PrecisionError("echelonization did not produce the expected cusp basis")
    cusp = []
    for i, row in enumerate(reduced):
        # staircase check: pivot must sit at q^(i+1)
        if row[i + 1] != 1 or any(row[j] for j in range(i + 1)):
            raise PrecisionError("cusp basis is not in staircase form")
        cusp.append(IntQSeries(0, row))
    return MFSpace(weight, dim_total, n_cusp, basis, tuple(cusp), prec)


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square exact linear system by Gaussian elimination."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def decompose(f: IntQSeries, space: MFSpace) -> list[Fraction]:
    """Exact coordinates of f in the monomial basis of the space.

    Solves against the first dim_total coefficients and then verifies that
    the residual vanishes through the common precision; a nonzero residual
    raises NotInSpaceError.
    """
    if f.offset < 0:
        raise ValueError("decompose expects exponents >= 0")
    if f.prec < space.dim_total + 1:
        raise PrecisionError("series too short to decompose")
    n_rows = space.dim_total
    matrix = [[space.basis[j].coeff(n) for j in range(n_rows)] for n in range(n_rows)]
    rhs = [f.coeff(n) for n in range(n_rows)]
    coords = _solve_exact(matrix, rhs)
    check_prec = min(f.prec, space.prec)
    for n in range(check_prec):
        synth = sum((coords[j] * space.basis[j].coeff(n) for j in range(n_rows)), Fraction(0))
        if synth != f.coeff(n):
            raise NotInSpaceError(
                f"residual at q^{n}: series is not in the weight-{space.weight} space"
            )
    return coords
