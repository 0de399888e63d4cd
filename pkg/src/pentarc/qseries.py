"""Truncated formal q-series over exact rationals.

Two dense representations share one precision discipline:

* ``QSeries24`` lives on the 1/24 exponent grid: ``coeffs[i]`` multiplies
  q^((offset24 + i)/24), and the series is known exactly for every exponent
  e/24 with e < prec24 (exponents below offset24 are exactly zero).
* ``IntQSeries`` is the same over integer exponents of q.

Arithmetic never fabricates coefficients: a product is truncated to
min(a.prec + b.offset, b.prec + a.offset), a sum to min(a.prec, b.prec).
Everything is immutable, so results are freely shared and cached.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InternalCancellationError, PrecisionError

#: default number of integer q-coefficients for CLI-facing verifications
DEFAULT_PREC = 60

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fracs(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(v if isinstance(v, Fraction) else Fraction(v) for v in values)


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], out_len: int) -> list[Fraction]:
    """Truncated Cauchy product; the sparser operand drives the outer loop."""
    if sum(1 for x in a if x) > sum(1 for x in b if x):
        a, b = b, a
    out = [_ZERO] * out_len
    for i, ai in enumerate(a):
        if i >= out_len:
            break
        if not ai:
            continue
        jmax = min(len(b), out_len - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _invert_coeffs(a: Sequence[Fraction], out_len: int) -> list[Fraction]:
    """Coefficients of 1/a by the standard recursive convolution."""
    lead = a[0]
    inv_lead = 1 / lead
    out = [_ZERO] * out_len
    out[0] = inv_lead
    nonzero = [(k, ak) for k, ak in enumerate(a) if k and ak]
    for n in range(1, out_len):
        acc = _ZERO
        for k, ak in nonzero:
            if k > n:
                break
            acc += ak * out[n - k]
        if acc:
            out[n] = -inv_lead * acc
    return out


class QSeries24:
    """Truncated series on the q^(1/24) lattice with Fraction coefficients."""

    __slots__ = ("offset24", "coeffs", "prec24")

    def __init__(self, offset24: int, coeffs: Iterable, prec24: int | None = None):
        self.coeffs = _as_fracs(coeffs)
        self.offset24 = int(offset24)
        self.prec24 = self.offset24 + len(self.coeffs) if prec24 is None else int(prec24)
        if self.prec24 != self.offset24 + len(self.coeffs):
            raise ValueError("prec24 must equal offset24 + len(coeffs)")
        if not self.coeffs:
            raise ValueError("series must store at least one coefficient")

    # -- access ------------------------------------------------------------

    def coeff24(self, e: int) -> Fraction:
        """Coefficient of q^(e/24); exact zero below offset24."""
        if e >= self.prec24:
            raise PrecisionError(f"exponent {e}/24 beyond precision {self.prec24}/24")
        if e < self.offset24:
            return _ZERO
        return self.coeffs[e - self.offset24]

    def valuation24(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.offset24 + i
        return None

    def is_zero(self) -> bool:
        return self.valuation24() is None

    def agrees_with(self, other: "QSeries24") -> bool:
        """Termwise equality through the smaller guaranteed precision."""
        lo = min(self.offset24, other.offset24)
        hi = min(self.prec24, other.prec24)
        return all(self.coeff24(e) == other.coeff24(e) for e in range(lo, hi))

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries24):
            return NotImplemented
        off = min(self.offset24, other.offset24)
        prec = min(self.prec24, other.prec24)
        if prec <= off:
            raise PrecisionError("operands have no common known range")
        return QSeries24(off, [self.coeff24(e) + other.coeff24(e) for e in range(off, prec)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QSeries24(self.offset24, [-c for c in self.coeffs])

    def scale(self, r) -> "QSeries24":
        r = Fraction(r)
        return QSeries24(self.offset24, [r * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries24):
            return NotImplemented
        out_len = min(len(self.coeffs), len(other.coeffs))
        out = _convolve(self.coeffs, other.coeffs, out_len)
        return QSeries24(self.offset24 + other.offset24, out)

    __rmul__ = __mul__

    def invert(self) -> "QSeries24":
        """Multiplicative inverse up to precision; offset negates."""
        if not self.coeffs[0]:
            raise ZeroDivisionError("leading coefficient is zero")
        out = _invert_coeffs(self.coeffs, len(self.coeffs))
        return QSeries24(-self.offset24, out)

    def deriv(self) -> "QSeries24":
        """The operator D = q d/dq: multiply the e/24 coefficient by e/24."""
        return QSeries24(
            self.offset24,
            [c * Fraction(self.offset24 + i, 24) for i, c in enumerate(self.coeffs)],
        )

    def pow(self, n: int) -> "QSeries24":
        if n < 1:
            raise ValueError("pow expects n >= 1")
        out = self
        for bit in bin(n)[3:]:
            out = out * out
            if bit == "1":
                out = out * self
        return out

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"QSeries24(offset24={self.offset24}, prec24={self.prec24}, [{head}, ...])"


class IntQSeries:
    """Truncated series over integer exponents of q with Fraction coefficients."""

    __slots__ = ("offset", "coeffs", "prec")

    def __init__(self, offset: int, coeffs: Iterable, prec: int | None = None):
        self.coeffs = _as_fracs(coeffs)
        self.offset = int(offset)
        self.prec = self.offset + len(self.coeffs) if prec is None else int(prec)
        if self.prec != self.offset + len(self.coeffs):
            raise ValueError("prec must equal offset + len(coeffs)")
        if not self.coeffs:
            raise ValueError("series must store at least one coefficient")

    def coeff(self, n: int) -> Fraction:
        if n >= self.prec:
            raise PrecisionError(f"exponent {n} beyond precision {self.prec}")
        if n < self.offset:
            return _ZERO
        return self.coeffs[n - self.offset]

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.offset + i
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    def agrees_with(self, other: "IntQSeries") -> bool:
        lo = min(self.offset, other.offset)
        hi = min(self.prec, other.prec)
        return all(self.coeff(n) == other.coeff(n) for n in range(lo, hi))

    def __add__(self, other):
        if not isinstance(other, IntQSeries):
            return NotImplemented
        off = min(self.offset, other.offset)
        prec = min(self.prec, other.prec)
        if prec <= off:
            raise PrecisionError("operands have no common known range")
        return IntQSeries(off, [self.coeff(n) + other.coeff(n) for n in range(off, prec)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntQSeries(self.offset, [-c for c in self.coeffs])

    def scale(self, r) -> "IntQSeries":
        r = Fraction(r)
        return IntQSeries(self.offset, [r * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, IntQSeries):
            return NotImplemented
        out_len = min(len(self.coeffs), len(other.coeffs))
        out = _convolve(self.coeffs, other.coeffs, out_len)
        return IntQSeries(self.offset + other.offset, out)

    __rmul__ = __mul__

    def invert(self) -> "IntQSeries":
        if not self.coeffs[0]:
            raise ZeroDivisionError("leading coefficient is zero")
        out = _invert_coeffs(self.coeffs, len(self.coeffs))
        return IntQSeries(-self.offset, out)

    def deriv(self) -> "IntQSeries":
        """D = q d/dq on integer exponents."""
        return IntQSeries(
            self.offset, [c * (self.offset + i) for i, c in enumerate(self.coeffs)]
        )

    def pow(self, n: int) -> "IntQSeries":
        if n < 1:
            raise ValueError("pow expects n >= 1")
        out = self
        for bit in bin(n)[3:]:
            out = out * out
            if bit == "1":
                out = out * self
        return out

    def truncate(self, prec: int) -> "IntQSeries":
        """Restrict to exponents < prec (prec must not exceed what is known)."""
        if prec > self.prec:
            raise PrecisionError(f"cannot extend precision {self.prec} to {prec}")
        if prec <= self.offset:
            raise ValueError("truncation would leave no stored coefficients")
        return IntQSeries(self.offset, self.coeffs[: prec - self.offset])

    def to_qseries24(self) -> QSeries24:
        """Embed on the 1/24 grid (exponents multiplied by 24)."""
        out = [_ZERO] * (24 * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            out[24 * i] = c
        # exponents strictly between integer points are exact zeros, and the
        # series is known through 24*(prec-1) + 23
        out.extend([_ZERO] * 23)
        return QSeries24(24 * self.offset, out)

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        return f"IntQSeries(offset={self.offset}, prec={self.prec}, [{head}, ...])"


def to_int_series(s: QSeries24) -> IntQSeries:
    """Down-convert a 1/24-grid series whose support is on integer exponents.

    Every stored coefficient at an exponent not divisible by 24 must vanish;
    a nonzero one raises InternalCancellationError.
    """
    for i, c in enumerate(s.coeffs):
        if c and (s.offset24 + i) % 24 != 0:
            raise InternalCancellationError(
                f"nonzero coefficient at fractional exponent {(s.offset24 + i)}/24"
            )
    off = -((-s.offset24) // 24)  # ceil division
    prec = -((-s.prec24) // 24)
    if prec <= off:
        raise PrecisionError("no integer exponents inside known range")
    coeffs = []
    for n in range(off, prec):
        e = 24 * n
        coeffs.append(s.coeffs[e - s.offset24] if e >= s.offset24 else _ZERO)
    return IntQSeries(off, coeffs)


@lru_cache(maxsize=None)
def eta_expansion(prec24: int) -> QSeries24:
    """Dedekind eta: sum over k in Z of (-1)^k q^((6k+1)^2 / 24).

    Stored from its leading exponent 1/24.
    """
    if prec24 <= 1:
        raise ValueError("prec24 must exceed the leading exponent 1")
    coeffs = [_ZERO] * (prec24 - 1)
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = (6 * kk + 1) ** 2
            if e < prec24:
                coeffs[e - 1] = Fraction(-1 if kk % 2 else 1)
                hit = True
        if not hit:
            break
        k += 1
    return QSeries24(1, coeffs)


@lru_cache(maxsize=None)
def eta_product_expansion(prec24: int) -> QSeries24:
    """Dedekind eta as the finite product q^(1/24) prod_{n<=N} (1 - q^n).

    Independent of eta_expansion; the two must agree up to precision
    (Euler's Pentagonal Number Theorem).
    """
    if prec24 <= 1:
        raise ValueError("prec24 must exceed the leading exponent 1")
    n_terms = prec24 // 24 + 1
    acc = QSeries24(1, [_ONE] + [_ZERO] * (prec24 - 2))
    for n in range(1, n_terms + 1):
        length = prec24 - 1
        factor = [_ZERO] * length
        factor[0] = _ONE
        if 24 * n < length:
            factor[24 * n] = Fraction(-1)
        acc = acc * QSeries24(0, factor)
    return acc


@lru_cache(maxsize=None)
def eta_inverse_expansion(prec24: int) -> QSeries24:
    """1/eta = q^(-1/24) * sum p(n) q^n, computed by inverting eta."""
    if prec24 <= -1:
        raise ValueError("prec24 must exceed the leading exponent -1")
    return eta_expansion(prec24 + 2).invert()
