"""Exact scalar arithmetic.

Rationals are plain ``fractions.Fraction`` (re-exported as ``Rat``); on top of
that this module provides Bernoulli numbers under the B_1 = -1/2 convention,
falling/rising factorials including the negative-index falling factorial
(x)_m := 1/(x)_{-m} for m <= -1, exact Gamma values at integers and
half-integers tracked as rational multiples of pi^(h/2), and arithmetic in a
real quadratic field Q(sqrt(d)).

All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import GammaPoleError

Rat = Fraction

__all__ = [
    "Rat",
    "PiScalar",
    "QuadNum",
    "bernoulli",
    "falling_factorial",
    "rising_factorial",
    "gamma_exact",
]


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2 (so E_4 = 1 + 240q + ...).

    Computed by the Akiyama-Tanigawa triangle, which yields the B_1 = +1/2
    convention; only the n = 1 value differs between the two conventions.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n == 1:
        return Fraction(-1, 2)
    row = [Fraction(0)] * (n + 1)
    for m in range(n + 1):
        row[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
    return row[0]


def falling_factorial(x: Fraction | int, m: int) -> Fraction:
    """Falling factorial (x)_m = x(x-1)...(x-m+1), with (x)_0 = 1.

    For m <= -1 returns 1/(x)_{-m}; raises ZeroDivisionError when that
    product vanishes.
    """
    x = Fraction(x)
    if m >= 0:
        out = Fraction(1)
        for i in range(m):
            out *= x - i
        return out
    base = falling_factorial(x, -m)
    if base == 0:
        raise ZeroDivisionError(f"falling factorial ({x})_{-m} is zero")
    return 1 / base


def rising_factorial(x: Fraction | int, j: int) -> Fraction:
    """Rising factorial x(x+1)...(x+j-1), with empty product 1 for j = 0."""
    if j < 0:
        raise ValueError("rising factorial needs j >= 0")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(j):
        out *= x + i
    return out


class PiScalar:
    """Exact scalar of the form coeff * pi^(half_pi_pow / 2).

    Canonical zero has half_pi_pow = 0.  Products and quotients add and
    subtract the half powers; addition is intentionally unsupported because
    mixed pi-powers do not stay in this class.
    """

    __slots__ = ("coeff", "half_pi_pow")

    def __init__(self, coeff: Fraction | int, half_pi_pow: int = 0):
        coeff = Fraction(coeff)
        self.coeff = coeff
        self.half_pi_pow = 0 if coeff == 0 else int(half_pi_pow)

    def __mul__(self, other):
        if isinstance(other, PiScalar):
            return PiScalar(self.coeff * other.coeff, self.half_pi_pow + other.half_pi_pow)
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.coeff * other, self.half_pi_pow)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScalar):
            if other.coeff == 0:
                raise ZeroDivisionError("division by zero PiScalar")
            return PiScalar(self.coeff / other.coeff, self.half_pi_pow - other.half_pi_pow)
        if isinstance(other, (int, Fraction)):
            return PiScalar(self.coeff / other, self.half_pi_pow)
        return NotImplemented

    def __neg__(self):
        return PiScalar(-self.coeff, self.half_pi_pow)

    def __eq__(self, other):
        if isinstance(other, PiScalar):
            return self.coeff == other.coeff and self.half_pi_pow == other.half_pi_pow
        if isinstance(other, (int, Fraction)):
            return self == PiScalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeff, self.half_pi_pow))

    def __float__(self):
        return float(self.coeff) * math.pi ** (self.half_pi_pow / 2)

    def __repr__(self):
        return f"PiScalar({self.coeff!r}, half_pi_pow={self.half_pi_pow})"


@lru_cache(maxsize=None)
def _is_squarefree(d: int) -> bool:
    if d <= 0:
        return False
    if d % 4 == 0:
        return False
    p = 3
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        p += 2
    return True


class QuadNum:
    """Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).

    d must be a squarefree positive integer (d = 1 encodes a rational value).
    Arithmetic requires matching d, except that purely rational operands
    (b = 0) adapt to the other side's field.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Fraction | int, b: Fraction | int = 0, d: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        d = int(d)
        if b == 0:
            d = 1
        if not _is_squarefree(d):
            raise ValueError(f"d = {d} is not a squarefree positive integer")
        self.a = a
        self.b = b
        self.d = d

    @staticmethod
    def _coerce(value, d: int) -> "QuadNum":
        if isinstance(value, QuadNum):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadNum(value, 0, 1)
        raise TypeError(f"cannot interpret {value!r} as QuadNum")

    def _join(self, other) -> tuple["QuadNum", "QuadNum", int]:
        other = self._coerce(other, self.d)
        if self.d == other.d:
            return self, other, self.d
        if self.b == 0:
            return self, other, other.d
        if other.b == 0:
            return self, other, self.d
        raise ValueError(f"incompatible quadratic fields d={self.d} and d={other.d}")

    def __add__(self, other):
        try:
            x, y, d = self._join(other)
        except TypeError:
            return NotImplemented
        return QuadNum(x.a + y.a, x.b + y.b, d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other, self.d))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

    def __mul__(self, other):
        try:
            x, y, d = self._join(other)
        except TypeError:
            return NotImplemented
        return QuadNum(x.a * y.a + x.b * y.b * d, x.a * y.b + x.b * y.a, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other, self.d)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero QuadNum")
        num = self * other.conjugate()
        return QuadNum(num.a / n, num.b / n, num.d)

    def __rtruediv__(self, other):
        return self._coerce(other, self.d) / self

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2 (rational)."""
        return self.a * self.a - self.b * self.b * self.d

    def is_rational(self) -> bool:
        return self.b == 0

    def embed(self) -> float:
        """Real embedding with sqrt(d) > 0."""
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadNum(other)
        if not isinstance(other, QuadNum):
            return NotImplemented
        if self.b == 0 and other.b == 0:
            return self.a == other.a
        return self.d == other.d and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __repr__(self):
        if self.b == 0:
            return f"QuadNum({self.a})"
        return f"QuadNum({self.a} + {self.b}*sqrt({self.d}))"


def gamma_exact(x: Fraction | int) -> PiScalar:
    """Exact Gamma at integers and half-integers.

    Gamma(n) = (n-1)! for n >= 1; Gamma(n + 1/2) = (2n)!/(4^n n!) * sqrt(pi);
    negative half-odd-integers are reached through Gamma(x) = Gamma(x+1)/x.
    Nonpositive integers raise GammaPoleError.
    """
    x = Fraction(x)
    if x.denominator == 1:
        n = x.numerator
        if n <= 0:
            raise GammaPoleError(f"Gamma pole at {n}")
        return PiScalar(math.factorial(n - 1), 0)
    if x.denominator != 2:
        raise ValueError("gamma_exact is defined for half-integers only")
    k = int(x - Fraction(1, 2))
    if x > 0:
        # x = k + 1/2 with k >= 0
        coeff = Fraction(math.factorial(2 * k), 4**k * math.factorial(k))
        return PiScalar(coeff, 1)
    # negative half-odd-integer: climb to 1/2
    steps = -k
    denom = rising_factorial(x, steps)
    return PiScalar(Fraction(1) / denom, 1)
