"""Partition numbers, pentagonal numbers, divisor sums, and the
trace-corrected pentagonal recurrence.

The recurrence generalizing Euler's: for nu >= 0 and n >= 1,

    p(n) = ( -(4 nu / B_{2 nu}) C(2nu-2, nu-2) sigma_{2nu-1}(n) + trace(n)
             + sum_{k != 0} (-1)^(k+1) w_nu(n,k) p(n - omega(k)) ) / w_nu(n,0)

where omega(k) = (3k^2+k)/2 and w_nu(n,k) is the weight polynomial
``recurrence_weight`` below (identically 1 at nu = 0, recovering Euler).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt

from .exactnum import bernoulli, falling_factorial

__all__ = [
    "PartitionTable",
    "pentagonal",
    "partition_table",
    "sigma",
    "recurrence_weight",
    "recurrence_rhs",
]


def pentagonal(k: int) -> int:
    """omega(k) = (3k^2 + k)/2; omega(0) = 0."""
    return (3 * k * k + k) // 2


@dataclass(frozen=True)
class PartitionTable:
    """p(0..N) as exact integers; p(n) = 0 for n < 0."""

    values: tuple[int, ...]

    def p(self, n: int) -> int:
        if n < 0:
            return 0
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def partition_table(n_max: int) -> PartitionTable:
    """p(n) for n <= n_max by the signed pentagonal recurrence.

    Terms are taken in the order k = 1, -1, 2, -2, ... and the recurrence
    stops at the first |k| where both pentagonal indices exceed n.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = [0] * (n_max + 1)
    values[0] = 1
    for n in range(1, n_max + 1):
        acc = 0
        k = 1
        while True:
            w1, w2 = pentagonal(k), pentagonal(-k)
            if w1 > n and w2 > n:
                break
            sign = 1 if k % 2 else -1
            if w1 <= n:
                acc += sign * values[n - w1]
            if w2 <= n:
                acc += sign * values[n - w2]
            k += 1
        values[n] = acc
    return PartitionTable(tuple(values))


def sigma(m: int, n: int) -> int:
    """Divisor power sum sigma_m(n) = sum over d | n of d^m."""
    if n < 1:
        raise ValueError("sigma needs n >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**m
            e = n // d
            if e != d:
                total += e**m
    return total


@lru_cache(maxsize=None)
def _weight_prefactor(nu: int) -> Fraction:
    # (2nu-1) * ((2nu-2)_(nu-1))^2 / 2^(2nu-2); the nu = 0 case goes through
    # the negative-index falling factorial (-2)_(-1) = -1/2.
    return (
        (2 * nu - 1)
        * falling_factorial(2 * nu - 2, nu - 1) ** 2
        / Fraction(4) ** (nu - 1)
    )


def recurrence_weight(nu: int, n: int, k: int) -> Fraction:
    """Weight polynomial of the order-nu pentagonal recurrence.

    Depends on k only through u = (6k+1)^2:

        pref(nu) * sum_{r=0}^{nu} (-1)^(nu+r) (2nu-2r-1) / ((2r)! (2nu-2r)!)
                   * u^r * (24n - u)^(nu-r)

    At nu = 0 this is identically 1; at nu = 2 it equals
    216 n^2 - 36 u n + u^2.
    """
    if nu < 0:
        raise ValueError("nu must be >= 0")
    u = (6 * k + 1) ** 2
    v = 24 * n - u
    acc = Fraction(0)
    for r in range(nu + 1):
        sign = -1 if (nu + r) % 2 else 1
        num = sign * (2 * nu - 2 * r - 1) * u**r * v ** (nu - r)
        acc += Fraction(num, _fact(2 * r) * _fact(2 * nu - 2 * r))
    return _weight_prefactor(nu) * acc


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def recurrence_rhs(nu: int, n: int, trace: Fraction, ptable: PartitionTable) -> Fraction:
    """Right-hand side of the order-nu recurrence, as an exact rational.

    ``trace`` is the weight-2nu trace value for this n (zero whenever the
    cusp space is trivial).  The result equals p(n) when the trace is
    correct; returning a Fraction lets callers detect a wrong trace through
    a non-integral value.
    """
    if nu < 2:
        raise ValueError("recurrence_rhs needs nu >= 2")
    if n < 1:
        raise ValueError("recurrence_rhs needs n >= 1")
    if len(ptable) <= n:
        raise ValueError("partition table does not cover n")
    w0 = recurrence_weight(nu, n, 0)
    if w0 == 0:
        # cannot occur for n >= 1; guard kept so a regression is loud
        raise ArithmeticError(f"vanishing k=0 weight at nu={nu}, n={n}")
    eis = -Fraction(4 * nu) / bernoulli(2 * nu) * comb(2 * nu - 2, nu - 2) * sigma(2 * nu - 1, n)
    acc = eis + trace
    k = 1
    while True:
        w1, w2 = pentagonal(k), pentagonal(-k)
        if w1 > n and w2 > n:
            break
        sign = 1 if k % 2 else -1
        if w1 <= n:
            acc += sign * recurrence_weight(nu, n, k) * ptable.p(n - w1)
        if w2 <= n:
            acc += sign * recurrence_weight(nu, n, -k) * ptable.p(n - w2)
        k += 1
    return acc / w0
