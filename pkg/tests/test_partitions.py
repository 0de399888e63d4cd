from fractions import Fraction as F

import pytest

from pentarc.forms import dim_cusp
from pentarc.hecke import trace_series
from pentarc.partitions import (
    partition_table,
    pentagonal,
    recurrence_rhs,
    recurrence_weight,
    sigma,
)
from pentarc.qseries import IntQSeries


def test_pentagonal_values():
    assert pentagonal(1) == 2 and pentagonal(-1) == 1
    assert pentagonal(2) == 7 and pentagonal(-2) == 5
    assert pentagonal(0) == 0


def test_partition_table_values():
    t = partition_table(10)
    assert t.values[:6] == (1, 1, 2, 3, 5, 7)
    assert t.p(10) == 42
    assert partition_table(100).p(100) == 190569292
    assert t.p(-3) == 0


def test_partition_table_vs_series_inverse():
    n = 200
    table = partition_table(n)
    pent = [0] * (n + 1)
    k = 0
    while pentagonal(k) <= n or pentagonal(-k) <= n:
        for kk in ((k, -k) if k else (0,)):
            if pentagonal(kk) <= n:
                pent[pentagonal(kk)] = -1 if kk % 2 else 1
        k += 1
    inv = IntQSeries(0, pent).invert()
    for i in range(n + 1):
        assert inv.coeff(i) == table.p(i)


def test_partition_table_monotone():
    values = partition_table(60).values
    assert all(values[n] > values[n - 1] for n in range(2, 61))


def test_sigma_values():
    assert sigma(3, 1) == 1
    assert sigma(3, 4) == 73
    assert sigma(11, 2) == 2049


def test_recurrence_weight_closed_forms():
    # order 2: 216 n^2 - 36 (6k+1)^2 n + (6k+1)^4
    for n, expect in ((1, 181), (2, 793), (3, 1837)):
        assert recurrence_weight(2, n, 0) == expect
    assert recurrence_weight(2, 1, 1) == 216 - 36 * 49 + 49**2 == 853
    for n in range(4):
        for k in range(-3, 4):
            assert recurrence_weight(0, n, k) == 1


def test_recurrence_weight_k_dependence():
    # depends on k only through (6k+1)^2
    for nu in (2, 5, 9):
        for n in (1, 7):
            seen = {}
            for k in range(-10, 11):
                u = (6 * k + 1) ** 2
                val = recurrence_weight(nu, n, k)
                if u in seen:
                    assert seen[u] == val
                seen[u] = val


def test_weight_at_zero_never_vanishes():
    for nu in range(15):
        for n in range(1, 1001):
            assert recurrence_weight(nu, n, 0) != 0


def test_recurrence_rhs_basic_cases():
    table = partition_table(50)
    assert recurrence_rhs(2, 1, F(0), table) == 1
    tr6 = trace_series(6, 3)
    assert recurrence_rhs(6, 3, tr6.value(3), table) == 3
    tr12 = trace_series(12, 2)
    assert recurrence_rhs(12, 2, tr12.value(2), table) == 2


def test_recurrence_rhs_validation():
    table = partition_table(5)
    with pytest.raises(ValueError):
        recurrence_rhs(1, 1, F(0), table)
    with pytest.raises(ValueError):
        recurrence_rhs(2, 9, F(0), table)


def test_recurrence_reproduces_p_all_orders():
    """Every order nu in 2..13 reproduces p(n) exactly for n <= 40."""
    n_max = 40
    table = partition_table(n_max)
    for nu in range(2, 14):
        traces = trace_series(nu, n_max) if dim_cusp(2 * nu) else None
        for n in range(1, n_max + 1):
            trace = traces.value(n) if traces else F(0)
            value = recurrence_rhs(nu, n, trace, table)
            assert value.denominator == 1 and value == table.p(n), (nu, n)


def test_recurrence_rhs_detects_wrong_trace():
    table = partition_table(10)
    value = recurrence_rhs(6, 3, F(1, 7), table)
    assert value.denominator != 1
