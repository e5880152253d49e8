"""Exact truncated-series ring: arithmetic laws, inversion, products."""

from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrr import (ExponentError, FormalSeries, NotUnitError, QContext,
                 SeriesMismatchError, ValuationError, fs_from_qpower,
                 fs_pochhammer_infinite)

CTX = QContext.formal(order=12, base_exponent=1)


def pentagonal_coefficients(order):
    """Euler's pentagonal coefficients of (q;q)_inf, by direct enumeration."""
    c = [0] * (order + 1)
    c[0] = 1
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        e2 = k * (3 * k + 1) // 2
        if e1 > order and e2 > order:
            break
        s = 1 if k % 2 == 0 else -1
        if e1 <= order:
            c[e1] += s
        if e2 <= order:
            c[e2] += s
        k += 1
    return c


small_series = st.lists(st.integers(-6, 6), min_size=1, max_size=13).map(
    lambda cs: FormalSeries(1, 12, cs))


def test_q_power_monomials():
    ctx = QContext.formal(order=10, base_exponent=12)
    assert fs_from_qpower(1, ctx).coeff_u(12) == 1
    assert fs_from_qpower(Fraction(1, 2), ctx).coeff_u(6) == 1
    with pytest.raises(ExponentError):
        fs_from_qpower(Fraction(1, 5), ctx)
    with pytest.raises(ExponentError):
        fs_from_qpower(Fraction(-1, 2), ctx)


def test_product_difference_of_squares():
    ctx = QContext.formal(order=2, base_exponent=1)
    one_plus = FormalSeries(1, 2, [1, 1])
    one_minus = FormalSeries(1, 2, [1, -1])
    assert (one_plus * one_minus) == FormalSeries(1, 2, [1, 0, -1])


def test_subtraction_gives_zero():
    s = FormalSeries(1, 12, [3, 1, 4, 1, 5])
    assert (s - s).is_zero()


def test_geometric_inverse_telescopes():
    ctx = QContext.formal(order=50, base_exponent=1)
    geo = FormalSeries(1, 50, [1] * 51)
    one_minus = FormalSeries(1, 50, [1, -1])
    assert (geo * one_minus) == FormalSeries.one(ctx)
    assert one_minus.invert() == geo


def test_mismatch_errors():
    with pytest.raises(SeriesMismatchError):
        FormalSeries(1, 10) + FormalSeries(2, 10)
    with pytest.raises(SeriesMismatchError):
        FormalSeries(1, 10) * FormalSeries(1, 11)


def test_invert_requires_unit():
    with pytest.raises(NotUnitError):
        FormalSeries(1, 5, [0, 1]).invert()


@settings(max_examples=30, deadline=None)
@given(small_series, small_series, small_series)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@settings(max_examples=25, deadline=None)
@given(small_series)
def test_invert_round_trip(a):
    if a.c[0] == 0:
        a = a + FormalSeries.one(QContext.formal(order=12, base_exponent=1))
        if a.c[0] == 0:
            return
    one = FormalSeries.one(QContext.formal(order=12, base_exponent=1))
    inv = a.invert()
    assert a * inv == one
    assert inv.invert() == a.scale(Fraction(1))


def test_euler_product_matches_pentagonal_oracle():
    ctx = QContext.formal(order=200, base_exponent=1)
    prod = fs_pochhammer_infinite(1, 1, 1, ctx)
    assert prod.q_coefficients(200) == pentagonal_coefficients(200)


def test_first_factor_only_below_base():
    # (u; q = u^D)_inf truncated below D keeps only the first factor 1 - u
    ctx = QContext("formal", None, base_exponent=5, order=1)
    s = FormalSeries.one(ctx)
    e = 1
    while e <= ctx.u_order:
        s = s.mul_one_minus(1, e)
        e += 5
    assert s.coeff_u(0) == 1 and s.coeff_u(1) == -1
    assert all(s.coeff_u(k) == 0 for k in range(2, min(5, ctx.u_order + 1)))


def test_infinite_product_requires_positive_step():
    ctx = QContext.formal(order=10, base_exponent=1)
    with pytest.raises(ValuationError):
        fs_pochhammer_infinite(1, 1, 0, ctx)


def test_numeric_evaluation_matches_mpmath():
    ctx = QContext.formal(order=120, base_exponent=1)
    prod = fs_pochhammer_infinite(1, 1, 1, ctx)
    for qs in ("0.1", "0.25"):
        val = prod.eval_at(mp.mpf(qs), dps=80)
        with mp.workdps(100):
            ref = mp.qp(mp.mpf(qs))
            # error budget: truncation tail past q^120 plus evaluation roundoff
            assert abs(val - ref) < mp.mpf(qs) ** 115 + mp.mpf(10) ** -85


def test_first_difference_reporting():
    a = FormalSeries(1, 10, [1, 2, 3])
    b = FormalSeries(1, 10, [1, 2, 4])
    assert a.first_difference(b) == 2
    assert a.first_difference(a) is None
