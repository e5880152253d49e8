"""q-shifted factorials, safe reciprocals, and q-binomial coefficients.

The finite product (a;q)_n extends to negative n through the ratio
convention (a;q)_{-k} = 1/((a q^{-k}; q)_k).  Reciprocals are exposed
separately (:func:`inv_pochhammer`) so that 1/(q;q)_{-k} can be an exact
zero instead of a division by an infinity: bilateral sums rely on that
vanishing to collapse onto their unilateral halves.

Arguments may be plain numbers or :class:`QPow` pairs ``c * q**e``.  The
structured form keeps exponent bookkeeping exact, so a factor such as
1 - a*q^0 at a = 1 vanishes identically rather than to roundoff.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import mpmath as mp

from .context import QContext, powq, to_mp
from .errors import NonConvergenceError, PoleError
from .exactpoly import QPoly
from .summation import SumOutcome


class QPow(NamedTuple):
    """A coefficient times an exact power of q: ``coeff * q**exponent``."""

    coeff: object
    exponent: object  # int or Fraction

    @classmethod
    def of(cls, coeff, exponent=0):
        return cls(coeff, exponent)


def _as_qpow(a) -> QPow:
    return a if isinstance(a, QPow) else QPow(a, 0)


def _factor(a: QPow, q, j):
    """1 - coeff * q**(exponent + j), exact when the joint exponent is 0."""
    e = a.exponent + j
    if e == 0:
        return 1 - a.coeff
    return 1 - a.coeff * powq(q, e)


def pochhammer_finite(a, q, n: int):
    """(a;q)_n for any integer n.

    Exact finite product for n >= 0; for n < 0 the ratio convention gives
    1/((a q^n; q)_{-n}) and a vanishing denominator factor raises PoleError.
    Works on mp numbers and on Fractions alike.
    """
    a = _as_qpow(a)
    if n >= 0:
        prod = _one_like(q)
        for k in range(n):
            prod = prod * _factor(a, q, k)
        return prod
    denom = _one_like(q)
    for j in range(1, -n + 1):
        f = _factor(a, q, -j)
        if f == 0:
            raise PoleError(f"(a;q)_{n} hits zero factor at q^(-{j})")
        denom = denom * f
    return 1 / denom


def inv_pochhammer(a, q, n: int):
    """1 / (a;q)_n, with the n < 0 case returned as an exact finite product.

    1/(a;q)_{-k} = (a q^{-k}; q)_k may legitimately be zero (for instance
    1/(q;q)_{-k} = 0), which is why this path never divides.
    """
    a = _as_qpow(a)
    if n < 0:
        prod = _one_like(q)
        for j in range(1, -n + 1):
            f = _factor(a, q, -j)
            if f == 0:
                return 0 * _one_like(q)
            prod = prod * f
        return prod
    denom = pochhammer_finite(a, q, n)
    if denom == 0:
        raise PoleError(f"(a;q)_{n} vanished; reciprocal undefined")
    return 1 / denom


def pochhammer_ratio(a, b, q, n: int):
    """(a;q)_n / (b;q)_n with exact-zero and pole handling on both tails.

    For n = -k the ratio equals (b q^{-k};q)_k / (a q^{-k};q)_k; a vanishing
    numerator kills the term exactly, a vanishing denominator is a pole, and
    both vanishing at once is reported as a pole (indeterminate).
    """
    a, b = _as_qpow(a), _as_qpow(b)
    if n >= 0:
        num = pochhammer_finite(a, q, n)
        den = pochhammer_finite(b, q, n)
        if den == 0:
            raise PoleError(f"(b;q)_{n} vanished in denominator")
        return num / den
    k = -n
    num = _one_like(q)
    num_zero = False
    for j in range(1, k + 1):
        f = _factor(b, q, -j)
        if f == 0:
            num_zero = True
            break
        num = num * f
    den = _one_like(q)
    for j in range(1, k + 1):
        f = _factor(a, q, -j)
        if f == 0:
            if num_zero:
                raise PoleError(f"indeterminate (a;q)_{n}/(b;q)_{n}: both tails vanish")
            raise PoleError(f"(a;q)_{n} infinite: zero factor in its reciprocal")
        den = den * f
    if num_zero:
        return 0 * _one_like(q)
    return num / den


def pochhammer_infinite(a, q, ctx: QContext) -> SumOutcome:
    """(a;q)_infinity as a truncated product with a log-product tail bound."""
    a = _as_qpow(a)
    with ctx.workdps():
        qv = to_mp(q)
        if abs(qv) >= 1:
            raise PoleError(f"infinite product needs |q| < 1, got {qv}")
        aq = abs(to_mp(a.coeff)) * abs(qv) ** _as_float(a.exponent)
        prod = mp.mpf(1)
        tol = ctx.stop_tol
        k = 0
        while k < ctx.max_terms:
            f = _factor(a, qv, k)
            if f == 0:
                return SumOutcome(mp.mpf(0), k + 1, mp.mpf(0), True)
            prod = prod * f
            mag = aq * abs(qv) ** k
            if mag < tol:
                # |log tail| <= sum_{j>k} |a q^j| / (1 - |a q^j|)
                tail_log = mag * abs(qv) / ((1 - abs(qv)) * (1 - mag))
                tail = abs(prod) * (mp.e ** tail_log - 1)
                return SumOutcome(prod, k + 1, tail,
                                  bool(tail < mp.mpf(10) ** (-ctx.precision)))
            k += 1
        raise NonConvergenceError(f"(a;q)_inf did not settle in {ctx.max_terms} factors")


def pochhammer_infinite_value(a, q, ctx: QContext):
    """Value-only shorthand for (a;q)_infinity."""
    return pochhammer_infinite(a, q, ctx).value


def multi_pochhammer_infinite(params, q, ctx: QContext):
    """Product (a1, a2, ...; q)_infinity of several infinite factors."""
    with ctx.workdps():
        prod = mp.mpf(1)
        for a in params:
            prod = prod * pochhammer_infinite(a, q, ctx).value
        return prod


def q_binomial(n: int, k: int, q=None):
    """Gaussian binomial coefficient.

    With ``q=None`` returns the exact integer-coefficient QPoly; with a
    numeric or Fraction ``q`` evaluates the product formula directly
    (exactly for Fractions).  Zero outside 0 <= k <= n.
    """
    if k < 0 or n < 0 or k > n:
        return QPoly.zero() if q is None else 0 * _one_like(q)
    if q is None:
        poly = QPoly.one()
        for i in range(1, k + 1):
            poly = poly - poly.shift(n - k + i)  # multiply by (1 - q^{n-k+i})
            poly = poly.divexact_one_minus(i)
        return poly
    num = _one_like(q)
    den = _one_like(q)
    for i in range(1, k + 1):
        num = num * (1 - powq(q, n - k + i))
        den = den * (1 - powq(q, i))
    return num / den



def _one_like(q):
    if isinstance(q, (int, Fraction)):
        return Fraction(1)
    return mp.mpf(1)


def _as_float(e):
    if isinstance(e, Fraction):
        return float(e)
    return float(e)
