"""Exact truncated power series in u with q = u**D, over the rationals.

This ring is where coefficient-exact identity checks happen.  All arithmetic
is exact (ints and Fractions); multiplication truncates at the ring order.
Construction helpers cover the shapes the identity registry needs: monomial
q-powers, finite and infinite q-shifted-factorial products, and division by
sparse factors 1 - c*u^e (which is how reciprocals of products are built
without a dense O(N^2) inversion).
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .context import QContext, to_mp
from .errors import (ExponentError, NotUnitError, SeriesMismatchError,
                     ValuationError)
from .exactpoly import QPoly


class FormalSeries:
    """Truncated series sum_{k=0}^{N} c_k u^k, exact through order N."""

    __slots__ = ("D", "N", "c")

    def __init__(self, D: int, N: int, coeffs=None):
        self.D = D
        self.N = N
        if coeffs is None:
            self.c = [0] * (N + 1)
        else:
            c = list(coeffs)
            if len(c) < N + 1:
                c.extend([0] * (N + 1 - len(c)))
            self.c = c[:N + 1]

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ctx: QContext) -> "FormalSeries":
        return cls(ctx.base_exponent, ctx.u_order)

    @classmethod
    def one(cls, ctx: QContext) -> "FormalSeries":
        s = cls.zero(ctx)
        s.c[0] = 1
        return s

    @classmethod
    def monomial(cls, ctx: QContext, coeff, u_exp: int) -> "FormalSeries":
        if u_exp < 0:
            raise ExponentError(f"negative u-exponent {u_exp}")
        s = cls.zero(ctx)
        if u_exp <= s.N:
            s.c[u_exp] = coeff
        return s

    @classmethod
    def from_qpoly(cls, ctx: QContext, poly: QPoly) -> "FormalSeries":
        s = cls.zero(ctx)
        for k, a in enumerate(poly.coeffs()):
            e = k * ctx.base_exponent
            if e > s.N:
                break
            s.c[e] = a
        return s

    # -- ring structure ----------------------------------------------------

    def _check(self, other: "FormalSeries"):
        if self.D != other.D or self.N != other.N:
            raise SeriesMismatchError(
                f"series rings differ: (D={self.D}, N={self.N}) vs (D={other.D}, N={other.N})")

    def copy(self) -> "FormalSeries":
        return FormalSeries(self.D, self.N, list(self.c))

    def __add__(self, other):
        self._check(other)
        return FormalSeries(self.D, self.N, [a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other):
        self._check(other)
        return FormalSeries(self.D, self.N, [a - b for a, b in zip(self.c, other.c)])

    def __neg__(self):
        return FormalSeries(self.D, self.N, [-a for a in self.c])

    def scale(self, factor) -> "FormalSeries":
        return FormalSeries(self.D, self.N, [a * factor for a in self.c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        a, b = self.c, other.c
        nza = [k for k, v in enumerate(a) if v != 0]
        nzb = [k for k, v in enumerate(b) if v != 0]
        if len(nzb) < len(nza):
            a, b, nza = b, a, nzb
        out = [0] * (self.N + 1)
        top = self.N
        for i in nza:
            ai = a[i]
            stop = top - i + 1
            for j in range(stop):
                bj = b[j]
                if bj != 0:
                    out[i + j] += ai * bj
        return FormalSeries(self.D, self.N, out)

    __rmul__ = __mul__

    def shift_up(self, k: int) -> "FormalSeries":
        """Multiply by u**k (k >= 0)."""
        if k < 0:
            raise ExponentError("shift_up needs k >= 0")
        return FormalSeries(self.D, self.N, [0] * k + self.c[:self.N + 1 - k])

    def mul_one_minus(self, coeff, e: int) -> "FormalSeries":
        """Multiply by (1 - coeff * u**e) in O(N)."""
        out = list(self.c)
        for k in range(self.N, e - 1, -1):
            out[k] = out[k] - coeff * self.c[k - e]
        return FormalSeries(self.D, self.N, out)

    def div_one_minus(self, coeff, e: int) -> "FormalSeries":
        """Divide by (1 - coeff * u**e) in O(N); e >= 1."""
        if e < 1:
            raise ExponentError("div_one_minus needs e >= 1")
        out = list(self.c)
        for k in range(e, self.N + 1):
            if out[k - e] != 0:
                out[k] = out[k] + coeff * out[k - e]
        return FormalSeries(self.D, self.N, out)

    def invert(self) -> "FormalSeries":
        """Multiplicative inverse up to order N (constant term must be a unit)."""
        a0 = self.c[0]
        if a0 == 0:
            raise NotUnitError("cannot invert a series with zero constant term")
        inv0 = Fraction(1) / Fraction(a0)
        out = [0] * (self.N + 1)
        out[0] = inv0
        nza = [k for k, v in enumerate(self.c) if v != 0 and k > 0]
        for n in range(1, self.N + 1):
            acc = 0
            for k in nza:
                if k > n:
                    break
                acc += self.c[k] * out[n - k]
            if acc != 0:
                out[n] = -inv0 * acc
        return FormalSeries(self.D, self.N, out)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_zero() if other == 0 else self == FormalSeries(
                self.D, self.N, [other])
        if not isinstance(other, FormalSeries):
            return NotImplemented
        self._check(other)
        return all(a == b for a, b in zip(self.c, other.c))

    def __hash__(self):
        return hash((self.D, self.N, tuple(self.c)))

    def first_difference(self, other) -> int | None:
        """Smallest u-exponent where the two series differ, or None."""
        self._check(other)
        for k, (a, b) in enumerate(zip(self.c, other.c)):
            if a != b:
                return k
        return None

    def coeff_u(self, k: int):
        return self.c[k] if 0 <= k <= self.N else 0

    def coeff_q(self, k):
        """Coefficient of q**k (k may be a Fraction with denominator | D)."""
        e = Fraction(k) * self.D
        if e.denominator != 1:
            raise ExponentError(f"q^{k} is not on the u-grid with D={self.D}")
        return self.coeff_u(int(e))

    def q_coefficients(self, through_order: int) -> list:
        return [self.coeff_u(k * self.D) for k in range(through_order + 1)]

    def eval_at(self, q, dps: int = 50):
        """Numeric value of the truncated series at real q in (0, 1)."""
        with mp.workdps(dps + 10):
            u = to_mp(q) ** (mp.mpf(1) / self.D)
            acc = mp.mpf(0)
            for a in reversed(self.c):
                acc = acc * u + (to_mp(a) if a else 0)
            return acc

    def __repr__(self):
        nz = [(k, v) for k, v in enumerate(self.c) if v != 0][:8]
        body = " + ".join(f"{v}*u^{k}" for k, v in nz) or "0"
        return f"FormalSeries(D={self.D}, N={self.N}: {body} + ...)"


# -- constructors tied to a context ---------------------------------------

def fs_from_qpower(r, ctx: QContext) -> FormalSeries:
    """Monomial q**r as a series in u; r = k/m needs m | D and r >= 0."""
    r = Fraction(r)
    e = r * ctx.base_exponent
    if e.denominator != 1:
        raise ExponentError(
            f"q^{r} needs denominator dividing D={ctx.base_exponent}")
    if e < 0:
        raise ExponentError(f"negative exponent q^{r} is not in the power-series ring")
    return FormalSeries.monomial(ctx, 1, int(e))


def qexp_to_u(r, ctx: QContext) -> int:
    """Exact u-exponent of q**r; raises if off-grid or negative."""
    e = Fraction(r) * ctx.base_exponent
    if e.denominator != 1:
        raise ExponentError(f"q^{r} off the u-grid for D={ctx.base_exponent}")
    if e < 0:
        raise ExponentError(f"negative exponent q^{r}")
    return int(e)


def fs_pochhammer_infinite(coeff, q_exp, step, ctx: QContext,
                           inverse: bool = False) -> FormalSeries:
    """(c q^{q_exp}; q^{step})_infinity, or its reciprocal, exactly truncated.

    Factors are 1 - c u^{D(q_exp + k step)}; the product stabilizes as long
    as step > 0 (factors eventually exceed the truncation order).  q_exp = 0
    contributes a constant factor 1 - c.
    """
    step = Fraction(step)
    if step <= 0:
        raise ValuationError("infinite product needs a positive exponent step")
    q_exp = Fraction(q_exp)
    if q_exp < 0:
        raise ExponentError("product start exponent must be nonnegative")
    s = FormalSeries.one(ctx)
    k = 0
    while True:
        e = (q_exp + k * step) * ctx.base_exponent
        if e.denominator != 1:
            raise ExponentError(
                f"factor exponent {q_exp + k * step} off the u-grid (D={ctx.base_exponent})")
        ei = int(e)
        if ei > ctx.u_order:
            return s
        if ei == 0:
            s = s.scale(1 - coeff)
        elif inverse:
            s = s.div_one_minus(coeff, ei)
        else:
            s = s.mul_one_minus(coeff, ei)
        k += 1


def fs_finite_pochhammer(coeff, q_exp, step, n: int, ctx: QContext) -> FormalSeries:
    """(c q^{q_exp}; q^{step})_n as an exact truncated series (n >= 0)."""
    s = FormalSeries.one(ctx)
    for k in range(n):
        e = (Fraction(q_exp) + k * Fraction(step)) * ctx.base_exponent
        if e.denominator != 1 or e < 0:
            raise ExponentError(f"factor exponent {e / ctx.base_exponent} not representable")
        ei = int(e)
        if ei == 0:
            s = s.scale(1 - coeff)
        elif ei <= ctx.u_order:
            s = s.mul_one_minus(coeff, ei)
    return s


def fs_div_finite_pochhammer(series: FormalSeries, coeff, q_exp, step, n: int,
                             ctx: QContext) -> FormalSeries:
    """series / (c q^{q_exp}; q^{step})_n via sparse-factor divisions."""
    out = series
    for k in range(n):
        e = (Fraction(q_exp) + k * Fraction(step)) * ctx.base_exponent
        if e.denominator != 1 or e < 0:
            raise ExponentError(f"factor exponent {e / ctx.base_exponent} not representable")
        ei = int(e)
        if ei == 0:
            unit = 1 - coeff
            if unit == 0:
                raise NotUnitError("finite product has a vanishing constant factor")
            out = out.scale(Fraction(1) / Fraction(unit))
        elif ei <= ctx.u_order:
            out = out.div_one_minus(coeff, ei)
    return out
