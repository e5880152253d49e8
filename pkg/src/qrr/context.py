"""Evaluation contexts and small numeric helpers.

Numeric work runs on mpmath real/complex numbers at ``precision`` target
digits plus a fixed guard allowance; exact work runs on ``fractions.Fraction``
(or on the truncated series ring in :mod:`qrr.formal`).  All functions are
pure for a fixed context, so values may be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp

from .errors import DomainError, ExponentError

# Series of a few hundred terms lose at most a couple of digits, so a fixed
# guard is enough to report residuals well below the pass threshold.
GUARD_DIGITS = 15

DEFAULT_PRECISION = 50
DEFAULT_MAX_TERMS = 4000
DEFAULT_BASE_EXPONENT = 12
DEFAULT_ORDER = 100


@dataclass(frozen=True)
class QContext:
    """Shared evaluation environment.

    mode
        ``"numeric"``: ``q`` is an mpmath number with ``|q| < 1`` and results
        carry ``precision`` target digits (guard digits are internal).
        ``"formal"``: computation happens in the exact truncated ring in the
        auxiliary variable ``u`` with ``q = u**base_exponent``, truncated so
        the series is exact through ``q**order``.
    """

    mode: str
    q: object = None
    precision: int = DEFAULT_PRECISION
    max_terms: int = DEFAULT_MAX_TERMS
    base_exponent: int = DEFAULT_BASE_EXPONENT
    order: int = DEFAULT_ORDER

    @classmethod
    def numeric(cls, q, precision: int = DEFAULT_PRECISION,
                max_terms: int = DEFAULT_MAX_TERMS) -> "QContext":
        with mp.workdps(precision + GUARD_DIGITS):
            qv = to_mp(q)
            if abs(qv) >= 1:
                raise DomainError(f"numeric mode requires |q| < 1, got q={qv}")
        return cls("numeric", qv, precision=precision, max_terms=max_terms)

    @classmethod
    def formal(cls, order: int = DEFAULT_ORDER,
               base_exponent: int = DEFAULT_BASE_EXPONENT) -> "QContext":
        if base_exponent < 1 or order < 1:
            raise DomainError("formal mode needs base_exponent >= 1 and order >= 1")
        return cls("formal", None, base_exponent=base_exponent, order=order)

    @property
    def working_dps(self) -> int:
        return self.precision + GUARD_DIGITS

    def workdps(self):
        """Context manager entering the working precision."""
        return mp.workdps(self.working_dps)

    @property
    def stop_tol(self):
        """Terms below this magnitude count as negligible for stopping."""
        return mp.mpf(10) ** (-(self.precision + 10))

    @property
    def pass_tol(self):
        """Default deviation threshold for a numeric identity check."""
        return mp.mpf(10) ** (-(self.precision - 10))

    @property
    def u_order(self) -> int:
        """Truncation order of the formal ring in the base variable u."""
        return self.order * self.base_exponent


def to_mp(x):
    """Convert ints, Fractions, floats, strings and mp numbers to mpf/mpc."""
    if isinstance(x, (mp.mpf, mp.mpc)):
        return x
    if isinstance(x, Fraction):
        return mp.mpf(x.numerator) / mp.mpf(x.denominator)
    if isinstance(x, complex):
        return mp.mpc(x)
    return mp.mpf(x)


def powq(base, exponent):
    """``base ** exponent`` for integer or Fraction exponents.

    Keeps exact types exact: a Fraction base with an integer exponent stays a
    Fraction, and fractional exponents of a Fraction are resolved through
    exact integer roots when they exist (``powq(F(1,4), F(1,2)) == F(1,2)``).
    mp numbers use the principal branch.
    """
    if isinstance(exponent, Fraction) and exponent.denominator == 1:
        exponent = int(exponent)
    if isinstance(exponent, int):
        return base ** exponent
    if not isinstance(exponent, Fraction):
        raise ExponentError(f"exponent must be int or Fraction, got {exponent!r}")
    if isinstance(base, Fraction):
        root = _fraction_root(base, exponent.denominator)
        return root ** exponent.numerator
    b = to_mp(base)
    return b ** (mp.mpf(exponent.numerator) / exponent.denominator)


def _fraction_root(x: Fraction, m: int) -> Fraction:
    if x < 0:
        raise ExponentError(f"no exact real {m}-th root of negative {x}")
    num = _iroot_exact(x.numerator, m)
    den = _iroot_exact(x.denominator, m)
    if num is None or den is None:
        raise ExponentError(f"{x} has no exact rational {m}-th root")
    return Fraction(num, den)


def _iroot_exact(n: int, m: int):
    if n == 0:
        return 0
    r = round(n ** (1.0 / m))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand ** m == n:
            return cand
    # float seed can be off for big ints; fall back to integer bisection
    lo, hi = 0, 1 << (max(n.bit_length() // m, 0) + 2)
    while lo <= hi:
        mid = (lo + hi) // 2
        p = mid ** m
        if p == n:
            return mid
        if p < n:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def scaled_deviation(lhs, rhs):
    """|lhs - rhs| / max(1, |lhs|, |rhs|): residual insensitive to magnitude."""
    l, r = to_mp(lhs), to_mp(rhs)
    scale = max(mp.mpf(1), abs(l), abs(r))
    return abs(l - r) / scale

