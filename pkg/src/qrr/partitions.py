"""Brute-force integer partition oracles.

Exhaustive enumeration (practical through n ~ 60) backs the combinatorial
claims: gap-restricted counts against series coefficients, congruence-class
counts against infinite-product coefficients, and box-bounded generating
polynomials against Gaussian binomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import QContext
from .errors import SizeError
from .exactpoly import QPoly
from .formal import FormalSeries, fs_pochhammer_infinite
from .pochhammer import q_binomial

SIZE_CAP = 60


@dataclass(frozen=True)
class Congruence:
    """Parts restricted to given residues modulo ``modulus``."""
    residues: frozenset
    modulus: int

    def admits(self, parts) -> bool:
        return all(p % self.modulus in self.residues for p in parts)


@dataclass(frozen=True)
class MinGap:
    """Successive parts differ by at least ``gap``; smallest part bounded below."""
    gap: int
    min_part: int = 1

    def admits(self, parts) -> bool:
        if parts and parts[-1] < self.min_part:
            return False
        return all(parts[i] - parts[i + 1] >= self.gap for i in range(len(parts) - 1))


@dataclass(frozen=True)
class Box:
    """At most ``rows`` parts, each at most ``cols``."""
    rows: int
    cols: int

    def admits(self, parts) -> bool:
        return len(parts) <= self.rows and (not parts or parts[0] <= self.cols)


@dataclass(frozen=True)
class Unrestricted:
    def admits(self, parts) -> bool:
        return True


def partitions_of(n: int, max_part: int | None = None,
                  max_parts: int | None = None):
    """Yield all partitions of n as descending tuples, optionally bounding
    the largest part and the number of parts."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def rec(remaining, cap, prefix):
        if remaining == 0:
            yield tuple(prefix)
            return
        if max_parts is not None and len(prefix) >= max_parts:
            return
        for p in range(min(cap, remaining), 0, -1):
            prefix.append(p)
            yield from rec(remaining - p, p, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def count_partitions(n: int, filt, cap: int = SIZE_CAP) -> int:
    """Exact filtered partition count by exhaustive enumeration."""
    if n > cap:
        raise SizeError(f"partition enumeration capped at n <= {cap}, got {n}")
    if n < 0:
        return 0
    return sum(1 for parts in partitions_of(n) if filt.admits(parts))


def box_gf(k: int, m: int) -> QPoly:
    """sum q^{|partition|} over partitions inside a k-by-m box."""
    coeffs = [0] * (k * m + 1)
    box = Box(k, m)
    for n in range(k * m + 1):
        coeffs[n] = sum(1 for parts in partitions_of(n, max_part=m, max_parts=k)
                        if box.admits(parts))
    return QPoly(coeffs)


def gap_series_formal(which: int, ctx: QContext) -> FormalSeries:
    """sum_n q^{n^2 + (which-1) n} / (q;q)_n — the gap-side generating series."""
    from .qfunctions import rr_sum_formal
    return rr_sum_formal(which - 1, ctx)


def congruence_product_formal(which: int, ctx: QContext) -> FormalSeries:
    """1/(q^{r}, q^{5-r}; q^5)_infinity for r = which (r = 1 or 2)."""
    s = fs_pochhammer_infinite(1, which, 5, ctx, inverse=True)
    for k in range(ctx.order + 1):
        e = (5 - which) + 5 * k
        if e * ctx.base_exponent > ctx.u_order:
            break
        s = s.div_one_minus(1, e * ctx.base_exponent)
    return s


def series_vs_partitions(series_id: str, upto: int, cap: int = SIZE_CAP) -> bool:
    """Coefficient-by-coefficient check of the two classical gap theorems.

    For RR1 the q^n coefficient of the gap-2 series must equal the number of
    partitions of n with parts differing by >= 2, and also the number with
    parts in {1, 4} mod 5; for RR2 the analogous statement with smallest part
    >= 2 and residues {2, 3} mod 5.
    """
    if series_id not in ("RR1", "RR2"):
        raise ValueError(f"unknown series id {series_id!r}")
    which = 1 if series_id == "RR1" else 2
    if upto > cap:
        raise SizeError(f"capped at n <= {cap}")
    ctx = QContext.formal(order=max(upto, 1), base_exponent=1)
    series = gap_series_formal(which, ctx)
    product = congruence_product_formal(which, ctx)
    gap_filter = MinGap(2, min_part=which)
    cong_filter = Congruence(frozenset({which, 5 - which}), 5)
    for n in range(upto + 1):
        c_series = series.coeff_q(n)
        if c_series != count_partitions(n, gap_filter, cap=cap):
            return False
        if product.coeff_q(n) != count_partitions(n, cong_filter, cap=cap):
            return False
        if c_series != product.coeff_q(n):
            return False
    return True


def box_matches_q_binomial(k: int, m: int) -> bool:
    """box_gf(k, m) == Gaussian binomial [k+m, k], coefficient-exact."""
    return box_gf(k, m) == q_binomial(k + m, k)
