"""The three modified q-Bessel functions and their special-point machinery.

Integer orders (of either sign) are evaluated through the prefactor-free
form with double (q;q) denominators, which makes the reflection
I^{(1,2)}_{-m} = I^{(1,2)}_m automatic; non-integer orders use the classical
prefactor form.  The analytic continuation of kind 1, the order-generating
function, the partial-fraction expansion and the large-argument main term
all live here.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .context import QContext, powq, to_mp
from .errors import DomainError, PoleError
from .pochhammer import QPow, pochhammer_finite, pochhammer_infinite_value
from .qpolynomials import q_lommel_p, stieltjes_wigert
from .summation import sum_bilateral, sum_series

_WEIGHTS = {1: lambda n, nu: 0, 2: lambda n, nu: n * (n + nu), 3: lambda n, nu: Fraction(n * (n - 1), 2)}


def as_order(nu) -> Fraction:
    """Normalize an order to an exact Fraction (floats go through str)."""
    if isinstance(nu, float):
        return Fraction(str(nu))
    return Fraction(nu)


def _is_int(nu) -> bool:
    return isinstance(nu, int) or (isinstance(nu, Fraction) and nu.denominator == 1)


def bessel_i(kind: int, nu, z, ctx: QContext):
    """Modified q-Bessel function of the given kind (1, 2, or 3).

    Kind 1 uses the defining series and is restricted to |z| < 2 (use
    :func:`i1_continued` beyond); kinds 2 and 3 are entire apart from the
    z^nu prefactor.  Negative integer orders are supported for kinds 1 and 2
    via the double-factorial form.
    """
    if kind not in (1, 2, 3):
        raise DomainError(f"kind must be 1, 2 or 3, got {kind}")
    with ctx.workdps():
        q = ctx.q
        zv = to_mp(z)
        if kind == 1 and abs(zv) >= 2:
            raise DomainError("kind-1 series needs |z| < 2; use i1_continued")
        nu = as_order(nu)
        if _is_int(nu):
            return _bessel_i_integer(kind, int(nu), zv, ctx)
        return _bessel_i_generic(kind, nu, zv, ctx)


def _bessel_i_integer(kind: int, m: int, zv, ctx: QContext):
    if kind == 3 and m < 0:
        raise DomainError("negative integer order implemented for kinds 1 and 2 only")
    q = ctx.q
    n0 = max(0, -m)
    if zv == 0:
        return mp.mpf(1) if m == 0 else mp.mpf(0)
    half = zv / 2
    base = (powq(q, _WEIGHTS[kind](n0, m)) * half ** (m + 2 * n0)
            / (pochhammer_finite(q, q, n0) * pochhammer_finite(q, q, n0 + m)))
    state = {"t": base, "i": 0}

    def term(i):
        assert i == state["i"]
        t = state["t"]
        n = n0 + i
        if kind == 1:
            wr = 1
        elif kind == 2:
            wr = q ** (2 * n + 1 + m)
        else:
            wr = q ** n
        state["t"] = t * wr * half ** 2 / ((1 - q ** (n + 1))
                                           * (1 - q ** (n + m + 1)))
        state["i"] += 1
        return t

    return sum_series(term, ctx).value


def _bessel_i_generic(kind: int, nu: Fraction, zv, ctx: QContext):
    q = ctx.q
    qnu1 = QPow(1, nu + 1)
    pref = pochhammer_infinite_value(qnu1, q, ctx) / pochhammer_infinite_value(q, q, ctx)
    if zv == 0:
        if nu > 0:
            return mp.mpf(0)
        raise DomainError("z = 0 with negative non-integer order")
    half = zv / 2
    zpow = mp.power(half, mp.mpf(nu.numerator) / nu.denominator)
    w = _WEIGHTS[kind]
    state = {"r": mp.mpf(1)}

    def term(n):
        r = state["r"]
        fq = 1 - q ** (n + 1)
        fnu = 1 - powq(q, nu + 1 + n)
        if fnu == 0:
            raise PoleError(f"(q^(nu+1);q)_{n + 1} vanished")
        state["r"] = r * half ** 2 / (fq * fnu)
        return r * powq(q, w(n, nu))

    series = sum_series(term, ctx).value
    return pref * zpow * series


def bessel_j(kind: int, nu, z, ctx: QContext):
    """q-Bessel function of kind 1 or 2 (alternating series form)."""
    if kind not in (1, 2):
        raise DomainError("kinds 1 and 2 only")
    with ctx.workdps():
        q = ctx.q
        zv = to_mp(z)
        if kind == 1 and abs(zv) >= 2:
            raise DomainError("kind-1 series needs |z| < 2")
        nu = as_order(nu)
        qnu1 = QPow(1, nu + 1)
        pref = pochhammer_infinite_value(qnu1, q, ctx) / pochhammer_infinite_value(q, q, ctx)
        half = zv / 2
        zpow = mp.power(half, mp.mpf(nu.numerator) / nu.denominator)
        w = _WEIGHTS[kind]
        state = {"r": mp.mpf(1)}

        def term(n):
            r = state["r"]
            fq = 1 - q ** (n + 1)
            fnu = 1 - powq(q, nu + 1 + n)
            if fnu == 0:
                raise PoleError(f"(q^(nu+1);q)_{n + 1} vanished")
            state["r"] = r * (-(half ** 2)) / (fq * fnu)
            return r * powq(q, w(n, nu))

        series = sum_series(term, ctx).value
        return pref * zpow * series


def i1_continued(nu, z, ctx: QContext):
    """Kind-1 function continued to the plane: I^{(2)}_nu(z) / (z^2/4; q)_inf.

    ``z`` may be a QPow c*q^e so that poles z^2/4 = q^{-k} are detected
    exactly; a plain number raises PoleError only on an exact zero factor.
    """
    with ctx.workdps():
        q = ctx.q
        if isinstance(z, QPow):
            zv = to_mp(z.coeff) * powq(q, z.exponent)
            z24 = QPow(Fraction(z.coeff) ** 2 / 4 if isinstance(z.coeff, (int, Fraction))
                       else to_mp(z.coeff) ** 2 / 4, 2 * Fraction(z.exponent))
        else:
            zv = to_mp(z)
            z24 = QPow(zv ** 2 / 4, 0)
        denom = pochhammer_infinite_value(z24, q, ctx)
        if denom == 0:
            raise PoleError("z^2/4 lies on the pole set q^{-k}")
        return bessel_i(2, nu, zv, ctx) / denom


def special_value_sides(variant: int, nu, n: int, ctx: QContext):
    """Both sides of the special-point evaluation at z = 2 q^{-n/2}.

    variant 4: RHS = q^{nu n/2} S_n(-q^{-nu-n}; q) / (q^{n+1}; q)_inf;
    variant 5: RHS = q^{-nu n/2} S_n(-q^{nu-n}; q) / (q^{n+1}; q)_inf.
    """
    if variant not in (4, 5):
        raise DomainError("variant must be 4 or 5")
    nu = as_order(nu)
    with ctx.workdps():
        q = ctx.q
        z = 2 * powq(q, Fraction(-n, 2))
        lhs = bessel_i(2, nu, z, ctx)
        tail = pochhammer_infinite_value(QPow(1, n + 1), q, ctx)
        if variant == 4:
            rhs = (powq(q, nu * n / 2)
                   * stieltjes_wigert(n, -powq(q, -nu - n), q) / tail)
        else:
            rhs = (powq(q, -nu * n / 2)
                   * stieltjes_wigert(n, -powq(q, nu - n), q) / tail)
        return lhs, rhs


def sv_series_form_values(nu, n: int, ctx: QContext):
    """The three expressions of the special-value identity written as series.

    Returns (infinite series, first finite form, second finite form):
        sum_k q^{k(k+nu-n)} / ((q;q)_k (q^{nu+1};q)_k),
        q^{n nu}/(q^{nu+1};q)_inf * sum_k [n,k] q^{k^2 - k(nu+n)},
        1/(q^{nu+1};q)_inf * sum_k [n,k] q^{k^2 + k(nu-n)}.
    """
    nu = as_order(nu)
    with ctx.workdps():
        q = ctx.q
        state = {"r": mp.mpf(1)}

        def term(k):
            r = state["r"]
            fq = 1 - q ** (k + 1)
            fnu = 1 - powq(q, nu + 1 + k)
            state["r"] = r / (fq * fnu)
            return r * powq(q, Fraction(k) * (k + nu - n))

        series = sum_series(term, ctx).value
        tail = pochhammer_infinite_value(QPow(1, nu + 1), q, ctx)
        binom = mp.mpf(1)
        s4 = mp.mpf(0)
        s5 = mp.mpf(0)
        for k in range(n + 1):
            s4 += binom * powq(q, Fraction(k * k) - k * (nu + n))
            s5 += binom * powq(q, Fraction(k * k) + k * (nu - n))
            binom = binom * (1 - q ** (n - k)) / (1 - q ** (k + 1))
        return series, powq(q, n * nu) * s4 / tail, s5 / tail


def gen_func_sides(z, t, ctx: QContext):
    """Order-generating function: bilateral sum of q^binom(m,2) I_m^{(2)} t^m
    against the closed two-factor product.  Returns (lhs, rhs)."""
    with ctx.workdps():
        q = ctx.q
        zv, tv = to_mp(z), to_mp(t)
        if tv == 0:
            raise DomainError("t must be nonzero")

        def term(m):
            return (q ** (m * (m - 1) // 2) * bessel_i(2, m, zv, ctx) * tv ** m)

        lhs = sum_bilateral(term, ctx).value
        rhs = (pochhammer_infinite_value(-tv * zv / 2, q, ctx)
               * pochhammer_infinite_value(-q * zv / (2 * tv), q, ctx))
        return lhs, rhs


def mittag_leffler_rhs(nu, z, ctx: QContext):
    """Partial-fraction expansion side of the continued kind-1 function.

    (z/2)^nu / (q;q)_inf^2 * sum_n (-1)^n q^binom(n+1,2) S_n(-q^{nu-n}; q)
    / (1 - z^2 q^n / 4).  Same pole set as i1_continued.
    """
    nu = as_order(nu)
    with ctx.workdps():
        q = ctx.q
        if isinstance(z, QPow):
            zv = to_mp(z.coeff) * powq(q, z.exponent)
            e2 = 2 * Fraction(z.exponent)
            c2 = (Fraction(z.coeff) ** 2 if isinstance(z.coeff, (int, Fraction))
                  else to_mp(z.coeff) ** 2)
        else:
            zv = to_mp(z)
            e2, c2 = 0, zv ** 2
        z24 = QPow(c2 / 4, e2)

        def term(n):
            e = Fraction(z24.exponent) + n
            denom = 1 - z24.coeff * powq(q, e) if e != 0 else 1 - z24.coeff
            if denom == 0:
                raise PoleError(f"pole: z^2/4 = q^-{n}")
            s = stieltjes_wigert(n, -powq(q, nu - n), q)
            return (-1) ** n * q ** (n * (n + 1) // 2) * s / denom

        series = sum_series(term, ctx).value
        pref = (mp.power(zv / 2, mp.mpf(nu.numerator) / nu.denominator)
                / pochhammer_infinite_value(q, q, ctx) ** 2)
        return pref * series


def asymptotic_main_term(nu, r, ctx: QContext):
    """Leading large-argument term of the kind-2 function at positive r."""
    nu = as_order(nu)
    with ctx.workdps():
        q = ctx.q
        rv = to_mp(r)
        if not rv > 0:
            raise DomainError("main term stated for r > 0")
        sq = mp.sqrt(q)
        arg = rv * powq(q, (nu + Fraction(1, 2)) / 2) / 2
        bracket = (pochhammer_infinite_value(arg, sq, ctx)
                   + pochhammer_infinite_value(-arg, sq, ctx))
        pref = (mp.power(rv / 2, mp.mpf(nu.numerator) / nu.denominator)
                * pochhammer_infinite_value(QPow(1, Fraction(1, 2)), q, ctx)
                / (2 * pochhammer_infinite_value(q, q, ctx)))
        return pref * bracket


def lommel_relation_residual(n: int, nu, x, ctx: QContext):
    """Residual of the three-term ladder relation for kind-2 functions:

    (-1)^n q^{n nu + n(n-1)/2} I_{nu+n} - [p_{n,nu}(1/x) I_nu
                                           - p_{n-1,nu+1}(1/x) I_{nu-1}].
    """
    nu = as_order(nu)
    with ctx.workdps():
        q = ctx.q
        xv = to_mp(x)
        if xv == 0:
            raise DomainError("x must be nonzero")
        lhs = ((-1) ** n * powq(q, n * nu + Fraction(n * (n - 1), 2))
               * bessel_i(2, nu + n, xv, ctx))
        qnu = powq(q, nu)
        rhs = (q_lommel_p(n, 1 / xv, q, qnu) * bessel_i(2, nu, xv, ctx)
               - q_lommel_p(n - 1, 1 / xv, q, qnu * q) * bessel_i(2, nu - 1, xv, ctx))
        return abs(lhs - rhs)


def lommel_relation_j_residual(n: int, nu, x, ctx: QContext):
    """Same ladder in its alternating-series (J) form, via h = i^n p(-i x)."""
    nu = as_order(nu)
    with ctx.workdps():
        q = ctx.q
        xv = to_mp(x)
        i = mp.mpc(0, 1)
        qnu = powq(q, nu)

        def h(nn, qn, arg):
            return i ** nn * q_lommel_p(nn, -i * arg, q, qn)

        lhs = (powq(q, n * nu + Fraction(n * (n - 1), 2))
               * bessel_j(2, nu + n, xv, ctx))
        rhs = (h(n, qnu, 1 / xv) * bessel_j(2, nu, xv, ctx)
               - h(n - 1, qnu * q, 1 / xv) * bessel_j(2, nu - 1, xv, ctx))
        return abs(lhs - rhs)
