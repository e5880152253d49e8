"""Basic hypergeometric series, the entire q-Airy-type function and its
generalizations, bilateral sums, and the cube-root-of-unity convolution
identities built from them.

Numeric evaluators run on mpmath numbers inside the context's working
precision; the handful of series that admit coefficient-exact verification
have formal counterparts returning :class:`~qrr.formal.FormalSeries`.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath as mp

from .context import QContext, powq, to_mp
from .errors import AnnulusError, DomainError, PoleError
from .exactpoly import EisensteinRational
from .formal import FormalSeries, fs_div_finite_pochhammer, qexp_to_u
from .pochhammer import (QPow, inv_pochhammer, multi_pochhammer_infinite,
                         pochhammer_finite, pochhammer_ratio)
from .summation import SumOutcome, sum_bilateral, sum_series


def _qp(a) -> QPow:
    return a if isinstance(a, QPow) else QPow(a, 0)


def _factor(a: QPow, q, j):
    e = a.exponent + j
    if e == 0:
        return 1 - a.coeff
    return 1 - a.coeff * powq(q, e)


def _value(x, q):
    """Numeric value of a plain number or a QPow relative to q."""
    if isinstance(x, QPow):
        return to_mp(x.coeff) * powq(q, x.exponent)
    return to_mp(x)


def rho_root(ctx: QContext):
    """Primitive cube root of unity at working precision."""
    with ctx.workdps():
        return mp.mpc(mp.mpf(-1) / 2, mp.sqrt(mp.mpf(3)) / 2)


# ---------------------------------------------------------------------------
# basic hypergeometric series (only the shapes used here: 2phi1 and 1phi1)
# ---------------------------------------------------------------------------

def phi_2_1(a, b, c, z, ctx: QContext) -> SumOutcome:
    """2phi1(a, b; c; q, z) for |z| < 1."""
    a, b, c = _qp(a), _qp(b), _qp(c)
    with ctx.workdps():
        q = ctx.q
        zv = _value(z, q)
        if abs(zv) >= 1:
            raise DomainError(f"2phi1 requires |z| < 1, got |z|={abs(zv)}")
        state = {"k": 0, "t": mp.mpf(1)}

        def term(k):
            assert k == state["k"]
            t = state["t"]
            fc = _factor(c, q, k)
            fq = 1 - q ** (k + 1)
            if fc == 0:
                raise PoleError(f"2phi1 denominator parameter hits q^(-{k})")
            state["t"] = t * _factor(a, q, k) * _factor(b, q, k) * zv / (fc * fq)
            state["k"] += 1
            return t

        return sum_series(term, ctx)


def phi_1_1(a, b, z, ctx: QContext) -> SumOutcome:
    """1phi1(a; b; q, z) with the (-1)^k q^binom(k,2) convention factor.

    The extra factor makes the series entire in z, with terms carrying
    q^{k(k-1)/2}-type decay.
    """
    a, b = _qp(a), _qp(b)
    with ctx.workdps():
        q = ctx.q
        zv = _value(z, q)
        state = {"k": 0, "t": mp.mpf(1)}

        def term(k):
            assert k == state["k"]
            t = state["t"]
            fb = _factor(b, q, k)
            fq = 1 - q ** (k + 1)
            if fb == 0:
                raise PoleError(f"1phi1 denominator parameter hits q^(-{k})")
            # ratio carries (-1) * q^k from the convention factor
            state["t"] = t * _factor(a, q, k) * (-(q ** k)) * zv / (fb * fq)
            state["k"] += 1
            return t

        return sum_series(term, ctx)


def phi21_terminating_exact(m: int, n: int, q: Fraction) -> Fraction:
    """2phi1(q^-m, q^-n; 0; q, q) summed exactly over its finite support."""
    total = Fraction(0)
    t = Fraction(1)
    for k in range(min(m, n) + 1):
        total += t
        ratio = (1 - q ** (k - m)) * (1 - q ** (k - n)) * q / (1 - q ** (k + 1))
        t *= ratio
    return total


def heine_sides(a, b, c, z, ctx: QContext):
    """Both sides of the second-iterate Heine transformation of 2phi1.

    Valid for |z| < 1 and |c/b| < 1 (the transformed series' argument).
    Returns (lhs, rhs).
    """
    with ctx.workdps():
        q = ctx.q
        av, bv, cv, zv = (to_mp(v) for v in (a, b, c, z))
        if abs(cv / bv) >= 1:
            raise DomainError("transformed argument c/b must satisfy |c/b| < 1")
        lhs = phi_2_1(av, bv, cv, zv, ctx).value
        pref = (multi_pochhammer_infinite([cv / bv, bv * zv], q, ctx)
                / multi_pochhammer_infinite([cv, zv], q, ctx))
        rhs = pref * phi_2_1(av * bv * zv / cv, bv, bv * zv, cv / bv, ctx).value
        return lhs, rhs


# ---------------------------------------------------------------------------
# bilateral 1psi1
# ---------------------------------------------------------------------------

def psi_1_1(a, b, z, ctx: QContext) -> SumOutcome:
    """Bilateral sum over n of (a;q)_n / (b;q)_n * z^n inside its annulus."""
    aq, bq = _qp(a), _qp(b)
    with ctx.workdps():
        q = ctx.q
        zv = to_mp(z)
        # b = q^j (j >= 1) kills every negative-index term exactly, so only
        # |z| < 1 is needed; otherwise enforce the classical annulus.
        terminating = (bq.coeff == 1 and Fraction(bq.exponent).denominator == 1
                       and bq.exponent >= 1)
        ratio = abs(to_mp(bq.coeff) * powq(q, bq.exponent)
                    / (to_mp(aq.coeff) * powq(q, aq.exponent)))
        if not abs(zv) < 1 or (not terminating and not ratio < abs(zv)):
            raise AnnulusError(
                f"1psi1 needs |b/a| < |z| < 1; got |b/a|={ratio}, |z|={abs(zv)}")
        pos = {"r": mp.mpf(1), "n": 0}
        neg = {"r": mp.mpf(1), "k": 0, "dead": False}

        def term(n):
            if n >= 0:
                assert n == pos["n"]
                r = pos["r"]
                fb = _factor(bq, q, n)
                if fb == 0:
                    raise PoleError(f"(b;q)_{n + 1} vanished")
                pos["r"] = r * _factor(aq, q, n) / fb
                pos["n"] += 1
                return r * zv ** n
            k = -n
            assert k == neg["k"] + 1
            neg["k"] = k
            if neg["dead"]:
                return mp.mpf(0)
            fa, fb = _factor(aq, q, -k), _factor(bq, q, -k)
            if fb == 0:
                neg["dead"] = True
                return mp.mpf(0)
            if fa == 0:
                raise PoleError(f"(a;q)_{n} infinite: bilateral term has a pole")
            neg["r"] = neg["r"] * fb / fa
            return neg["r"] * zv ** n

        return sum_bilateral(term, ctx)


def psi_1_1_product(a, b, z, ctx: QContext):
    """Closed product form of the bilateral sum: the classical evaluation."""
    with ctx.workdps():
        q = ctx.q
        av, bv, zv = (to_mp(v) for v in (a, b, z))
        num = multi_pochhammer_infinite([q, bv / av, av * zv, q / (av * zv)], q, ctx)
        den = multi_pochhammer_infinite([bv, q / av, zv, bv / (av * zv)], q, ctx)
        if den == 0:
            raise PoleError("product side denominator vanished")
        return num / den


# ---------------------------------------------------------------------------
# the entire q-Airy-type function A_q and friends
# ---------------------------------------------------------------------------

def ramanujan_A(z, ctx: QContext) -> SumOutcome:
    """A_q(z) = sum_n (-z)^n q^{n^2} / (q;q)_n, entire in z."""
    with ctx.workdps():
        q = ctx.q
        zv = to_mp(z)
        state = {"t": mp.mpf(1), "k": 0}

        def term(k):
            t = state["t"]
            # ratio q^{2k+1} from the square, -z, and the new (q;q) factor
            state["t"] = t * (-zv) * q ** (2 * k + 1) / (1 - q ** (k + 1))
            state["k"] += 1
            return t

        return sum_series(term, ctx)


def omega(v, ctx: QContext) -> SumOutcome:
    """omega(v; q) = sum_{n>=0} q^{n^2} v^n."""
    with ctx.workdps():
        q = ctx.q
        vv = to_mp(v)
        return sum_series(lambda n: q ** (n * n) * vv ** n, ctx)


def a_alpha(alpha, a, t, ctx: QContext) -> SumOutcome:
    """sum_{n>=0} (a;q)_n q^{alpha n^2} t^n / (q;q)_n  (alpha >= 0)."""
    aq = _qp(a)
    alpha = Fraction(alpha)
    with ctx.workdps():
        q = ctx.q
        tv = to_mp(t)
        state = {"r": mp.mpf(1), "k": 0}

        def term(n):
            r = state["r"]
            state["r"] = r * _factor(aq, q, n) / (1 - q ** (n + 1))
            state["k"] += 1
            return r * powq(q, alpha * n * n) * tv ** n

        return sum_series(term, ctx)


def b_alpha(alpha, a, b, x, ctx: QContext) -> SumOutcome:
    """Bilateral sum of (a;q)_n / (b;q)_n * q^{alpha n^2} x^n.

    For alpha > 0 the quadratic q-power dominates both tails; alpha = 0
    falls back to the 1psi1 annulus requirement.
    """
    alpha = Fraction(alpha)
    if alpha < 0:
        raise DomainError("alpha must be >= 0")
    aq, bq = _qp(a), _qp(b)
    if alpha == 0:
        return psi_1_1(aq, bq, x, ctx)
    with ctx.workdps():
        q = ctx.q
        xv = to_mp(x)
        pos = {"r": mp.mpf(1), "n": 0}
        neg = {"r": mp.mpf(1), "k": 0, "dead": False}

        def term(n):
            if n >= 0:
                assert n == pos["n"]
                r = pos["r"]
                fb = _factor(bq, q, n)
                if fb == 0:
                    raise PoleError(f"(b;q)_{n + 1} vanished")
                pos["r"] = r * _factor(aq, q, n) / fb
                pos["n"] += 1
                return r * powq(q, alpha * n * n) * xv ** n
            k = -n
            assert k == neg["k"] + 1
            neg["k"] = k
            if neg["dead"]:
                return mp.mpf(0)
            fa, fb = _factor(aq, q, -k), _factor(bq, q, -k)
            if fb == 0:
                neg["dead"] = True
                return mp.mpf(0)
            if fa == 0:
                raise PoleError(f"(a;q)_{n} infinite: bilateral term has a pole")
            neg["r"] = neg["r"] * fb / fa
            return neg["r"] * powq(q, alpha * n * n) * xv ** n

        return sum_bilateral(term, ctx)


def u_m_bilateral(a, m: int, ctx: QContext) -> SumOutcome:
    """Bilateral sum of q^{n^2 + m n} / (a q; q)_n.

    At a = 1 the negative half vanishes identically (each reciprocal factor
    contains 1 - q^0), collapsing the sum to its unilateral gap-series half.
    """
    aq = _qp(a)
    aq1 = QPow(aq.coeff, aq.exponent + 1)  # a*q
    with ctx.workdps():
        q = ctx.q

        def term(n):
            inv = inv_pochhammer(aq1, q, n)
            if inv == 0:
                return mp.mpf(0)
            return powq(q, n * n + m * n) * inv

        return sum_bilateral(term, ctx)


# ---------------------------------------------------------------------------
# formal-series builders for the coefficient-exact checks
# ---------------------------------------------------------------------------

def rr_sum_formal(m: int, ctx: QContext) -> FormalSeries:
    """sum_n q^{n^2 + m n} / (q;q)_n in the exact ring (m >= 0)."""
    acc = FormalSeries.zero(ctx)
    D = ctx.base_exponent
    n = 0
    while True:
        e = (n * n + m * n) * D
        if e > ctx.u_order:
            break
        t = FormalSeries.monomial(ctx, 1, e)
        t = fs_div_finite_pochhammer(t, 1, 1, 1, n, ctx)
        acc = acc + t
        n += 1
    return acc


def rr_product_formal(which: int, ctx: QContext) -> FormalSeries:
    """1/(q^which, q^{5-which}; q^5)_infinity, which = 1 or 2."""
    if which not in (1, 2):
        raise DomainError("which must be 1 or 2")
    s = FormalSeries.one(ctx)
    D = ctx.base_exponent
    for start in (which, 5 - which):
        k = 0
        while (start + 5 * k) * D <= ctx.u_order:
            s = s.div_one_minus(1, (start + 5 * k) * D)
            k += 1
    return s


def ramanujan_A_formal(z_coeff, z_qexp, ctx: QContext) -> FormalSeries:
    """A_q(c q^e) in the exact ring; needs n^2 + n e >= 0 along the support."""
    acc = FormalSeries.zero(ctx)
    n = 0
    while True:
        e = qexp_to_u(n * n + Fraction(z_qexp) * n, ctx) if n else 0
        if e > ctx.u_order:
            break
        t = FormalSeries.monomial(ctx, (-1) ** n * z_coeff ** n if n else 1, e)
        t = fs_div_finite_pochhammer(t, 1, 1, 1, n, ctx)
        acc = acc + t
        n += 1
    return acc


def omega_formal(v_coeff, v_qexp, ctx: QContext, qscale: int = 1) -> FormalSeries:
    """sum_n q^{qscale n^2} (c q^e)^n in the exact ring."""
    acc = FormalSeries.zero(ctx)
    n = 0
    while True:
        e = qexp_to_u(qscale * n * n + Fraction(v_qexp) * n, ctx)
        if e > ctx.u_order:
            break
        acc = acc + FormalSeries.monomial(ctx, v_coeff ** n, e)
        n += 1
    return acc


def a_alpha_formal(alpha, a_mono, t_mono, ctx: QContext) -> FormalSeries:
    """Formal sum (a;q)_n q^{alpha n^2} t^n / (q;q)_n with monomial a, t.

    ``a_mono`` is None for a = 0, else a pair (coeff, q_exponent); same for
    ``t_mono``.
    """
    alpha = Fraction(alpha)
    tc, te = t_mono
    acc = FormalSeries.zero(ctx)
    n = 0
    while True:
        base = alpha * n * n + Fraction(te) * n
        e = qexp_to_u(base, ctx)
        if e > ctx.u_order:
            break
        t = FormalSeries.monomial(ctx, tc ** n, e)
        if a_mono is not None:
            ac, ae = a_mono
            for k in range(n):
                fe = qexp_to_u(Fraction(ae) + k, ctx)
                if fe == 0:
                    t = t.scale(1 - ac)
                elif fe <= ctx.u_order:
                    t = t.mul_one_minus(ac, fe)
        t = fs_div_finite_pochhammer(t, 1, 1, 1, n, ctx)
        acc = acc + t
        n += 1
    return acc


# ---------------------------------------------------------------------------
# finite convolution lemma sums (exact)
# ---------------------------------------------------------------------------

def pair_convolution_sides(n: int, a: Fraction, q: Fraction):
    """LHS and RHS of the alternating pair convolution of (a;q)_k/(q;q)_k.

    LHS = sum_{k=0}^n r_k r_{n-k} (-1)^k; RHS = 0 for odd n and
    (a^2;q^2)_m / (q^2;q^2)_m for n = 2m.  Exact for Fraction inputs.
    """
    r = _ratio_table(a, q, n)
    lhs = sum((-1) ** k * r[k] * r[n - k] for k in range(n + 1))
    if n % 2 == 1:
        rhs = Fraction(0) if isinstance(q, Fraction) else mp.mpf(0)
    else:
        m = n // 2
        rhs = pochhammer_finite(a * a, q * q, m) / pochhammer_finite(q * q, q * q, m)
    return lhs, rhs


def cube_convolution_sides(n: int, a: Fraction, q: Fraction):
    """Cube-root-of-unity triple convolution, exact in Q(w).

    LHS = sum over j+k+l=n of r_j r_k r_l w^{k+2l}; RHS is 0 unless 3 | n,
    in which case it is (a^3;q^3)_m / (q^3;q^3)_m.  Both sides are returned
    as EisensteinRational values.
    """
    r = _ratio_table(a, q, n)
    lhs = EisensteinRational.of(0)
    for j in range(n + 1):
        for k in range(n + 1 - j):
            l = n - j - k
            w = EisensteinRational.root_power(k + 2 * l)
            lhs = lhs + w * (r[j] * r[k] * r[l])
    if n % 3 != 0:
        rhs = EisensteinRational.of(0)
    else:
        m = n // 3
        rhs = EisensteinRational.of(
            pochhammer_finite(a ** 3, q ** 3, m) / pochhammer_finite(q ** 3, q ** 3, m))
    return lhs, rhs


def _ratio_table(a, q, n_max: int):
    out = [Fraction(1) if isinstance(q, Fraction) else mp.mpf(1)]
    for k in range(n_max):
        out.append(out[-1] * (1 - a * q ** k) / (1 - q ** (k + 1)))
    return out


# ---------------------------------------------------------------------------
# bilateral slice convolutions (numeric)
# ---------------------------------------------------------------------------

def _bilateral_ratio_array(a: QPow, b: QPow, q, K: int):
    """r_n = (a;q)_n/(b;q)_n for n in [-K, K] as a dict, built incrementally."""
    r = {0: mp.mpf(1)}
    cur = mp.mpf(1)
    for n in range(K):
        fa, fb = _factor(a, q, n), _factor(b, q, n)
        if fb == 0:
            raise PoleError(f"(b;q)_{n + 1} vanished")
        cur = cur * fa / fb
        r[n + 1] = cur
    cur = mp.mpf(1)
    dead = False
    for j in range(1, K + 1):
        if dead:
            r[-j] = mp.mpf(0)
            continue
        fa, fb = _factor(a, q, -j), _factor(b, q, -j)
        if fb == 0:
            dead = True  # (b;q)_{-j} infinite from here on: terms die
            r[-j] = mp.mpf(0)
            continue
        if fa == 0:
            raise PoleError(f"(a;q)_{-j} infinite: bilateral ratio has a pole")
        cur = cur * fb / fa
        r[-j] = cur
    return r


def slice_truncation(rate, digits: int) -> int:
    """Index cutoff giving a q^K-type tail below 10^-digits."""
    rate = abs(to_mp(rate))
    if rate >= 1:
        raise DomainError("slice tails need rate < 1")
    return max(8, int(mp.ceil((digits + 6) / (-mp.log10(rate)))))


def bilateral_pair_slice_sides(n: int, a, b, ctx: QContext, digits: int = 30):
    """Bilateral alternating pair convolution at fixed total n, with its
    closed product evaluation (zero for odd n)."""
    aq, bq = _qp(a), _qp(b)
    with ctx.workdps():
        q = ctx.q
        av = to_mp(aq.coeff) * powq(q, aq.exponent)
        bv = to_mp(bq.coeff) * powq(q, bq.exponent)
        K = slice_truncation(q, digits) + abs(n)
        r = _bilateral_ratio_array(aq, bq, q, K)
        lhs = mp.mpf(0)
        for j in range(-K, K + 1):
            k = n - j
            if abs(k) > K:
                continue
            lhs += (-1) ** (k % 2) * r[j] * r[k]
        if n % 2 == 1:
            return lhs, mp.mpf(0)
        m = n // 2
        pref = (multi_pochhammer_infinite([q, bv / av, -bv, -q / av], q, ctx)
                / multi_pochhammer_infinite([-q, -bv / av, bv, q / av], q, ctx))
        tail = (pochhammer_finite(av * av, q * q, m)
                / pochhammer_finite(bv * bv, q * q, m))
        return lhs, pref * tail


def bilateral_cube_slice_sides(n: int, a, b, ctx: QContext, digits: int = 30):
    """Bilateral cube-root-weighted triple convolution at fixed total n.

    RHS is zero unless 3 | n; for n = 3m it is the product evaluation with
    the base-q^3 factors read as infinite products.
    """
    aq, bq = _qp(a), _qp(b)
    with ctx.workdps():
        q = ctx.q
        w = rho_root(ctx)
        av = to_mp(aq.coeff) * powq(q, aq.exponent)
        bv = to_mp(bq.coeff) * powq(q, bq.exponent)
        K = slice_truncation(q, digits) + abs(n)
        r = _bilateral_ratio_array(aq, bq, q, K)
        f1 = {j: r[j] for j in r}
        f2 = {j: (w ** (j % 3)) * r[j] for j in r}
        f3 = {j: (w ** ((2 * j) % 3)) * r[j] for j in r}
        conv12 = {}
        for m1 in range(-K, K + 1):
            v1 = f1[m1]
            if v1 == 0:
                continue
            for m2 in range(max(-K, n - m1 - K), min(K, n - m1 + K) + 1):
                conv12[m1 + m2] = conv12.get(m1 + m2, mp.mpf(0)) + v1 * f2[m2]
        lhs = mp.mpf(0)
        for m12, v in conv12.items():
            l = n - m12
            if abs(l) <= K:
                lhs += v * f3[l]
        if n % 3 != 0:
            return lhs, mp.mpf(0)
        m = n // 3
        q3 = q ** 3
        pref = ((multi_pochhammer_infinite([q, bv / av], q, ctx)
                 / multi_pochhammer_infinite([bv, q / av], q, ctx)) ** 3
                * multi_pochhammer_infinite([bv ** 3, q3 / av ** 3], q3, ctx)
                / multi_pochhammer_infinite([q3, (bv / av) ** 3], q3, ctx))
        tail = (pochhammer_finite(av ** 3, q3, m)
                / pochhammer_finite(bv ** 3, q3, m))
        return lhs, pref * tail


# ---------------------------------------------------------------------------
# master transformations built on the convolution lemma
# ---------------------------------------------------------------------------

def square_master_sides(alpha, a, t, ctx: QContext):
    """Square-argument expansion of the generalized entire function.

    LHS: the base-q^2 function at (a^2; t^2); RHS: alternating sum of shifted
    base-q evaluations.  Returns (lhs, rhs).
    """
    alpha = Fraction(alpha)
    with ctx.workdps():
        q = ctx.q
        av, tv = to_mp(a), to_mp(t)
        ctx2 = QContext.numeric(q * q, precision=ctx.precision, max_terms=ctx.max_terms)
        lhs = a_alpha(2 * alpha, av * av, tv * tv, ctx2).value
        state = {"r": mp.mpf(1)}

        def term(j):
            r = state["r"]
            state["r"] = r * (1 - av * q ** j) / (1 - q ** (j + 1))
            inner = a_alpha(alpha, av, tv * powq(q, 2 * alpha * j), ctx).value
            return r * powq(q, alpha * j * j) * (-tv) ** j * inner

        rhs = sum_series(term, ctx).value
        return lhs, rhs


def cube_master_sides(alpha, a, t, ctx: QContext):
    """Cube-argument expansion: base-q^3 function against the double sum
    with cube-root-of-unity weights.  Returns (lhs, rhs)."""
    alpha = Fraction(alpha)
    with ctx.workdps():
        q = ctx.q
        w = rho_root(ctx)
        av, tv = to_mp(a), to_mp(t)
        ctx3 = QContext.numeric(q ** 3, precision=ctx.precision, max_terms=ctx.max_terms)
        lhs = a_alpha(3 * alpha, av ** 3, tv ** 3, ctx3).value
        # slice coefficients C(s) = sum_{j+k=s} r_j r_k w^k
        tol_digits = ctx.precision + 8
        s_max = 2
        while float(alpha) * s_max * s_max * float(-mp.log10(abs(q))) < tol_digits:
            s_max += 1
        r = [mp.mpf(1)]
        for j in range(s_max):
            r.append(r[-1] * (1 - av * q ** j) / (1 - q ** (j + 1)))
        rhs = mp.mpf(0)
        for s in range(s_max + 1):
            c = mp.mpf(0)
            for j in range(s + 1):
                c += r[j] * r[s - j] * w ** ((s - j) % 3)
            inner = a_alpha(alpha, av, (w ** 2) * tv * powq(q, 2 * alpha * s), ctx).value
            rhs += c * powq(q, alpha * s * s) * tv ** s * inner
        return lhs, rhs


def square_bilateral_master_sides(alpha, a, b, x, ctx: QContext):
    """Bilateral square-argument expansion (prefactored LHS vs j-sum RHS).

    Sampling must keep |b/a| < 1: the outer bilateral j-sum converges at the
    geometric rate |b/a| on its negative tail.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise DomainError("needs alpha > 0")
    with ctx.workdps():
        q = ctx.q
        av, bv, xv = to_mp(a), to_mp(b), to_mp(x)
        if abs(bv / av) >= 1:
            raise DomainError("sampled outside |b/a| < 1")
        ctx2 = QContext.numeric(q * q, precision=ctx.precision, max_terms=ctx.max_terms)
        pref = (multi_pochhammer_infinite([-bv, -q / av, q, bv / av], q, ctx)
                / multi_pochhammer_infinite([-q, -bv / av, bv, q / av], q, ctx))
        lhs = pref * b_alpha(2 * alpha, av * av, bv * bv, xv * xv, ctx2).value

        def term(j):
            r = pochhammer_ratio(av, bv, q, j)
            if r == 0:
                return mp.mpf(0)
            inner = b_alpha(alpha, av, bv, xv * powq(q, 2 * alpha * j), ctx).value
            return r * powq(q, alpha * j * j) * (-xv) ** j * inner

        rhs = sum_bilateral(term, ctx).value
        return lhs, rhs


def cube_bilateral_master_sides(alpha, a, b, x, ctx: QContext,
                                corrected: bool = True):
    """Bilateral cube-argument expansion.

    ``corrected=True`` places the w^2 twist in the inner argument (the
    reading forced by expanding the double sum against the slice lemma);
    ``corrected=False`` evaluates the display as printed, without the twist.
    Returns (lhs, rhs).
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise DomainError("needs alpha > 0")
    with ctx.workdps():
        q = ctx.q
        w = rho_root(ctx)
        av, bv, xv = to_mp(a), to_mp(b), to_mp(x)
        if abs(bv / av) >= 1:
            raise DomainError("sampled outside |b/a| < 1")
        q3 = q ** 3
        ctx3 = QContext.numeric(q3, precision=ctx.precision, max_terms=ctx.max_terms)
        lhs = b_alpha(3 * alpha, av ** 3, bv ** 3, xv ** 3, ctx3).value
        pref = ((multi_pochhammer_infinite([bv, q / av], q, ctx)
                 / multi_pochhammer_infinite([q, bv / av], q, ctx)) ** 3
                * multi_pochhammer_infinite([q3, (bv / av) ** 3], q3, ctx)
                / multi_pochhammer_infinite([bv ** 3, q3 / av ** 3], q3, ctx))
        # double bilateral sum arranged by slices s = j + k.  The q^{alpha s^2}
        # weight is neutralized by the inner function's bilateral growth on
        # BOTH tails (huge argument for s << 0, tiny argument for s >> 0), so
        # the slice terms only decay like (b/a)^|s| in each direction.
        digits = ctx.precision + 8
        K = slice_truncation(bv / av, digits)
        r = _bilateral_ratio_array(_qp(a), _qp(b), q, 3 * K)
        twist = w ** 2 if corrected else mp.mpf(1)
        rhs_sum = mp.mpf(0)
        for s in range(-K, K + 1):
            c = mp.mpf(0)
            for j in range(-K - abs(s), K + abs(s) + 1):
                k = s - j
                if abs(k) > 3 * K:
                    continue
                c += r[j] * r[k] * w ** (k % 3)
            inner = b_alpha(alpha, av, bv,
                            twist * xv * powq(q, 2 * alpha * s), ctx).value
            rhs_sum += c * powq(q, alpha * s * s) * xv ** s * inner
        return lhs, pref * rhs_sum


# ---------------------------------------------------------------------------
# theta-quotient corollaries (simple-pole denominators)
# ---------------------------------------------------------------------------

def _pole_array(numer_sign, a: QPow, q, lo: int, hi: int):
    """v_j = x^j-free factor 1/(1 - a q^j) on [lo, hi] (sign folds a -> -a)."""
    out = {}
    for j in range(lo, hi + 1):
        f = _factor(QPow(numer_sign * a.coeff, a.exponent), q, j)
        if f == 0:
            raise PoleError(f"denominator 1 - a q^{j} vanished")
        out[j] = 1 / f
    return out


def theta_pair_sides(a, x, ctx: QContext, digits: int | None = None):
    """Single theta-type bilateral sum against the double pole-sum.

    LHS: prefactor * sum_n q^{4n^2} x^{2n} / (1 - a^2 q^{2n});
    RHS: sum over j, k of q^{(j+k)^2} (-1)^j x^{j+k} / ((1-a q^j)(1-a q^k)).
    Needs q < |x| < 1.  Returns (lhs, rhs).
    """
    aq = _qp(a)
    with ctx.workdps():
        q = ctx.q
        xv = to_mp(x)
        digits = digits or (ctx.precision + 6)
        if not abs(q) < abs(xv) < 1:
            raise AnnulusError("needs |q| < |x| < 1")
        av = to_mp(aq.coeff) * powq(q, aq.exponent)
        pref = (multi_pochhammer_infinite([-av, -q / av, q, q], q, ctx)
                / multi_pochhammer_infinite([av, q / av, -q, -q], q, ctx))
        a2 = QPow(aq.coeff ** 2, 2 * Fraction(aq.exponent))

        def lhs_term(n):
            f = _factor(QPow(a2.coeff, a2.exponent), q, 2 * n)
            if f == 0:
                raise PoleError("pole in the single sum")
            return q ** (4 * n * n) * xv ** (2 * n) / f

        lhs = pref * sum_bilateral(lhs_term, ctx).value
        rate = max(abs(xv), abs(q / xv))
        K = slice_truncation(rate, digits)
        s_max = int(mp.ceil(mp.sqrt((digits + 4) / (-mp.log10(abs(q)))))) + 2
        inv = _pole_array(1, aq, q, -(K + s_max), K + s_max)
        f = {j: (-xv) ** j * inv[j] for j in range(-K, K + 1)}
        g = {k: xv ** k * inv[k] for k in inv}
        rhs = mp.mpf(0)
        for s in range(-s_max, s_max + 1):
            c = mp.mpf(0)
            for j in range(-K, K + 1):
                c += f[j] * g[s - j]
            rhs += q ** (s * s) * c
        return lhs, rhs


def theta_pair_imag_sides(x, ctx: QContext, digits: int | None = None):
    """The previous identity specialized to a^2 = -q (imaginary a).

    LHS: (q,q;q)_inf/(-q,-q;q)_inf * sum_n q^{4n^2} x^{2n}/(1 + q^{2n+1});
    RHS: double pole-sum with denominators 1 + i q^{j+1/2}.
    """
    with ctx.workdps():
        q = ctx.q
        xv = to_mp(x)
        digits = digits or (ctx.precision + 6)
        if not abs(q) < abs(xv) < 1:
            raise AnnulusError("needs |q| < |x| < 1")
        pref = (multi_pochhammer_infinite([q, q], q, ctx)
                / multi_pochhammer_infinite([-q, -q], q, ctx))

        def lhs_term(n):
            return q ** (4 * n * n) * xv ** (2 * n) / (1 + q ** (2 * n + 1))

        lhs = pref * sum_bilateral(lhs_term, ctx).value
        rate = max(abs(xv), abs(q / xv))
        K = slice_truncation(rate, digits)
        s_max = int(mp.ceil(mp.sqrt((digits + 4) / (-mp.log10(abs(q)))))) + 2
        sq = mp.sqrt(q)
        inv = {j: 1 / (1 + mp.mpc(0, 1) * sq * q ** j)
               for j in range(-(K + s_max), K + s_max + 1)}
        f = {j: (-xv) ** j * inv[j] for j in range(-K, K + 1)}
        rhs = mp.mpf(0)
        for s in range(-s_max, s_max + 1):
            c = mp.mpf(0)
            for j in range(-K, K + 1):
                c += f[j] * xv ** (s - j) * inv[s - j]
            rhs += q ** (s * s) * c
        return lhs, rhs


def theta_triple_sides(a, x, ctx: QContext, digits: int | None = None,
                       arrangement: str = "base"):
    """Triple pole-sum identity for the cube-power theta quotient.

    ``arrangement="base"`` checks
        sum_n q^{9n^2} x^{3n}/(1 - a^3 q^{3n}) = pref * triple_sum;
    ``"split-left"`` checks the rearranged cube-root-argument form
        inv_pref * sum = triple_sum  (used by the q^{1/3} specializations).
    ``a`` may be a QPow so that a = +-q^{1/3} keeps exact exponents.
    Returns (lhs, rhs) for the chosen arrangement.
    """
    aq = _qp(a)
    with ctx.workdps():
        q = ctx.q
        w = rho_root(ctx)
        xv = to_mp(x)
        digits = digits or (ctx.precision + 6)
        if not abs(q) < abs(xv) < 1:
            raise AnnulusError("needs |q| < |x| < 1")
        av = to_mp(aq.coeff) * powq(q, aq.exponent)
        q3 = q ** 3
        a3 = QPow(aq.coeff ** 3, 3 * Fraction(aq.exponent))

        def single_term(n):
            f = _factor(QPow(a3.coeff, a3.exponent), q, 3 * n)
            if f == 0:
                raise PoleError("pole in the single sum")
            return q ** (9 * n * n) * xv ** (3 * n) / f

        single = sum_bilateral(single_term, ctx).value
        pref = (multi_pochhammer_infinite([q3], q3, ctx) ** 2
                / multi_pochhammer_infinite([q], q, ctx) ** 6
                * multi_pochhammer_infinite([av, q / av], q, ctx) ** 3
                / multi_pochhammer_infinite(
                    [av ** 3, q3 / av ** 3], q3, ctx))
        rate = max(abs(xv), abs(q / xv))
        K = slice_truncation(rate, digits)
        s_max = int(mp.ceil(mp.sqrt((digits + 4) / (-mp.log10(abs(q)))))) + 2
        inv = _pole_array(1, aq, q, -(2 * K + s_max), 2 * K + s_max)
        f1 = {j: xv ** j * inv[j] for j in range(-K, K + 1)}
        f2 = {j: (w ** (j % 3)) * xv ** j * inv[j] for j in range(-K, K + 1)}
        conv12 = {}
        for m1 in range(-K, K + 1):
            v1 = f1[m1]
            for m2 in range(-K, K + 1):
                conv12[m1 + m2] = conv12.get(m1 + m2, mp.mpf(0)) + v1 * f2[m2]
        triple = mp.mpf(0)
        for s in range(-s_max, s_max + 1):
            c = mp.mpf(0)
            for m12, v in conv12.items():
                l = s - m12
                if abs(l) <= 2 * K + s_max:
                    c += v * (w ** ((2 * l) % 3)) * xv ** l * inv[l]
            triple += q ** (s * s) * c
        if arrangement == "base":
            return single, pref * triple
        return single / pref, triple
