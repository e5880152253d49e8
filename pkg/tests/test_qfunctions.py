"""Hypergeometric, bilateral, and convolution-identity evaluators."""

from fractions import Fraction

import mpmath as mp
import pytest

from qrr import AnnulusError, DomainError, EisensteinRational, QContext, QPow
from qrr.pochhammer import pochhammer_infinite_value
from qrr.qfunctions import (a_alpha, a_alpha_formal, b_alpha,
                            bilateral_cube_slice_sides,
                            bilateral_pair_slice_sides, cube_convolution_sides,
                            cube_bilateral_master_sides, cube_master_sides,
                            heine_sides, omega, omega_formal,
                            pair_convolution_sides, phi21_terminating_exact,
                            phi_1_1, phi_2_1, psi_1_1, psi_1_1_product,
                            ramanujan_A, ramanujan_A_formal, rr_product_formal,
                            rr_sum_formal, square_bilateral_master_sides,
                            square_master_sides, theta_pair_imag_sides,
                            theta_pair_sides, theta_triple_sides,
                            u_m_bilateral)

CTX = QContext.numeric("0.3", precision=50)
TOL = mp.mpf(10) ** -40
F = Fraction


def test_phi21_zero_argument_is_one():
    out = phi_2_1(mp.mpf("0.2"), mp.mpf("0.5"), mp.mpf("0.7"), mp.mpf(0), CTX)
    assert out.value == 1


def test_phi21_rejects_large_argument():
    with pytest.raises(DomainError):
        phi_2_1(mp.mpf("0.2"), mp.mpf("0.5"), mp.mpf("0.7"), mp.mpf("1.1"), CTX)


def test_heine_transformation_random_draws():
    import random
    rnd = random.Random(20240811)
    with CTX.workdps():
        for _ in range(50):
            b = mp.mpf(rnd.randint(30, 90)) / 100
            c = b * mp.mpf(rnd.randint(10, 85)) / 100  # keeps |c/b| < 1
            a = mp.mpf(rnd.randint(5, 90)) / 100
            z = mp.mpf(rnd.randint(5, 90)) / 100
            lhs, rhs = heine_sides(a, b, c, z, CTX)
            assert abs(lhs - rhs) < TOL


def test_heine_rejects_out_of_domain_transform():
    # transformed argument c/b >= 1 diverges and is refused up front
    with pytest.raises(DomainError):
        heine_sides(mp.mpf("0.3"), mp.mpf("0.5"), mp.mpf("0.7"), mp.mpf("0.4"),
                    CTX)


def test_phi11_measures_kind2_series():
    # z^nu-normalized kind-2 series equals 1phi1(z^2; 0; q, q^{nu+1})/(q;q)_inf
    from qrr.qbessel import bessel_i
    with CTX.workdps():
        q = CTX.q
        z = mp.mpf("0.6")
        nu = F(1, 2)
        lhs = bessel_i(2, nu, 2 * z, CTX)
        rhs = (z ** mp.mpf("0.5") / pochhammer_infinite_value(q, q, CTX)
               * phi_1_1(z * z, mp.mpf(0), QPow(1, nu + 1), CTX).value)
        assert abs(lhs - rhs) < TOL


def test_bilateral_sum_against_product():
    import random
    rnd = random.Random(7)
    with CTX.workdps():
        for _ in range(20):
            a = mp.mpf(rnd.randint(40, 90)) / 100
            b = a * mp.mpf(rnd.randint(5, 40)) / 100
            lo = b / a
            z = lo + (1 - lo) * mp.mpf(rnd.randint(20, 80)) / 100
            s = psi_1_1(a, b, z, CTX).value
            p = psi_1_1_product(a, b, z, CTX)
            assert abs(s - p) < TOL


def test_bilateral_annulus_enforced():
    with pytest.raises(AnnulusError):
        psi_1_1(mp.mpf("0.5"), mp.mpf("0.4"), mp.mpf("0.3"), CTX)
    with pytest.raises(AnnulusError):
        psi_1_1(mp.mpf("0.5"), mp.mpf("0.1"), mp.mpf("1.2"), CTX)


def test_bilateral_collapses_when_denominator_is_q():
    with CTX.workdps():
        q = CTX.q
        a, z = mp.mpf("0.5"), mp.mpf("0.4")
        s = psi_1_1(a, QPow(1, 1), z, CTX).value
        rhs = (pochhammer_infinite_value(a * z, q, CTX)
               / pochhammer_infinite_value(z, q, CTX))
        assert abs(s - rhs) < TOL


def test_entire_function_values():
    assert ramanujan_A(mp.mpf(0), CTX).value == 1
    # A_q(-1) is the gap-series value
    with CTX.workdps():
        q = CTX.q
        direct = sum(q ** (n * n) / mp.qp(q, q, n) for n in range(40))
        assert abs(ramanujan_A(mp.mpf(-1), CTX).value - direct) < TOL


def test_gap_series_product_sides_formal():
    ctx = QContext.formal(order=100, base_exponent=1)
    assert (rr_sum_formal(0, ctx) - rr_product_formal(1, ctx)).is_zero()
    assert (rr_sum_formal(1, ctx) - rr_product_formal(2, ctx)).is_zero()


def test_entire_function_formal_matches_gap_series():
    ctx = QContext.formal(order=80, base_exponent=1)
    assert ramanujan_A_formal(-1, 0, ctx) == rr_sum_formal(0, ctx)
    assert ramanujan_A_formal(-1, 1, ctx) == rr_sum_formal(1, ctx)


def test_alpha_family_reductions_formal():
    ctx = QContext.formal(order=60, base_exponent=1)
    t = F(2, 3)
    # (a = q) reduction to the plain theta-type series
    assert a_alpha_formal(1, (1, 1), (t, 0), ctx) == omega_formal(t, 0, ctx)
    # (a = 0) reduction to the entire function at -t
    assert a_alpha_formal(1, None, (t, 0), ctx) == ramanujan_A_formal(-t, 0, ctx)
    # base-squared identity: coefficients of the q^2-scaled theta series
    assert (a_alpha_formal(1, (1, 1), (t, 0), ctx)
            == omega_formal(t, 0, ctx, qscale=1))


def test_alpha_family_reductions_numeric():
    with CTX.workdps():
        t = mp.mpf("0.6")
        d1 = abs(a_alpha(1, QPow(1, 1), t, CTX).value - omega(t, CTX).value)
        d2 = abs(a_alpha(1, mp.mpf(0), t, CTX).value
                 - ramanujan_A(-t, CTX).value)
        assert d1 == 0 and d2 == 0


def test_bilateral_alpha_reduces_to_unilateral():
    with CTX.workdps():
        a, x = mp.mpf("0.5"), mp.mpf("0.7")
        d = abs(b_alpha(1, a, QPow(1, 1), x, CTX).value
                - a_alpha(1, a, x, CTX).value)
        assert d == 0


def test_bilateral_alpha_finite_at_generic_params():
    # finite value at the sampled point used by the square-master check
    with CTX.workdps():
        v = b_alpha(1, mp.mpf("0.4"), mp.mpf("0.9"), mp.mpf("0.7"), CTX)
        assert v.converged
        assert mp.isfinite(v.value)


def test_shifted_bilateral_recurrence():
    # values grow like q^{-binom(m,2)}, so the residual is scale-aware
    from qrr import scaled_deviation
    with CTX.workdps():
        q = CTX.q
        for a in (mp.mpf("0.5"), mp.mpf("0.8"), mp.mpf("1.5")):
            for m in range(11):
                lhs = q ** (m + 1) * u_m_bilateral(a, m + 2, CTX).value
                rhs = (u_m_bilateral(a, m, CTX).value
                       - a * u_m_bilateral(a, m + 1, CTX).value)
                assert scaled_deviation(lhs, rhs) < TOL


def test_shifted_bilateral_at_unit_parameter():
    # a = 1: negative indices die exactly; equals the entire function value
    with CTX.workdps():
        u0 = u_m_bilateral(QPow(1, 0), 0, CTX).value
        assert abs(u0 - ramanujan_A(mp.mpf(-1), CTX).value) == 0


def test_shifted_bilateral_against_truncation_oracle():
    with CTX.workdps():
        q = CTX.q
        a = mp.mpf("0.5")
        val = u_m_bilateral(a, 1, CTX).value
        oracle = mp.mpf(0)
        for n in range(80):
            oracle += q ** (n * n + n) / mp.qp(a * q, q, n)
        for k in range(1, 80):
            prod = mp.mpf(1)
            for j in range(1, k + 1):
                prod *= 1 - a * q ** (1 - j)
            oracle += q ** (k * k - k) * prod
        assert abs(val - oracle) < TOL


def test_pair_convolution_exact_values():
    lhs, rhs = pair_convolution_sides(2, F(1, 3), F(1, 2))
    assert lhs == rhs == F(32, 27)
    lhs, rhs = pair_convolution_sides(5, F(1, 3), F(1, 2))
    assert lhs == rhs == 0


def test_pair_convolution_exact_sweep():
    for a in (F(1, 3), F(2, 7), F(5, 4)):
        for n in range(0, 31):
            lhs, rhs = pair_convolution_sides(n, a, F(1, 2))
            assert lhs == rhs, (a, n)


def test_cube_convolution_exact_sweep():
    for a in (F(1, 3), F(2, 7), F(5, 4)):
        for n in range(0, 31):
            lhs, rhs = cube_convolution_sides(n, a, F(1, 3))
            assert lhs == rhs, (a, n)
            if n % 3 != 0:
                assert lhs == EisensteinRational.of(0)


def test_cube_convolution_at_zero_parameter():
    # a = 0: the triple convolution of 1/(q;q)_j collapses to 1/(q^3;q^3)_m
    q = F(1, 2)
    for m in range(6):
        lhs, rhs = cube_convolution_sides(3 * m, F(0), q)
        expected = 1 / pochhammer_finite_direct(q ** 3, q ** 3, m)
        assert lhs == rhs == EisensteinRational.of(expected)


def pochhammer_finite_direct(a, q, n):
    prod = F(1)
    for k in range(n):
        prod *= 1 - a * q ** k
    return prod


def test_bilateral_pair_slices():
    with CTX.workdps():
        a, b = mp.mpf("0.5"), mp.mpf("0.1")
        for n in (0, 2, 4):
            lhs, rhs = bilateral_pair_slice_sides(n, a, b, CTX, digits=40)
            assert abs(lhs - rhs) < mp.mpf(10) ** -30
        for n in (1, 3):
            lhs, rhs = bilateral_pair_slice_sides(n, a, b, CTX, digits=40)
            assert rhs == 0 and abs(lhs) < mp.mpf(10) ** -30


def test_bilateral_cube_slices():
    with CTX.workdps():
        a, b = mp.mpf("0.5"), mp.mpf("0.1")
        lhs, rhs = bilateral_cube_slice_sides(6, a, b, CTX, digits=35)
        assert abs(lhs - rhs) < mp.mpf(10) ** -26
        lhs, rhs = bilateral_cube_slice_sides(4, a, b, CTX, digits=35)
        assert rhs == 0 and abs(lhs) < mp.mpf(10) ** -26


def test_square_master_transformation():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = square_master_sides(1, mp.mpf("0.5"), mp.mpf("0.6"), ctx)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30
        lhs, rhs = square_master_sides(F(1, 2), mp.mpf("0.4"), mp.mpf("0.5"), ctx)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


def test_cube_master_transformation():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = cube_master_sides(1, mp.mpf("0.5"), mp.mpf("0.6"), ctx)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


def test_square_bilateral_master():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = square_bilateral_master_sides(
            1, mp.mpf("0.6"), mp.mpf("0.15"), mp.mpf("0.5"), ctx)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


def test_cube_bilateral_master_corrected_vs_literal():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = cube_bilateral_master_sides(
            1, mp.mpf("0.6"), mp.mpf("0.15"), mp.mpf("0.5"), ctx, corrected=True)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30
        lhs, rhs = cube_bilateral_master_sides(
            1, mp.mpf("0.6"), mp.mpf("0.15"), mp.mpf("0.5"), ctx, corrected=False)
        assert abs(lhs - rhs) > mp.mpf("0.1")  # as printed, the twist is missing


def test_theta_pair_identity():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = theta_pair_sides(mp.mpf("0.5"), mp.mpf("0.6"), ctx, digits=40)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


def test_theta_pair_imaginary_specialization():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = theta_pair_imag_sides(mp.mpf("0.6"), ctx, digits=40)
        assert abs(lhs - rhs) < mp.mpf(10) ** -30


def test_theta_triple_identities():
    ctx = QContext.numeric("0.3", precision=40)
    with ctx.workdps():
        lhs, rhs = theta_triple_sides(mp.mpf("0.5"), mp.mpf("0.6"), ctx, digits=32)
        assert abs(lhs - rhs) < mp.mpf(10) ** -26
        lhs, rhs = theta_triple_sides(QPow(1, F(1, 3)), mp.mpf("0.6"), ctx,
                                      digits=32, arrangement="split-left")
        assert abs(lhs - rhs) < mp.mpf(10) ** -26
        lhs, rhs = theta_triple_sides(QPow(-1, F(1, 3)), mp.mpf("0.6"), ctx,
                                      digits=32)
        assert abs(lhs - rhs) < mp.mpf(10) ** -26


def test_terminating_phi21_collapses_to_power():
    for m in range(7):
        for n in range(7):
            assert phi21_terminating_exact(m, n, F(1, 3)) == F(1, 3) ** (-m * n)


def test_gap_identity_at_complex_base():
    # no fractional q-power appears, so a complex base is fair game
    from qrr.pochhammer import multi_pochhammer_infinite
    ctx = QContext.numeric(complex(0.2, 0.1), precision=50)
    with ctx.workdps():
        q = ctx.q
        lhs = u_m_bilateral(QPow(1, 0), 0, ctx).value
        rhs = 1 / multi_pochhammer_infinite([q, q ** 4], q ** 5, ctx)
        assert abs(lhs - rhs) < TOL
