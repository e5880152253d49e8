"""Polynomial families, the recurrence pair, and the section of
series/product kernels around S_n."""

from fractions import Fraction

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrr import QContext, QPoly, SingularDeltaError
from qrr.qpolynomials import (bilateral_m_version_residual, c_poly, d_poly,
                              finite_qbinom_sides, gfhn0_diff_formal,
                              gfhn0_sides, hermite_gf_sides, inversion_delta,
                              inversion_delta_from_system, mform_diff_formal,
                              poisson_kernel_sides, q_lommel_p, qinv_hermite,
                              schur_a, schur_b, st_5_1_diff_formal,
                              st_5_1_sides, st_5_2_sides, st_5_3_sides,
                              st_5_4_sides, st_5_5_sides,
                              st_5_6_even_diff_formal, st_5_6_odd_formal,
                              st_5_7_diff_formal, st_5_7_sides,
                              st_5_8_diff_formal, st_5_8_sides, st_5_9_sides,
                              st_10_sides, stieltjes_wigert,
                              stieltjes_wigert_second, sw_as_hermite_residual,
                              sw_formal, sw_functional_residual,
                              sw_inversion_sides, sw_lommel_special_residual,
                              sw_symmetry_residual, u_poly)

CTX = QContext.numeric("0.3", precision=50)
TOL = mp.mpf(10) ** -40
F = Fraction
Q13 = F(1, 3)


# -- S_n basics --------------------------------------------------------------

def test_low_degree_values():
    x = F(2, 5)
    assert stieltjes_wigert(0, x, Q13) == 1
    assert stieltjes_wigert(1, x, Q13) == (1 - Q13 * x) / (1 - Q13)


def test_degree_two_special_point():
    # value at q^{-2} collapses to -q^{-1}/(q^2;q^2)_1
    assert stieltjes_wigert(2, Q13 ** -2, Q13) == -Q13 ** -1 / (1 - Q13 ** 2)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 12), st.fractions(min_value=-3, max_value=3))
def test_two_forms_agree(n, x):
    assert stieltjes_wigert(n, x, Q13) == stieltjes_wigert_second(n, x, Q13)


def test_symmetry_exact_and_numeric():
    assert sw_symmetry_residual(0, F(3, 7), Q13) == 0
    assert sw_symmetry_residual(5, F(3, 7), Q13) == 0
    with CTX.workdps():
        assert sw_symmetry_residual(12, mp.mpf("1.4"), CTX.q) < TOL


def test_formal_builder_matches_exact_evaluation():
    ctx = QContext.formal(order=30, base_exponent=1)
    s = sw_formal(3, F(2, 5), -3, 6, ctx)  # q^6 S_3((2/5) q^{-3})
    direct = Q13 ** 6 * stieltjes_wigert(3, F(2, 5) * Q13 ** -3, Q13)
    assert s.eval_at(mp.mpf(1) / 3, dps=40) - direct < mp.mpf(10) ** -25


# -- Schur-type sequences and the recurrence pair ----------------------------

def test_schur_values():
    assert schur_a(0) == QPoly([1]) and schur_a(1) == QPoly.zero()
    assert schur_b(0) == QPoly.zero() and schur_b(1) == QPoly([1])
    assert schur_a(2) == QPoly([1]) and schur_a(3) == QPoly([1])
    assert schur_b(3) == QPoly([1, 1])


def test_pair_small_values():
    assert c_poly(2).coefficients() == {(0, 0): 1}
    assert c_poly(4).coefficients() == {(2, 0): 1, (0, 2): 1}
    assert d_poly(2).coefficients() == {(1, 0): 1}
    assert d_poly(3).coefficients() == {(2, 0): 1, (0, 1): 1}


def test_three_constructions_agree_through_20():
    for n in range(21):
        c_r = c_poly(n, "recurrence")
        assert c_r == c_poly(n, "explicit") == c_poly(n, "generating")
        d_r = d_poly(n, "recurrence")
        assert d_r == d_poly(n, "explicit") == d_poly(n, "generating")


def test_pair_specializes_to_schur():
    for m in range(13):
        assert c_poly(m).specialize_a(1) == schur_a(m)
        assert d_poly(m).specialize_a(1) == schur_b(m)


def test_pair_coefficients_nonnegative_integers():
    for n in range(2, 16):
        for poly in (c_poly(n), d_poly(n)):
            for v in poly.coefficients().values():
                assert v > 0 and (isinstance(v, int) or v.denominator == 1)


def test_shifted_identity_formal_m_through_10():
    ctx = QContext.formal(order=80, base_exponent=1)
    for m in range(11):
        assert mform_diff_formal(m, ctx).is_zero(), m


def test_bilateral_m_version_sign_readings():
    with CTX.workdps():
        assert bilateral_m_version_residual(mp.mpf("0.5"), 0, CTX) == 0
        assert bilateral_m_version_residual(mp.mpf("0.5"), 1, CTX) == 0
        for m in range(2, 9):
            assert bilateral_m_version_residual(mp.mpf("0.5"), m, CTX) \
                < mp.mpf(10) ** -38
        # the as-printed +d reading fails beyond the trivial cases
        assert bilateral_m_version_residual(mp.mpf("0.5"), 4, CTX, sign=+1) > 1


# -- ladder polynomials and the functional equation --------------------------

def test_ladder_polynomial_values():
    qnu = F(1, 8)
    assert q_lommel_p(-1, F(3, 2), Q13, qnu) == 0
    assert q_lommel_p(0, F(3, 2), Q13, qnu) == 1
    assert q_lommel_p(1, F(3, 2), Q13, qnu) == 2 * F(3, 2) * (1 - qnu)


def test_u_poly_values_and_ladder_match():
    assert u_poly(0, F(2, 3), F(1, 5), Q13) == 1
    assert u_poly(1, F(2, 3), F(1, 5), Q13) == F(2, 3) * (1 - F(1, 5))
    # u_n(q^{k/2}, q^mu) coincides with p_{n,mu}(q^{k/2}/2)
    q, sq = F(1, 4), F(1, 2)
    for n in range(7):
        for k in (0, 1, 2, 3):
            qmu = F(1, 8)
            assert u_poly(n, sq ** k, qmu, q) == q_lommel_p(n, sq ** k / 2, q, qmu)


def test_u_poly_literal_reading_differs():
    q = F(1, 4)
    assert u_poly(2, F(1, 2), F(1, 8), q) != u_poly(2, F(1, 2), F(1, 8), q,
                                                    weighted=False)


def test_functional_equation_exact():
    q, sq = F(1, 4), F(1, 2)
    for k in range(5):
        for n in range(6):
            assert sw_functional_residual(k, F(2, 5), n, q, sq) == 0


def test_functional_equation_numeric():
    with CTX.workdps():
        sq = mp.sqrt(CTX.q)
        for n in range(1, 6):
            assert sw_functional_residual(3, mp.mpf("-0.21"), n, CTX.q, sq) \
                < mp.mpf(10) ** -38


def test_inversion_corrected_passes_literal_fails():
    with CTX.workdps():
        q = CTX.q
        sq = mp.sqrt(q)
        y = -q ** mp.mpf("0.7")
        lhs, recon = sw_inversion_sides(2, y, 1, q, sq, "corrected")
        assert abs(lhs - recon) < mp.mpf(10) ** -38
        lhs, recon = sw_inversion_sides(2, y, 1, q, sq, "literal")
        assert abs(lhs - recon) > mp.mpf("0.01")


def test_inversion_exact_rational():
    lhs, recon = sw_inversion_sides(2, F(1, 3), 1, F(1, 4), F(1, 2), "corrected")
    assert lhs == recon


def test_inversion_delta_two_ways():
    with CTX.workdps():
        q = CTX.q
        sq = mp.sqrt(q)
        y = -q ** mp.mpf("0.7")
        assert abs(inversion_delta(2, y, 1, q, sq)
                   - inversion_delta_from_system(2, y, 1, q, sq)) \
            < mp.mpf(10) ** -45
    d1 = inversion_delta(3, F(2, 7), 2, F(1, 4), F(1, 2))
    d2 = inversion_delta_from_system(3, F(2, 7), 2, F(1, 4), F(1, 2))
    assert d1 == d2


def test_inversion_singular_delta():
    # at k = 0, n = 1 the determinant reduces to y itself, so y = 0 is singular
    q, sq = F(1, 4), F(1, 2)
    assert inversion_delta(0, F(0), 1, q, sq) == 0
    with pytest.raises(SingularDeltaError):
        sw_inversion_sides(0, F(0), 1, q, sq)


def test_special_point_ladder_relation():
    with CTX.workdps():
        for n in range(1, 5):
            assert sw_lommel_special_residual(n, F(2, 5), 2, CTX) \
                < mp.mpf(10) ** -38


# -- inverse-base Hermite ----------------------------------------------------

def test_hermite_values():
    E = F(5, 4)
    assert qinv_hermite(0, E, Q13) == 1
    assert qinv_hermite(1, E, Q13) == E - 1 / E  # = 2 sinh xi


def test_hermite_bridge_corrected_exact():
    E = F(5, 4)
    for n in range(11):
        assert sw_as_hermite_residual(n, E, Q13) == 0
    assert sw_as_hermite_residual(2, E, Q13, reading="literal") != 0


# -- section kernels ----------------------------------------------------------

def test_finite_qbinom_theorem_exact():
    for n in range(13):
        lhs, rhs = finite_qbinom_sides(n, F(3, 5), Q13)
        assert lhs == rhs


def test_product_expansion_5_1():
    with CTX.workdps():
        lhs, rhs = st_5_1_sides(mp.mpf("0.4"), mp.mpf("0.6"), CTX)
        assert abs(lhs - rhs) < TOL
    ctx = QContext.formal(order=60, base_exponent=1)
    assert st_5_1_diff_formal(F(2, 5), F(3, 7), ctx).is_zero()


def test_monomial_reconstruction_5_2():
    for n in range(13):
        lhs, rhs = st_5_2_sides(n, F(2, 3), F(1, 4))
        assert lhs == rhs


def test_entire_function_expansion_5_3():
    with CTX.workdps():
        for n in (0, 2, 4):
            lhs, rhs = st_5_3_sides(n, mp.mpf("0.7"), CTX)
            assert abs(lhs - rhs) < TOL


def test_argument_product_expansion_5_4():
    for n in range(9):
        lhs, rhs = st_5_4_sides(n, F(2, 5), F(3, 4), Q13)
        assert lhs == rhs


def test_tail_product_expansion_5_5():
    with CTX.workdps():
        for n in (0, 1, 4):
            lhs, rhs = st_5_5_sides(n, mp.mpf("0.6"), CTX)
            assert abs(lhs - rhs) < TOL


def test_even_odd_special_values_5_6():
    ctx = QContext.formal(order=40, base_exponent=1)
    for n in range(7):
        assert st_5_6_even_diff_formal(n, ctx).is_zero()
        assert st_5_6_odd_formal(n, ctx).is_zero()


def test_half_power_special_values_5_7_and_5_8():
    ctx = QContext.formal(order=40, base_exponent=4)
    for n in range(9):
        assert st_5_7_diff_formal(n, ctx).is_zero()
        assert st_5_8_diff_formal(n, ctx).is_zero()
    for n in range(9):
        lhs, rhs = st_5_7_sides(n, F(1, 4), F(1, 2))
        assert lhs == rhs
        lhs, rhs = st_5_8_sides(n, F(1, 4), F(1, 2))
        assert lhs == rhs


def test_double_argument_expansion_5_9():
    with CTX.workdps():
        lhs, rhs = st_5_9_sides(mp.mpf("0.5"), mp.mpf("0.8"), CTX)
        assert abs(lhs - rhs) < TOL


def test_degree_shift_expansion_5_10():
    with CTX.workdps():
        for m in (0, 1, 3):
            lhs, rhs = st_10_sides(m, mp.mpf("0.5"), CTX)
            assert abs(lhs - rhs) < TOL


def test_quarter_power_generating_function_readings():
    with CTX.workdps():
        lhs, rhs = hermite_gf_sides(mp.mpf("0.15"), mp.mpf("0.5"), CTX,
                                    "corrected")
        assert abs(lhs - rhs) < TOL
        lhs, rhs = hermite_gf_sides(mp.mpf("0.15"), mp.mpf("0.5"), CTX,
                                    "literal")
        assert abs(lhs - rhs) > mp.mpf("0.01")


def test_bilinear_kernel():
    with CTX.workdps():
        lhs, rhs = poisson_kernel_sides(mp.mpf("0.1"), mp.mpf("0.4"),
                                        mp.mpf("0.55"), CTX)
        assert abs(lhs - rhs) < TOL


def test_half_power_series_evaluation():
    with CTX.workdps():
        lhs, rhs = gfhn0_sides(mp.mpf("0.7"), CTX)
        assert abs(lhs - rhs) < TOL
    ctx = QContext.formal(order=60, base_exponent=2)
    assert gfhn0_diff_formal(F(2, 3), ctx).is_zero()
