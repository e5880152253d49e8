"""Summation engine behavior: stopping, certificates, failure modes."""

import mpmath as mp
import pytest

from qrr import (NonConvergenceError, QContext, RatioTestError, sum_bilateral,
                 sum_series)


def theta_half_oracle(dps=40, terms=25):
    """Direct 25-term summation of sum_{n>=0} (1/2)^{n^2}."""
    with mp.workdps(dps + 10):
        return sum(mp.mpf(2) ** -(n * n) for n in range(terms))


def test_zero_generator():
    ctx = QContext.numeric("0.5")
    out = sum_series(lambda n: mp.mpf(0), ctx)
    assert out.value == 0
    assert out.converged
    assert out.tail_bound == 0


def test_gaussian_terms_match_direct_oracle():
    ctx = QContext.numeric("0.5", precision=30)
    q = ctx.q
    with ctx.workdps():
        out = sum_series(lambda n: q ** (n * n), ctx)
    oracle = theta_half_oracle(dps=35)
    assert out.converged
    assert abs(out.value - oracle) < mp.mpf(10) ** -30
    # frozen from the direct-summation oracle
    assert mp.nstr(out.value, 20) == "1.5644684136059385793"


def test_constant_terms_do_not_converge():
    ctx = QContext.numeric("0.5", max_terms=200)
    with pytest.raises(NonConvergenceError):
        sum_series(lambda n: mp.mpf(1), ctx)


def test_no_decay_certificate_raises():
    ctx = QContext.numeric("0.5", precision=20, max_terms=500)
    tiny = mp.mpf(10) ** -35

    def flat_small(n):
        return tiny  # below tolerance but never decaying

    with pytest.raises(RatioTestError):
        sum_series(flat_small, ctx)


def test_bilateral_symmetric_gaussian():
    ctx = QContext.numeric("0.5", precision=30)
    q = ctx.q
    with ctx.workdps():
        out = sum_bilateral(lambda n: q ** (n * n), ctx)
    oracle = 2 * theta_half_oracle(dps=35) - 1
    assert abs(out.value - oracle) < mp.mpf(10) ** -29
    assert mp.nstr(out.value, 20) == "2.1289368272118771587"


def test_bilateral_two_geometric_tails():
    ctx = QContext.numeric("0.5", precision=30)
    q = ctx.q
    with ctx.workdps():
        out = sum_bilateral(lambda n: q ** abs(n), ctx)
    assert abs(out.value - 3) < mp.mpf(10) ** -29


def test_bilateral_with_dead_negative_tail():
    ctx = QContext.numeric("0.4", precision=30)
    q = ctx.q

    def term(n):
        return q ** n if n >= 0 else mp.mpf(0)

    with ctx.workdps():
        out = sum_bilateral(term, ctx)
        uni = sum_series(lambda n: q ** n, ctx)
    assert abs(out.value - uni.value) == 0


def test_stability_under_stricter_stopping():
    ctx = QContext.numeric("0.45", precision=35)
    q = ctx.q
    with ctx.workdps():
        loose = sum_series(lambda n: q ** (n * n) * (-1) ** n, ctx, group=5)
        strict = sum_series(lambda n: q ** (n * n) * (-1) ** n, ctx, group=12)
    assert abs(loose.value - strict.value) <= loose.tail_bound + strict.tail_bound


def test_converged_flag_implies_tail_below_target():
    ctx = QContext.numeric("0.5", precision=30)
    q = ctx.q
    with ctx.workdps():
        out = sum_series(lambda n: q ** n, ctx)
    assert out.converged
    assert out.tail_bound < mp.mpf(10) ** -30
