"""Tests of the special-function kernels: log-gamma, gamma ratios,
Laguerre recurrence, and the 3F2 series at unit argument."""

import math

import mpmath
import numpy as np
import pytest
from scipy.special import eval_genlaguerre

from diracpol.specfun import (
    ConvergenceError,
    Hyp3F2Params,
    gamma_ratio,
    hyp3f2_contiguous_rhs,
    hyp3f2_unit,
    laguerre,
    log_gamma,
)

mpmath.mp.dps = 40


class TestLogGamma:
    def test_gamma_of_one_is_exactly_zero(self):
        assert log_gamma(1.0) == 0.0

    def test_gamma_of_half(self):
        assert log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), rel=1e-15)

    def test_gamma_of_ten_is_log_nine_factorial(self):
        assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-15)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_domain_error(self, x):
        with pytest.raises(ValueError):
            log_gamma(x)

    def test_ulp_accuracy_against_mpmath(self):
        # 4 ulp relative accuracy over (0, 300], including the
        # neighbourhoods of the zeros at x = 1 and x = 2.
        rng = np.random.default_rng(7)
        xs = np.concatenate(
            [
                np.geomspace(1e-3, 300.0, 160),
                rng.uniform(0.01, 300.0, 160),
                np.arange(0.5, 300.0, 7.5),
                np.linspace(0.95, 1.05, 40),
                np.linspace(1.95, 2.05, 40),
                np.linspace(1.4, 1.5, 20),
            ]
        )
        eps = np.finfo(float).eps
        for x in xs:
            exact = mpmath.loggamma(mpmath.mpf(float(x)))
            got = log_gamma(float(x))
            if exact == 0:
                assert got == 0.0
                continue
            rel = float(abs(mpmath.mpf(got) - exact) / abs(exact))
            assert rel <= 4.0 * eps


class TestGammaRatio:
    def test_integer_factorials(self):
        assert gamma_ratio([4.0, 4.0], [5.0, 4.0]) == pytest.approx(0.25, rel=1e-15)

    @pytest.mark.parametrize("x", [0.3, 1.0, 17.5, 250.0])
    def test_identity(self, x):
        assert gamma_ratio([x], [x]) == pytest.approx(1.0, rel=1e-15)

    def test_shift_by_one(self):
        assert gamma_ratio([2.5], [1.5]) == pytest.approx(1.5, rel=1e-15)

    def test_no_overflow_for_large_arguments(self):
        value = gamma_ratio([300.0, 10.0], [299.0, 11.0])
        assert value == pytest.approx(299.0 / 10.0, rel=1e-13)

    def test_domain_error(self):
        with pytest.raises(ValueError):
            gamma_ratio([1.0, -2.0], [3.0])


class TestLaguerre:
    def test_degree_minus_one_is_zero(self):
        assert laguerre(-1, 1.23, 0.7) == 0.0
        assert laguerre(-1, 0.4, np.array([0.0, 2.0])).tolist() == [0.0, 0.0]

    def test_degree_zero_is_one(self):
        assert laguerre(0, 0.9, 5.0) == 1.0

    def test_degree_one(self):
        alpha, x = 1.7, 0.3
        assert laguerre(1, alpha, x) == pytest.approx(alpha + 1.0 - x, rel=1e-15)

    def test_value_at_origin(self):
        assert laguerre(2, 0.0, 0.0) == pytest.approx(1.0, rel=1e-15)

    def test_against_scipy(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            n = int(rng.integers(0, 30))
            alpha = float(rng.uniform(-0.9, 6.0))
            x = float(rng.uniform(0.0, 40.0))
            assert laguerre(n, alpha, x) == pytest.approx(
                float(eval_genlaguerre(n, alpha, x)), rel=1e-10, abs=1e-12
            )

    def test_recurrence_residual(self):
        # |(n+1) L_{n+1} - (2n+alpha+1-x) L_n + (n+alpha) L_{n-1}| stays at
        # the rounding floor of its largest contribution, up to n = 200.
        rng = np.random.default_rng(3)
        for _ in range(20):
            alpha = float(rng.uniform(-0.5, 5.0))
            x = float(rng.uniform(0.0, 60.0))
            for n in range(1, 201, 7):
                low = laguerre(n - 1, alpha, x)
                mid = laguerre(n, alpha, x)
                high = laguerre(n + 1, alpha, x)
                terms = ((n + 1) * high, (2 * n + alpha + 1 - x) * mid, (n + alpha) * low)
                residual = abs(terms[0] - terms[1] + terms[2])
                scale = max(abs(t) for t in terms)
                assert residual <= 8.0 * math.ulp(max(scale, 1.0))

    def test_rejects_degree_below_minus_one(self):
        with pytest.raises(ValueError):
            laguerre(-2, 0.5, 1.0)


def _term_ratios_oracle(p: Hyp3F2Params, k: np.ndarray) -> np.ndarray:
    return (p.a1 + k) * (p.a2 + k) * (p.a3 + k) / ((p.b1 + k) * (p.b2 + k) * (1.0 + k))


def _direct_sum(p: Hyp3F2Params, n_terms: int) -> float:
    """Independent plain summation of the defining series (test oracle)."""
    k = np.arange(n_terms - 1, dtype=float)
    terms = np.concatenate([[1.0], np.cumprod(_term_ratios_oracle(p, k))])
    return math.fsum(terms)


class TestHyp3F2Unit:
    def test_zero_numerator_gives_one(self):
        value, diag = hyp3f2_unit(Hyp3F2Params(0.0, 3.3, -2.2, 1.5, 4.0))
        assert value == 1.0
        assert diag.terms_used == 1
        assert diag.converged

    def test_two_term_truncating_series(self):
        value, diag = hyp3f2_unit(Hyp3F2Params(-1.0, 1.0, 1.0, 2.0, 2.0))
        assert value == pytest.approx(0.75, rel=1e-15)
        assert diag.terms_used == 2

    def test_gauss_summation_case(self):
        # a3 = b1 reduces the series to a 2F1 at unit argument with the
        # closed Gauss value; its slow k**-2 tail limits the feasible tol.
        value, diag = hyp3f2_unit(Hyp3F2Params(0.5, 0.5, 1.0, 1.0, 2.0), tol=1e-5)
        assert diag.converged
        assert value == pytest.approx(4.0 / math.pi, rel=1e-4)

    def test_truncation_term_count_bound(self):
        for a in (-1.0, -4.0, -9.0):
            _, diag = hyp3f2_unit(Hyp3F2Params(a, 2.7, 1.9, 3.1, 4.2))
            assert diag.terms_used <= int(-a) + 1

    def test_truncating_exactness(self):
        p = Hyp3F2Params(-3.0, 1.2, 2.5, 3.4, 2.2)
        value, _ = hyp3f2_unit(p)
        exact = float(mpmath.hyp3f2(-3, "1.2", "2.5", "3.4", "2.2", 1))
        assert value == pytest.approx(exact, rel=5e-16)

    def test_matches_mpmath_on_channel_like_parameters(self):
        for d, b2 in ((1.05, 3.2), (1.3, 3.9), (1.414, 3.83)):
            p = Hyp3F2Params(d - 1, d - 1, d + 1, d + 2, b2)
            value, diag = hyp3f2_unit(p, tol=1e-16)
            exact = float(
                mpmath.hyp3f2(p.a1, p.a2, p.a3, p.b1, p.b2, 1, maxterms=10**7)
            )
            assert diag.converged
            assert value == pytest.approx(exact, rel=5e-15)

    def test_divergent_parameters_raise(self):
        with pytest.raises(ConvergenceError):
            hyp3f2_unit(Hyp3F2Params(3.0, 3.0, 3.0, 1.0, 1.0))

    def test_invalid_denominator_raises(self):
        with pytest.raises(ValueError):
            Hyp3F2Params(1.0, 1.0, 1.0, 0.0, 2.0)
        with pytest.raises(ValueError):
            Hyp3F2Params(1.0, 1.0, 1.0, 2.0, -3.0)

    def test_tolerance_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            hyp3f2_unit(Hyp3F2Params(0.5, 0.5, 0.5, 2.0, 2.0), tol=0.0)

    def test_monotone_partial_sums_and_tail_dominates_remainder(self):
        # For all-positive parameters the terms are positive, so partial
        # sums increase monotonically; the reported tail estimate must
        # dominate the true remainder measured against a 10x longer sum.
        rng = np.random.default_rng(23)
        checked = 0
        while checked < 25:
            a = rng.uniform(0.1, 5.0, 3)
            b = rng.uniform(0.5, 8.0, 2)
            p = Hyp3F2Params(*a, *b)
            if p.balance() < 2.0:
                continue
            value, diag = hyp3f2_unit(p, tol=1e-9)
            assert diag.converged and diag.tail_estimate <= 1e-9
            n_used = diag.terms_used
            k = np.arange(n_used - 1, dtype=float)
            terms = np.concatenate(
                [[1.0], np.cumprod(_term_ratios_oracle(p, k))]
            )
            assert np.all(terms > 0.0)  # hence monotone partial sums
            partial = _direct_sum(p, n_used)
            longer = _direct_sum(p, 10 * n_used)
            remainder = abs(longer - partial) / abs(longer)
            assert diag.tail_estimate >= remainder
            assert value == pytest.approx(longer, rel=1e-8)
            checked += 1

    def test_gauss_reduction_property(self):
        # Whenever a3 = b1 the value collapses to the Gauss closed form
        # G(b2) G(b2-a1-a2) / (G(b2-a1) G(b2-a2)).
        rng = np.random.default_rng(5)
        tol = 1e-7
        checked = 0
        while checked < 25:
            a1, a2 = rng.uniform(0.1, 3.0, 2)
            shared = rng.uniform(0.5, 6.0)
            b2 = a1 + a2 + rng.uniform(1.5, 5.0)
            p = Hyp3F2Params(a1, a2, shared, shared, b2)
            value, _ = hyp3f2_unit(p, tol=tol)
            closed = gamma_ratio([b2, b2 - a1 - a2], [b2 - a1, b2 - a2])
            assert abs(value - closed) / abs(closed) <= 10.0 * tol
            checked += 1


class TestContiguousIdentity:
    def test_truncating_case_matches_direct(self):
        p = Hyp3F2Params(-1.0, 1.0, 1.0, 2.0, 3.0)
        direct, _ = hyp3f2_unit(p)
        assert direct == pytest.approx(5.0 / 6.0, rel=1e-15)
        assert hyp3f2_contiguous_rhs(p) == pytest.approx(direct, rel=1e-14)

    def test_generic_case_matches_direct(self):
        p = Hyp3F2Params(0.5, 0.5, 1.0, 2.0, 2.5)
        direct, _ = hyp3f2_unit(p, tol=1e-12)
        assert hyp3f2_contiguous_rhs(p, tol=1e-12) == pytest.approx(direct, rel=1e-10)

    def test_channel_parameters_at_z30(self):
        # Parameter set of the slower dipole-channel series at Z = 30.
        alpha_z = 30.0 / 137.035999139
        g = math.sqrt(0.25 - alpha_z**2)
        gk = math.sqrt(2.25 - alpha_z**2)
        d = gk - g
        tol = 1e-12
        p = Hyp3F2Params(d - 1.0, d - 1.0, d, d + 1.0, 2.0 * gk + 1.0)
        direct, _ = hyp3f2_unit(p, tol=tol)
        rhs = hyp3f2_contiguous_rhs(p, tol=tol)
        assert abs(rhs - direct) / abs(direct) <= 10.0 * tol

    def test_identity_on_random_parameter_sets(self):
        # 1000 in-domain random sets with the contiguous structure
        # b1 = a3 + 1; agreement to 100 * tol.  Draws keep the balance
        # above 2.5 so direct summation can certify tol within the cap.
        rng = np.random.default_rng(101)
        tol = 1e-10
        checked = 0
        while checked < 1000:
            a1, a2, a3 = rng.uniform(0.05, 9.0, 3)
            b2 = rng.uniform(0.5, 10.0)
            p = Hyp3F2Params(a1, a2, a3, a3 + 1.0, b2)
            if p.balance() < 2.5:
                continue
            if b2 - a1 - a2 <= -0.5 or abs(b2 - a3 - 1.0) < 0.05:
                continue
            if min(b2 - a1, b2 - a2) <= 0.05:
                continue
            direct, _ = hyp3f2_unit(p, tol=tol)
            rhs = hyp3f2_contiguous_rhs(p, tol=tol)
            assert abs(rhs - direct) / abs(direct) <= 100.0 * tol
            checked += 1

    def test_rejects_wrong_contiguous_structure(self):
        with pytest.raises(ValueError):
            hyp3f2_contiguous_rhs(Hyp3F2Params(0.5, 0.5, 1.0, 2.5, 2.0))

    def test_rejects_singular_second_denominator(self):
        # b2 = a3 + 1 makes both right-hand-side pieces individually
        # singular (the identity only holds there as a limit).
        with pytest.raises(ValueError):
            hyp3f2_contiguous_rhs(Hyp3F2Params(0.5, 0.5, 1.0, 2.0, 2.0))
