"""Tests for the five-parameter family core.

Hand-checkable anchors: at a=b=1 the family is the parent law, and at
theta=1, lambda=0.5, beta=2 the parent is a unit exponential shifted to
start at -1.  At a=2, b=1 the density is 2 K k, which at x=0 evaluates
to 2(1/e - 1/e^2) by hand.  Quadrature and Monte Carlo supply the
remaining oracles.
"""

import math

import numpy as np
import pytest
from scipy import integrate

from erlfit.baseline import BaselineParams, baseline_cdf, baseline_pdf, baseline_sample
from erlfit.core import (
    ErlParams,
    erl_cdf,
    erl_central_moments,
    erl_cv,
    erl_hazard,
    erl_kurtosis,
    erl_pdf,
    erl_quantile,
    erl_raw_moment,
    erl_reversed_hazard,
    erl_sample,
    erl_skewness,
    erl_survival,
    normalization_check,
)
from erlfit.errors import NumericalError

EXP_BASE = BaselineParams(theta=1.0, lam=0.5, beta=2.0)
EXP_POINT = ErlParams(1.0, 1.0, EXP_BASE)
POWER_POINT = ErlParams(2.0, 1.0, EXP_BASE)

# hand values at x=0 for the anchors above
K0 = 1.0 - math.exp(-1.0)
k0 = math.exp(-1.0)

MIXED_SETS = [
    ErlParams(2.0, 3.0, BaselineParams(1.0, 1.0, 1.0)),
    ErlParams(0.7, 1.8, BaselineParams(2.0, 0.8, 0.5)),
    ErlParams(3.5, 0.4, BaselineParams(0.5, 1.5, 2.0)),
    ErlParams(1.2, 1.2, BaselineParams(1.5, 2.0, 1.0)),
]

# sets where the fixed-order quadrature accepts; the lam=0.8 member of
# MIXED_SETS makes it refuse, which test_untrustworthy_quadrature_raises
# covers on its own
MOMENT_SETS = [
    MIXED_SETS[0],
    MIXED_SETS[2],
    MIXED_SETS[3],
    ErlParams(0.7, 1.8, BaselineParams(2.0, 1.2, 0.5)),
]


class TestParams:
    def test_rejects_nonpositive_shapes(self):
        with pytest.raises(ValueError):
            ErlParams(-1.0, 1.0, EXP_BASE)
        with pytest.raises(ValueError):
            ErlParams(1.0, 0.0, EXP_BASE)

    def test_from_values_and_back(self):
        p = ErlParams.from_values(a=2.0, b=1.0, theta=1.0, lam=0.5, beta=2.0)
        assert p.values() == (2.0, 1.0, 1.0, 0.5, 2.0)


class TestPdf:
    def test_reduces_to_parent(self):
        x = np.linspace(-0.9, 6.0, 200)
        assert np.max(np.abs(erl_pdf(x, EXP_POINT) - baseline_pdf(x, EXP_BASE))) <= 1e-12

    def test_power_anchor(self):
        assert erl_pdf(0.0, POWER_POINT) == pytest.approx(2.0 * K0 * k0, abs=1e-10)

    def test_zero_outside_support(self):
        assert erl_pdf(-1.0, POWER_POINT) == 0.0
        assert erl_pdf(-4.0, POWER_POINT) == 0.0

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_nonnegative(self, p):
        x = np.linspace(-p.base.theta + 1e-6, 10.0 * p.base.theta, 400)
        assert np.all(erl_pdf(x, p) >= 0.0)

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_matches_cdf_derivative(self, p):
        lo = erl_quantile(0.05, p)
        hi = erl_quantile(0.95, p)
        x = np.linspace(lo, hi, 60)
        h = 1e-6 * p.base.theta
        fd = (erl_cdf(x + h, p) - erl_cdf(x - h, p)) / (2.0 * h)
        assert np.max(np.abs(erl_pdf(x, p) - fd)) <= 1e-5


class TestCdf:
    def test_reduces_to_parent(self):
        x = np.linspace(-0.9, 6.0, 200)
        assert np.max(np.abs(erl_cdf(x, EXP_POINT) - baseline_cdf(x, EXP_BASE))) <= 1e-13

    def test_power_anchor(self):
        # at b=1 the cdf is K^a
        assert erl_cdf(0.0, POWER_POINT) == pytest.approx(K0**2, abs=1e-10)

    def test_support_edge(self):
        assert erl_cdf(-1.0, POWER_POINT) == 0.0

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_monotone_within_unit_interval(self, p):
        x = np.linspace(-p.base.theta, 20.0 * p.base.theta, 500)
        vals = erl_cdf(x, p)
        assert np.all(np.diff(vals) >= 0.0)
        assert np.all((vals >= 0.0) & (vals <= 1.0))


class TestSurvivalHazard:
    def test_survival_anchor(self):
        assert erl_survival(0.0, POWER_POINT) == pytest.approx(1.0 - K0**2, abs=1e-10)

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_survival_complements_cdf(self, p):
        x = np.linspace(-p.base.theta + 0.01, 8.0 * p.base.theta, 300)
        total = erl_cdf(x, p) + erl_survival(x, p)
        assert np.max(np.abs(total - 1.0)) <= 1e-12

    @pytest.mark.parametrize("x", [0.0, 3.0])
    def test_constant_hazard_at_exponential_point(self, x):
        assert erl_hazard(x, EXP_POINT) == pytest.approx(1.0, abs=1e-10)

    def test_hazard_anchor(self):
        expected = (2.0 * K0 * k0) / (1.0 - K0**2)
        assert erl_hazard(0.0, POWER_POINT) == pytest.approx(expected, abs=1e-10)

    def test_reversed_hazard_anchor(self):
        assert erl_reversed_hazard(0.0, EXP_POINT) == pytest.approx(k0 / K0, abs=1e-10)

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_ratio_identities(self, p):
        x = np.linspace(erl_quantile(0.02, p), erl_quantile(0.98, p), 100)
        pdf = erl_pdf(x, p)
        cdf = erl_cdf(x, p)
        surv = erl_survival(x, p)
        assert np.max(np.abs(erl_hazard(x, p) - pdf / surv)) <= 1e-10 * np.max(pdf / surv)
        assert np.max(np.abs(erl_reversed_hazard(x, p) - pdf / cdf)) <= 1e-10 * np.max(pdf / cdf)

    def test_infinity_signals(self):
        assert erl_hazard(1e9, EXP_POINT) == math.inf
        assert erl_reversed_hazard(-1.0, EXP_POINT) == math.inf


class TestQuantile:
    def test_power_anchor(self):
        assert erl_quantile(K0**2, POWER_POINT) == pytest.approx(0.0, abs=1e-9)

    def test_endpoints(self):
        assert erl_quantile(0.0, EXP_POINT) == -1.0
        assert erl_quantile(1.0, EXP_POINT) == math.inf

    def test_domain(self):
        with pytest.raises(ValueError):
            erl_quantile(-0.1, EXP_POINT)
        with pytest.raises(ValueError):
            erl_quantile(1.2, EXP_POINT)

    @pytest.mark.parametrize(
        "p, tail_cap",
        [
            (MIXED_SETS[0], 1e-7),
            (MIXED_SETS[1], 1e-7),
            # b=0.4: past this tail the beta inverse needs u closer to
            # 1 than doubles can spell, which blocks a 1e-9 round trip
            (MIXED_SETS[2], 1e-3),
            (MIXED_SETS[3], 1e-7),
        ],
    )
    def test_roundtrip(self, p, tail_cap):
        probs = np.linspace(1e-5, 1.0 - tail_cap, 300)
        x = erl_quantile(probs, p)
        back = erl_cdf(x, p)
        assert np.max(np.abs(back - probs)) <= 1e-9

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_monotone(self, p):
        probs = np.linspace(0.001, 0.999, 200)
        assert np.all(np.diff(erl_quantile(probs, p)) > 0)


class TestSample:
    def test_deterministic_per_seed(self):
        a = erl_sample(50, POWER_POINT, seed=3)
        b = erl_sample(50, POWER_POINT, seed=3)
        assert np.array_equal(a, b)

    def test_reduction_matches_parent_distribution(self):
        ours = np.sort(erl_sample(10_000, EXP_POINT, seed=21))
        parent = np.sort(baseline_sample(10_000, EXP_BASE, seed=22))
        # two-sample empirical cdf sup distance
        merged = np.concatenate([ours, parent])
        d = 0.0
        for t in merged[:: 40]:
            f1 = np.searchsorted(ours, t, side="right") / ours.size
            f2 = np.searchsorted(parent, t, side="right") / parent.size
            d = max(d, abs(f1 - f2))
        assert d < 0.03

    def test_power_point_mean(self):
        # E[X] at a=2, b=1 equals 1/2 by the hand integral
        # 2 int_0^1 (-ln(1-v) - 1) v dv
        x = erl_sample(1_000_000, POWER_POINT, seed=33)
        se = float(np.std(x, ddof=1)) / math.sqrt(x.size)
        assert abs(float(np.mean(x)) - 0.5) <= 3.0 * se

    @pytest.mark.parametrize("p", MIXED_SETS)
    def test_support(self, p):
        x = erl_sample(2_000, p, seed=9)
        assert np.all(x > -p.base.theta)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            erl_sample(0, EXP_POINT, seed=1)


class TestMoments:
    def test_zeroth(self):
        assert erl_raw_moment(0, EXP_POINT) == 1.0

    def test_exponential_mean(self):
        assert erl_raw_moment(1, EXP_POINT) == pytest.approx(0.0, abs=1e-8)

    def test_power_point_mean(self):
        assert erl_raw_moment(1, POWER_POINT) == pytest.approx(0.5, abs=1e-8)

    @pytest.mark.parametrize("p", MOMENT_SETS)
    @pytest.mark.parametrize("r", [1, 2])
    def test_against_quadrature(self, p, r):
        # the oracle integrates to infinity: truncating at a far
        # quantile silently drops tail mass when b < 1
        ref, _ = integrate.quad(
            lambda t: t**r * erl_pdf(t, p), -p.base.theta, np.inf, limit=400
        )
        got = erl_raw_moment(r, p)
        assert abs(got - ref) <= 1e-6 * max(1.0, abs(ref))

    def test_monte_carlo_triangulation(self):
        p = MIXED_SETS[0]
        x = erl_sample(1_000_000, p, seed=44)
        for r in (1, 2):
            mc = float(np.mean(x**r))
            se = float(np.std(x**r, ddof=1)) / math.sqrt(x.size)
            assert abs(erl_raw_moment(r, p) - mc) <= 4.0 * se

    def test_untrustworthy_quadrature_raises(self):
        heavy = ErlParams(1.0, 1.0, BaselineParams(1.0, 0.05, 1.0))
        with pytest.raises(NumericalError):
            erl_raw_moment(1, heavy)

    def test_central_moments_at_exponential_point(self):
        mean, m2, m3, m4 = erl_central_moments(EXP_POINT)
        assert mean == pytest.approx(0.0, abs=1e-8)
        assert m2 == pytest.approx(1.0, abs=1e-7)
        assert m3 == pytest.approx(2.0, abs=1e-6)
        assert m4 == pytest.approx(9.0, abs=1e-5)

    def test_shape_summaries_at_exponential_point(self):
        assert erl_skewness(EXP_POINT) == pytest.approx(2.0, abs=1e-6)
        assert erl_kurtosis(EXP_POINT) == pytest.approx(6.0, abs=1e-5)

    def test_cv(self):
        # doubling beta to 1 keeps the law exponential but moves the
        # mean to 1 with sd 2: X = 2E - 1
        stretched = ErlParams(1.0, 1.0, BaselineParams(1.0, 0.5, 1.0))
        assert erl_cv(stretched) == pytest.approx(2.0, abs=1e-7)
        assert math.isnan(erl_cv(EXP_POINT))

    @pytest.mark.parametrize("p", MOMENT_SETS[:2])
    def test_shape_summaries_consistent_with_central_moments(self, p):
        _, m2, m3, m4 = erl_central_moments(p)
        assert erl_skewness(p) == pytest.approx(m3 / m2**1.5, rel=1e-9)
        assert erl_kurtosis(p) == pytest.approx(m4 / m2**2 - 3.0, rel=1e-9)


class TestNormalization:
    def test_exponential_point(self):
        assert normalization_check(EXP_POINT) == pytest.approx(1.0, abs=1e-10)

    def test_generic_point(self):
        p = ErlParams(2.5, 0.7, BaselineParams(3.0, 1.2, 0.4))
        assert normalization_check(p) == pytest.approx(1.0, abs=1e-8)

    def test_spiky_stress_point(self):
        p = ErlParams(0.801, 5.5, BaselineParams(0.025, 0.113, 0.501))
        assert normalization_check(p) == pytest.approx(1.0, abs=1e-8)
