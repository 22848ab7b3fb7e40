"""Entropy admissibility: margins, boundaries, near-zero certificate."""

import math

import numpy as np
import pytest

from psystem.constitutive import ModelKind, ModelSpec, stress, stress_antiderivative
from psystem.entropy import (
    blatzko_entropy_experiment,
    check_condition,
    jump_excess,
    kirchhoff_entropy_boundary,
    near_zero_certificate,
    standard_pair,
)
from psystem.errors import UsageError


class TestStandardPair:
    def test_values(self):
        m = ModelSpec(ModelKind.OGDEN, lam=1.0)
        phi, psi = standard_pair(m, 0.5, -0.3)
        assert phi == pytest.approx(0.125 + stress_antiderivative(m, -0.3))
        assert psi == pytest.approx(-stress(m, -0.3).p * 0.5)


class TestJumpExcess:
    def test_zero_at_rest(self):
        assert jump_excess(ModelSpec(ModelKind.OGDEN), 0.0) == 0.0

    def test_sign_opposite_to_margin(self):
        models = [
            ModelSpec(ModelKind.OGDEN, lam=1.0),
            ModelSpec(ModelKind.STVK),
            ModelSpec(ModelKind.KIRCHHOFF_MODIFIED, lam=1.0),
        ]
        for m in models:
            for g in np.linspace(-0.7, -0.05, 9):
                g = float(g)
                e = jump_excess(m, g)
                margin = check_condition(m, g).margin
                if abs(margin) > 1e-12:
                    assert e * margin < 0

    def test_cubic_small_strain(self):
        # E(Gamma) ~ certificate * Gamma^3 / 6 near zero
        m = ModelSpec(ModelKind.OGDEN, lam=1.0)
        cert = near_zero_certificate(m)
        g = -1e-4
        assert jump_excess(m, g) == pytest.approx(cert * g ** 3 / 6.0, rel=1e-3)


class TestCheckCondition:
    def test_stvk_fails_in_compression(self):
        m = ModelSpec(ModelKind.STVK)
        rng = np.random.default_rng(23)
        for g in rng.uniform(-0.4, -1e-3, 50):
            assert not check_condition(m, float(g)).holds

    def test_ogden_always_holds(self):
        m = ModelSpec(ModelKind.OGDEN, lam=1.0)
        rng = np.random.default_rng(29)
        for g in rng.uniform(-0.999, -1e-3, 50):
            assert check_condition(m, float(g)).holds

    def test_kirchhoff_alpha3_holds_everywhere(self):
        m = ModelSpec(ModelKind.KIRCHHOFF_MODIFIED, lam=3.0, mu=1.0)
        for s in np.linspace(1e-3, 1.0, 60):
            assert check_condition(m, float(s) - 1.0).holds

    def test_kirchhoff_alpha1_boundary_separates(self):
        m = ModelSpec(ModelKind.KIRCHHOFF_MODIFIED, lam=1.0, mu=1.0)
        s_e = kirchhoff_entropy_boundary(1.0)
        assert check_condition(m, (s_e - 0.01) - 1.0).margin > 0
        assert check_condition(m, (s_e + 0.01) - 1.0).margin < 0
        # the verdict carries the boundary for this parameter range
        assert check_condition(m, -0.5).s_e == pytest.approx(s_e)

    def test_blatzko_beta2_holds(self):
        m = ModelSpec(ModelKind.BLATZ_KO, lam=4.0, f=0.3)
        rng = np.random.default_rng(31)
        for g in rng.uniform(-0.95, -1e-3, 50):
            assert check_condition(m, float(g)).holds

    def test_linear_margin_identically_zero(self):
        m = ModelSpec(ModelKind.LINEAR)
        for g in np.linspace(-0.9, 0.0, 30):
            v = check_condition(m, float(g))
            assert abs(v.margin) <= 1e-12
            assert v.holds

    def test_range_validation(self):
        with pytest.raises(UsageError):
            check_condition(ModelSpec(ModelKind.OGDEN), 0.5)
        with pytest.raises(UsageError):
            check_condition(ModelSpec(ModelKind.OGDEN), -1.0)

    def test_json(self):
        obj = check_condition(ModelSpec(ModelKind.OGDEN), -0.3).to_json()
        assert set(obj) == {"gamma_l", "margin", "holds", "s_e"}


class TestKirchhoffBoundary:
    def test_defining_equation(self):
        for alpha in (0.3, 1.0, 1.7):
            s_e = kirchhoff_entropy_boundary(alpha)
            ln_s = math.log(s_e)
            lhs = s_e * (s_e + 1.0) * (1.0 - s_e) ** 3 / (2.0 * (s_e - 1.0 - s_e * ln_s) * ln_s)
            assert lhs == pytest.approx(alpha, rel=1e-10)
            assert 0.0 < s_e < 1.0

    def test_approaches_one_as_alpha_to_two(self):
        assert kirchhoff_entropy_boundary(1.999) > 0.95

    def test_monotone_in_alpha(self):
        bs = [kirchhoff_entropy_boundary(a) for a in (0.5, 1.0, 1.5)]
        assert bs[0] < bs[1] < bs[2]

    def test_domain(self):
        with pytest.raises(UsageError):
            kirchhoff_entropy_boundary(2.0)
        with pytest.raises(UsageError):
            kirchhoff_entropy_boundary(0.0)


class TestNearZeroCertificate:
    def test_closed_form(self):
        m = ModelSpec(ModelKind.OGDEN, lam=1.0, mu=1.0)
        # P'(0) = lam + 2 mu = 3, P''(0) = -2 mu = -2
        assert near_zero_certificate(m) == pytest.approx(math.sqrt(3.0), rel=1e-14)

    def test_linear_degenerate(self):
        assert near_zero_certificate(ModelSpec(ModelKind.LINEAR)) == 0.0

    def test_sign_tracks_concavity(self):
        assert near_zero_certificate(ModelSpec(ModelKind.OGDEN, lam=1.0)) > 0
        # StVK has P'' > 0: certificate negative
        assert near_zero_certificate(ModelSpec(ModelKind.STVK)) < 0


class TestBlatzkoExperiment:
    def test_threshold_separates(self):
        beta = 3.0
        f_t = blatzko_entropy_experiment(beta, f_tol=1e-4, n_s=400)
        assert 0.0 < f_t < 1.0
        s_grid = np.linspace(1e-3, 1.0, 400)
        above = ModelSpec(ModelKind.BLATZ_KO, lam=2 * beta, f=min(f_t + 0.01, 0.999))
        assert all(check_condition(above, float(s) - 1.0).margin >= -1e-12 for s in s_grid)
        below = ModelSpec(ModelKind.BLATZ_KO, lam=2 * beta, f=max(f_t - 0.01, 1e-4))
        assert any(check_condition(below, float(s) - 1.0).margin < -1e-12 for s in s_grid)

    def test_domain(self):
        with pytest.raises(UsageError):
            blatzko_entropy_experiment(2.0)
