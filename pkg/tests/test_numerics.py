"""Kernel tests: root finding, minimization, quadrature, Lambert W."""

import math

import numpy as np
import pytest

from psystem.errors import AccuracyError, BracketError, DomainError
from psystem.numerics import (
    Bracket,
    RootResult,
    find_root,
    integrate,
    lambert_w0,
    minimize_scalar,
)


class TestBracket:
    def test_sign_change_required(self):
        with pytest.raises(BracketError):
            Bracket(0.0, 1.0, 1.0, 2.0)

    def test_order_required(self):
        with pytest.raises(BracketError):
            Bracket(1.0, 0.0, -1.0, 1.0)

    def test_nonfinite_endpoint(self):
        with pytest.raises(DomainError):
            Bracket(0.0, 1.0, math.nan, 1.0)

    def test_from_interval(self):
        br = Bracket.from_interval(lambda x: x - 0.5, 0.0, 1.0)
        assert br.f_lo == -0.5 and br.f_hi == 0.5


class TestFindRoot:
    def test_sqrt_two(self):
        res = find_root(lambda x: x * x - 2.0, Bracket.from_interval(lambda x: x * x - 2.0, 1.0, 2.0))
        assert res.converged
        assert res.root == pytest.approx(math.sqrt(2.0), abs=1e-13)

    def test_converged_implies_small_residual(self):
        # steep function: converged flag must track |f(root)| <= tol_f
        f = lambda x: 1e8 * (x - 0.123456789)
        res = find_root(f, Bracket.from_interval(f, 0.0, 1.0), tol_f=1e-12)
        assert res.converged == (abs(res.residual) <= 1e-12)
        assert abs(f(res.root)) == abs(res.residual)

    def test_root_at_endpoint(self):
        res = find_root(lambda x: x, Bracket(0.0, 1.0, 0.0, 1.0))
        assert res.root == 0.0 and res.iterations == 0 and res.converged

    def test_result_fields(self):
        res = find_root(lambda x: math.cos(x), Bracket.from_interval(math.cos, 1.0, 2.0))
        assert isinstance(res, RootResult)
        assert res.iterations > 0
        assert res.root == pytest.approx(math.pi / 2.0, abs=1e-12)

    def test_cubic_with_inflection(self):
        f = lambda x: x ** 3 - 2.0 * x - 5.0
        res = find_root(f, Bracket.from_interval(f, 2.0, 3.0))
        assert abs(f(res.root)) <= 1e-11


class TestMinimizeScalar:
    def test_quadratic(self):
        x, fx = minimize_scalar(lambda x: (x - 1.0) ** 2 + 3.0, -2.0, 4.0)
        # positional accuracy of comparison-based minimization is limited to
        # ~sqrt(eps * f / f'') near a smooth minimum, here ~2.6e-8
        assert x == pytest.approx(1.0, abs=1e-7)
        assert fx == pytest.approx(3.0, abs=1e-13)

    def test_nonsmooth_vee(self):
        x, _ = minimize_scalar(lambda x: abs(x - 0.3), 0.0, 1.0)
        assert x == pytest.approx(0.3, abs=1e-8)

    def test_grid_guards_multimodal(self):
        # global minimum in a narrow well; a pure local method could miss it
        f = lambda x: math.sin(8.0 * x) + 0.1 * x
        x, fx = minimize_scalar(f, 0.0, 3.0, grid_points=512)
        xs = np.linspace(0.0, 3.0, 20001)
        assert fx <= min(f(x) for x in xs) + 1e-6

    def test_bad_interval(self):
        with pytest.raises(DomainError):
            minimize_scalar(lambda x: x, 1.0, 1.0)


class TestIntegrate:
    def test_polynomial_exact(self):
        assert integrate(lambda x: x, 0.0, 1.0) == pytest.approx(0.5, abs=1e-14)
        assert integrate(lambda x: x ** 5, -1.0, 2.0, tol=1e-12) == pytest.approx(63.0 / 6.0, rel=1e-12)

    def test_orientation(self):
        assert integrate(lambda x: x * x, 1.0, 0.0) == pytest.approx(-1.0 / 3.0, abs=1e-12)
        assert integrate(lambda x: x, 2.0, 2.0) == 0.0

    def test_exponential(self):
        val = integrate(math.exp, 0.0, 1.0, tol=1e-12)
        assert val == pytest.approx(math.e - 1.0, abs=1e-11)

    def test_integrable_endpoint_singularity(self):
        # sqrt has unbounded derivative at 0; adaptivity must absorb it
        val = integrate(math.sqrt, 0.0, 1.0, tol=1e-10)
        assert val == pytest.approx(2.0 / 3.0, abs=1e-9)

    def test_divergent_raises_accuracy_error(self):
        with pytest.raises(AccuracyError) as exc:
            integrate(lambda x: 1.0 / x, 1e-300, 1.0, tol=1e-10)
        assert math.isfinite(exc.value.best_estimate)

    def test_nonfinite_integrand(self):
        with pytest.raises(DomainError):
            integrate(lambda x: math.nan, 0.0, 1.0)


class TestLambertW:
    def test_fixed_points(self):
        assert lambert_w0(0.0) == 0.0
        assert lambert_w0(math.e) == pytest.approx(1.0, abs=1e-15)
        assert lambert_w0(2.0 * math.exp(2.0)) == pytest.approx(2.0, rel=1e-14)

    def test_branch_point(self):
        assert lambert_w0(-math.exp(-1.0)) == -1.0

    def test_round_trip_wide_range(self):
        for x in np.geomspace(1e-6, 1e12, 200):
            w = lambert_w0(float(x))
            assert w * math.exp(w) == pytest.approx(x, rel=1e-12)

    def test_round_trip_negative(self):
        for x in np.linspace(-0.36, -1e-6, 100):
            w = lambert_w0(float(x))
            assert w * math.exp(w) == pytest.approx(x, rel=1e-10)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            lambert_w0(-1.0)
        with pytest.raises(DomainError):
            lambert_w0(math.inf)
