"""Compression shock construction and weak-solution verification.

The impact problem (wall at X = 0, incoming velocity -V0, zero initial
strain) admits a piecewise-constant weak solution: right state (-V0, 0),
left state (0, Gamma_l), separated by the line X = sigma*t.  Gamma_l and
sigma come from the Rankine-Hugoniot conditions

    Gamma_l * P(Gamma_l) = V0^2,        sigma = -V0 / Gamma_l.

`weak_residual` checks candidate fields against the integral identities
that define weak solutions for the four supported boundary-condition
families, using adaptive 2-D quadrature split along the shock line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .constitutive import ModelSpec, stress
from .errors import NoSolutionError, UsageError
from .numerics import Bracket, find_root, integrate

__all__ = [
    "ShockSolution",
    "BoundaryFamily",
    "BoundarySpec",
    "TestKind",
    "TestFunction",
    "solve_rankine_hugoniot",
    "evaluate",
    "shock_field",
    "weak_residual",
]

_HYP_SAMPLES = 64


@dataclass(frozen=True)
class ShockSolution:
    model: ModelSpec
    v0: float
    gamma_l: float
    sigma: float
    rh_residual: float
    warnings: tuple[str, ...] = ()

    @property
    def trivial(self) -> bool:
        return self.v0 == 0.0

    def to_json(self) -> dict:
        return {
            "v0": self.v0,
            "gamma_l": self.gamma_l,
            "sigma": self.sigma,
            "residual": self.rh_residual,
            "warnings": list(self.warnings),
        }


def _hypothesis_warnings(model: ModelSpec, v0: float) -> list[str]:
    # Lemma-style solvability hypotheses, checked numerically.
    warnings = []
    for i in range(_HYP_SAMPLES):
        g = -1.0 + (i + 0.5) / _HYP_SAMPLES
        if stress(model, g).dp <= 0.0:
            warnings.append(f"P' is not positive on (-1, 0): P'({g:.4f}) <= 0")
            break
    if stress(model, -1.0 + 1e-8).p >= -1e6 * v0 * v0:
        warnings.append("P does not blow up to -inf at Gamma = -1+: shock may not exist for large impact speeds")
    return warnings


def solve_rankine_hugoniot(model: ModelSpec, v0: float) -> ShockSolution:
    """Left strain and shock speed of the compression shock for impact
    speed v0 > 0; v0 = 0 returns the trivial rest solution."""
    if v0 < 0:
        raise UsageError(f"impact speed must be nonnegative, got {v0}")
    if v0 == 0.0:
        return ShockSolution(model, 0.0, 0.0, math.nan, 0.0, ("trivial solution: fields identically zero",))

    warnings = _hypothesis_warnings(model, v0)
    target = v0 * v0

    def h(gamma: float) -> float:
        return gamma * stress(model, gamma).p - target

    hi = -1e-12
    lo = -0.5
    f_lo = h(lo)
    while f_lo <= 0.0:
        if 1.0 + lo < 1e-12:
            raise NoSolutionError(
                f"Gamma*P(Gamma) never reaches V0^2 = {target:g} on (-1, 0); "
                "failed hypothesis: P is bounded below near Gamma = -1 "
                "(no blow-up), so no compression shock exists for this impact speed")
        lo = -1.0 + (1.0 + lo) / 10.0
        f_lo = h(lo)
    res = find_root(h, Bracket(lo, hi, f_lo, h(hi)), tol_f=1e-12 * max(1.0, target))
    gamma_l = res.root
    sigma = -v0 / gamma_l
    return ShockSolution(model, v0, gamma_l, sigma,
                         abs(gamma_l * stress(model, gamma_l).p - target),
                         tuple(warnings))


def evaluate(sol: ShockSolution, x: float, t: float) -> tuple[float, float]:
    """(V, Gamma) at a point of the quadrant; points on X = sigma*t take
    the right state by convention."""
    if x < 0 or t < 0:
        raise UsageError(f"evaluate expects X >= 0 and t >= 0, got ({x}, {t})")
    if sol.trivial:
        return 0.0, 0.0
    if x >= sol.sigma * t:
        return -sol.v0, 0.0
    return 0.0, sol.gamma_l


def shock_field(sol: ShockSolution) -> "Callable[[float, float], tuple[float, float]]":
    """Candidate field for `weak_residual`, carrying its discontinuity speed."""

    def candidate(x: float, t: float) -> tuple[float, float]:
        return evaluate(sol, x, t)

    candidate.shock_speed = None if sol.trivial else sol.sigma
    return candidate


class BoundaryFamily(Enum):
    VELOCITY_DIRICHLET = "velocity_dirichlet"   # V(0,t) = h(t)
    STRESS_DIRICHLET = "stress_dirichlet"       # P(Gamma(0,t)) = h(t)
    MIXED_A = "mixed_a"                         # P(Gamma(0,t)) + a(t) V(0,t) = c(t)
    MIXED_B = "mixed_b"                         # V(0,t) + b(t) P(Gamma(0,t)) = c(t)


# families whose constrained test function must vanish on the t-axis (X = 0)
_PHI_VANISHES = (BoundaryFamily.VELOCITY_DIRICHLET, BoundaryFamily.MIXED_B)


@dataclass(frozen=True)
class BoundarySpec:
    """Initial data (f, g) plus one boundary relation at X = 0.

    h_or_c is the boundary right-hand side (h for the Dirichlet families,
    c for the mixed ones); coeff is a(t) for MIXED_A and b(t) for MIXED_B
    and is ignored otherwise.  coeff must be C^1; pass coeff_prime for an
    exact derivative, otherwise a central difference is used.
    """

    family: BoundaryFamily
    f: Callable[[float], float]
    g: Callable[[float], float]
    h_or_c: Callable[[float], float]
    coeff: Callable[[float], float] | None = None
    coeff_prime: Callable[[float], float] | None = None

    def coeff_derivative(self, t: float) -> float:
        if self.coeff_prime is not None:
            return self.coeff_prime(t)
        dt = 1e-6
        lo = max(t - dt, 0.0)
        return (self.coeff(t + dt) - self.coeff(lo)) / (t + dt - lo)

    @staticmethod
    def impact(v0: float) -> "BoundarySpec":
        """Rigid-wall impact data: V = -v0 and Gamma = 0 at t = 0, V(0,t) = 0."""
        return BoundarySpec(
            family=BoundaryFamily.VELOCITY_DIRICHLET,
            f=lambda x: -v0,
            g=lambda x: 0.0,
            h_or_c=lambda t: 0.0,
        )


class TestKind(Enum):
    FREE_BUMP = "free_bump"
    ZERO_ON_T_AXIS = "zero_on_t_axis"       # extra factor X: vanishes at X = 0
    ZERO_ON_X_AXIS_CORNER = "zero_on_x_axis_corner"  # extra factor t: vanishes at t = 0


def _bump(u: float) -> float:
    if abs(u) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - u * u))


def _bump_prime(u: float) -> float:
    if abs(u) >= 1.0:
        return 0.0
    w = 1.0 - u * u
    return math.exp(-1.0 / w) * (-2.0 * u / (w * w))


@dataclass(frozen=True)
class TestFunction:
    """C^1 compactly supported product bump centered at (cx, ct) with the
    declared vanishing factor; derivatives are analytic."""

    kind: TestKind
    center: tuple[float, float]
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise UsageError(f"test function radius must be positive, got {self.radius}")

    def _factor(self, x: float, t: float) -> tuple[float, float, float]:
        """(m, dm/dX, dm/dt) for the axis-vanishing factor."""
        if self.kind is TestKind.ZERO_ON_T_AXIS:
            return x, 1.0, 0.0
        if self.kind is TestKind.ZERO_ON_X_AXIS_CORNER:
            return t, 0.0, 1.0
        return 1.0, 0.0, 0.0

    def value(self, x: float, t: float) -> float:
        cx, ct = self.center
        r = self.radius
        m, _, _ = self._factor(x, t)
        return m * _bump((x - cx) / r) * _bump((t - ct) / r)

    def d_x(self, x: float, t: float) -> float:
        cx, ct = self.center
        r = self.radius
        m, mx, _ = self._factor(x, t)
        bx, bt = _bump((x - cx) / r), _bump((t - ct) / r)
        return (mx * bx + m * _bump_prime((x - cx) / r) / r) * bt

    def d_t(self, x: float, t: float) -> float:
        cx, ct = self.center
        r = self.radius
        m, _, mt = self._factor(x, t)
        bx, bt = _bump((x - cx) / r), _bump((t - ct) / r)
        return (mt * bt + m * _bump_prime((t - ct) / r) / r) * bx

    def vanishes_on_t_axis(self) -> bool:
        cx, _ = self.center
        return self.kind is TestKind.ZERO_ON_T_AXIS or cx - self.radius >= 0.0

    def support(self) -> tuple[float, float, float, float]:
        cx, ct = self.center
        r = self.radius
        return max(cx - r, 0.0), cx + r, max(ct - r, 0.0), ct + r


def _integrate_2d(func, x_lo, x_hi, t_lo, t_hi, sigma, tol):
    """Tensorized adaptive quadrature over a box, splitting the inner
    t-integral (and the outer X-range) along the line X = sigma*t."""
    if x_lo >= x_hi or t_lo >= t_hi:
        return 0.0
    width = x_hi - x_lo
    inner_tol = tol / (4.0 * width)

    def inner(x: float) -> float:
        if sigma is not None:
            t_split = x / sigma
            if t_lo < t_split < t_hi:
                return (integrate(lambda t: func(x, t), t_lo, t_split, inner_tol)
                        + integrate(lambda t: func(x, t), t_split, t_hi, inner_tol))
        return integrate(lambda t: func(x, t), t_lo, t_hi, inner_tol)

    # break the outer range where the shock line enters/leaves the t-window
    cuts = [x_lo, x_hi]
    if sigma is not None:
        for xc in (sigma * t_lo, sigma * t_hi):
            if x_lo < xc < x_hi:
                cuts.append(xc)
    cuts.sort()
    return sum(integrate(inner, a, b, tol / (2.0 * len(cuts)))
               for a, b in zip(cuts[:-1], cuts[1:]))


def weak_residual(
    candidate: Callable[[float, float], tuple[float, float]],
    model: ModelSpec,
    bc: BoundarySpec,
    tests: list[TestFunction],
    quad_tol: float = 1e-10,
) -> list[tuple[float, float]]:
    """Residuals of the two weak-form integral identities of the family in
    `bc`, one pair per test function.  Each test function plays both roles:
    the axis-constrained one and the free one.

    The candidate may expose `shock_speed` (slope of a discontinuity line
    X = sigma*t); integration domains are split along it.
    """
    sigma = getattr(candidate, "shock_speed", None)

    needs_phi0 = bc.family in _PHI_VANISHES
    for tf in tests:
        if needs_phi0 and not tf.vanishes_on_t_axis():
            raise UsageError(
                f"{bc.family.value} requires test functions vanishing at X = 0; "
                f"got kind={tf.kind.value} with support touching the t-axis")
        if not needs_phi0 and not tf.vanishes_on_t_axis():
            # stress/mixed-A constrain the *second* identity's function
            raise UsageError(
                f"{bc.family.value} requires the strain-equation test function "
                f"to vanish at X = 0; got kind={tf.kind.value} touching the t-axis")

    def v_at(x, t):
        return candidate(x, t)[0]

    def gamma_at(x, t):
        return candidate(x, t)[1]

    def p_at(x, t):
        return stress(model, candidate(x, t)[1]).p

    results = []
    for tf in tests:
        x_lo, x_hi, t_lo, t_hi = tf.support()

        def area(fn):
            return _integrate_2d(fn, x_lo, x_hi, t_lo, t_hi, sigma, quad_tol)

        def x_axis(fn):
            # boundary terms at t = 0 contribute only if the support touches it
            if t_lo > 0.0:
                return 0.0
            return integrate(fn, x_lo, x_hi, quad_tol)

        def t_axis(fn):
            if x_lo > 0.0:
                return 0.0
            return integrate(fn, t_lo, t_hi, quad_tol)

        fam = bc.family
        if fam is BoundaryFamily.VELOCITY_DIRICHLET:
            r1 = (area(lambda x, t: v_at(x, t) * tf.d_t(x, t) - p_at(x, t) * tf.d_x(x, t))
                  + x_axis(lambda x: bc.f(x) * tf.value(x, 0.0)))
            r2 = (area(lambda x, t: gamma_at(x, t) * tf.d_t(x, t) - v_at(x, t) * tf.d_x(x, t))
                  - t_axis(lambda t: bc.h_or_c(t) * tf.value(0.0, t))
                  + x_axis(lambda x: bc.g(x) * tf.value(x, 0.0)))
        elif fam is BoundaryFamily.STRESS_DIRICHLET:
            r1 = (area(lambda x, t: v_at(x, t) * tf.d_t(x, t) - p_at(x, t) * tf.d_x(x, t))
                  + x_axis(lambda x: bc.f(x) * tf.value(x, 0.0))
                  - t_axis(lambda t: bc.h_or_c(t) * tf.value(0.0, t)))
            r2 = (area(lambda x, t: gamma_at(x, t) * tf.d_t(x, t) - v_at(x, t) * tf.d_x(x, t))
                  + x_axis(lambda x: bc.g(x) * tf.value(x, 0.0)))
        elif fam is BoundaryFamily.MIXED_A:
            if bc.coeff is None:
                raise UsageError("mixed_a requires the coefficient function a(t)")
            r1 = (-x_axis(lambda x: bc.f(x) * tf.value(x, 0.0))
                  - area(lambda x, t: v_at(x, t) * tf.d_t(x, t))
                  + t_axis(lambda t: bc.h_or_c(t) * tf.value(0.0, t))
                  + area(lambda x, t: p_at(x, t) * tf.d_x(x, t))
                  - x_axis(lambda x: bc.g(x) * bc.coeff(0.0) * tf.value(x, 0.0))
                  - area(lambda x, t: (bc.coeff_derivative(t) * tf.value(x, t)
                                       + bc.coeff(t) * tf.d_t(x, t)) * gamma_at(x, t))
                  + area(lambda x, t: bc.coeff(t) * tf.d_x(x, t) * v_at(x, t)))
            r2 = (-x_axis(lambda x: bc.g(x) * tf.value(x, 0.0))
                  - area(lambda x, t: gamma_at(x, t) * tf.d_t(x, t))
                  + area(lambda x, t: v_at(x, t) * tf.d_x(x, t)))
        elif fam is BoundaryFamily.MIXED_B:
            if bc.coeff is None:
                raise UsageError("mixed_b requires the coefficient function b(t)")
            r1 = (-x_axis(lambda x: bc.f(x) * tf.value(x, 0.0))
                  - area(lambda x, t: v_at(x, t) * tf.d_t(x, t))
                  + area(lambda x, t: p_at(x, t) * tf.d_x(x, t)))
            r2 = (-x_axis(lambda x: bc.g(x) * tf.value(x, 0.0))
                  - area(lambda x, t: gamma_at(x, t) * tf.d_t(x, t))
                  + t_axis(lambda t: bc.h_or_c(t) * tf.value(0.0, t))
                  + area(lambda x, t: v_at(x, t) * tf.d_x(x, t))
                  - x_axis(lambda x: bc.f(x) * bc.coeff(0.0) * tf.value(x, 0.0))
                  - area(lambda x, t: (bc.coeff_derivative(t) * tf.value(x, t)
                                       + bc.coeff(t) * tf.d_t(x, t)) * v_at(x, t))
                  + area(lambda x, t: bc.coeff(t) * tf.d_x(x, t) * p_at(x, t)))
        else:  # pragma: no cover
            raise UsageError(f"unknown boundary family {fam}")
        results.append((r1, r2))
    return results
