"""Hyperbolicity (P' > 0) and genuine-nonlinearity (P'' < 0) regions, and
the parameter thresholds that govern them for each material model.

Thresholds are computed from first principles (roots or minima of P', P'');
the published closed forms serve as cross-checks in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constitutive import ModelKind, ModelSpec, stress
from .errors import UsageError
from .numerics import Bracket, find_root, lambert_w0, minimize_scalar

__all__ = [
    "RegionReport",
    "scan_regions",
    "stvk_hyperbolic_threshold",
    "kirchhoff_alpha_bounds",
    "kirchhoff_hyperbolicity_margin",
    "kirchhoff_s_alpha",
    "blatzko_s_beta",
    "blatzko_q_hyperbolicity",
    "blatzko_f_threshold",
    "blatzko_s0",
]

_ENDPOINT_TOL = 1e-10


@dataclass(frozen=True)
class RegionReport:
    """Maximal strain intervals with P' > 0 and with P'' < 0 on a scan range."""

    model: ModelSpec
    hyperbolic_intervals: list[tuple[float, float]]
    gnl_intervals: list[tuple[float, float]]
    scan_range: tuple[float, float]
    thresholds: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "hyperbolic": [list(iv) for iv in self.hyperbolic_intervals],
            "gnl": [list(iv) for iv in self.gnl_intervals],
            "thresholds": dict(self.thresholds),
        }


def _scan_grid(gamma_lo: float, gamma_hi: float, n: int) -> np.ndarray:
    # geometric spacing in s = 1 + Gamma resolves the blow-up near Gamma = -1;
    # a uniform component keeps resolution away from the wall.
    s_lo, s_hi = gamma_lo + 1.0, gamma_hi + 1.0
    geo = np.geomspace(s_lo, s_hi, n // 2) - 1.0
    lin = np.linspace(gamma_lo, gamma_hi, n // 2)
    grid = np.unique(np.concatenate([geo, lin]))
    grid[0], grid[-1] = gamma_lo, gamma_hi
    return grid


def _sign_intervals(grid, values, deriv, gamma_lo, gamma_hi, want_positive):
    """Maximal intervals where `values` has the requested sign, with
    endpoints polished to roots of `deriv`."""

    good = values > 0.0 if want_positive else values < 0.0
    intervals = []
    i = 0
    n = len(grid)
    while i < n:
        if not good[i]:
            i += 1
            continue
        j = i
        while j + 1 < n and good[j + 1]:
            j += 1
        lo = grid[i] if i == 0 else _polish(deriv, grid[i - 1], grid[i])
        hi = grid[j] if j == n - 1 else _polish(deriv, grid[j], grid[j + 1])
        if i == 0:
            lo = gamma_lo
        if j == n - 1:
            hi = gamma_hi
        intervals.append((lo, hi))
        i = j + 1
    return intervals


def _polish(deriv, a, b):
    fa, fb = deriv(a), deriv(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0.0:
        # grid straddled a sign change that vanished under refinement; keep midpoint
        return 0.5 * (a + b)
    res = find_root(deriv, Bracket(a, b, fa, fb), tol_x=1e-14, tol_f=_ENDPOINT_TOL * 1e-2)
    return res.root


def _model_thresholds(model: ModelSpec) -> dict[str, float]:
    notes: dict[str, float] = {}
    if model.kind is ModelKind.STVK:
        notes["hyperbolic_onset"] = stvk_hyperbolic_threshold()
    elif model.kind is ModelKind.KIRCHHOFF_MODIFIED:
        a1, a2 = kirchhoff_alpha_bounds()
        notes["alpha"] = model.alpha
        notes["alpha_lower"] = a1
        notes["alpha_upper"] = a2
        notes["gnl_boundary_s"] = kirchhoff_s_alpha(model.alpha)
    elif model.kind is ModelKind.BLATZ_KO:
        beta = model.beta
        notes["beta"] = beta
        if beta < 0.5:
            notes["s_beta"] = blatzko_s_beta(beta)
            notes["f_threshold"] = blatzko_f_threshold(beta)
        if beta < 0.5 or beta > 1.0:
            notes["s0"] = blatzko_s0(beta)
    return notes


def scan_regions(model: ModelSpec, gamma_lo: float = -1.0 + 1e-6, gamma_hi: float = 10.0,
                 n: int = 4096) -> RegionReport:
    """Dense sign scan of P' and P'' with root-polished interval endpoints."""
    if not (-1.0 < gamma_lo < gamma_hi):
        raise UsageError(f"scan range requires -1 < lo < hi, got ({gamma_lo}, {gamma_hi})")
    n = max(n, 4096)
    grid = _scan_grid(gamma_lo, gamma_hi, n)
    evals = [stress(model, g) for g in grid]
    dp = np.array([e.dp for e in evals])
    d2p = np.array([e.d2p for e in evals])

    hyperbolic = _sign_intervals(
        grid, dp, lambda g: stress(model, g).dp, gamma_lo, gamma_hi, want_positive=True)
    gnl = _sign_intervals(
        grid, d2p, lambda g: stress(model, g).d2p, gamma_lo, gamma_hi, want_positive=False)

    return RegionReport(model, hyperbolic, gnl, (gamma_lo, gamma_hi), _model_thresholds(model))


def stvk_hyperbolic_threshold() -> float:
    """Strain above which the St.Venant-Kirchhoff model is hyperbolic:
    the larger root of 3*Gamma^2 + 6*Gamma + 2."""
    return -1.0 + 1.0 / math.sqrt(3.0)


def kirchhoff_hyperbolicity_margin(alpha: float) -> float:
    """min over s > 0 of rho0 * P'(s) for the Modified Kirchhoff model with
    mu = 1, lam = alpha; positive iff hyperbolic for all Gamma > -1.

    The minimizer of P' is the stationary point of P', i.e. the root of
    P'' given in closed form by `kirchhoff_s_alpha`.
    """
    if alpha <= 0:
        raise UsageError(f"alpha must be positive, got {alpha}")
    s = kirchhoff_s_alpha(alpha)
    return 3.0 * s * s - 1.0 + alpha * (1.0 - math.log(s)) / (s * s)


def kirchhoff_alpha_bounds() -> tuple[float, float]:
    """The two positive alpha = lam/mu values between which the Modified
    Kirchhoff model is hyperbolic for every Gamma > -1; roots of the
    hyperbolicity margin."""
    r1 = find_root(kirchhoff_hyperbolicity_margin,
                   Bracket.from_interval(kirchhoff_hyperbolicity_margin, 1e-4, 1.0),
                   tol_x=1e-14)
    r2 = find_root(kirchhoff_hyperbolicity_margin,
                   Bracket.from_interval(kirchhoff_hyperbolicity_margin, 1.0, 1e5),
                   tol_x=1e-8)
    return r1.root, r2.root


def kirchhoff_s_alpha(alpha: float) -> float:
    """The unique stretch S where the Modified Kirchhoff P'' changes sign
    (P'' < 0 on (0, S)): the root of 6 s^4 + alpha (2 ln s - 3) = 0,
    in closed form S = [(alpha/12) W0(12 e^6 / alpha)]^(1/4)."""
    if alpha <= 0:
        raise UsageError(f"alpha must be positive, got {alpha}")
    return ((alpha / 12.0) * lambert_w0(12.0 * math.exp(6.0) / alpha)) ** 0.25


def blatzko_s_beta(beta: float) -> float:
    """Stretch where the Blatz-Ko hyperbolicity ratio Q(s, beta) vanishes:
    (3 / (1 - 2 beta))^(1 / (2 beta + 2)), defined for 0 < beta < 1/2."""
    if not 0.0 < beta < 0.5:
        raise UsageError(f"blatzko_s_beta requires beta in (0, 1/2), got {beta}")
    return (3.0 / (1.0 - 2.0 * beta)) ** (1.0 / (2.0 * beta + 2.0))


def blatzko_q_hyperbolicity(s: float, beta: float) -> float:
    """Ratio Q(s, beta) whose supremum over s > s_beta is the smallest
    admissible mixing fraction: P' > 0 at stretch s iff f > Q(s, beta)."""
    if s <= 0:
        raise UsageError(f"stretch must be positive, got {s}")
    e = 2.0 * beta + 2.0
    num = s ** (2.0 * beta) * ((1.0 - 2.0 * beta) * s ** e - 3.0)
    den = s * s * ((1.0 + 2.0 * beta) + s ** e) + num
    return num / den


def blatzko_f_threshold(beta: float) -> float:
    """f_beta = max over s > s_beta of Q(s, beta): for 0 < beta < 1/2 the
    Blatz-Ko model is hyperbolic for all Gamma > -1 iff f > f_beta."""
    if not 0.0 < beta < 0.5:
        raise UsageError(
            "f threshold applies only to beta in (0, 1/2); "
            "for beta >= 1/2 the model is hyperbolic for every f in (0, 1)")
    s_b = blatzko_s_beta(beta)
    # widen the search window until Q has clearly started decaying
    s_max = 2.0 * s_b
    decays = 0
    while decays < 3:
        s_max *= 2.0
        if blatzko_q_hyperbolicity(s_max, beta) < blatzko_q_hyperbolicity(s_max / 2.0, beta):
            decays += 1
        else:
            decays = 0
    x, neg_q = minimize_scalar(lambda s: -blatzko_q_hyperbolicity(s, beta),
                               s_b, s_max, tol=1e-12, grid_points=4096)
    return -neg_q


def blatzko_s0(beta: float) -> float:
    """Stretch below which Blatz-Ko P'' < 0 is guaranteed when
    beta in (0, 1/2) or beta > 1: [6 / ((2 beta - 1)(beta - 1))]^(1/(2 beta + 2))."""
    if not (0.0 < beta < 0.5 or beta > 1.0):
        raise UsageError(
            "s0 applies to beta in (0, 1/2) or beta > 1; "
            "for beta in [1/2, 1] P'' < 0 holds for all s > 0")
    return (6.0 / ((2.0 * beta - 1.0) * (beta - 1.0))) ** (1.0 / (2.0 * beta + 2.0))
