"""Entropy admissibility of the compression shock.

Uses the separable entropy/entropy-flux pair

    Phi(V, Gamma) = V^2/2 + int_0^Gamma P(w) dw,     Psi(V, Gamma) = -P(Gamma) V.

For the shock with left strain Gamma_l the jump inequality reduces to

    2 * int_0^{Gamma_l} P(w) dw  <=  Gamma_l * P(Gamma_l),

whose slack is reported as `margin` (nonnegative margin = admissible).
"""

from __future__ import annotations

import math
import warnings as _warnings
from dataclasses import dataclass

import numpy as np

from .constitutive import ModelKind, ModelSpec, stress, stress_antiderivative
from .errors import DomainError, UsageError
from .numerics import Bracket, find_root

__all__ = [
    "EntropyVerdict",
    "standard_pair",
    "jump_excess",
    "check_condition",
    "kirchhoff_entropy_boundary",
    "near_zero_certificate",
    "blatzko_entropy_experiment",
]

_MARGIN_SLACK = 1e-12


@dataclass(frozen=True)
class EntropyVerdict:
    model: ModelSpec
    gamma_l: float
    margin: float
    holds: bool
    s_e: float | None = None

    def to_json(self) -> dict:
        return {
            "gamma_l": self.gamma_l,
            "margin": self.margin,
            "holds": self.holds,
            "s_e": self.s_e,
        }


def standard_pair(model: ModelSpec, v: float, gamma: float) -> tuple[float, float]:
    """The separable entropy/entropy-flux pair (Phi, Psi) at (V, Gamma)."""
    phi = v * v / 2.0 + stress_antiderivative(model, gamma)
    psi = -stress(model, gamma).p * v
    return phi, psi


def jump_excess(model: ModelSpec, gamma_l: float) -> float:
    """E(Gamma_l): the amount by which the entropy jump inequality fails.

    E <= 0 iff the shock with left strain Gamma_l is admissible for the
    standard pair; E and the `check_condition` margin encode the same
    inequality with opposite signs.
    """
    if gamma_l == 0.0:
        return 0.0
    gp = gamma_l * stress(model, gamma_l).p
    if gp < 0.0:
        raise DomainError(
            f"Gamma*P(Gamma) = {gp:g} < 0 at Gamma = {gamma_l}: no shock with this left state")
    eps = -math.sqrt(gp)
    return (eps / gamma_l) * (stress_antiderivative(model, gamma_l) - gp / 2.0)


def check_condition(model: ModelSpec, gamma_l: float) -> EntropyVerdict:
    """Verdict of the standard entropy inequality for the shock S(Gamma_l)."""
    if not (-1.0 < gamma_l <= 0.0):
        raise UsageError(f"gamma_l must lie in (-1, 0], got {gamma_l}")
    margin = gamma_l * stress(model, gamma_l).p - 2.0 * stress_antiderivative(model, gamma_l)
    s_e = None
    if model.kind is ModelKind.KIRCHHOFF_MODIFIED and 0.0 < model.alpha < 2.0:
        s_e = kirchhoff_entropy_boundary(model.alpha)
    return EntropyVerdict(model, gamma_l, margin, margin >= -_MARGIN_SLACK, s_e)


def _boundary_lhs(s: float) -> float:
    """Left side of the Modified Kirchhoff entropy-boundary equation,
    s(s+1)(1-s)^3 / (2 (s - 1 - s ln s) ln s), smooth on (0, 1)."""
    ln_s = math.log(s)
    return s * (s + 1.0) * (1.0 - s) ** 3 / (2.0 * (s - 1.0 - s * ln_s) * ln_s)


def kirchhoff_entropy_boundary(alpha: float) -> float:
    """Stretch s_e in (0, 1) separating admissible (s <= s_e) from
    inadmissible (s > s_e) shocks for Modified Kirchhoff with 0 < alpha < 2.

    For alpha >= 2 the inequality holds on all of (0, 1)."""
    if alpha <= 0.0:
        raise UsageError(f"alpha must be positive, got {alpha}")
    if alpha >= 2.0:
        raise UsageError(
            f"for alpha = {alpha} >= 2 the entropy condition holds for every s in (0, 1); "
            "no boundary exists")
    lo, hi = 1e-6, 1.0 - 1e-4
    grid = np.linspace(lo, hi, 2048)
    vals = np.array([_boundary_lhs(s) - alpha for s in grid])
    sign_changes = [i for i in range(len(grid) - 1) if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0]
    if not sign_changes:
        raise DomainError(f"no entropy boundary found in (0, 1) for alpha = {alpha}")
    if len(sign_changes) > 1:
        roots = []
        for i in sign_changes:
            res = find_root(lambda s: _boundary_lhs(s) - alpha,
                            Bracket(grid[i], grid[i + 1], vals[i], vals[i + 1]))
            roots.append(res.root)
        _warnings.warn(
            f"multiple entropy-boundary candidates for alpha = {alpha}: {roots}; returning the smallest",
            RuntimeWarning, stacklevel=2)
        return min(roots)
    i = sign_changes[0]
    res = find_root(lambda s: _boundary_lhs(s) - alpha,
                    Bracket(grid[i], grid[i + 1], vals[i], vals[i + 1]), tol_x=1e-14)
    return res.root


def near_zero_certificate(model: ModelSpec) -> float:
    """Limit of the third strain derivative of `jump_excess` at Gamma -> 0-,
    which for the standard pair equals -P''(0) * sqrt(P'(0)) / 2.

    A positive value certifies that the shock is admissible at small impact
    speeds; zero is degenerate (linear model)."""
    ev = stress(model, 0.0)
    if ev.dp <= 0.0:
        raise DomainError(f"model is not hyperbolic at rest: P'(0) = {ev.dp:g}")
    return -0.5 * ev.d2p * math.sqrt(ev.dp)


def blatzko_entropy_experiment(
    beta: float,
    f_tol: float = 1e-6,
    n_s: int = 2000,
) -> float:
    """Numeric search (experimental, mirroring plot experimentation) for the
    smallest mixing fraction f such that the Blatz-Ko shock satisfies the
    standard entropy inequality for every s in (0, 1]; meaningful for
    beta > 5/2.  Bisection on f against the minimum margin over an s-grid.
    """
    if beta <= 2.5:
        raise UsageError(
            f"for beta = {beta} <= 5/2 the condition holds for every f in (0, 1); "
            "the experimental threshold applies to beta > 5/2")

    s_grid = np.linspace(1e-3, 1.0, n_s)

    def admissible_everywhere(f: float) -> bool:
        model = ModelSpec(ModelKind.BLATZ_KO, lam=2.0 * beta, f=f)
        for s in s_grid:
            if check_condition(model, s - 1.0).margin < -_MARGIN_SLACK:
                return False
        return True

    lo, hi = 1e-6, 1.0 - 1e-6
    if admissible_everywhere(lo):
        return lo
    if not admissible_everywhere(hi):
        raise DomainError(f"no admissible mixing fraction found for beta = {beta}")
    while hi - lo > f_tol:
        mid = 0.5 * (lo + hi)
        if admissible_everywhere(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
