"""First-order finite-volume solver for the p-system on the half-line.

Conservative update with a local Lax-Friedrichs flux for
F(V, Gamma) = (-P(Gamma), -V); the wall at X = 0 is a reflection ghost
(V antisymmetric, Gamma symmetric), the right edge is outflow.  The solver
is deliberately first order: shocks smear, but shock speed and the
post-shock plateau converge, which is all the cross-validation needs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constitutive import ModelSpec, stress_arrays
from .errors import NoSolutionError, UsageError
from .shock import ShockSolution

__all__ = ["SimConfig", "SimField", "simulate", "extract_shock"]


@dataclass(frozen=True)
class SimConfig:
    model: ModelSpec
    v0: float
    domain_length: float = 1.0
    cells: int = 2000
    cfl: float = 0.9
    t_end: float = 0.25

    def __post_init__(self):
        if self.cells < 16:
            raise UsageError(f"need at least 16 cells, got {self.cells}")
        if not 0.0 < self.cfl <= 0.9:
            raise UsageError(f"cfl must lie in (0, 0.9], got {self.cfl}")
        if self.domain_length <= 0 or self.t_end < 0:
            raise UsageError("domain_length must be positive and t_end nonnegative")
        if self.v0 < 0:
            raise UsageError(f"impact speed must be nonnegative, got {self.v0}")


@dataclass
class SimField:
    """Cell-centered (V, Gamma) snapshot plus conservation bookkeeping."""

    x_centers: np.ndarray
    v: np.ndarray
    gamma: np.ndarray
    t: float
    # accumulated boundary-flux integrals, for the discrete conservation identity
    boundary_flux_v: float = 0.0
    boundary_flux_gamma: float = 0.0
    initial_sum_v: float = 0.0
    initial_sum_gamma: float = 0.0

    def conservation_error(self) -> tuple[float, float]:
        """Relative defect of sum(u)*dx = initial + inflow - outflow, per field."""
        dx = self.x_centers[1] - self.x_centers[0]
        ev = (self.v.sum() - self.initial_sum_v) * dx - self.boundary_flux_v
        eg = (self.gamma.sum() - self.initial_sum_gamma) * dx - self.boundary_flux_gamma
        scale_v = max(1.0, abs(self.v.sum() * dx))
        scale_g = max(1.0, abs(self.gamma.sum() * dx))
        return abs(ev) / scale_v, abs(eg) / scale_g

    def to_csv(self) -> str:
        lines = ["x,V,Gamma"]
        for x, v, g in zip(self.x_centers, self.v, self.gamma):
            lines.append(f"{x:.10g},{v:.10g},{g:.10g}")
        return "\n".join(lines) + "\n"


def simulate(cfg: SimConfig) -> SimField:
    """Run the impact problem to t_end and return the final snapshot."""
    n = cfg.cells
    dx = cfg.domain_length / n
    x = (np.arange(n) + 0.5) * dx

    v = np.full(n, -cfg.v0)
    gamma = np.zeros(n)
    field = SimField(x, v, gamma, 0.0,
                     initial_sum_v=float(v.sum()), initial_sum_gamma=float(gamma.sum()))

    t = 0.0
    while t < cfg.t_end:
        if np.any(gamma <= -1.0):
            raise NoSolutionError("interpenetration: Gamma reached -1 during simulation")
        # ghost cells: reflecting wall on the left, outflow on the right
        v_ext = np.concatenate(([-v[0]], v, [v[-1]]))
        g_ext = np.concatenate(([gamma[0]], gamma, [gamma[-1]]))

        p_ext, dp_ext = stress_arrays(cfg.model, g_ext)
        if np.any(dp_ext <= 0.0):
            bad = int(np.argmax(dp_ext <= 0.0))
            raise NoSolutionError(
                f"hyperbolicity lost during simulation: "
                f"P'({g_ext[bad]:.6g}) = {dp_ext[bad]:.3g} <= 0")
        c_ext = np.sqrt(dp_ext)
        a_iface = np.maximum(c_ext[:-1], c_ext[1:])

        dt = cfg.cfl * dx / a_iface.max()
        if t + dt > cfg.t_end:
            dt = cfg.t_end - t

        # F(u) = (-P(Gamma), -V)
        f_v = -p_ext
        f_g = -v_ext

        flux_v = 0.5 * (f_v[:-1] + f_v[1:]) - 0.5 * a_iface * (v_ext[1:] - v_ext[:-1])
        flux_g = 0.5 * (f_g[:-1] + f_g[1:]) - 0.5 * a_iface * (g_ext[1:] - g_ext[:-1])

        v = v - dt / dx * (flux_v[1:] - flux_v[:-1])
        gamma = gamma - dt / dx * (flux_g[1:] - flux_g[:-1])

        field.boundary_flux_v += dt * (flux_v[0] - flux_v[-1])
        field.boundary_flux_gamma += dt * (flux_g[0] - flux_g[-1])
        t += dt

    field.v = v
    field.gamma = gamma
    field.t = t
    return field


def extract_shock(field: SimField, sol_hint: ShockSolution) -> tuple[float, float]:
    """Estimate shock speed and post-shock strain from a snapshot.

    The front position is where Gamma crosses half the hinted left strain
    (linear interpolation); the plateau strain is averaged over the left
    half of the post-shock region to stay clear of both the wall start-up
    transient and the smeared front.
    """
    if field.t <= 0.0:
        raise UsageError("cannot extract a shock from the initial snapshot")
    half = 0.5 * sol_hint.gamma_l
    g = field.gamma
    x = field.x_centers
    # Gamma decreases from ~gamma_l (left) to ~0 (right); find the crossing of `half`
    below = g <= half if sol_hint.gamma_l < 0 else g >= half
    idx = np.nonzero(below[:-1] & ~below[1:])[0]
    if len(idx) == 0:
        raise NoSolutionError("no shock front found: Gamma never crosses the hinted midpoint")
    i = int(idx[-1])
    g0, g1 = g[i], g[i + 1]
    frac = (half - g0) / (g1 - g0) if g1 != g0 else 0.5
    position = x[i] + frac * (x[i + 1] - x[i])
    sigma_est = position / field.t

    plateau = g[x < 0.5 * position]
    if len(plateau) == 0:
        raise NoSolutionError("post-shock plateau region is empty")
    gamma_left_est = float(plateau.mean())
    return sigma_est, gamma_left_est
