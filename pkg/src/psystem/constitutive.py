"""Stress laws P(Gamma) for five 1-D elastic material models.

Each model returns the mass-scaled longitudinal stress P together with its
first two strain derivatives in closed form, the exact antiderivative
int_0^Gamma P(w) dw, and the dimensionless impact function
Q(Gamma) = rho0 * Gamma * P(Gamma) / mu used to tabulate compression shocks.

Internally the formulas use the stretch s = 1 + Gamma (valid for s > 0);
the public surface works in the strain Gamma.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import StrainDomainError, UsageError

__all__ = [
    "ModelKind",
    "ModelSpec",
    "StrainPoint",
    "StressEval",
    "stress",
    "stress_arrays",
    "stress_antiderivative",
    "q_value",
]


class ModelKind(str, Enum):
    STVK = "stvk"
    KIRCHHOFF_MODIFIED = "kirchhoff_modified"
    OGDEN = "ogden"
    BLATZ_KO = "blatz_ko"
    LINEAR = "linear"


@dataclass(frozen=True)
class ModelSpec:
    """Material identity plus parameters (rho0, mu, lam, f).

    alpha = lam/mu and beta = lam/(2 mu) are always derived, never stored.
    """

    kind: ModelKind
    rho0: float = 1.0
    mu: float = 1.0
    lam: float = 1.0
    f: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", ModelKind(self.kind))
        if not (self.rho0 > 0 and self.mu > 0 and self.lam > 0):
            raise UsageError("rho0, mu and lam must all be positive")
        if self.kind is ModelKind.BLATZ_KO:
            if self.f is None or not (0.0 < self.f < 1.0):
                raise UsageError("Blatz-Ko model requires mixing fraction f in (0, 1)")
        elif self.f is not None:
            raise UsageError(f"parameter f is only meaningful for the Blatz-Ko model, not {self.kind.value}")

    @property
    def alpha(self) -> float:
        return self.lam / self.mu

    @property
    def beta(self) -> float:
        return self.lam / (2.0 * self.mu)

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "rho0": self.rho0,
            "mu": self.mu,
            "lambda": self.lam,
            "f": self.f,
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> "ModelSpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise UsageError("model spec must be a JSON object")
        known = {"kind", "rho0", "mu", "lambda", "f"}
        unknown = set(obj) - known
        if unknown:
            raise UsageError(f"unknown model field(s): {sorted(unknown)}")
        if "kind" not in obj:
            raise UsageError("model spec is missing the field 'kind'")
        try:
            kind = ModelKind(obj["kind"])
        except ValueError:
            raise UsageError(
                f"unknown model kind {obj['kind']!r}; expected one of "
                f"{[k.value for k in ModelKind]}"
            ) from None
        return cls(
            kind=kind,
            rho0=float(obj.get("rho0", 1.0)),
            mu=float(obj.get("mu", 1.0)),
            lam=float(obj.get("lambda", 1.0)),
            f=None if obj.get("f") is None else float(obj["f"]),
        )


@dataclass(frozen=True)
class StrainPoint:
    """A strain value Gamma > -1 with its stretch s = 1 + Gamma."""

    gamma: float

    def __post_init__(self):
        if not self.gamma > -1.0:
            raise StrainDomainError(f"strain must exceed -1, got {self.gamma}")

    @property
    def s(self) -> float:
        return self.gamma + 1.0


@dataclass(frozen=True)
class StressEval:
    p: float
    dp: float
    d2p: float


def _check_gamma(gamma: float) -> float:
    if not gamma > -1.0:
        raise StrainDomainError(f"strain must exceed -1, got {gamma}")
    return gamma + 1.0


def stress(model: ModelSpec, pt: StrainPoint | float) -> StressEval:
    """P, P' and P'' at a strain point, all from closed-form derivatives."""
    gamma = pt.gamma if isinstance(pt, StrainPoint) else float(pt)
    s = _check_gamma(gamma)
    rho0, mu, lam = model.rho0, model.mu, model.lam
    kind = model.kind

    if kind is ModelKind.LINEAR:
        k = (lam + 2.0 * mu) / rho0
        return StressEval(k * gamma, k, 0.0)

    if kind is ModelKind.STVK:
        k = (lam + 2.0 * mu) / (2.0 * rho0)
        p = k * (1.0 + gamma) * (2.0 + gamma) * gamma
        dp = k * (3.0 * gamma * gamma + 6.0 * gamma + 2.0)
        d2p = k * (6.0 * gamma + 6.0)
        return StressEval(p, dp, d2p)

    if kind is ModelKind.KIRCHHOFF_MODIFIED:
        ln_s = math.log(s)
        p = (mu * (s ** 3 - s) + lam * ln_s / s) / rho0
        dp = (mu * (3.0 * s * s - 1.0) + lam * (1.0 - ln_s) / (s * s)) / rho0
        d2p = (6.0 * mu * s + lam * (2.0 * ln_s - 3.0) / s ** 3) / rho0
        return StressEval(p, dp, d2p)

    if kind is ModelKind.OGDEN:
        p = (lam * gamma + mu * (s - 1.0 / s)) / rho0
        dp = (lam + mu * (1.0 + 1.0 / (s * s))) / rho0
        d2p = -2.0 * mu / (rho0 * s ** 3)
        return StressEval(p, dp, d2p)

    # Blatz-Ko-Ogden
    b = model.beta
    f = model.f
    e1 = 2.0 * b + 1.0  # exponent of the compressive power term
    p = (mu / rho0) * (f * (s - s ** (-e1)) + (1.0 - f) * (s ** (2.0 * b - 1.0) - s ** -3.0))
    dp = (mu / rho0) * (
        f * (1.0 + e1 * s ** (-e1 - 1.0))
        + (1.0 - f) * ((2.0 * b - 1.0) * s ** (2.0 * b - 2.0) + 3.0 * s ** -4.0)
    )
    d2p = (mu / rho0) * (
        -f * e1 * (e1 + 1.0) * s ** (-e1 - 2.0)
        + (1.0 - f) * ((2.0 * b - 1.0) * (2.0 * b - 2.0) * s ** (2.0 * b - 3.0) - 12.0 * s ** -5.0)
    )
    return StressEval(p, dp, d2p)


def stress_antiderivative(model: ModelSpec, gamma: float) -> float:
    """Exact closed form of int_0^Gamma P(w) dw; vanishes at Gamma = 0."""
    s = _check_gamma(gamma)
    rho0, mu, lam = model.rho0, model.mu, model.lam
    kind = model.kind

    if kind is ModelKind.LINEAR:
        return (lam + 2.0 * mu) / rho0 * gamma * gamma / 2.0

    if kind is ModelKind.STVK:
        k = (lam + 2.0 * mu) / (2.0 * rho0)
        return k * (gamma ** 4 / 4.0 + gamma ** 3 + gamma ** 2)

    if kind is ModelKind.KIRCHHOFF_MODIFIED:
        ln_s = math.log(s)
        return (mu * ((s ** 4 - 1.0) / 4.0 - (s * s - 1.0) / 2.0) + lam * ln_s * ln_s / 2.0) / rho0

    if kind is ModelKind.OGDEN:
        return (lam * gamma * gamma / 2.0 + mu * ((s * s - 1.0) / 2.0 - math.log(s))) / rho0

    b = model.beta
    f = model.f
    return (mu / rho0) * (
        f * ((s * s - 1.0) / 2.0 + (s ** (-2.0 * b) - 1.0) / (2.0 * b))
        + (1.0 - f) * ((s ** (2.0 * b) - 1.0) / (2.0 * b) + (s ** -2.0 - 1.0) / 2.0)
    )


def stress_arrays(model: ModelSpec, gamma) -> tuple:
    """Vectorized (P, P') over a numpy array of strains; used by the
    finite-volume solver where per-cell scalar calls would dominate."""
    gamma = np.asarray(gamma, dtype=float)
    if np.any(gamma <= -1.0):
        raise StrainDomainError("strain must exceed -1 everywhere")
    s = gamma + 1.0
    rho0, mu, lam = model.rho0, model.mu, model.lam
    kind = model.kind

    if kind is ModelKind.LINEAR:
        k = (lam + 2.0 * mu) / rho0
        return k * gamma, np.full_like(gamma, k)
    if kind is ModelKind.STVK:
        k = (lam + 2.0 * mu) / (2.0 * rho0)
        return k * (1.0 + gamma) * (2.0 + gamma) * gamma, k * (3.0 * gamma * gamma + 6.0 * gamma + 2.0)
    if kind is ModelKind.KIRCHHOFF_MODIFIED:
        ln_s = np.log(s)
        p = (mu * (s ** 3 - s) + lam * ln_s / s) / rho0
        dp = (mu * (3.0 * s * s - 1.0) + lam * (1.0 - ln_s) / (s * s)) / rho0
        return p, dp
    if kind is ModelKind.OGDEN:
        p = (lam * gamma + mu * (s - 1.0 / s)) / rho0
        dp = (lam + mu * (1.0 + 1.0 / (s * s))) / rho0
        return p, dp
    b = model.beta
    f = model.f
    e1 = 2.0 * b + 1.0
    p = (mu / rho0) * (f * (s - s ** -e1) + (1.0 - f) * (s ** (2.0 * b - 1.0) - s ** -3.0))
    dp = (mu / rho0) * (
        f * (1.0 + e1 * s ** (-e1 - 1.0))
        + (1.0 - f) * ((2.0 * b - 1.0) * s ** (2.0 * b - 2.0) + 3.0 * s ** -4.0)
    )
    return p, dp


_Q_KINDS = (ModelKind.KIRCHHOFF_MODIFIED, ModelKind.OGDEN, ModelKind.BLATZ_KO)


def q_value(model: ModelSpec, gamma: float) -> float:
    """Dimensionless impact function Q(Gamma) = rho0*Gamma*P(Gamma)/mu,
    written with beta = lam/(2 mu) only.

    Solving Q(Gamma) = V0~ recovers the left strain of the compression
    shock for the dimensionless impact parameter V0~ = rho0*V0^2/mu.
    """
    if model.kind not in _Q_KINDS:
        raise UsageError(f"q_value is defined for {[k.value for k in _Q_KINDS]}, not {model.kind.value}")
    s = _check_gamma(gamma)
    b = model.beta

    if model.kind is ModelKind.KIRCHHOFF_MODIFIED:
        return gamma * (s ** 3 - s + 2.0 * b * math.log(s) / s)
    if model.kind is ModelKind.OGDEN:
        return gamma * (2.0 * b * gamma + (2.0 + gamma) * gamma / s)
    f = model.f
    return gamma * s * (
        f * (1.0 - s ** (-2.0 * b - 2.0))
        + (1.0 - f) / s ** 4 * (s ** (2.0 * b + 2.0) - 1.0)
    )
