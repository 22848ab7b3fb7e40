"""Numerical toolkit for the one-dimensional elasticity p-system."""

from .constitutive import (
    ModelKind,
    ModelSpec,
    StrainPoint,
    StressEval,
    q_value,
    stress,
    stress_antiderivative,
)
from .shock import ShockSolution, solve_rankine_hugoniot

__all__ = [
    "ModelKind",
    "ModelSpec",
    "StrainPoint",
    "StressEval",
    "stress",
    "stress_antiderivative",
    "q_value",
    "ShockSolution",
    "solve_rankine_hugoniot",
]

__version__ = "0.1.0"
