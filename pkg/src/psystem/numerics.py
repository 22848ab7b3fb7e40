"""Scalar numerical kernels: bracketed root finding, derivative-free
minimization, adaptive quadrature and the principal branch of Lambert W.

All routines are pure functions of their inputs and are safe to call
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AccuracyError, BracketError, DomainError

__all__ = [
    "Bracket",
    "RootResult",
    "find_root",
    "minimize_scalar",
    "integrate",
    "lambert_w0",
]

DEFAULT_TOL_F = 1e-12
_MAX_QUAD_DEPTH = 60
_MAX_QUAD_INTERVALS = 100_000


@dataclass(frozen=True)
class Bracket:
    """An interval [lo, hi] on which f changes sign (or has a root at an end)."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise BracketError(f"bracket requires lo < hi, got [{self.lo}, {self.hi}]")
        if not (math.isfinite(self.f_lo) and math.isfinite(self.f_hi)):
            raise DomainError("non-finite function value at bracket endpoint")
        if self.f_lo * self.f_hi > 0.0:
            raise BracketError(
                f"no sign change on [{self.lo}, {self.hi}]: "
                f"f(lo)={self.f_lo:g}, f(hi)={self.f_hi:g}"
            )

    @classmethod
    def from_interval(cls, f: Callable[[float], float], lo: float, hi: float) -> "Bracket":
        return cls(lo, hi, f(lo), f(hi))


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    converged: bool


def _xtol(x: float, tol_x: float | None) -> float:
    if tol_x is not None:
        return tol_x
    return 1e-13 * max(1.0, abs(x))


def find_root(
    f: Callable[[float], float],
    bracket: Bracket,
    tol_x: float | None = None,
    tol_f: float = DEFAULT_TOL_F,
) -> RootResult:
    """Brent's method: inverse quadratic / secant steps with a bisection
    fallback so every iterate stays inside the initial bracket.
    """
    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    if fa == 0.0:
        return RootResult(a, 0.0, 0, True)
    if fb == 0.0:
        return RootResult(b, 0.0, 0, True)

    c, fc = a, fa
    d = e = b - a
    iterations = 0
    for _ in range(200):
        iterations += 1
        if fb * fc > 0.0:
            c, fc = a, fa
            d = e = b - a
        if abs(fc) < abs(fb):
            a, b, c = b, c, b
            fa, fb, fc = fb, fc, fb
        tol = _xtol(b, tol_x) + 2.0 * math.ulp(abs(b))
        m = 0.5 * (c - b)
        if abs(fb) <= tol_f or abs(m) <= tol:
            return RootResult(b, fb, iterations, abs(fb) <= tol_f)
        if abs(e) >= tol and abs(fa) > abs(fb):
            s = fb / fa
            if a == c:
                # secant
                p = 2.0 * m * s
                q = 1.0 - s
            else:
                # inverse quadratic interpolation
                q = fa / fc
                r = fb / fc
                p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0))
                q = (q - 1.0) * (r - 1.0) * (s - 1.0)
            if p > 0.0:
                q = -q
            p = abs(p)
            if 2.0 * p < min(3.0 * m * q - abs(tol * q), abs(e * q)):
                e, d = d, p / q
            else:
                d = e = m
        else:
            d = e = m
        a, fa = b, fb
        b += d if abs(d) > tol else math.copysign(tol, m)
        fb = f(b)
        if not math.isfinite(fb):
            raise DomainError(f"non-finite function value at x={b}")
    return RootResult(b, fb, iterations, abs(fb) <= tol_f)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def minimize_scalar(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    grid_points: int = 256,
) -> tuple[float, float]:
    """Grid scan (>= 256 points) followed by golden-section refinement.

    The scan guards against missing a global minimum on flat or multimodal
    functions; golden section then sharpens the best grid cell.
    """
    if not lo < hi:
        raise DomainError(f"minimize_scalar requires lo < hi, got [{lo}, {hi}]")
    n = max(int(grid_points), 256)
    xs = np.linspace(lo, hi, n)
    fs = np.array([f(x) for x in xs], dtype=float)
    if not np.all(np.isfinite(fs)):
        raise DomainError("non-finite function value during grid scan")
    k = int(np.argmin(fs))
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, n - 1)]

    # golden-section on [a, b]
    x1 = b - _INV_GOLDEN * (b - a)
    x2 = a + _INV_GOLDEN * (b - a)
    f1, f2 = f(x1), f(x2)
    while b - a > tol:
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_GOLDEN * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_GOLDEN * (b - a)
            f2 = f(x2)
        if not (math.isfinite(f1) and math.isfinite(f2)):
            raise DomainError("non-finite function value during golden-section step")
    x_min = 0.5 * (a + b)
    return x_min, f(x_min)


# Gauss-Kronrod 7-15 pair (nodes/weights on [-1, 1], symmetric).
_XGK = np.array([
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
])
_WGK = np.array([
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
])
_WG = np.array([
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
])


def _gk15(f, a: float, b: float) -> tuple[float, float, float]:
    """Kronrod-15 estimate on [a, b], |K15 - G7| error estimate, and the
    Kronrod estimate of the integral of |f| (used for the roundoff floor)."""
    h = 0.5 * (b - a)
    c = 0.5 * (a + b)
    fk = 0.0
    fg = 0.0
    fabs = 0.0
    for i in range(7):
        x = h * _XGK[i]
        y1 = f(c - x)
        y2 = f(c + x)
        if not (math.isfinite(y1) and math.isfinite(y2)):
            raise DomainError(f"non-finite integrand near x={c - x} or x={c + x}")
        fk += _WGK[i] * (y1 + y2)
        fabs += _WGK[i] * (abs(y1) + abs(y2))
        if i % 2 == 1:
            fg += _WG[i // 2] * (y1 + y2)
    fc = f(c)
    if not math.isfinite(fc):
        raise DomainError(f"non-finite integrand at x={c}")
    fk += _WGK[7] * fc
    fg += _WG[3] * fc
    fabs += _WGK[7] * abs(fc)
    return h * fk, abs(h * (fk - fg)), abs(h) * fabs


def integrate(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10) -> float:
    """Adaptive quadrature: nested Gauss-Kronrod pair with recursive
    bisection, absolute error target `tol`, depth cap 60.
    """
    if a == b:
        return 0.0
    sign = 1.0
    if b < a:
        a, b, sign = b, a, -1.0

    total = 0.0
    worst_exhausted = False
    intervals = 0
    eps = np.finfo(float).eps
    # explicit stack of (lo, hi, local tol, depth)
    stack = [(a, b, max(tol, 1e-300), 0)]
    while stack:
        lo, hi, loc_tol, depth = stack.pop()
        est, err, res_abs = _gk15(f, lo, hi)
        intervals += 1
        # the error estimate cannot resolve below roundoff in the samples;
        # without this floor a shrinking local tolerance forces an
        # exponentially branching subdivision tree
        floor = 50.0 * eps * res_abs
        if err <= max(loc_tol, floor) or depth >= _MAX_QUAD_DEPTH or intervals > _MAX_QUAD_INTERVALS:
            if err > max(loc_tol, floor):
                worst_exhausted = True
            total += est
            continue
        mid = 0.5 * (lo + hi)
        stack.append((lo, mid, 0.5 * loc_tol, depth + 1))
        stack.append((mid, hi, 0.5 * loc_tol, depth + 1))
    if worst_exhausted:
        raise AccuracyError(
            f"quadrature tolerance {tol:g} not reached at depth {_MAX_QUAD_DEPTH}",
            best_estimate=sign * total,
        )
    return sign * total


_NEG_INV_E = -math.exp(-1.0)


def lambert_w0(x: float) -> float:
    """Principal branch of Lambert W (inverse of w*exp(w)) for x >= -1/e.

    Halley iteration from a logarithmic (or series) initial guess; relative
    accuracy ~1e-15 away from the branch point.
    """
    if not math.isfinite(x):
        raise DomainError(f"lambert_w0 requires finite x, got {x}")
    if x < _NEG_INV_E:
        if x > _NEG_INV_E * (1.0 + 1e-14):
            return -1.0
        raise DomainError(f"lambert_w0 domain is x >= -1/e, got {x}")
    if x == 0.0:
        return 0.0
    if x == _NEG_INV_E:
        return -1.0

    if x < -0.25:
        # branch-point expansion in p = sqrt(2(e*x + 1))
        p = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0
    elif x < math.e:
        w = math.log1p(x)
    else:
        lx = math.log(x)
        w = lx - math.log(lx)

    for _ in range(60):
        ew = math.exp(w)
        wew = w * ew
        r = wew - x
        if r == 0.0:
            break
        denom = ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0)
        dw = r / denom
        w -= dw
        if abs(dw) <= 1e-16 * max(1.0, abs(w)):
            break
    return w
