"""Power-law fits of run time against ``N`` and ``d``.

Supported model forms (``y`` is wall time):

    "N*d^p"   y = c * N * d**p
    "N^p"     y = c * N**p
    "d^p"     y = c * d**p
    "N"       y = c * N          (no exponent)

The exponent comes from least squares in log space, the coefficient from
linear least squares with the exponent fixed, and
``r_square = 1 - sum((y - yhat)**2) / sum((y - mean(y))**2)`` on the
original scale.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import Degenerate

__all__ = ["FitResult", "fit_power_law", "fit_arrays", "MODELS"]

MODELS = ("N*d^p", "N^p", "d^p", "N")


@dataclass(frozen=True)
class FitResult:
    model: str
    coefficient: float
    exponent: float
    r_square: float
    n: int

    def formula(self):
        p = f"{self.exponent:.4g}"
        return {
            "N*d^p": f"{self.coefficient:.4g} * N * d^{p}",
            "N^p": f"{self.coefficient:.4g} * N^{p}",
            "d^p": f"{self.coefficient:.4g} * d^{p}",
            "N": f"{self.coefficient:.4g} * N",
        }[self.model]


def fit_arrays(model, y, N=None, d=None):
    """Fit ``model`` to times ``y`` with abscissae ``N`` and/or ``d``."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {MODELS}")
    y = np.asarray(y, dtype=float)
    if len(y) < 3:
        raise ValueError("at least 3 points are needed")
    if np.any(y <= 0):
        raise ValueError("times must be positive")
    N = None if N is None else np.asarray(N, dtype=float)
    d = None if d is None else np.asarray(d, dtype=float)
    if model == "N":
        base = lambda p: N
        x = N
    elif model == "N^p":
        base = lambda p: N ** p
        x, target = N, y
    elif model == "d^p":
        base = lambda p: d ** p
        x, target = d, y
    else:
        base = lambda p: N * d ** p
        x, target = d, y / N
    if x is None:
        raise ValueError(f"model {model!r} needs its abscissa")
    if np.all(x == x[0]):
        raise Degenerate("all abscissae are identical")
    if model == "N":
        p = 1.0
    else:
        p = float(np.polyfit(np.log(x), np.log(target), 1)[0])
    g = base(p)
    c = float(np.dot(g, y) / np.dot(g, g))
    yhat = c * g
    ss_res = math.fsum((y - yhat) ** 2)
    ss_tot = math.fsum((y - y.mean()) ** 2)
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else (1.0 if ss_res == 0 else -math.inf)
    return FitResult(model, c, p, r2, len(y))


def fit_power_law(records, model):
    """Fit successful records' ``wall_time`` against their ``N`` and ``d``."""
    rows = [r for r in records
            if r.status == "ok" and r.wall_time is not None and r.wall_time > 0]
    return fit_arrays(model, [r.wall_time for r in rows],
                      N=[r.N for r in rows], d=[r.d for r in rows])
