"""Special functions for test statistics, with NaN guarded out.

Backed by the standard library erfc and scipy's regularized upper
incomplete gamma; correctness against high-precision reference values is
pinned in the test suite to 1e-10 on the domains the battery uses.
"""

from __future__ import annotations

import math

from scipy.special import gammaincc


def erfc(x: float) -> float:
    return math.erfc(x)


def igamc(a: float, x: float) -> float:
    """Regularized upper incomplete gamma Q(a, x); always a number in [0, 1]."""
    if a <= 0 or x < 0:
        raise ValueError(f"igamc domain error: a={a}, x={x}")
    v = float(gammaincc(a, x))
    if math.isnan(v):
        raise ArithmeticError(f"igamc({a}, {x}) did not converge")
    return min(max(v, 0.0), 1.0)


def normal_cdf(x: float) -> float:
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))
