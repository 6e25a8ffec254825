"""Monte Carlo Lyapunov exponents for the interval maps.

The metric entropy equals the integral of log |K'| against the invariant
measure; a long double-precision orbit estimates it independently of the
exact attractor geometry, which makes a useful cross-check.  The inner loop
runs in the compiled `_fastorbit` kernel when available and in plain Python
otherwise.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

try:
    from ._fastorbit import birkhoff_log_deriv as _kernel

    HAVE_FAST_ORBIT = True
except ImportError:  # extension not built: pure-Python fallback
    _kernel = None
    HAVE_FAST_ORBIT = False


def birkhoff_log_deriv_py(alpha: float, x0: float, steps: int, burn_in: int) -> float:
    """Pure-Python reference for the compiled kernel (identical arithmetic)."""
    x = x0
    acc = 0.0
    floor = math.floor
    log = math.log
    for i in range(steps + burn_in):
        if x == 0.0 or x != x:
            x = 1e-13
        if i >= burn_in:
            acc += -2.0 * log(abs(x))
        u = -1.0 / x
        x = u - floor(u + 1.0 - alpha)
    return acc / steps


def birkhoff_log_deriv(alpha: float, x0: float, steps: int, burn_in: int = 1000) -> float:
    if _kernel is not None:
        return _kernel(alpha, x0, steps, burn_in)
    return birkhoff_log_deriv_py(alpha, x0, steps, burn_in)


def lyapunov_estimate(alpha, steps: int = 10**6, seed: int = 0, burn_in: int = 1000) -> float:
    """Birkhoff estimate of the entropy of the map at `alpha` from one typical orbit."""
    a = float(Fraction(alpha))
    if not 0.0 < a < 1.0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    rng = random.Random(seed)
    x0 = 0.0
    while abs(x0) < 1e-6:
        x0 = rng.uniform(a - 1.0, a)
    return birkhoff_log_deriv(a, x0, steps, burn_in)


def selftest() -> list[tuple[str, bool]]:
    est = lyapunov_estimate(Fraction(1, 2), steps=200_000, seed=1)
    plateau = math.pi**2 / (6 * math.log((1 + math.sqrt(5)) / 2))
    checks = [("lyapunov near plateau at 1/2", abs(est - plateau) / plateau < 0.05)]
    if HAVE_FAST_ORBIT:
        a, b = birkhoff_log_deriv(0.3, 0.12345, 50_000, 100), birkhoff_log_deriv_py(0.3, 0.12345, 50_000, 100)
        checks.append(("kernel matches fallback", abs(a - b) < 1e-9))
    return checks
