import math
from fractions import Fraction

import pytest

from fareycf import lyapunov as ly
from fareycf import natext as nx


def test_kernel_and_fallback_agree_exactly():
    if not ly.HAVE_FAST_ORBIT:
        pytest.skip("compiled kernel unavailable")
    for alpha, x0 in [(0.3, 0.12345), (0.5, -0.25), (0.71, 0.2)]:
        fast = ly.birkhoff_log_deriv(alpha, x0, 30_000, 500)
        slow = ly.birkhoff_log_deriv_py(alpha, x0, 30_000, 500)
        assert fast == pytest.approx(slow, abs=1e-9)


def test_deterministic_under_seed():
    a = ly.lyapunov_estimate(Fraction(2, 5), steps=50_000, seed=3)
    b = ly.lyapunov_estimate(Fraction(2, 5), steps=50_000, seed=3)
    assert a == b


def test_estimate_matches_exact_entropy():
    alpha = Fraction(1, 3)
    h = float(nx.entropy_at(alpha).h)
    est = ly.lyapunov_estimate(alpha, steps=10**6, seed=0)
    assert abs(est - h) / h < 0.02


def test_plateau_from_orbit_average():
    plateau = math.pi**2 / (6 * math.log((1 + math.sqrt(5)) / 2))
    est = ly.lyapunov_estimate(Fraction(1, 2), steps=10**6, seed=1)
    assert abs(est - plateau) / plateau < 0.02


def test_rejects_bad_alpha():
    with pytest.raises(ValueError):
        ly.lyapunov_estimate(Fraction(3, 2))
