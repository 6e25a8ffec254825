"""Orbit dynamics of the interval maps x -> -1/x - c with integer digits.

For a parameter alpha in (0, 1) the map sends [alpha-1, alpha] to itself,
choosing the unique integer digit that lands the image in [alpha-1, alpha).
Digits and orbit points are exact (rationals, or surds of one quadratic
field); the running digit-matrix products invert the dynamics step by step.

Sign dictionary: a branch written as x -> T^k S x in matrix form corresponds
to digit c = -k in the digit form x -> -1/x - c; digits are reported in the
digit form throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cfstrings as cfs
from . import words
from .bifurcation import qumterval_of
from .exactnum import E, Exact, Mobius, S, T, floor_exact

ZERO = Fraction(0)


def digit_of(alpha, x) -> int:
    """The digit c(x) = floor(-1/x + 1 - alpha) selecting the branch at x."""
    if x == 0:
        raise ZeroDivisionError("digit undefined at the fixed point 0")
    return floor_exact(-1 / x + 1 - alpha)


def k_step(alpha, x) -> tuple[Exact, int | None]:
    """One step of the map: (next point, digit).  The fixed point 0 maps to
    itself with no digit."""
    _check_in_interval(alpha, x)
    if x == 0:
        return ZERO, None
    c = digit_of(alpha, x)
    return -1 / x - c, c


def _check_in_interval(alpha, x) -> None:
    if not (alpha - 1 <= x <= alpha):
        raise ValueError(f"point {x} outside [alpha-1, alpha] for alpha={alpha}")


@dataclass(frozen=True)
class OrbitRecord:
    """Exact orbit with digits and cumulative inverse matrices.

    matrices[k] recovers the start from points[k+1]; once the orbit hits 0
    it stays there, digits become None and matrices stop extending."""

    start: Exact
    points: tuple[Exact, ...]
    digits: tuple[int | None, ...]
    matrices: tuple[Mobius, ...]
    hit_zero: bool


def orbit(alpha, x, steps: int) -> OrbitRecord:
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    _check_in_interval(alpha, x)
    points = [x]
    digits: list[int | None] = []
    matrices: list[Mobius] = []
    running = None
    hit_zero = x == 0
    for _ in range(steps):
        cur = points[-1]
        if cur == 0:
            hit_zero = True
            points.append(ZERO)
            digits.append(None)
            continue
        nxt, c = k_step(alpha, cur)
        points.append(nxt)
        digits.append(c)
        step_m = Mobius(0, -1, 1, c)
        running = step_m if running is None else running * step_m
        matrices.append(running)
    return OrbitRecord(x, tuple(points), tuple(digits), tuple(matrices), hit_zero)


# ---------------------------------------------------------------------------
# matching
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatchingCertificate:
    """Digit-matrix products of the two endpoint orbits over a qumterval and
    the group identity tying them together."""

    word: str
    M: Mobius
    M_prime: Mobius
    m0: int
    m1: int

    def identity_holds(self) -> bool:
        return T * self.M == self.M_prime * S * (T**-1) * S


def expected_digits_low(S_rl: cfs.CFString) -> tuple[int, ...]:
    """Digit pattern of the alpha-1 orbit on a side-0 qumterval: blocks of
    (a_k - 1) twos followed by a three, closing with a_n twos."""
    a = S_rl[0::2]
    out: list[int] = []
    for ak in a[:-1]:
        out.extend([2] * (ak - 1))
        out.append(3)
    out.extend([2] * a[-1])
    return tuple(out)


def expected_digits_high(S_rl: cfs.CFString) -> tuple[int, ...]:
    """Digit pattern of the alpha orbit on a side-0 qumterval."""
    a = S_rl[0::2]
    return (-a[0] - 1,) + tuple(-ak - 2 for ak in a[1:])


def matching_matrices(w: str) -> MatchingCertificate:
    """The constant inverse-branch products M (orbit of alpha-1, m0 steps)
    and M' (orbit of alpha, m1 steps) attached to a word; side-1 words are
    obtained from their mirror by conjugating with x -> -x."""
    if not words.is_nondegenerate_farey(w):
        raise ValueError(f"degenerate or invalid word: {w!r}")
    m0, m1 = w.count("0"), w.count("1")
    if words.farey_side(w) == 1:
        mirror = matching_matrices(words.transpose(words.negate(w)))
        return MatchingCertificate(w, E * mirror.M_prime * E, E * mirror.M * E, m0, m1)
    S_rl = cfs.runlength(w)
    a = S_rl[0::2]
    ST2 = S * T * T
    M = ST2 ** a[0]
    for ak in a[1:]:
        M = M * T * ST2**ak
    M_prime = S * T ** (-a[0] - 1)
    for ak in a[1:]:
        M_prime = M_prime * S * T ** (-ak - 2)
    return MatchingCertificate(w, M, M_prime, m0, m1)


def verify_matching(w: str, alphas) -> dict:
    """Run both endpoint orbits at each parameter and check the exact orbit
    collision and the constancy of the digit-matrix products.

    Parameters outside the qumterval are reported, never skipped silently.
    """
    cert = matching_matrices(w)
    q = qumterval_of(w)
    results = []
    all_exact = True
    for alpha in alphas:
        alpha = Fraction(alpha)
        if alpha not in q:
            results.append({"alpha": alpha, "status": "outside"})
            all_exact = False
            continue
        low = orbit(alpha, alpha - 1, cert.m0 + 1)
        high = orbit(alpha, alpha, cert.m1 + 1)
        collision = low.points[-1] == high.points[-1]
        constant = (
            len(low.matrices) >= cert.m0
            and len(high.matrices) >= cert.m1
            and low.matrices[cert.m0 - 1] == cert.M
            and high.matrices[cert.m1 - 1] == cert.M_prime
        )
        ok = collision and constant
        all_exact = all_exact and ok
        results.append(
            {
                "alpha": alpha,
                "status": "exact" if ok else "failed",
                "collision": collision,
                "matrices_constant": constant,
                "meet_point": low.points[-1],
            }
        )
    return {
        "word": w,
        "M": cert.M,
        "M_prime": cert.M_prime,
        "m0": cert.m0,
        "m1": cert.m1,
        "identity_holds": cert.identity_holds(),
        "alphas_checked": results,
        "all_exact": all_exact,
    }


def orbit_order_extremes(w: str) -> tuple[int, int]:
    """(j0, j1): the iterate indices where the alpha-1 orbit is smallest and
    the alpha orbit is largest, read off the standard factorization."""
    if words.farey_side(w) != 0:
        raise ValueError("orbit order extremes are defined on side-0 words")
    w1, w2 = words.standard_factorization(w)
    return w1.count("0"), w2.count("1")


def symmetry_conjugate(alpha, x) -> tuple[Fraction, Exact]:
    """The measurable conjugation (alpha, x) -> (1 - alpha, -x); the countable
    exceptional set x = 1/(k - alpha) (floor-convention boundary) is refused."""
    alpha = Fraction(alpha)
    _check_in_interval(alpha, x)
    if x != 0:
        k = 1 / x + alpha
        if isinstance(k, Fraction) and k.denominator == 1:
            raise ValueError(f"exceptional point: x = 1/(k - alpha) with k = {k}")
    return 1 - alpha, -x


def slow_first_return(alpha, x, max_steps: int = 10_000) -> Exact:
    """First return to [alpha-1, alpha) of the slow map (translations by +-1
    around an inversion); equals one step of the fast map."""
    alpha = Fraction(alpha)
    _check_in_interval(alpha, x)
    if x == 0:
        return ZERO
    y = -1 / x
    for _ in range(max_steps):
        if alpha - 1 <= y < alpha:
            return y
        y = y - 1 if y >= alpha else y + 1
    raise ArithmeticError("translation budget exceeded (point too close to 0)")


def selftest() -> list[tuple[str, bool]]:
    checks = []
    half = Fraction(1, 2)
    nxt, c = k_step(half, half)
    checks.append(("step at 1/2", nxt == 0 and c == -2))
    cert = matching_matrices("01")
    checks.append(("certificate 01", T * cert.M == Mobius(1, 1, 1, 2) and cert.identity_holds()))
    rep = verify_matching("01", [Fraction(2, 5), half, Fraction(3, 5)])
    checks.append(("weak matching on 01", rep["all_exact"]))
    rep2 = verify_matching("001", [Fraction(1, 3)])
    checks.append(("weak matching on 001", rep2["all_exact"]))
    checks.append(("order extremes", orbit_order_extremes("00101") == (2, 1)))
    a, x = Fraction(1, 3), Fraction(1, 4)
    checks.append(
        ("reflection symmetry", k_step(a, x)[0] == -k_step(*symmetry_conjugate(a, x))[0])
    )
    checks.append(("slow map", slow_first_return(a, x) == k_step(a, x)[0]))
    return checks
