"""Bifurcation combinatorics: the doubling-map constraint set, its intervals,
the runlength homeomorphism to continued fractions, qumtervals, exterior-ray
angles of the main cardioid, and the geometric zeta partial sums.

Everything except the zeta sums is exact: interval endpoints are rationals
over 2^n - 1 on the binary side and quadratic surds on the parameter side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import cfstrings as cfs
from . import words
from .exactnum import (
    Exact,
    QuadSurd,
    _sign_single,
    floor_exact,
    surd_from_periodic_cf,
    to_mpf,
)
from .precision import working_precision

# ---------------------------------------------------------------------------
# binary side
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinInterval:
    """Gap of the doubling-map constraint set labelled by a word w: the open
    interval (0.(transpose w repeated) - 1/2, 0.(w repeated))."""

    word: str
    a_minus: Fraction
    a_plus: Fraction

    @property
    def length(self) -> Fraction:
        return self.a_plus - self.a_minus


def bin_interval(w: str) -> BinInterval:
    if not words.is_nondegenerate_farey(w):
        raise ValueError(f"degenerate or invalid word: {w!r}")
    den = 2 ** len(w) - 1
    a_plus = Fraction(int(w, 2), den)
    a_minus = Fraction(int(words.transpose(w), 2), den) - Fraction(1, 2)
    return BinInterval(w, a_minus, a_plus)


def eb_membership(x) -> bool:
    """Exact doubling-orbit test: every iterate of x stays in the closed
    circle arc from x to x + 1/2."""
    x = Fraction(x)
    if not 0 <= x <= Fraction(1, 2):
        raise ValueError("membership test is for rationals in [0, 1/2]")
    hi = x + Fraction(1, 2)
    y = x
    seen = set()
    while y not in seen:
        seen.add(y)
        if not (x <= y <= hi or x <= y + 1 <= hi):
            return False
        y = 2 * y
        if y >= 1:
            y -= 1
    return True


def binary_expansion(x) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(preperiod, cycle) of the binary digits of a rational in [0, 1)."""
    x = Fraction(x)
    if not 0 <= x < 1:
        raise ValueError("binary_expansion expects a rational in [0, 1)")
    seen: dict[Fraction, int] = {}
    bits: list[int] = []
    while x not in seen:
        seen[x] = len(bits)
        x *= 2
        bit = 1 if x >= 1 else 0
        if bit:
            x -= 1
        bits.append(bit)
    i = seen[x]
    return tuple(bits[:i]), tuple(bits[i:])


# ---------------------------------------------------------------------------
# the runlength homeomorphism and its inverse
# ---------------------------------------------------------------------------


def _bits_str(bits) -> str:
    return "".join(map(str, bits))


def _eventually_periodic_runs(pre, cyc):
    """Run-length decomposition (preperiod runs, cycle runs) of the infinite
    bit stream pre + cyc + cyc + ...; requires a non-constant cycle."""
    n_pre, n_cyc = len(pre), len(cyc)

    def bit(i: int) -> int:
        return pre[i] if i < n_pre else cyc[(i - n_pre) % n_cyc]

    i0 = None
    for i in range(n_pre + 1, n_pre + n_cyc + 2):
        if bit(i) != bit(i - 1):
            i0 = i
            break
    assert i0 is not None, "constant cycle has no periodic run structure"
    head = [bit(i) for i in range(i0)]
    window = [bit(i) for i in range(i0, i0 + n_cyc)]
    return cfs.runlength(_bits_str(head)), cfs.runlength(_bits_str(window))


def phi_map(x) -> Exact:
    """Order isomorphism [0, 1/2] -> [0, 1]: reads the binary expansion of x
    and reinterprets its run lengths as continued-fraction digits.  Dyadic
    rationals map to rationals (both expansions are evaluated and must
    agree); other rationals map to quadratic surds."""
    x = Fraction(x)
    if not 0 <= x <= Fraction(1, 2):
        raise ValueError("phi_map expects a rational in [0, 1/2]")
    if x == 0:
        return Fraction(0)
    pre, cyc = binary_expansion(x)
    if all(b == 0 for b in cyc):  # dyadic: terminating expansion
        bits = _bits_str(pre).rstrip("0")
        v1 = cfs.value_of(cfs.runlength(bits))
        # the other expansion ends 0111...; the infinite block truncates away
        alt = bits[:-1] + "0"
        v2 = cfs.value_of(cfs.runlength(alt))
        assert v1 == v2, "the two dyadic expansions must agree"
        return v1
    pre_runs, cyc_runs = _eventually_periodic_runs(pre, cyc)
    return surd_from_periodic_cf(pre_runs, cyc_runs)


def minkowski_q(x) -> Fraction:
    """Minkowski question-mark: continued-fraction digits become binary run
    blocks.  Exact on rationals and on quadratic surds (periodic digits give
    an eventually periodic bit stream, hence a rational)."""
    if isinstance(x, QuadSurd):
        if not 0 < x < 1:
            raise ValueError("expects a value in [0, 1]")
        pre, per = x.cf_expansion()
        head = list(pre) + list(per)
        cyc = list(per) if len(per) % 2 == 0 else list(per) + list(per)
        head_bits: list[str] = []
        for k, a in enumerate(head, start=1):
            head_bits.append(("0" if k % 2 else "1") * (a - 1 if k == 1 else a))
        k0 = len(head)
        cyc_bits: list[str] = []
        for j, a in enumerate(cyc, start=k0 + 1):
            cyc_bits.append(("0" if j % 2 else "1") * a)
        hb, cb = "".join(head_bits), "".join(cyc_bits)
        v = Fraction(int(hb, 2) if hb else 0, 2 ** len(hb))
        v += Fraction(int(cb, 2), (2 ** len(cb) - 1) * 2 ** len(hb))
        return v
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError("expects a value in [0, 1]")
    total = Fraction(0)
    exponent = 0
    for k, a in enumerate(cfs.cf_of_fraction(x), start=1):
        exponent += a
        term = Fraction(1, 2**exponent)
        total += term if k % 2 else -term
    return 2 * total


# ---------------------------------------------------------------------------
# qumtervals
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Qumterval:
    """Maximal parameter interval locked to a word: quadratic endpoints, a
    least-denominator rational pseudocenter, and the digit counts of the word."""

    word: str
    S: cfs.CFString
    alpha_minus: QuadSurd
    alpha_plus: QuadSurd
    pseudocenter: Fraction
    m0: int
    m1: int

    def __contains__(self, alpha) -> bool:
        return self.alpha_minus < alpha < self.alpha_plus

    @property
    def length(self):
        return self.alpha_plus - self.alpha_minus


@lru_cache(maxsize=None)
def qumterval_of(w: str) -> Qumterval:
    if not words.is_nondegenerate_farey(w):
        raise ValueError(f"degenerate or invalid word: {w!r}")
    S = cfs.runlength(w)
    alpha_plus = surd_from_periodic_cf((), S)
    alpha_minus = surd_from_periodic_cf(cfs.right_conjugate(S), cfs.transpose_string(S))
    return Qumterval(
        word=w,
        S=S,
        alpha_minus=alpha_minus,
        alpha_plus=alpha_plus,
        pseudocenter=cfs.value_of(S),
        m0=w.count("0"),
        m1=w.count("1"),
    )


# -- fast un-normalized surds for the tree descent --------------------------
# (p, q, r, D): value (p + q sqrt(D)) / r with r > 0, D not assumed squarefree.


def _raw_reduce(p: int, q: int, r: int, D: int):
    if r < 0:
        p, q, r = -p, -q, -r
    g = math.gcd(math.gcd(abs(p), abs(q)), r)
    if g > 1:
        p, q, r = p // g, q // g, r // g
    return p, q, r, D


def _raw_periodic(pre: cfs.CFString, period: cfs.CFString):
    m = cfs.matrix_of(period)
    B = m.d - m.a
    raw = _raw_reduce(-B, 1, 2 * m.c, B * B + 4 * m.b * m.c)
    if pre:
        n = cfs.matrix_of(pre)
        p, q, r, D = raw
        np_, nq = n.a * p + n.b * r, n.a * q
        dp, dq = n.c * p + n.d * r, n.c * q
        raw = _raw_reduce(
            np_ * dp - nq * dq * D, nq * dp - np_ * dq, dp * dp - dq * dq * D, D
        )
    return raw


def _raw_cmp_fraction(raw, x: Fraction) -> int:
    p, q, r, D = raw
    return _sign_single(p * x.denominator - x.numerator * r, q * x.denominator, D)


def _mediant_runs(u, v):
    """Run-length string of the concatenated words, carried as (runs, first)."""
    runs_u, first_u = u
    runs_v, first_v = v
    last_u = first_u if len(runs_u) % 2 else ("1" if first_u == "0" else "0")
    if last_u == first_v:
        merged = runs_u[:-1] + (runs_u[-1] + runs_v[0],) + runs_v[1:]
    else:
        merged = runs_u + runs_v
    return merged, first_u


_LOCATE_LIMIT = 10**6


def locate_qumterval(alpha) -> Qumterval:
    """The unique qumterval whose closure contains a rational parameter.

    Rational parameters never hit the quadratic endpoints, so the answer is
    always an interior point; the search descends the mediant tree with
    exact sign tests against the candidate endpoints.
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < 1:
        raise ValueError("0 and 1 belong to the bifurcation set, not to any qumterval")
    u = ((1,), "0")
    v = ((1,), "1")
    for _ in range(_LOCATE_LIMIT):
        mid = _mediant_runs(u, v)
        S = mid[0]
        c_plus = _raw_cmp_fraction(_raw_periodic((), S), alpha)
        if c_plus == 0:
            raise AssertionError("rational parameter on a quadratic endpoint")
        if c_plus > 0:
            c_minus = _raw_cmp_fraction(
                _raw_periodic(cfs.right_conjugate(S), cfs.transpose_string(S)), alpha
            )
            if c_minus == 0:
                raise AssertionError("rational parameter on a quadratic endpoint")
            if c_minus < 0:
                return qumterval_of(cfs.runlength_inverse(S, "0"))
            v = mid  # alpha below the candidate interval
        else:
            u = mid  # alpha above the candidate interval
    raise AssertionError("tree descent failed to terminate")


def atlas(max_len: int) -> list[Qumterval]:
    """All qumtervals with |word| <= max_len, ordered by pseudocenter."""
    out = [qumterval_of(w) for w in words.words_of_length_up_to(max_len)]
    out.sort(key=lambda q: q.pseudocenter)
    return out


def beta_thickening(r) -> tuple[Exact, Exact]:
    """The quadratic interval around a rational r: (sigma beta(sigma r), beta(r))
    where beta repeats the even-length expansion."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("expects a rational strictly between 0 and 1")
    right = surd_from_periodic_cf((), cfs.cf_of_fraction(r, even_length=True))
    left = 1 - surd_from_periodic_cf((), cfs.cf_of_fraction(1 - r, even_length=True))
    return left, right


# ---------------------------------------------------------------------------
# cardioid angles and zeta sums
# ---------------------------------------------------------------------------


def cardioid_angles(r) -> tuple[Fraction, Fraction]:
    """Angles of the parameter rays landing at internal angle r on the main
    cardioid: one cyclic shift of the transpose and of the word itself."""
    r = Fraction(r)
    if not 0 < r < 1:
        raise ValueError("expects a rational strictly between 0 and 1")
    w = words.word_from_rational(r)
    den = 2 ** len(w) - 1
    theta_minus = Fraction(int(words.tau(words.transpose(w)), 2), den)
    theta_plus = Fraction(int(words.tau(w), 2), den)
    return theta_minus, theta_plus


def _outward(x: Exact) -> float:
    with working_precision(80):
        f = float(to_mpf(x))
    return math.nextafter(f, math.inf)


def zeta_partial(
    s: float,
    depth: int,
    window: tuple[Fraction, Fraction] | None = None,
    variant: str = "qumterval",
) -> float:
    """Partial geometric zeta sum of interval lengths**s over words of length
    <= depth, each length rounded outward; plain double accumulation (only
    the convergence behaviour is meaningful, not the last digits)."""
    if s <= 0:
        raise ValueError("exponent must be positive")
    if depth > words.FAREY_LIST_CAP:
        raise ValueError(f"depth above cap {words.FAREY_LIST_CAP}")
    total = 0.0
    for w in words.words_of_length_up_to(depth):
        if variant == "qumterval":
            q = qumterval_of(w)
            lo, hi = q.alpha_minus, q.alpha_plus
            length = _outward(q.length)
        elif variant == "binary":
            b = bin_interval(w)
            lo, hi = b.a_minus, b.a_plus
            length = _outward(b.length)
        else:
            raise ValueError("variant must be 'qumterval' or 'binary'")
        if window is not None and not (lo < window[1] and hi > window[0]):
            continue
        total += length**s
    return total


# ---------------------------------------------------------------------------
# simplest rational in an interval
# ---------------------------------------------------------------------------


def simplest_rational_between(lo, hi) -> Fraction:
    """Least-denominator rational strictly inside the open interval (lo, hi);
    endpoints may be rationals or quadratic surds (hi=None means +infinity)."""
    if hi is not None and not lo < hi:
        raise ValueError("empty interval")
    fl = floor_exact(lo)
    if hi is None or fl + 1 < hi:
        return Fraction(fl + 1)  # fl + 1 > lo always holds
    lo2 = lo - fl  # in [0, 1)
    hi2 = hi - fl  # in (lo2, 1]
    inner = simplest_rational_between(1 / hi2, None if lo2 == 0 else 1 / lo2)
    return fl + 1 / inner


def selftest() -> list[tuple[str, bool]]:
    checks = []
    b = bin_interval("00101")
    checks.append(("binary interval", (b.a_minus, b.a_plus) == (Fraction(9, 62), Fraction(5, 31))))
    checks.append(("set membership", eb_membership(Fraction(5, 31)) and not eb_membership(Fraction(1, 4))))
    checks.append(("phi at 3/8", phi_map(Fraction(3, 8)) == Fraction(2, 3)))
    checks.append(("question mark inverse", minkowski_q(phi_map(Fraction(5, 31))) == Fraction(10, 31)))
    q = qumterval_of("001")
    checks.append(
        (
            "qumterval of 001",
            q.alpha_plus == surd_from_periodic_cf((), (2, 1))
            and q.alpha_minus == surd_from_periodic_cf((3,), (1, 2))
            and q.pseudocenter == Fraction(1, 3),
        )
    )
    checks.append(("locate 1/2", locate_qumterval(Fraction(1, 2)).word == "01"))
    checks.append(("locate 1/3", locate_qumterval(Fraction(1, 3)).word == "001"))
    checks.append(("cardioid 2/5", cardioid_angles(Fraction(2, 5)) == (Fraction(9, 31), Fraction(10, 31))))
    checks.append(("simplest rational", simplest_rational_between(q.alpha_minus, q.alpha_plus) == Fraction(1, 3)))
    return checks
