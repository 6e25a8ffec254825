import random
from fractions import Fraction

import pytest

from fareycf import bifurcation as bf
from fareycf import cfstrings as cfs
from fareycf import words as wd
from fareycf.exactnum import QuadSurd, make_surd, surd_from_periodic_cf


class TestBinIntervals:
    def test_worked_example(self):
        b = bf.bin_interval("00101")
        assert b.a_plus == Fraction(5, 31)
        assert b.a_minus == Fraction(9, 62)

    def test_middle_word(self):
        b = bf.bin_interval("01")
        assert b.a_plus == Fraction(1, 3)
        assert b.a_minus == Fraction(2, 3) - Fraction(1, 2) == Fraction(1, 6)

    def test_length_formula_up_to_14(self):
        for w in wd.words_of_length_up_to(14):
            assert bf.bin_interval(w).length == Fraction(1, 2 * (2 ** len(w) - 1))

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            bf.bin_interval("0")

    def test_endpoints_in_set_interior_not(self):
        for w in wd.words_of_length_up_to(8):
            b = bf.bin_interval(w)
            assert bf.eb_membership(b.a_plus)
            assert bf.eb_membership(b.a_minus)
            mid = (b.a_minus + b.a_plus) / 2
            assert not bf.eb_membership(mid)

    def test_membership_basics(self):
        assert bf.eb_membership(Fraction(0))
        assert bf.eb_membership(Fraction(1, 2))
        assert bf.eb_membership(Fraction(5, 31))
        assert not bf.eb_membership(Fraction(1, 4))


class TestPhiAndQuestionMark:
    def test_phi_examples(self):
        assert bf.phi_map(Fraction(3, 8)) == Fraction(2, 3)
        assert bf.phi_map(Fraction(1, 4)) == Fraction(1, 2)
        assert bf.phi_map(Fraction(0)) == 0
        assert bf.phi_map(Fraction(1, 2)) == 1
        g = surd_from_periodic_cf((), (1,))
        assert bf.phi_map(Fraction(1, 3)) == g
        assert bf.phi_map(Fraction(1, 6)) == g * g  # left edge of the middle window

    def test_question_mark_examples(self):
        assert bf.minkowski_q(Fraction(1, 2)) == Fraction(1, 2)
        assert bf.minkowski_q(Fraction(2, 3)) == Fraction(3, 4)
        assert bf.minkowski_q(Fraction(0)) == 0
        assert bf.minkowski_q(Fraction(1)) == 1
        g = surd_from_periodic_cf((), (1,))
        assert bf.minkowski_q(g) == Fraction(2, 3)

    def test_inverse_identity_random(self):
        rng = random.Random(99)
        for _ in range(1000):
            q = rng.randint(2, 500)
            p = rng.randint(0, q // 2)
            x = Fraction(p, q)
            if x > Fraction(1, 2):
                continue
            assert bf.minkowski_q(bf.phi_map(x)) == 2 * x

    def test_phi_order_preserving(self):
        rng = random.Random(17)
        pts = sorted(Fraction(rng.randint(0, 500), 1000) for _ in range(60))
        images = [bf.phi_map(x) for x in pts]
        for a, b, fa, fb in zip(pts, pts[1:], images, images[1:]):
            if a != b:
                assert fa < fb

    def test_phi_maps_binary_endpoints_to_qumterval_endpoints(self):
        for w in wd.words_of_length_up_to(12):
            b = bf.bin_interval(w)
            q = bf.qumterval_of(w)
            assert bf.phi_map(b.a_plus) == q.alpha_plus
            assert bf.phi_map(b.a_minus) == q.alpha_minus


class TestQumtervals:
    def test_worked_examples(self):
        q = bf.qumterval_of("001")
        assert q.alpha_plus == make_surd(-1, 1, 2, 3)
        assert q.alpha_minus == make_surd(2, -1, 1, 3)
        assert q.pseudocenter == Fraction(1, 3)
        q2 = bf.qumterval_of("01")
        g = surd_from_periodic_cf((), (1,))
        assert q2.alpha_plus == g and q2.alpha_minus == g * g
        assert q2.pseudocenter == Fraction(1, 2)
        q3 = bf.qumterval_of("0001")
        assert q3.S == (3, 1)
        assert q3.alpha_plus == surd_from_periodic_cf((), (3, 1))
        assert q3.alpha_minus == surd_from_periodic_cf((4,), (1, 3))

    def test_left_endpoint_reflection(self):
        for w in wd.words_of_length_up_to(10):
            q = bf.qumterval_of(w)
            assert 1 - q.alpha_minus == surd_from_periodic_cf((), cfs.transpose_string(q.S))

    def test_pseudocenter_is_simplest(self):
        for w in wd.words_of_length_up_to(10):
            q = bf.qumterval_of(w)
            assert bf.simplest_rational_between(q.alpha_minus, q.alpha_plus) == q.pseudocenter
            assert q.alpha_minus < q.pseudocenter < q.alpha_plus

    def test_disjoint_and_ordered(self):
        qs = bf.atlas(10)
        for a, b in zip(qs, qs[1:]):
            assert a.pseudocenter < b.pseudocenter
            assert a.alpha_plus < b.alpha_minus  # cross-field exact comparison

    def test_locate_examples(self):
        assert bf.locate_qumterval(Fraction(1, 3)).word == "001"
        assert bf.locate_qumterval(Fraction(1, 2)).word == "01"
        assert bf.locate_qumterval(Fraction(9, 20)).word == "01"
        assert bf.locate_qumterval(Fraction(4, 15)).word == "0001001"
        assert bf.locate_qumterval(Fraction(3, 8)).word == "00101"

    def test_locate_rejects_endpoints(self):
        for bad in (Fraction(0), Fraction(1)):
            with pytest.raises(ValueError):
                bf.locate_qumterval(bad)

    def test_raw_endpoint_comparisons_match_normalized(self):
        # the tree descent compares against un-normalized surds; their signs
        # must agree with the fully normalized qumterval endpoints
        from fareycf import cfstrings as cfs_mod

        rng = random.Random(55)
        for w in wd.words_of_length_up_to(9):
            q = bf.qumterval_of(w)
            s = cfs_mod.runlength(w)
            raw_plus = bf._raw_periodic((), s)
            raw_minus = bf._raw_periodic(
                cfs_mod.right_conjugate(s), cfs_mod.transpose_string(s)
            )
            for _ in range(8):
                x = Fraction(rng.randint(1, 999), 1000)
                assert bf._raw_cmp_fraction(raw_plus, x) == q.alpha_plus._cmp(x)
                assert bf._raw_cmp_fraction(raw_minus, x) == q.alpha_minus._cmp(x)

    def test_locate_consistent_with_membership(self):
        rng = random.Random(4)
        for _ in range(200):
            alpha = Fraction(rng.randint(1, 999), 1000)
            q = bf.locate_qumterval(alpha)
            assert alpha in q

    def test_thickened_interval_contained(self):
        rng = random.Random(23)
        for _ in range(200):
            r = Fraction(rng.randint(1, 499), 500)
            left, right = bf.beta_thickening(r)
            q = bf.locate_qumterval(r)
            assert left < right
            assert q.alpha_minus <= left and right <= q.alpha_plus

    def test_unbounded_imbalance_toward_the_set(self):
        # follow an aperiodic descent pattern below the 1/6 image; the
        # zero/one imbalance of the nested interval labels must blow up
        # (frozen expected floor: > 50 within depth 60).  Only digit counts
        # are tracked: the words themselves grow exponentially.
        import math

        pattern = bin(int(math.pi * 2**70))[3:]
        u, v = (1, 0), (2, 1)  # (zeros, ones) of the pair ("0", "001")
        imbalance = 0
        for k in range(60):
            mid = (u[0] + v[0], u[1] + v[1])
            if pattern[k] == "0":
                v = mid
            else:
                u = mid
            imbalance = mid[0] - mid[1]
        assert imbalance > 50


class TestCardioidAngles:
    def test_worked_examples(self):
        assert bf.cardioid_angles(Fraction(2, 5)) == (Fraction(9, 31), Fraction(10, 31))
        assert bf.cardioid_angles(Fraction(1, 2)) == (Fraction(1, 3), Fraction(2, 3))
        assert bf.cardioid_angles(Fraction(1, 3)) == (Fraction(1, 7), Fraction(2, 7))

    def test_halved_angles_in_binary_set(self):
        for q in range(2, 21):
            for p in range(1, q):
                r = Fraction(p, q)
                if r.denominator != q:
                    continue
                tm, tp = bf.cardioid_angles(r)
                assert bf.eb_membership(tm / 2)
                assert bf.eb_membership(tp / 2)


class TestZeta:
    def test_binary_total_approaches_half(self):
        total20 = bf.zeta_partial(1.0, 20, variant="binary")
        assert abs(total20 - 0.5) < 1e-4

    def test_binary_exact_tail_bound(self):
        # oracle: the exact sum over lengths <= 20 against the closed form
        exact = sum(
            bf.bin_interval(w).length for w in wd.words_of_length_up_to(20)
        )
        assert Fraction(1, 2) - exact < Fraction(1, 10**4)

    def test_windowed_lengths_decay_exponentially(self):
        # inside [1/(N+1), 1/N] every interval obeys |J_w| < 2 * b^{|w|} with
        # b = N^(-2/(N+1)); this is the actual dimension-zero mechanism
        for n_win in (2, 3):
            lo, hi = Fraction(1, n_win + 1), Fraction(1, n_win)
            b = float(n_win) ** (-2.0 / (n_win + 1))
            for w in wd.words_of_length_up_to(14):
                q = bf.qumterval_of(w)
                if q.alpha_minus < hi and q.alpha_plus > lo:
                    assert float(q.length) < 2 * b ** len(w)

    def test_windowed_per_length_sums_decrease(self):
        window = (Fraction(1, 3), Fraction(1, 2))
        per_len = {}
        for w in wd.words_of_length_up_to(16):
            q = bf.qumterval_of(w)
            if q.alpha_minus < window[1] and q.alpha_plus > window[0]:
                per_len[len(w)] = per_len.get(len(w), 0.0) + float(q.length) ** 0.25
        blocks = [
            sum(per_len.get(n, 0.0) for n in range(lo, lo + 4))
            for lo in (5, 9, 13)
        ]
        assert blocks[0] > blocks[1] > blocks[2]

    def test_window_restriction(self):
        full = bf.zeta_partial(1.0, 8)
        windowed = bf.zeta_partial(1.0, 8, window=(Fraction(1, 3), Fraction(1, 2)))
        assert 0 < windowed < full


class TestSimplestRational:
    def test_examples(self):
        assert bf.simplest_rational_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
        assert bf.simplest_rational_between(Fraction(2, 7), Fraction(1, 2)) == Fraction(1, 3)
        assert bf.simplest_rational_between(Fraction(5, 2), Fraction(7, 2)) == 3

    def test_strictly_inside_with_surd_endpoints(self):
        rng = random.Random(31)
        for _ in range(200):
            d = rng.choice([2, 3, 5, 7])
            a = make_surd(rng.randint(-4, 4), rng.choice([-1, 1]), rng.randint(1, 9), d)
            width = Fraction(1, rng.randint(2, 10**6))
            if isinstance(a, QuadSurd):
                r = bf.simplest_rational_between(a, a + width)
                assert a < r < a + width
