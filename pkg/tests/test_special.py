import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracineq.errors import DomainError, InvalidAlpha
from fracineq.special import a1_closed, gamma


ALPHAS = st.floats(min_value=0.2, max_value=5.0, allow_nan=False)
LAMS = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


class TestGamma:
    def test_matches_stdlib_on_positive_axis(self):
        for z in (0.1, 0.3, 0.5, 1.0, 1.2, 2.0, 2.5, 3.7, 5.0, 7.5, 10.0, 15.5):
            assert gamma(z) == pytest.approx(math.gamma(z), rel=1e-13)

    def test_integer_factorials(self):
        assert gamma(1.0) == pytest.approx(1.0, rel=1e-14)
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-14)
        assert gamma(11.0) == pytest.approx(3628800.0, rel=1e-13)

    def test_half_integer(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
        assert gamma(1.5) == pytest.approx(0.5 * math.sqrt(math.pi), rel=1e-14)

    def test_rejects_nonpositive_argument(self):
        # orders and their shifts are always positive in this package
        with pytest.raises(InvalidAlpha):
            gamma(0.0)
        with pytest.raises(InvalidAlpha):
            gamma(-0.5)

    def test_recurrence(self):
        for z in (0.4, 1.1, 2.6, 4.3):
            assert gamma(z + 1.0) == pytest.approx(z * gamma(z), rel=1e-13)


class TestA1Closed:
    # endpoint weights: lam = 0 integrates t^alpha, lam = 1 its complement
    def test_lam_zero(self):
        for al in (0.2, 0.5, 1.0, 2.0, 4.5):
            assert a1_closed(al, 0.0) == pytest.approx(1.0 / (al + 1.0), rel=1e-14)

    def test_lam_one(self):
        for al in (0.2, 0.5, 1.0, 2.0, 4.5):
            assert a1_closed(al, 1.0) == pytest.approx(al / (al + 1.0), rel=1e-14)

    def test_alpha_one_quadratic(self):
        for lam in (0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0):
            assert a1_closed(1.0, lam) == pytest.approx(lam * lam - lam + 0.5, rel=1e-14)

    def test_rejects_bad_alpha(self):
        with pytest.raises(InvalidAlpha):
            a1_closed(0.0, 0.5)
        with pytest.raises(InvalidAlpha):
            a1_closed(-1.0, 0.5)
        with pytest.raises(InvalidAlpha):
            a1_closed(float("nan"), 0.5)

    def test_rejects_lam_outside_unit_interval(self):
        with pytest.raises(DomainError):
            a1_closed(1.0, -0.1)
        with pytest.raises(DomainError):
            a1_closed(1.0, 1.1)

    @given(al=ALPHAS, lam=LAMS)
    @settings(max_examples=200, deadline=None)
    def test_bracketed_by_triangle_bounds(self, al, lam):
        v = a1_closed(al, lam)
        lower = abs(1.0 / (al + 1.0) - lam)
        upper = 1.0 / (al + 1.0) + lam
        assert lower - 1e-12 <= v <= upper + 1e-12

    @given(al=ALPHAS, l1=LAMS, l2=LAMS)
    @settings(max_examples=200, deadline=None)
    def test_convex_in_lam(self, al, l1, l2):
        mid = a1_closed(al, 0.5 * (l1 + l2))
        assert mid <= 0.5 * (a1_closed(al, l1) + a1_closed(al, l2)) + 1e-12
