import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracineq.errors import KindParameterMismatch
from fracineq.fracint import Interval
from fracineq.funcspace import ClassParams, lookup, make_ga_convex
from fracineq.functionals import (
    NAMED_KINDS,
    Params,
    hh_chain,
    hh_middle,
    i_f_direct,
    i_f_lemma,
    i_f_m_direct,
    i_f_m_lemma,
    named_lhs,
)
from fracineq.quadrature import DEFAULT_CONFIG

IV = Interval(0.5, 4.0)


def _p(x, lam, al, s=1.0, m=1.0, q=1.0):
    return Params(IV, x, lam, al, q, ClassParams(s, m))


def _i_log_closed(x, lam, al, a, b):
    # endpoint-kernel convention: the functional on f = log has the
    # closed form below, affine in lambda
    l1 = math.log(x / a)
    l2 = math.log(b / x)
    at0 = (l1 ** (al + 1.0) - l2 ** (al + 1.0)) / (al + 1.0)
    at1 = al / (al + 1.0) * (l2 ** (al + 1.0) - l1 ** (al + 1.0))
    return (1.0 - lam) * at0 + lam * at1


class TestDirect:
    def test_constants_collapse_to_zero(self):
        for name in ("const-1", "const-3"):
            f = lookup(name)
            for al in (0.5, 1.0, 2.7):
                for lam in (0.0, 0.4, 1.0):
                    v = i_f_direct(f, _p(1.3, lam, al))
                    assert v == pytest.approx(0.0, abs=1e-10)

    def test_log_closed_form(self):
        f = lookup("log")
        for al in (0.5, 1.0, 2.3):
            for lam in (0.0, 1.0 / 3.0, 1.0):
                for x in (IV.a, IV.geometric_mean, 1.7, IV.b):
                    want = _i_log_closed(x, lam, al, IV.a, IV.b)
                    assert i_f_direct(f, _p(x, lam, al)) == pytest.approx(
                        want, abs=1e-10
                    ), (al, lam, x)

    def test_params_validation(self):
        with pytest.raises(Exception):
            _p(0.4, 0.0, 1.0)  # x below the interval
        with pytest.raises(Exception):
            _p(1.0, -0.1, 1.0)
        with pytest.raises(Exception):
            _p(1.0, 0.0, 0.0)
        with pytest.raises(Exception):
            _p(1.0, 0.0, 1.0, q=0.5)

    @given(
        lam=st.floats(min_value=0.0, max_value=1.0),
        al=st.floats(min_value=0.3, max_value=3.0),
        fx=st.floats(min_value=0.05, max_value=0.95),
        name=st.sampled_from(["log", "pow-2", "exp", "xlogx"]),
    )
    @settings(max_examples=40, deadline=None)
    def test_affine_in_lambda(self, lam, al, fx, name):
        f = lookup(name)
        x = IV.a * (IV.b / IV.a) ** fx
        v = i_f_direct(f, _p(x, lam, al))
        v0 = i_f_direct(f, _p(x, 0.0, al))
        v1 = i_f_direct(f, _p(x, 1.0, al))
        want = (1.0 - lam) * v0 + lam * v1
        assert v == pytest.approx(want, abs=1e-8 * (1.0 + abs(want)))


class TestRepresentation:
    def test_agrees_with_direct_on_smooth_functions(self):
        for name in ("log", "pow-2", "xlogx", "exp"):
            f = lookup(name)
            for al, lam, x in ((0.5, 0.0, 1.1), (1.0, 1.0 / 3.0, IV.geometric_mean), (2.4, 1.0, 3.1)):
                d = i_f_direct(f, _p(x, lam, al))
                r = i_f_lemma(f, _p(x, lam, al))
                assert r == pytest.approx(d, abs=1e-7 * (1.0 + abs(d)))

    def test_agrees_with_direct_across_a_kink(self):
        f = lookup("paper-piecewise")
        p = _p(1.7, 0.25, 1.4)
        d = i_f_direct(f, p)
        r = i_f_lemma(f, p)
        assert r == pytest.approx(d, abs=1e-7 * (1.0 + abs(d)))


class TestMWeighted:
    def test_reduces_to_plain_at_m_one(self):
        f = lookup("xlogx")
        p = _p(1.7, 0.4, 1.5, m=1.0)
        assert i_f_m_direct(f, p) == pytest.approx(i_f_direct(f, p), abs=1e-12)

    def test_direct_is_the_substituted_instance(self):
        f = lookup("pow-2")
        m = 0.6
        p = _p(1.7, 0.4, 1.5, m=m)
        sub = Params(
            Interval(IV.a**m, IV.b**m), 1.7**m, 0.4, 1.5, 1.0, ClassParams(1.0, m)
        )
        assert i_f_m_direct(f, p) == pytest.approx(i_f_direct(f, sub), abs=1e-12)

    def test_sign_convention_is_settled_by_the_data(self):
        f = lookup("pow-2")
        p = _p(1.7, 0.4, 1.5, m=0.7)
        d = i_f_m_direct(f, p)
        good = i_f_m_lemma(f, p, "minus")
        bad = i_f_m_lemma(f, p, "plus")
        assert good == pytest.approx(d, abs=1e-7 * (1.0 + abs(d)))
        assert abs(bad - d) > 1e-3

    def test_rejects_unknown_sign(self):
        f = lookup("pow-2")
        with pytest.raises(Exception):
            i_f_m_lemma(f, _p(1.7, 0.4, 1.5, m=0.7), "times")


class TestNamedForms:
    def test_midpoint_form_is_the_normalized_functional(self):
        f = lookup("pow-2")
        mid = IV.geometric_mean
        p = _p(mid, 0.0, 2.0)
        L = IV.log_width
        want = 2.0 ** (2.0 - 1.0) / L**2.0 * abs(i_f_direct(f, p))
        assert named_lhs("midpoint", f, p) == pytest.approx(want, rel=1e-12)

    def test_forced_parameters_are_enforced(self):
        f = lookup("pow-2")
        mid = IV.geometric_mean
        with pytest.raises(KindParameterMismatch):
            named_lhs("simpson", f, _p(mid, 0.5, 1.0))  # lambda must be 1/3
        with pytest.raises(KindParameterMismatch):
            named_lhs("trapezoid", f, _p(1.7, 1.0, 1.0))  # x must sit at the midpoint
        with pytest.raises(KindParameterMismatch):
            named_lhs("ostrowski", f, _p(1.7, 0.3, 1.0))  # lambda must be 0

    def test_ostrowski_keeps_x_free(self):
        f = lookup("pow-2")
        v = named_lhs("ostrowski", f, _p(2.6, 0.0, 1.3))
        assert v == pytest.approx(abs(i_f_direct(f, _p(2.6, 0.0, 1.3))), rel=1e-12)

    def test_kind_names_are_closed(self):
        assert set(NAMED_KINDS) == {
            "simpson",
            "midpoint",
            "trapezoid",
            "ostrowski",
            "hermite-hadamard",
        }


class TestChain:
    def test_log_gives_equality_everywhere(self):
        f = lookup("log")
        iv = Interval(0.7, 5.1)
        for al in (0.5, 1.0, 3.0):
            left, middle, right = hh_chain(f, iv, al)
            assert left == pytest.approx(math.log(iv.geometric_mean), rel=1e-12)
            assert middle == pytest.approx(left, abs=1e-10)
            assert right == pytest.approx(left, abs=1e-12)

    def test_order_one_middle_is_the_classical_log_mean(self):
        f = lookup("pow-2")
        iv = Interval(0.5, 4.0)
        middle = hh_middle(f, iv, 1.0)
        want = (iv.b**2 - iv.a**2) / (2.0 * iv.log_width)
        assert middle == pytest.approx(want, rel=1e-10)

    def test_strict_ordering_for_a_curved_function(self):
        f = lookup("exp")
        iv = Interval(1.0, 3.0)
        left, middle, right = hh_chain(f, iv, 1.5)
        assert left < middle < right

    def test_seeded_convex_functions_respect_the_order(self):
        for seed in (2, 8, 21):
            iv = Interval(0.6, 2.9)
            f = make_ga_convex(seed, iv)
            left, middle, right = hh_chain(f, iv, 2.0)
            assert middle - left >= -1e-9
            assert right - middle >= -1e-9
