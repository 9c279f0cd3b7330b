import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracineq.errors import DomainError, InvalidAlpha
from fracineq.fracint import (
    FracOrder,
    Interval,
    as_order,
    classical_integral,
    rl_left,
    rl_log_pair,
    rl_log_pair_results,
    rl_order_zero,
    rl_right,
)
from fracineq.funcspace import from_callables, lookup, registry
from fracineq.special import gamma


class TestInterval:
    def test_accessors(self):
        iv = Interval(0.5, 4.5)
        assert iv.log_width == pytest.approx(math.log(9.0))
        assert iv.geometric_mean == pytest.approx(1.5)

    def test_validation(self):
        with pytest.raises(DomainError):
            Interval(0.0, 1.0)
        with pytest.raises(DomainError):
            Interval(-1.0, 1.0)
        with pytest.raises(DomainError):
            Interval(2.0, 2.0)
        with pytest.raises(DomainError):
            Interval(3.0, 2.0)


def test_as_order_accepts_wrapper_and_number():
    assert as_order(FracOrder(1.5)) == 1.5
    assert as_order(2) == 2.0
    with pytest.raises(InvalidAlpha):
        as_order(0.0)
    with pytest.raises(InvalidAlpha):
        FracOrder(-1.0)


def test_left_operator_power_anchor():
    one = lookup("const-1")
    for al in (0.3, 0.5, 1.0, 1.7, 2.6):
        for a, x in ((0.5, 1.4), (1.0, 3.0), (2.0, 2.2)):
            got = rl_left(one, a, al, x).value
            assert got == pytest.approx((x - a) ** al / gamma(al + 1.0), abs=1e-11)


def test_left_operator_linear_anchor():
    ident = lookup("identity")
    for al in (0.4, 1.0, 2.3):
        a, x = 0.7, 2.9
        L = x - a
        want = L**al * (x - al * L / (al + 1.0)) / gamma(al + 1.0)
        assert rl_left(ident, a, al, x).value == pytest.approx(want, rel=1e-10)


def test_right_operator_power_anchor():
    one = lookup("const-1")
    for al in (0.3, 1.0, 2.6):
        b, x = 4.0, 1.5
        assert rl_right(one, b, al, x).value == pytest.approx(
            (b - x) ** al / gamma(al + 1.0), abs=1e-11
        )


def test_order_one_is_classical_integration():
    for f in registry():
        a, x = 0.6, 3.2
        want = classical_integral(f, a, x).value
        assert rl_left(f, a, 1.0, x).value == pytest.approx(want, abs=1e-10)
        assert rl_right(f, x, 1.0, a).value == pytest.approx(want, abs=1e-10)


def test_composition_adds_orders():
    # applying the operator to the power-law image of a lower order lands
    # on the power law of the summed order
    a = 0.8
    for al, be in ((0.5, 0.5), (0.4, 1.3), (1.5, 2.0)):
        inner = from_callables(
            "inner", value=lambda u, be=be: (u - a) ** be / gamma(be + 1.0)
        )
        x = 2.9
        got = rl_left(inner, a, al, x).value
        want = (x - a) ** (al + be) / gamma(al + be + 1.0)
        assert got == pytest.approx(want, rel=1e-6)


def test_log_pair_constant_anchor():
    one = lookup("const-1")
    iv = Interval(0.5, 4.0)
    x = 1.3
    for al in (0.3, 1.0, 2.2):
        j1, j2 = rl_log_pair(one, iv, al, x)
        assert j1 == pytest.approx(math.log(x / iv.a) ** al / gamma(al + 1.0), rel=1e-10)
        assert j2 == pytest.approx(math.log(iv.b / x) ** al / gamma(al + 1.0), rel=1e-10)


def test_log_pair_log_anchor():
    # first member integrates against log(u/a) powers, second against
    # log(b/u) powers; closed forms follow by direct substitution
    f = lookup("log")
    iv = Interval(1.0, math.e**2)
    x = math.e
    al = 1.7
    l1 = math.log(x / iv.a)
    l2 = math.log(iv.b / x)
    j1_want = (math.log(iv.a) * l1**al / al + l1 ** (al + 1.0) / (al + 1.0)) / gamma(al)
    j2_want = (math.log(iv.b) * l2**al / al - l2 ** (al + 1.0) / (al + 1.0)) / gamma(al)
    j1, j2 = rl_log_pair(f, iv, al, x)
    assert j1 == pytest.approx(j1_want, rel=1e-10)
    assert j2 == pytest.approx(j2_want, rel=1e-10)


def test_log_pair_collapses_at_endpoints():
    one = lookup("const-1")
    iv = Interval(0.5, 4.0)
    r1, r2 = rl_log_pair_results(one, iv, 1.5, iv.a)
    assert r1 is None and r2 is not None
    r1, r2 = rl_log_pair_results(one, iv, 1.5, iv.b)
    assert r1 is not None and r2 is None
    assert rl_log_pair(one, iv, 1.5, iv.a)[0] == 0.0
    assert rl_log_pair(one, iv, 1.5, iv.b)[1] == 0.0


def test_log_pair_rejects_x_outside_interval():
    one = lookup("const-1")
    iv = Interval(0.5, 4.0)
    with pytest.raises(DomainError):
        rl_log_pair(one, iv, 1.0, 0.4)
    with pytest.raises(DomainError):
        rl_log_pair(one, iv, 1.0, 4.1)


def test_evaluation_point_must_be_inside():
    one = lookup("const-1")
    with pytest.raises(DomainError):
        rl_left(one, 1.0, 0.5, 1.0)
    with pytest.raises(DomainError):
        rl_right(one, 1.0, 0.5, 1.5)


def test_order_zero_returns_the_function_value():
    assert rl_order_zero(lookup("pow-2"), 1.7) == pytest.approx(1.7**2)
    assert rl_order_zero(math.exp, 0.3) == pytest.approx(math.exp(0.3))


def test_classical_integral_log_anchor():
    res = classical_integral(lookup("log"), 1.0, math.e)
    assert res.value == pytest.approx(1.0, abs=1e-12)


def test_classical_integral_splits_at_kinks():
    pp = lookup("paper-piecewise")
    # pieces: 1 on (0,1], (x-2)^2 on (1,4]; over [0.5, 3] the exact
    # value is 0.5 + [(x-2)^3/3] from 1 to 3 = 0.5 + (1/3 + 1/3)
    res = classical_integral(pp, 0.5, 3.0)
    assert res.value == pytest.approx(0.5 + 2.0 / 3.0, abs=1e-12)


@given(
    al=st.floats(min_value=0.25, max_value=3.5),
    a=st.floats(min_value=0.3, max_value=2.0),
    width=st.floats(min_value=0.2, max_value=3.0),
)
@settings(max_examples=60, deadline=None)
def test_left_operator_is_positive_and_monotone_in_x(al, a, width):
    one = lookup("const-1")
    x1 = a + 0.5 * width
    x2 = a + width
    v1 = rl_left(one, a, al, x1).value
    v2 = rl_left(one, a, al, x2).value
    assert v1 > 0.0
    assert v2 >= v1 - 1e-12
