import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracineq.errors import DomainError, InvalidAlpha, NonConvergence, NonFiniteIntegrand
from fracineq.quadrature import (
    DEFAULT_CONFIG,
    QuadConfig,
    QuadDiagnostics,
    QuadResult,
    integrate,
    integrate_endpoint_singular,
)


def test_exponential_anchor():
    res = integrate(math.exp, 0.0, 1.0)
    assert res.value == pytest.approx(math.e - 1.0, abs=1e-12)
    assert res.converged


def test_sine_anchor():
    res = integrate(math.sin, 0.0, math.pi)
    assert res.value == pytest.approx(2.0, abs=1e-11)


def test_breakpoint_makes_kinked_integrand_exact():
    f = lambda t: abs(t - 1.0 / 3.0)
    cfg = DEFAULT_CONFIG.with_breakpoints([1.0 / 3.0])
    res = integrate(f, 0.0, 1.0, cfg)
    assert res.value == pytest.approx(5.0 / 18.0, abs=1e-14)


def test_breakpoint_outside_interval_rejected():
    cfg = DEFAULT_CONFIG.with_breakpoints([2.0])
    with pytest.raises(DomainError):
        integrate(math.sin, 0.0, 1.0, cfg)


def test_reversed_interval_rejected():
    with pytest.raises(DomainError):
        integrate(math.sin, 1.0, 0.0)


def test_config_validation():
    with pytest.raises(DomainError):
        QuadConfig(abs_tol=-1.0)
    with pytest.raises(DomainError):
        QuadConfig(rel_tol=0.0)
    with pytest.raises(DomainError):
        QuadConfig(max_subdivisions=0)
    with pytest.raises(DomainError):
        QuadConfig(breakpoints=(0.5, 0.2))


def test_tightened_divides_tolerances():
    cfg = QuadConfig(abs_tol=1e-8, rel_tol=1e-6).tightened()
    assert cfg.abs_tol == pytest.approx(1e-10)
    assert cfg.rel_tol == pytest.approx(1e-8)


def test_budget_exhaustion_raises_with_partial_result():
    cfg = QuadConfig(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=3)
    with pytest.raises(NonConvergence) as exc:
        integrate(lambda t: math.sin(40.0 * t), 0.0, 1.0, cfg)
    partial = exc.value.result
    assert partial is not None
    assert not partial.converged
    assert math.isfinite(partial.value)


@pytest.mark.filterwarnings("ignore:invalid value")
def test_nonfinite_integrand_detected():
    with pytest.raises(NonFiniteIntegrand):
        integrate(lambda t: 1.0 / (t - 0.5), 0.0, 1.0, DEFAULT_CONFIG.with_breakpoints([0.5]))


class TestEndpointSingular:
    def test_inverse_square_root_lower(self):
        res = integrate_endpoint_singular(lambda t: 1.0, 0.0, 1.0, 0.5, "lower")
        assert res.value == pytest.approx(2.0, rel=1e-12)

    def test_upper_weight_with_linear_factor(self):
        # integral of t / sqrt(1 - t) over [0, 1] is 4/3
        res = integrate_endpoint_singular(lambda t: t, 0.0, 1.0, 0.5, "upper")
        assert res.value == pytest.approx(4.0 / 3.0, rel=1e-12)

    def test_bounded_weight_branch(self):
        res = integrate_endpoint_singular(lambda t: 1.0, 0.0, 1.0, 1.5, "lower")
        assert res.value == pytest.approx(1.0 / 1.5, rel=1e-9)

    def test_shifted_interval(self):
        # integral of (t-2)^(alpha-1) over [2, 5] is 3^alpha / alpha
        al = 0.3
        res = integrate_endpoint_singular(lambda t: 1.0, 2.0, 5.0, al, "lower")
        assert res.value == pytest.approx(3.0**al / al, rel=1e-11)

    def test_rejects_bad_order_and_end(self):
        with pytest.raises(InvalidAlpha):
            integrate_endpoint_singular(lambda t: 1.0, 0.0, 1.0, 0.0, "lower")
        with pytest.raises(DomainError):
            integrate_endpoint_singular(lambda t: 1.0, 0.0, 1.0, 0.5, "middle")

    def test_breakpoints_survive_substitution(self):
        f = lambda t: abs(t - 0.25)
        cfg = DEFAULT_CONFIG.with_breakpoints([0.25])
        res = integrate_endpoint_singular(f, 0.0, 1.0, 0.5, "lower", cfg)
        # int_0^1 |t - 1/4| t^(-1/2) dt = 1/6 + 1/3 by splitting at the kink
        assert res.value == pytest.approx(0.5, rel=1e-10)


def test_scaled_result_scales_value_and_error():
    r = QuadResult(2.0, 1e-9, 3, True).scaled(-4.0)
    assert r.value == -8.0
    assert r.err_estimate == pytest.approx(4e-9)
    assert r.subdivisions == 3


def test_diagnostics_record_and_merge():
    d = QuadDiagnostics()
    d.record(QuadResult(1.0, 1e-12, 2, True))
    d.record(QuadResult(1.0, 5e-11, 7, True))
    other = QuadDiagnostics(max_err=2e-11, subdivisions=4, calls=1)
    d.merge(other)
    assert d.max_err == pytest.approx(5e-11)
    assert d.subdivisions == 13
    assert d.calls == 3


@given(
    coeffs=st.lists(st.floats(min_value=-3.0, max_value=3.0), min_size=1, max_size=6),
    lo=st.floats(min_value=-2.0, max_value=0.5),
    width=st.floats(min_value=0.1, max_value=3.0),
)
@settings(max_examples=80, deadline=None)
def test_polynomials_match_their_antiderivative(coeffs, lo, width):
    hi = lo + width
    poly = np.polynomial.Polynomial(coeffs)
    want = poly.integ()(hi) - poly.integ()(lo)
    got = integrate(lambda t: float(poly(t)), lo, hi).value
    assert got == pytest.approx(want, abs=1e-9 * (1.0 + abs(want)))
