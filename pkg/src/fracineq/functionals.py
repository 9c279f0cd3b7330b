"""The central deviation functional I_f and its named specializations.

I_f(x, lambda, alpha, a, b) combines f at x, a, b with fractional
integrals of f composed with exp:

    (1-lam) [L_a^alpha + L_b^alpha] f(x)
    + lam [f(a) L_a^alpha + f(b) L_b^alpha]
    - Gamma(alpha+1) (J_first + J_second)

with L_a = ln(x/a), L_b = ln(b/x) and the J pair from
:func:`fracint.rl_log_pair`. The same quantity has an integral
representation in terms of f' alone (``i_f_lemma``); evaluating both and
comparing is the package's strongest self-check, and the m-weighted
variants repeat the construction on the substituted instance
(x^m, a^m, b^m).

The parameters (x, lam) interpolate the classical deviations: lam=0 is
a midpoint form, lam=1/3 Simpson, lam=1 trapezoid, and lam=0 with free
x the Ostrowski form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DomainError, KindParameterMismatch, MissingDerivative
from .fracint import Interval, as_order, rl_log_pair_results
from .funcspace import ClassParams, FunctionHandle
from .quadrature import DEFAULT_CONFIG, QuadConfig, QuadDiagnostics, integrate
from .special import gamma

NAMED_KINDS = ("simpson", "midpoint", "trapezoid", "ostrowski", "hermite-hadamard")

_FORCED_LAMBDA = {"simpson": 1.0 / 3.0, "midpoint": 0.0, "trapezoid": 1.0, "ostrowski": 0.0}


@dataclass(frozen=True)
class Params:
    """Full parameter tuple of one functional instance."""

    iv: Interval
    x: float
    lam: float
    alpha: float
    q: float = 1.0
    cls: ClassParams = field(default_factory=ClassParams)

    def __post_init__(self):
        x = float(self.x)
        if not self.iv.a <= x <= self.iv.b:
            raise DomainError(f"x must lie in [{self.iv.a!r}, {self.iv.b!r}], got {x!r}")
        if not 0.0 <= self.lam <= 1.0:
            raise DomainError(f"lambda must lie in [0, 1], got {self.lam!r}")
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise DomainError(f"alpha must be positive, got {self.alpha!r}")
        if not self.q >= 1.0:
            raise DomainError(f"q must be >= 1, got {self.q!r}")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "lam", float(self.lam))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "q", float(self.q))

    def with_x(self, x):
        return Params(self.iv, x, self.lam, self.alpha, self.q, self.cls)


def _record(diag, res):
    if diag is not None:
        diag.record(res)


def i_f_direct(f: FunctionHandle, p: Params, cfg: QuadConfig = DEFAULT_CONFIG, diag=None) -> float:
    """I_f from its definition through fractional integrals."""
    a, b, x, lam, al = p.iv.a, p.iv.b, p.x, p.lam, p.alpha
    la = math.log(x / a)
    lb = math.log(b / x)
    first, second = rl_log_pair_results(f, p.iv, al, x, cfg)
    j_sum = 0.0
    for res in (first, second):
        if res is not None:
            j_sum += res.value
            _record(diag, res)
    fa = float(f.value(a))
    fb = float(f.value(b))
    fx = float(f.value(x))
    wa = la**al
    wb = lb**al
    return (1.0 - lam) * (wa + wb) * fx + lam * (fa * wa + fb * wb) - gamma(al + 1.0) * j_sum


def _lemma_term(f, rr, y, al, lam, cfg, diag):
    """Integral of (t^alpha - lam) rr^t f'(y rr^t) over [0, 1]."""
    bps = set()
    if 0.0 < lam < 1.0:
        bps.add(lam ** (1.0 / al))
    if rr != 1.0:
        lrr = math.log(rr)
        for k in f.kinks:
            t = math.log(k / y) / lrr
            if 0.0 < t < 1.0:
                bps.add(t)
    cfg = cfg.with_breakpoints(sorted(bps)) if bps else cfg
    if f.fcode >= 0:
        spec = kernels.IntegrandSpec(
            f.fcode,
            f.fparams,
            deriv=True,
            kcode=kernels.K_LEMMA,
            kparams=np.array([al, lam, rr, y, 0.0]),
        )
        res = integrate(spec, 0.0, 1.0, cfg)
    else:
        res = integrate(
            lambda t: (t**al - lam) * rr**t * float(f.derivative(y * rr**t)), 0.0, 1.0, cfg
        )
    _record(diag, res)
    return res.value


def i_f_lemma(f: FunctionHandle, p: Params, cfg: QuadConfig = DEFAULT_CONFIG, diag=None) -> float:
    """I_f from its integral representation in terms of f'.

    The two weighted integrals run along the geometric paths from x to a
    and from x to b; a term whose log factor vanishes (x at an endpoint)
    is dropped, which is the continuous limit of the representation.
    """
    if not f.has_derivative:
        raise MissingDerivative(f"i_f_lemma needs a derivative for {f.name}")
    a, b, x, lam, al = p.iv.a, p.iv.b, p.x, p.lam, p.alpha
    total = 0.0
    if x > a:
        la = math.log(x / a)
        total += a * la ** (al + 1.0) * _lemma_term(f, x / a, a, al, lam, cfg, diag)
    if x < b:
        lb = math.log(b / x)
        total -= b * lb ** (al + 1.0) * _lemma_term(f, x / b, b, al, lam, cfg, diag)
    return total


def i_f_m_direct(f: FunctionHandle, p: Params, cfg: QuadConfig = DEFAULT_CONFIG, diag=None) -> float:
    """I_f on the substituted instance (x^m, a^m, b^m)."""
    m = p.cls.m
    sub = Params(
        Interval(p.iv.a**m, p.iv.b**m), p.x**m, p.lam, p.alpha, p.q, p.cls
    )
    return i_f_direct(f, sub, cfg, diag)


def i_f_m_lemma(
    f: FunctionHandle,
    p: Params,
    sign_second_term: str = "minus",
    cfg: QuadConfig = DEFAULT_CONFIG,
    diag=None,
) -> float:
    """The f'-representation of the substituted functional.

    The sign of the second term is caller-selected; the m=1 reduction to
    :func:`i_f_lemma` fixes it empirically (see harness.resolve_m_sign).
    """
    if sign_second_term not in ("plus", "minus"):
        raise DomainError(f"sign_second_term must be 'plus' or 'minus', got {sign_second_term!r}")
    if not f.has_derivative:
        raise MissingDerivative(f"i_f_m_lemma needs a derivative for {f.name}")
    a, b, x, lam, al = p.iv.a, p.iv.b, p.x, p.lam, p.alpha
    m = p.cls.m
    mfac = m ** (al + 1.0)
    total = 0.0
    if x > a:
        la = math.log(x / a)
        total += (
            mfac
            * a**m
            * la ** (al + 1.0)
            * _lemma_term(f, (x / a) ** m, a**m, al, lam, cfg, diag)
        )
    if x < b:
        lb = math.log(b / x)
        term = (
            mfac
            * b**m
            * lb ** (al + 1.0)
            * _lemma_term(f, (x / b) ** m, b**m, al, lam, cfg, diag)
        )
        total = total + term if sign_second_term == "plus" else total - term
    return total


def _require(kind, ok, detail):
    if not ok:
        raise KindParameterMismatch(f"{kind} form requires {detail}")


def _check_forced(kind: str, p: Params, forced_x_mid: bool):
    want = _FORCED_LAMBDA[kind]
    _require(kind, abs(p.lam - want) <= 1e-12, f"lambda = {want!r}, got {p.lam!r}")
    if forced_x_mid:
        mid = p.iv.geometric_mean
        _require(
            kind,
            abs(p.x - mid) <= 1e-12 * (1.0 + mid),
            f"x at the geometric midpoint {mid!r}, got {p.x!r}",
        )


def named_lhs(kind: str, f: FunctionHandle, p: Params, cfg: QuadConfig = DEFAULT_CONFIG, diag=None) -> float:
    """Absolute left side of a named inequality form.

    simpson/midpoint/trapezoid fix x at the geometric midpoint with
    lambda 1/3, 0, 1 and carry the normalization 2^(alpha-1) L^(-alpha);
    ostrowski fixes lambda = 0 with free x; hermite-hadamard returns the
    fractional mean value (the middle term of the two-sided chain).
    """
    if kind not in NAMED_KINDS:
        raise DomainError(f"unknown named form {kind!r}; expected one of {NAMED_KINDS}")
    if kind == "hermite-hadamard":
        return hh_middle(f, p.iv, p.alpha, cfg, diag)
    if kind == "ostrowski":
        _check_forced(kind, p, forced_x_mid=False)
        return abs(i_f_direct(f, p, cfg, diag))
    _check_forced(kind, p, forced_x_mid=True)
    al = p.alpha
    norm = 2.0 ** (al - 1.0) / p.iv.log_width**al
    return norm * abs(i_f_direct(f, p, cfg, diag))


def hh_middle(f: FunctionHandle, iv: Interval, alpha, cfg: QuadConfig = DEFAULT_CONFIG, diag=None) -> float:
    """Fractional mean value: the middle member of the two-sided chain.

    Equals Gamma(alpha+1) / (2 L^alpha) times the sum of the two
    whole-interval fractional integrals of f o exp; reduces to the
    classical integral mean of f o exp at alpha = 1.
    """
    al = as_order(alpha)
    first_at_b, _ = rl_log_pair_results(f, iv, al, iv.b, cfg)
    _, second_at_a = rl_log_pair_results(f, iv, al, iv.a, cfg)
    _record(diag, first_at_b)
    _record(diag, second_at_a)
    total = first_at_b.value + second_at_a.value
    return gamma(al + 1.0) / (2.0 * iv.log_width**al) * total


def hh_chain(f: FunctionHandle, iv: Interval, alpha, cfg: QuadConfig = DEFAULT_CONFIG, diag=None):
    """(f at the geometric midpoint, fractional mean, endpoint average)."""
    left = float(f.value(iv.geometric_mean))
    middle = hh_middle(f, iv, alpha, cfg, diag)
    right = 0.5 * (float(f.value(iv.a)) + float(f.value(iv.b)))
    return left, middle, right
