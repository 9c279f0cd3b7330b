"""Left and right Riemann-Liouville operators and their log-composed pair.

``rl_left`` computes J_{a+}^alpha f(x) = (1/Gamma(alpha)) * integral of
(x-t)^(alpha-1) f(t) over [a, x]; ``rl_right`` the mirrored operator.
``rl_log_pair`` evaluates both operators for the composed integrand
t -> f(e^t) on the log-image of an interval, which is how fractional
integrals of positive-axis functions appear throughout this package.
The composition wraps the evaluator; it never resamples, so error
control stays inside a single quadrature call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError, InvalidAlpha
from .quadrature import DEFAULT_CONFIG, QuadConfig, QuadResult, integrate, integrate_endpoint_singular
from .special import gamma


@dataclass(frozen=True)
class Interval:
    """A finite positive interval 0 < a < b."""

    a: float
    b: float

    def __post_init__(self):
        a = float(self.a)
        b = float(self.b)
        if not (math.isfinite(a) and math.isfinite(b) and 0.0 < a < b):
            raise DomainError(f"interval requires 0 < a < b, got ({self.a!r}, {self.b!r})")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def log_width(self):
        return math.log(self.b / self.a)

    @property
    def geometric_mean(self):
        return math.sqrt(self.a * self.b)


@dataclass(frozen=True)
class FracOrder:
    """A fractional order alpha > 0."""

    alpha: float

    def __post_init__(self):
        a = float(self.alpha)
        if not (math.isfinite(a) and a > 0.0):
            raise InvalidAlpha(f"fractional order must be positive, got {self.alpha!r}")
        object.__setattr__(self, "alpha", a)


def as_order(alpha) -> float:
    """Coerce a FracOrder or bare number to a validated float order."""
    if isinstance(alpha, FracOrder):
        return alpha.alpha
    return FracOrder(float(alpha)).alpha


def _integrand(f, comp: bool):
    """Table spec for registry-backed handles, wrapped callable otherwise."""
    fcode = getattr(f, "fcode", None)
    if fcode is not None and fcode >= 0:
        kcode = kernels.K_COMP if comp else kernels.K_PLAIN
        return kernels.IntegrandSpec(fcode, f.fparams, False, kcode)
    value = getattr(f, "value", f)
    if comp:
        return lambda t: float(value(math.exp(t)))
    return lambda t: float(value(t))


def _kinks(f):
    return tuple(getattr(f, "kinks", ()) or ())


def _with_kinks(cfg: QuadConfig, points, lo, hi):
    interior = [p for p in points if lo < p < hi]
    if not interior:
        return cfg
    return cfg.with_breakpoints(sorted(set(cfg.breakpoints).union(interior)))


def rl_left(f, a: float, alpha, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Left Riemann-Liouville integral J_{a+}^alpha f evaluated at x > a."""
    al = as_order(alpha)
    a = float(a)
    x = float(x)
    if not x > a:
        raise DomainError(f"rl_left requires x > a, got a={a!r}, x={x!r}")
    cfg = _with_kinks(cfg, _kinks(f), a, x)
    res = integrate_endpoint_singular(_integrand(f, comp=False), a, x, al, "upper", cfg)
    return res.scaled(1.0 / gamma(al))


def rl_right(f, b: float, alpha, x: float, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Right Riemann-Liouville integral J_{b-}^alpha f evaluated at x < b."""
    al = as_order(alpha)
    b = float(b)
    x = float(x)
    if not x < b:
        raise DomainError(f"rl_right requires x < b, got b={b!r}, x={x!r}")
    cfg = _with_kinks(cfg, _kinks(f), x, b)
    res = integrate_endpoint_singular(_integrand(f, comp=False), x, b, al, "lower", cfg)
    return res.scaled(1.0 / gamma(al))


def rl_log_pair_results(f, iv: Interval, alpha, x: float, cfg: QuadConfig = DEFAULT_CONFIG):
    """QuadResult pair behind :func:`rl_log_pair`; None marks an empty member."""
    al = as_order(alpha)
    x = float(x)
    if not iv.a <= x <= iv.b:
        raise DomainError(f"rl_log_pair requires a <= x <= b, got x={x!r} for {iv}")
    la, lx, lb = math.log(iv.a), math.log(x), math.log(iv.b)
    kink_logs = tuple(math.log(k) for k in _kinks(f) if k > 0.0)
    comp = _integrand(f, comp=True)
    scale = 1.0 / gamma(al)

    first = None
    if x > iv.a:
        cfg1 = _with_kinks(cfg, kink_logs, la, lx)
        first = integrate_endpoint_singular(comp, la, lx, al, "lower", cfg1).scaled(scale)
    second = None
    if x < iv.b:
        cfg2 = _with_kinks(cfg, kink_logs, lx, lb)
        second = integrate_endpoint_singular(comp, lx, lb, al, "upper", cfg2).scaled(scale)
    return first, second


def rl_log_pair(f, iv: Interval, alpha, x: float, cfg: QuadConfig = DEFAULT_CONFIG):
    """The pair (J^alpha at ln a of the right operator from ln x,
    J^alpha at ln b of the left operator from ln x) for t -> f(e^t).

    Degenerate members (x at an interval end) are 0 by the convention
    that an empty interval integrates to 0.
    """
    first, second = rl_log_pair_results(f, iv, alpha, x, cfg)
    return (
        0.0 if first is None else first.value,
        0.0 if second is None else second.value,
    )


def rl_order_zero(f, x: float) -> float:
    """Order-zero convention: J^0 f = f."""
    value = getattr(f, "value", f)
    return float(value(float(x)))


def classical_integral(f, lo: float, hi: float, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Plain integral of a handle or callable, for order-one reductions."""
    cfg = _with_kinks(cfg, _kinks(f), float(lo), float(hi))
    return integrate(_integrand(f, comp=False), lo, hi, cfg)
