"""Adaptive one-dimensional quadrature on Gauss-Kronrod panels.

The driver bisects the current worst-error interval until the summed
error estimate meets ``max(abs_tol, rel_tol * |value|)``. Intervals are
pre-split at caller-supplied breakpoints, so integrands only need to be
smooth between breakpoints. Weakly singular endpoint weights
``(t - lo)^(alpha-1)`` and ``(hi - t)^(alpha-1)`` with ``alpha < 1`` are
removed analytically by the power substitution ``u = (t - lo)^alpha``
before any panel is evaluated; for ``alpha >= 1`` the weight is bounded
and the product integrand is handled directly.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DomainError, InvalidAlpha, NonConvergence, NonFiniteIntegrand

_MIN_WIDTH_FACTOR = 50.0 * float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class QuadConfig:
    """Tolerance and budget settings for one integration call.

    ``breakpoints`` are interior points where the integrand loses
    smoothness; the interval is split there before refinement starts.
    """

    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_subdivisions: int = 2000
    breakpoints: tuple = ()

    def __post_init__(self):
        if not (self.abs_tol > 0.0):
            raise DomainError("abs_tol must be positive")
        if not (self.rel_tol > 0.0):
            raise DomainError("rel_tol must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")
        bps = tuple(float(b) for b in self.breakpoints)
        if list(bps) != sorted(bps):
            raise DomainError("breakpoints must be sorted ascending")
        object.__setattr__(self, "breakpoints", bps)

    def with_breakpoints(self, bps):
        return QuadConfig(self.abs_tol, self.rel_tol, self.max_subdivisions, tuple(sorted(bps)))

    def tightened(self, factor=100.0):
        return QuadConfig(
            self.abs_tol / factor, self.rel_tol / factor, self.max_subdivisions, self.breakpoints
        )


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class QuadResult:
    value: float
    err_estimate: float
    subdivisions: int
    converged: bool

    def scaled(self, c):
        """Result of multiplying the integrand by the constant ``c``."""
        return QuadResult(self.value * c, self.err_estimate * abs(c), self.subdivisions, self.converged)


def _eval_panel(f, lo, hi):
    if isinstance(f, kernels.IntegrandSpec):
        return kernels.cell(f, lo, hi)
    return kernels.cell_callable(f, lo, hi)


def _adaptive(f, lo, hi, cfg, interior_bps):
    edges = [lo, *interior_bps, hi]
    heap = []
    counter = 0
    total = 0.0
    toterr = 0.0
    count = 0
    span = hi - lo
    for left, right in zip(edges[:-1], edges[1:]):
        val, err = _eval_panel(f, left, right)
        if not math.isfinite(val):
            raise NonFiniteIntegrand(f"integrand non-finite on [{left!r}, {right!r}]")
        total += val
        toterr += err
        count += 1
        heapq.heappush(heap, (-err, counter, left, right, val, err))
        counter += 1
    while True:
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        if toterr <= tol:
            return QuadResult(total, toterr, count, True)
        if count + 2 > cfg.max_subdivisions or not heap:
            raise NonConvergence(
                f"quadrature budget exhausted: err {toterr:.3e} > tol {tol:.3e}",
                QuadResult(total, toterr, count, False),
            )
        _, _, left, right, val, err = heapq.heappop(heap)
        width = right - left
        if width < _MIN_WIDTH_FACTOR * max(abs(left), abs(right), span):
            # Interval at round-off width: its error can no longer shrink.
            # Leave it out of the heap; its estimate stays in the total.
            continue
        mid = 0.5 * (left + right)
        v1, e1 = _eval_panel(f, left, mid)
        v2, e2 = _eval_panel(f, mid, right)
        if not (math.isfinite(v1) and math.isfinite(v2)):
            raise NonFiniteIntegrand(f"integrand non-finite on [{left!r}, {right!r}]")
        total += v1 + v2 - val
        toterr += e1 + e2 - err
        count += 2
        heapq.heappush(heap, (-e1, counter, left, mid, v1, e1))
        counter += 1
        heapq.heappush(heap, (-e2, counter, mid, right, v2, e2))
        counter += 1


def integrate(f, lo: float, hi: float, cfg: QuadConfig = DEFAULT_CONFIG) -> QuadResult:
    """Integral of ``f`` over ``[lo, hi]``.

    ``f`` is either a scalar Python callable or a prebuilt
    :class:`kernels.IntegrandSpec`. The interval is split at every
    configured breakpoint before adaptive refinement.
    """
    lo = float(lo)
    hi = float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("integration endpoints must be finite")
    if not lo < hi:
        raise DomainError(f"integration requires lo < hi, got [{lo!r}, {hi!r}]")
    for b in cfg.breakpoints:
        if not (lo < b < hi):
            raise DomainError(f"breakpoint {b!r} not strictly inside ({lo!r}, {hi!r})")
    return _adaptive(f, lo, hi, cfg, cfg.breakpoints)


def integrate_endpoint_singular(
    f,
    lo: float,
    hi: float,
    alpha: float,
    singular_end: str,
    cfg: QuadConfig = DEFAULT_CONFIG,
) -> QuadResult:
    """Integral of ``f(t) * w(t)`` with an endpoint power weight.

    ``w(t) = (t - lo)^(alpha - 1)`` for ``singular_end='lower'`` and
    ``(hi - t)^(alpha - 1)`` for ``'upper'``. ``f`` is the smooth part:
    a scalar callable, or an IntegrandSpec whose kernel is K_PLAIN or
    K_COMP. For ``alpha < 1`` the substitution ``u = (t - end)^alpha``
    removes the singularity exactly; breakpoints are mapped into the
    substituted variable.
    """
    alpha = float(alpha)
    if not (alpha > 0.0 and math.isfinite(alpha)):
        raise InvalidAlpha(f"alpha must be a positive finite real, got {alpha!r}")
    if singular_end not in ("lower", "upper"):
        raise DomainError(f"singular_end must be 'lower' or 'upper', got {singular_end!r}")
    lo = float(lo)
    hi = float(hi)
    if not lo < hi:
        raise DomainError(f"integration requires lo < hi, got [{lo!r}, {hi!r}]")
    for b in cfg.breakpoints:
        if not (lo < b < hi):
            raise DomainError(f"breakpoint {b!r} not strictly inside ({lo!r}, {hi!r})")

    if alpha >= 1.0:
        am1 = alpha - 1.0
        if isinstance(f, kernels.IntegrandSpec):
            if f.kcode not in (kernels.K_PLAIN, kernels.K_COMP):
                raise DomainError("singular weight needs a plain or composed smooth part")
            if singular_end == "lower":
                kcode = kernels.K_WLOWER if f.kcode == kernels.K_PLAIN else kernels.K_COMP_WLOWER
                kparams = np.array([lo, am1])
            else:
                kcode = kernels.K_WUPPER if f.kcode == kernels.K_PLAIN else kernels.K_COMP_WUPPER
                kparams = np.array([hi, am1])
            g = kernels.IntegrandSpec(f.fcode, f.fparams, f.deriv, kcode, kparams)
        else:
            if singular_end == "lower":
                g = lambda t: f(t) * (t - lo) ** am1
            else:
                g = lambda t: f(t) * (hi - t) ** am1
        return _adaptive(g, lo, hi, cfg, cfg.breakpoints)

    # alpha < 1: u = (t - lo)^alpha (resp. (hi - t)^alpha), dt weight absorbed.
    inv = 1.0 / alpha
    width = hi - lo
    u_hi = width**alpha
    if singular_end == "lower":
        bps_u = tuple(sorted((b - lo) ** alpha for b in cfg.breakpoints))
        t0 = lo
        tcode = kernels.T_LO
    else:
        bps_u = tuple(sorted((hi - b) ** alpha for b in cfg.breakpoints))
        t0 = hi
        tcode = kernels.T_HI
    bps_u = tuple(b for b in bps_u if 0.0 < b < u_hi)
    if isinstance(f, kernels.IntegrandSpec):
        if f.kcode not in (kernels.K_PLAIN, kernels.K_COMP):
            raise DomainError("singular weight needs a plain or composed smooth part")
        g = kernels.IntegrandSpec(
            f.fcode, f.fparams, f.deriv, f.kcode, f.kparams, tcode, np.array([t0, inv])
        )
    else:
        if singular_end == "lower":
            g = lambda u: f(t0 + u**inv)
        else:
            g = lambda u: f(t0 - u**inv)
    try:
        res = _adaptive(g, 0.0, u_hi, cfg, bps_u)
    except NonConvergence as exc:
        if exc.result is not None:
            exc.result = exc.result.scaled(inv)
        raise
    return res.scaled(inv)


@dataclass
class QuadDiagnostics:
    """Accumulates quadrature health data across the calls of one instance."""

    max_err: float = 0.0
    subdivisions: int = 0
    calls: int = 0

    def record(self, res: QuadResult):
        self.max_err = max(self.max_err, res.err_estimate)
        self.subdivisions += res.subdivisions
        self.calls += 1

    def merge(self, other: "QuadDiagnostics"):
        self.max_err = max(self.max_err, other.max_err)
        self.subdivisions += other.subdivisions
        self.calls += other.calls
