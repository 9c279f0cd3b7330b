"""Function registry, random generators, and convexity-class certifiers.

The classes checked here compare a function along geometric paths
x^t y^(1-t) against arithmetic, power-weighted, multiplicative, or
supremum combinations of the endpoint values:

* GA:               f(x^t y^(1-t)) <= t f(x) + (1-t) f(y)
* GA-s:             f(x^t y^(1-t)) <= t^s f(x) + (1-t)^s f(y)
* GG:               f(x^t y^(1-t)) <= f(x)^t f(y)^(1-t)   (needs f > 0)
* quasi-geometric:  f(x^t y^(1-t)) <= sup{f(x), f(y)}
* sm-GA:            f(x^t y^(m(1-t))) <= t^s f(x) + m (1 - t^s) f(y)

A certificate is always sample-based: a dense lattice plus seeded random
samples. Verdicts never claim a proof; a violation carries a replayable
witness. The violation threshold lhs > rhs + 1e-9 (1 + |rhs|) keeps
floating-point noise at equality cases from producing false witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from . import kernels
from .errors import DomainError, GGRequiresPositive, MissingDerivative, UnknownFunction
from .fracint import Interval

_CLASS_ALIASES = {
    "ga": "GA",
    "GA": "GA",
    "ga-s": "GA-s",
    "GA-s": "GA-s",
    "gg": "GG",
    "GG": "GG",
    "quasi": "quasi-geometric",
    "quasi-geometric": "quasi-geometric",
    "sm": "sm-GA",
    "sm-ga": "sm-GA",
    "sm-GA": "sm-GA",
}

CLASS_NAMES = ("GA", "GA-s", "GG", "quasi-geometric", "sm-GA")

VIOLATION_TOL = 1e-9


def canonical_class(name: str) -> str:
    try:
        return _CLASS_ALIASES[name]
    except KeyError:
        raise DomainError(f"unknown convexity class {name!r}; expected one of {CLASS_NAMES}")


@dataclass(frozen=True)
class Domain:
    """The half-open interval (lo, hi] on the positive axis; hi may be inf."""

    lo: float
    hi: float

    def __post_init__(self):
        if not (self.lo >= 0.0 and self.hi > self.lo):
            raise DomainError(f"bad domain ({self.lo!r}, {self.hi!r}]")

    def contains(self, x: float) -> bool:
        return x > self.lo and (math.isinf(self.hi) or x <= self.hi)


POSITIVE_AXIS = Domain(0.0, math.inf)


@dataclass(frozen=True)
class ClassParams:
    """The (s, m) exponents of the power-weighted classes, both in (0, 1]."""

    s: float = 1.0
    m: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.s <= 1.0:
            raise DomainError(f"class parameter s must be in (0, 1], got {self.s!r}")
        if not 0.0 < self.m <= 1.0:
            raise DomainError(f"class parameter m must be in (0, 1], got {self.m!r}")


@dataclass(frozen=True)
class Witness:
    x: float
    y: float
    t: float
    lhs: float
    rhs: float
    gap: float


@dataclass(frozen=True)
class ClassCertificate:
    class_name: str
    params: ClassParams
    verdict: str  # 'certified-on-samples' | 'violated'
    witness: Optional[Witness]
    samples_used: int

    @property
    def certified(self) -> bool:
        return self.verdict == "certified-on-samples"


@dataclass(frozen=True)
class FunctionHandle:
    """A named real function on the positive axis with optional derivative.

    Table-backed handles (fcode >= 0) evaluate through the shared numeric
    kernels and can ride the compiled quadrature path; callable-backed
    handles work everywhere through the generic path. ``kinks`` are the
    interior points where smoothness degrades; quadrature splits there.
    """

    name: str
    domain: Domain = POSITIVE_AXIS
    fcode: int = kernels.F_NONE
    fparams: np.ndarray = field(default_factory=lambda: np.zeros(0))
    kinks: tuple = ()
    known_classes: tuple = ()
    value_fn: Optional[Callable] = None
    deriv_fn: Optional[Callable] = None

    @property
    def has_derivative(self) -> bool:
        return self.fcode >= 0 or self.deriv_fn is not None

    def _check_domain(self, x):
        lo, hi = self.domain.lo, self.domain.hi
        if lo == 0.0 and math.isinf(hi):
            return
        arr = np.asarray(x, dtype=np.float64)
        # tiny upper allowance: powers of in-domain points round off
        if np.any(arr <= lo) or (math.isfinite(hi) and np.any(arr > hi * (1.0 + 1e-12))):
            raise DomainError(
                f"{self.name} evaluated outside its domain ({lo!r}, {hi!r}]"
            )

    def value(self, x):
        self._check_domain(x)
        if self.fcode >= 0:
            return kernels.fval_array(self.fcode, self.fparams, x)
        if self.value_fn is None:
            raise DomainError(f"{self.name} has no value evaluator")
        return self.value_fn(np.asarray(x, dtype=np.float64)) if np.ndim(x) else float(
            self.value_fn(float(x))
        )

    def derivative(self, x):
        self._check_domain(x)
        if self.fcode >= 0:
            return kernels.fval_array(self.fcode, self.fparams, x, deriv=True)
        if self.deriv_fn is None:
            raise MissingDerivative(f"{self.name} has no derivative evaluator")
        return self.deriv_fn(np.asarray(x, dtype=np.float64)) if np.ndim(x) else float(
            self.deriv_fn(float(x))
        )

    def __call__(self, x):
        return self.value(x)


def from_callables(name, domain=POSITIVE_AXIS, value=None, derivative=None, kinks=()):
    """Handle wrapping plain Python evaluators (generic quadrature path)."""
    if value is None:
        raise DomainError("a value evaluator is required")
    return FunctionHandle(
        name=name, domain=domain, value_fn=value, deriv_fn=derivative, kinks=tuple(kinks)
    )


def _table(name, fcode, fparams=(), domain=POSITIVE_AXIS, kinks=(), classes=()):
    return FunctionHandle(
        name=name,
        domain=domain,
        fcode=fcode,
        fparams=np.asarray(fparams, dtype=np.float64),
        kinks=tuple(kinks),
        known_classes=tuple(classes),
    )


def _build_registry():
    pp_domain = Domain(0.0, 4.0)
    handles = [
        _table("const-1", kernels.F_CONST, [1.0], classes=("GA", "GG", "quasi-geometric")),
        _table("const-3", kernels.F_CONST, [3.0], classes=("GA", "GG", "quasi-geometric")),
        _table("identity", kernels.F_POW, [1.0], classes=("GA", "GG", "quasi-geometric")),
        _table("log", kernels.F_LOG, classes=("GA", "quasi-geometric")),
        _table("log-sq", kernels.F_LOGSQ, classes=("GA", "quasi-geometric")),
        _table("pow-neg1", kernels.F_POW, [-1.0], classes=("GA", "GG", "quasi-geometric")),
        _table("pow-half", kernels.F_POW, [0.5], classes=("GA", "GG", "quasi-geometric")),
        _table("pow-2", kernels.F_POW, [2.0], classes=("GA", "GG", "quasi-geometric")),
        _table("exp", kernels.F_EXP, classes=("GA", "GG", "quasi-geometric")),
        _table("xlogx", kernels.F_XLOGX),
        _table("xlogsq", kernels.F_PRIMLOG, [0.0, 0.0, 1.0, 0.0, 1.0, 0.0]),
        _table(
            "paper-piecewise",
            kernels.F_PIECEWISE,
            domain=pp_domain,
            kinks=(1.0,),
            classes=("quasi-geometric",),
        ),
        _table(
            "paper-piecewise-smooth",
            kernels.F_PSMOOTH,
            domain=pp_domain,
            kinks=(1.0, 1.5),
            classes=("quasi-geometric",),
        ),
    ]
    return {h.name: h for h in handles}


_REGISTRY = _build_registry()


def registry():
    """All fixed registry handles, in stable order."""
    return list(_REGISTRY.values())


def lookup(name: str) -> FunctionHandle:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownFunction(
            f"unknown function {name!r}; known: {', '.join(_REGISTRY)} "
            "or ga-random:SEED / ga-s-random:SEED / ga-deriv-random:SEED / sm-deriv-random:SEED"
        )


def resolve(name: str, iv: Optional[Interval] = None, s: float = 1.0) -> FunctionHandle:
    """Resolve a CLI/sweep function source, including generator specs."""
    if ":" in name:
        prefix, _, tail = name.partition(":")
        try:
            seed = int(tail)
        except ValueError:
            raise UnknownFunction(f"bad generator seed in {name!r}")
        iv = iv or Interval(0.5, 4.0)
        if prefix == "ga-random":
            return make_ga_convex(seed, iv)
        if prefix == "ga-s-random":
            return make_ga_s_convex(seed, s, iv)
        if prefix == "ga-deriv-random":
            return make_ga_deriv(seed, iv)
        if prefix == "sm-deriv-random":
            return make_sm_deriv(seed)
        raise UnknownFunction(f"unknown generator prefix {prefix!r}")
    return lookup(name)


def _draw_convexlog_params(rng, iv: Interval, nonneg: bool):
    lo, hi = math.log(iv.a), math.log(iv.b)
    nq = int(rng.integers(1, 3))
    ne = int(rng.integers(0, 3))
    if nonneg:
        c0 = float(rng.uniform(0.05, 1.5))
        c1 = 0.0
    else:
        c0 = float(rng.uniform(-1.0, 1.0))
        c1 = float(rng.uniform(-2.0, 2.0))
    p = [c0, c1, float(nq), float(ne)]
    for _ in range(nq):
        p.append(float(rng.uniform(0.1, 2.0)))
        p.append(float(rng.uniform(lo, hi)))
    for _ in range(ne):
        p.append(float(rng.uniform(0.05, 1.0)))
        d = float(rng.uniform(-3.0, 3.0))
        while abs(d + 1.0) < 0.15:  # keep the closed-form primitive well conditioned
            d = float(rng.uniform(-3.0, 3.0))
        p.append(d)
        p.append(float(rng.uniform(lo, hi)))
    return np.asarray(p, dtype=np.float64)


def convexlog_handle(name, c0, c1, quads=(), exps=(), primitive=False):
    """Handle for g(ln x) with g(u) = c0 + c1 u + sum w (u-c)^2 + sum v e^{d(u-e)}.

    ``quads`` is a sequence of (w, c) pairs, ``exps`` of (v, d, e) triples.
    With ``primitive=True`` the handle is the closed-form primitive whose
    derivative equals g(ln x).
    """
    p = [float(c0), float(c1), float(len(quads)), float(len(exps))]
    for w, c in quads:
        p.extend((float(w), float(c)))
    for v, d, e in exps:
        p.extend((float(v), float(d), float(e)))
    code = kernels.F_PRIMLOG if primitive else kernels.F_CONVEXLOG
    return _table(name, code, p, classes=() if primitive else ("GA", "quasi-geometric"))


def make_ga_convex(seed: int, iv: Interval) -> FunctionHandle:
    """Random GA-convex handle: g on logs drawn as a positive combination
    of quadratics and exponentials, convex by construction."""
    rng = np.random.default_rng(seed)
    params = _draw_convexlog_params(rng, iv, nonneg=False)
    return FunctionHandle(
        name=f"ga-random:{seed}",
        fcode=kernels.F_CONVEXLOG,
        fparams=params,
        known_classes=("GA", "quasi-geometric"),
    )


def make_ga_s_convex(seed: int, s: float, iv: Interval) -> FunctionHandle:
    """Random handle valid for GA-s checks at the given s.

    For s = 1 this is exactly the make_ga_convex output. For s < 1 the
    draw is restricted to nonnegative combinations, since a nonnegative
    GA-convex function satisfies the s-weighted inequality for every s.
    """
    if not 0.0 < s <= 1.0:
        raise DomainError(f"s must be in (0, 1], got {s!r}")
    if s == 1.0:
        return make_ga_convex(seed, iv)
    rng = np.random.default_rng(seed)
    params = _draw_convexlog_params(rng, iv, nonneg=True)
    return FunctionHandle(
        name=f"ga-s-random:{seed}",
        fcode=kernels.F_CONVEXLOG,
        fparams=params,
        known_classes=("GA", "GA-s", "GG", "quasi-geometric"),
    )


def make_ga_deriv(seed: int, iv: Interval) -> FunctionHandle:
    """Handle whose derivative is a random nonnegative GA-convex function.

    Built from the closed-form primitive table, so both the values and
    the derivative are available analytically.
    """
    rng = np.random.default_rng(seed)
    params = _draw_convexlog_params(rng, iv, nonneg=True)
    return FunctionHandle(
        name=f"ga-deriv-random:{seed}", fcode=kernels.F_PRIMLOG, fparams=params
    )


def make_sm_deriv(seed: int) -> FunctionHandle:
    """Handle whose derivative is w ln^2 x: the log-square shape vanishes
    at x = 1, which the m-weighted classes require of nonconstant members."""
    rng = np.random.default_rng(seed)
    w = float(rng.uniform(0.2, 2.5))
    return FunctionHandle(
        name=f"sm-deriv-random:{seed}",
        fcode=kernels.F_PRIMLOG,
        fparams=np.array([0.0, 0.0, 1.0, 0.0, w, 0.0]),
    )


def abs_deriv_pow(f: FunctionHandle, q: float) -> FunctionHandle:
    """The handle |f'|^q used to certify bound hypotheses."""
    if not f.has_derivative:
        raise MissingDerivative(f"{f.name} has no derivative evaluator")
    q = float(q)

    def value(x):
        return np.abs(f.derivative(x)) ** q

    return FunctionHandle(
        name=f"|{f.name}'|^{q:g}",
        domain=f.domain,
        kinks=f.kinks,
        value_fn=value,
    )


def _as_bounds(iv) -> tuple:
    if isinstance(iv, Interval):
        return iv.a, iv.b
    lo, hi = float(iv[0]), float(iv[1])
    if not (math.isfinite(lo) and math.isfinite(hi) and 0.0 < lo < hi):
        raise DomainError(f"bad check interval ({lo!r}, {hi!r})")
    return lo, hi


def check_class(
    f: FunctionHandle,
    cls: str,
    params: ClassParams,
    iv,
    n_grid: int = 21,
    n_random: int = 200,
    seed: int = 0,
) -> ClassCertificate:
    """Sampled check of a convexity-class inequality over an interval.

    Evaluates the class inequality on an n_grid^3 lattice of (x, y, t)
    with t including 0 and 1 exactly, plus seeded random samples. The
    worst violation, if any, is returned as a replayable witness.
    """
    cls = canonical_class(cls)
    lo, hi = _as_bounds(iv)
    if n_grid < 3:
        raise DomainError(f"n_grid must be >= 3, got {n_grid!r}")
    if not (f.domain.contains(lo) and f.domain.contains(hi)):
        raise DomainError(
            f"check interval ({lo!r}, {hi!r}) leaves the domain of {f.name}"
        )

    xs = np.linspace(lo, hi, n_grid)
    ts = np.linspace(0.0, 1.0, n_grid)
    X, Y, T = (arr.ravel() for arr in np.meshgrid(xs, xs, ts, indexing="ij"))
    if n_random > 0:
        rng = np.random.default_rng(seed)
        X = np.concatenate([X, rng.uniform(lo, hi, n_random)])
        Y = np.concatenate([Y, rng.uniform(lo, hi, n_random)])
        T = np.concatenate([T, rng.random(n_random)])

    s, m = params.s, params.m
    if cls == "sm-GA":
        Z = X**T * Y ** (m * (1.0 - T))
        if math.isfinite(f.domain.hi) and float(np.max(Z)) > f.domain.hi * (1.0 + 1e-12):
            raise DomainError(
                f"sm-GA geodesic point {float(np.max(Z))!r} leaves the domain of {f.name}"
            )
    else:
        Z = X**T * Y ** (1.0 - T)

    fx = np.asarray(f.value(X), dtype=np.float64)
    fy = np.asarray(f.value(Y), dtype=np.float64)
    lhs = np.asarray(f.value(Z), dtype=np.float64)

    if cls == "GA":
        rhs = T * fx + (1.0 - T) * fy
    elif cls == "GA-s":
        rhs = T**s * fx + (1.0 - T) ** s * fy
    elif cls == "GG":
        if float(np.min(fx)) <= 0.0 or float(np.min(fy)) <= 0.0:
            raise GGRequiresPositive(
                f"GG check of {f.name} sampled a nonpositive value on ({lo!r}, {hi!r})"
            )
        rhs = fx**T * fy ** (1.0 - T)
    elif cls == "quasi-geometric":
        rhs = np.maximum(fx, fy)
    else:  # sm-GA
        rhs = T**s * fx + m * (1.0 - T**s) * fy

    margin = lhs - rhs - VIOLATION_TOL * (1.0 + np.abs(rhs))
    i = int(np.argmax(margin))
    samples = int(X.size)
    if margin[i] > 0.0:
        witness = Witness(
            x=float(X[i]),
            y=float(Y[i]),
            t=float(T[i]),
            lhs=float(lhs[i]),
            rhs=float(rhs[i]),
            gap=float(lhs[i] - rhs[i]),
        )
        return ClassCertificate(cls, params, "violated", witness, samples)
    return ClassCertificate(cls, params, "certified-on-samples", None, samples)
