"""Low-level integrand kernels and the 15-point Gauss-Kronrod panel.

Every quadrature-heavy operation in the package describes its integrand
as a small numeric record (:class:`IntegrandSpec`) instead of a Python
closure: a function-table code plus parameters, a kernel code selecting
how the function value enters the integrand, and an optional variable
transform. One compiled routine then evaluates a whole Gauss-Kronrod
panel for any such record.

Two interchangeable backends implement the panel evaluation:

* a numba ``@njit`` scalar loop (default when numba imports), and
* a vectorized pure-numpy twin.

Set ``FRACINEQ_NO_NUMBA=1`` before import to force the numpy path; the
package also falls back to numpy automatically when numba is absent.
Both backends compute the same panel sums up to floating round-off.
Arbitrary Python callables are supported through :func:`cell_callable`,
which runs the identical panel arithmetic with pointwise evaluation.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    _HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15
# abscissae/weights). Positive abscissae; arrays below expand both signs.
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_WG7 = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


def _expand_rule():
    nodes = np.zeros(15)
    wk = np.zeros(15)
    wg = np.zeros(15)
    for j in range(7):
        nodes[j] = _XGK[j]
        nodes[14 - j] = -_XGK[j]
        wk[j] = _WGK[j]
        wk[14 - j] = _WGK[j]
    nodes[7] = 0.0
    wk[7] = _WGK[7]
    # The embedded Gauss rule lives on the odd-indexed Kronrod abscissae.
    for j, g in zip((1, 3, 5), _WG7[:3]):
        wg[j] = g
        wg[14 - j] = g
    wg[7] = _WG7[3]
    return nodes, wk, wg


NODES, WK, WG = _expand_rule()

_EPS = float(np.finfo(np.float64).eps)

# Function-table codes.
F_CONST = 0
F_POW = 1
F_LOG = 2
F_LOGSQ = 3
F_EXP = 4
F_XLOGX = 5
F_PIECEWISE = 6
F_PSMOOTH = 7
F_CONVEXLOG = 8
F_PRIMLOG = 9
F_NONE = -1  # handle backed by Python callables only

# Kernel codes: how the table value enters the integrand g(t).
K_PLAIN = 0  # g(t) = F(t)
K_COMP = 1  # g(t) = F(e^t)
K_WLOWER = 2  # g(t) = F(t) * (t - c)^e          kparams [c, e]
K_WUPPER = 3  # g(t) = F(t) * (c - t)^e
K_COMP_WLOWER = 4  # g(t) = F(e^t) * (t - c)^e
K_COMP_WUPPER = 5  # g(t) = F(e^t) * (c - t)^e
K_LEMMA = 6  # g(t) = (t^alpha - lam) * r^t * F'(y r^t)   kparams [alpha, lam, r, y]
K_ABC = 7  # g(t) = |t^alpha - lam| e^{rho t} w(t)      kparams [alpha, lam, rho, wt, s]

# Weight selector for K_ABC.
W_ONE = 0
W_TS = 1  # t^s
W_OMTS = 2  # (1-t)^s
W_OMTPS = 3  # 1 - t^s

# Variable transforms applied to the integration variable before the kernel.
T_NONE = 0
T_LO = 1  # t = t0 + u^p    tparams [t0, p]
T_HI = 2  # t = t0 - u^p

_EMPTY = np.zeros(0)
_ZEROS2 = np.zeros(2)


@dataclass(frozen=True)
class IntegrandSpec:
    """Numeric description of an integrand for the table backends."""

    fcode: int
    fparams: np.ndarray = field(default_factory=lambda: _EMPTY)
    deriv: bool = False
    kcode: int = K_PLAIN
    kparams: np.ndarray = field(default_factory=lambda: _ZEROS2)
    tcode: int = T_NONE
    tparams: np.ndarray = field(default_factory=lambda: _ZEROS2)


@njit(cache=True)
def _fval(code, p, x, deriv):
    if code == 0:
        if deriv:
            return 0.0
        return p[0]
    if code == 1:
        pw = p[0]
        if deriv:
            return pw * x ** (pw - 1.0)
        return x**pw
    if code == 2:
        if deriv:
            return 1.0 / x
        return math.log(x)
    if code == 3:
        lx = math.log(x)
        if deriv:
            return 2.0 * lx / x
        return lx * lx
    if code == 4:
        return math.exp(x)
    if code == 5:
        lx = math.log(x)
        if deriv:
            return lx
        return x * lx - x
    if code == 6:
        if x <= 1.0:
            if deriv:
                return 0.0
            return 1.0
        if deriv:
            return 2.0 * (x - 2.0)
        return (x - 2.0) * (x - 2.0)
    if code == 7:
        if x <= 1.0:
            if deriv:
                return 0.0
            return 1.0
        if x <= 1.5:
            if deriv:
                return 4.0 * (x - 1.0) * (x - 2.0)
            return 1.0 + 4.0 * x**3 / 3.0 - 6.0 * x * x + 8.0 * x - 10.0 / 3.0
        if deriv:
            return 2.0 * (x - 2.0)
        return (x - 2.0) * (x - 2.0) + 5.0 / 12.0
    if code == 8:
        u = math.log(x)
        c1 = p[1]
        nq = int(p[2])
        ne = int(p[3])
        off = 4 + 2 * nq
        if deriv:
            acc = c1
            for j in range(nq):
                acc += 2.0 * p[4 + 2 * j] * (u - p[5 + 2 * j])
            for j in range(ne):
                acc += (
                    p[off + 3 * j]
                    * p[off + 3 * j + 1]
                    * math.exp(p[off + 3 * j + 1] * (u - p[off + 3 * j + 2]))
                )
            return acc / x
        acc = p[0] + c1 * u
        for j in range(nq):
            d = u - p[5 + 2 * j]
            acc += p[4 + 2 * j] * d * d
        for j in range(ne):
            acc += p[off + 3 * j] * math.exp(p[off + 3 * j + 1] * (u - p[off + 3 * j + 2]))
        return acc
    if code == 9:
        # Closed-form primitive of the code-8 combination: the derivative
        # of this function is exactly g(ln x) for the same parameters.
        u = math.log(x)
        nq = int(p[2])
        ne = int(p[3])
        off = 4 + 2 * nq
        if deriv:
            acc = p[0] + p[1] * u
            for j in range(nq):
                d = u - p[5 + 2 * j]
                acc += p[4 + 2 * j] * d * d
            for j in range(ne):
                acc += p[off + 3 * j] * math.exp(p[off + 3 * j + 1] * (u - p[off + 3 * j + 2]))
            return acc
        acc = p[0] + p[1] * (u - 1.0)
        for j in range(nq):
            d = u - p[5 + 2 * j]
            acc += p[4 + 2 * j] * (d * d - 2.0 * d + 2.0)
        acc *= x
        for j in range(ne):
            dd = p[off + 3 * j + 1]
            acc += (
                p[off + 3 * j]
                * math.exp(-dd * p[off + 3 * j + 2])
                * x ** (dd + 1.0)
                / (dd + 1.0)
            )
        return acc
    return math.nan


@njit(cache=True)
def _cell_jit(fcode, fparams, deriv, kcode, kparams, tcode, tparams, lo, hi):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    fv = np.empty(15)
    resk = 0.0
    resg = 0.0
    for j in range(15):
        u = mid + half * NODES[j]
        if tcode == 1:
            t = tparams[0] + u ** tparams[1]
        elif tcode == 2:
            t = tparams[0] - u ** tparams[1]
        else:
            t = u
        if kcode == 0:
            y = _fval(fcode, fparams, t, deriv)
        elif kcode == 1:
            y = _fval(fcode, fparams, math.exp(t), deriv)
        elif kcode == 2:
            y = _fval(fcode, fparams, t, deriv) * (t - kparams[0]) ** kparams[1]
        elif kcode == 3:
            y = _fval(fcode, fparams, t, deriv) * (kparams[0] - t) ** kparams[1]
        elif kcode == 4:
            y = _fval(fcode, fparams, math.exp(t), deriv) * (t - kparams[0]) ** kparams[1]
        elif kcode == 5:
            y = _fval(fcode, fparams, math.exp(t), deriv) * (kparams[0] - t) ** kparams[1]
        elif kcode == 6:
            rt = kparams[2] ** t
            y = (t ** kparams[0] - kparams[1]) * rt * _fval(fcode, fparams, kparams[3] * rt, deriv)
        else:
            y = abs(t ** kparams[0] - kparams[1]) * math.exp(kparams[2] * t)
            wt = int(kparams[3])
            if wt == 1:
                y *= t ** kparams[4]
            elif wt == 2:
                y *= (1.0 - t) ** kparams[4]
            elif wt == 3:
                y *= 1.0 - t ** kparams[4]
        fv[j] = y
        resk += WK[j] * y
        resg += WG[j] * y
    reskh = 0.5 * resk
    resasc = 0.0
    resabs = 0.0
    for j in range(15):
        resasc += WK[j] * abs(fv[j] - reskh)
        resabs += WK[j] * abs(fv[j])
    value = resk * half
    err = abs((resk - resg) * half)
    resasc *= half
    resabs *= half
    if resasc != 0.0 and err != 0.0:
        scaled = (200.0 * err / resasc) ** 1.5
        if scaled < 1.0:
            err = resasc * scaled
        else:
            err = resasc
    floor = 50.0 * 2.220446049250313e-16 * resabs
    if err < floor:
        err = floor
    return value, err


def fval_array(code, p, x, deriv=False):
    """Vectorized function-table evaluation (always numpy).

    ``x`` may be a scalar or ndarray; returns matching shape. Used by the
    registry handles for sampling, classification and finite differences.
    """
    x = np.asarray(x, dtype=np.float64)
    scalar = x.ndim == 0
    if scalar:
        x = x.reshape(1)
    if code == F_CONST:
        out = np.zeros_like(x) if deriv else np.full_like(x, p[0])
    elif code == F_POW:
        pw = p[0]
        out = pw * x ** (pw - 1.0) if deriv else x**pw
    elif code == F_LOG:
        out = 1.0 / x if deriv else np.log(x)
    elif code == F_LOGSQ:
        lx = np.log(x)
        out = 2.0 * lx / x if deriv else lx * lx
    elif code == F_EXP:
        out = np.exp(x)
    elif code == F_XLOGX:
        lx = np.log(x)
        out = lx if deriv else x * lx - x
    elif code == F_PIECEWISE:
        if deriv:
            out = np.where(x <= 1.0, 0.0, 2.0 * (x - 2.0))
        else:
            out = np.where(x <= 1.0, 1.0, (x - 2.0) ** 2)
    elif code == F_PSMOOTH:
        out = np.empty_like(x)
        m1 = x <= 1.0
        m2 = (x > 1.0) & (x <= 1.5)
        m3 = x > 1.5
        if deriv:
            out[m1] = 0.0
            out[m2] = 4.0 * (x[m2] - 1.0) * (x[m2] - 2.0)
            out[m3] = 2.0 * (x[m3] - 2.0)
        else:
            out[m1] = 1.0
            x2 = x[m2]
            out[m2] = 1.0 + 4.0 * x2**3 / 3.0 - 6.0 * x2 * x2 + 8.0 * x2 - 10.0 / 3.0
            out[m3] = (x[m3] - 2.0) ** 2 + 5.0 / 12.0
    elif code == F_CONVEXLOG:
        u = np.log(x)
        nq = int(p[2])
        ne = int(p[3])
        off = 4 + 2 * nq
        if deriv:
            acc = np.full_like(u, p[1])
            for j in range(nq):
                acc = acc + 2.0 * p[4 + 2 * j] * (u - p[5 + 2 * j])
            for j in range(ne):
                acc = acc + p[off + 3 * j] * p[off + 3 * j + 1] * np.exp(
                    p[off + 3 * j + 1] * (u - p[off + 3 * j + 2])
                )
            out = acc / x
        else:
            acc = p[0] + p[1] * u
            for j in range(nq):
                acc = acc + p[4 + 2 * j] * (u - p[5 + 2 * j]) ** 2
            for j in range(ne):
                acc = acc + p[off + 3 * j] * np.exp(
                    p[off + 3 * j + 1] * (u - p[off + 3 * j + 2])
                )
            out = acc + np.zeros_like(u)
    elif code == F_PRIMLOG:
        u = np.log(x)
        nq = int(p[2])
        ne = int(p[3])
        off = 4 + 2 * nq
        if deriv:
            acc = p[0] + p[1] * u
            for j in range(nq):
                acc = acc + p[4 + 2 * j] * (u - p[5 + 2 * j]) ** 2
            for j in range(ne):
                acc = acc + p[off + 3 * j] * np.exp(
                    p[off + 3 * j + 1] * (u - p[off + 3 * j + 2])
                )
            out = acc + np.zeros_like(u)
        else:
            acc = p[0] + p[1] * (u - 1.0)
            for j in range(nq):
                d = u - p[5 + 2 * j]
                acc = acc + p[4 + 2 * j] * (d * d - 2.0 * d + 2.0)
            acc = acc * x
            for j in range(ne):
                dd = p[off + 3 * j + 1]
                acc = acc + (
                    p[off + 3 * j]
                    * np.exp(-dd * p[off + 3 * j + 2])
                    * x ** (dd + 1.0)
                    / (dd + 1.0)
                )
            out = acc
    else:
        raise ValueError(f"unknown function code {code}")
    return float(out[0]) if scalar else out


def _cell_numpy(fcode, fparams, deriv, kcode, kparams, tcode, tparams, lo, hi):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    u = mid + half * NODES
    if tcode == T_LO:
        t = tparams[0] + u ** tparams[1]
    elif tcode == T_HI:
        t = tparams[0] - u ** tparams[1]
    else:
        t = u
    if kcode == K_PLAIN:
        fv = fval_array(fcode, fparams, t, deriv)
    elif kcode == K_COMP:
        fv = fval_array(fcode, fparams, np.exp(t), deriv)
    elif kcode == K_WLOWER:
        fv = fval_array(fcode, fparams, t, deriv) * (t - kparams[0]) ** kparams[1]
    elif kcode == K_WUPPER:
        fv = fval_array(fcode, fparams, t, deriv) * (kparams[0] - t) ** kparams[1]
    elif kcode == K_COMP_WLOWER:
        fv = fval_array(fcode, fparams, np.exp(t), deriv) * (t - kparams[0]) ** kparams[1]
    elif kcode == K_COMP_WUPPER:
        fv = fval_array(fcode, fparams, np.exp(t), deriv) * (kparams[0] - t) ** kparams[1]
    elif kcode == K_LEMMA:
        rt = kparams[2] ** t
        fv = (t ** kparams[0] - kparams[1]) * rt * fval_array(
            fcode, fparams, kparams[3] * rt, deriv
        )
    elif kcode == K_ABC:
        fv = np.abs(t ** kparams[0] - kparams[1]) * np.exp(kparams[2] * t)
        wt = int(kparams[3])
        if wt == W_TS:
            fv = fv * t ** kparams[4]
        elif wt == W_OMTS:
            fv = fv * (1.0 - t) ** kparams[4]
        elif wt == W_OMTPS:
            fv = fv * (1.0 - t ** kparams[4])
    else:
        raise ValueError(f"unknown kernel code {kcode}")
    return _panel_from_values(fv, half)


def _panel_from_values(fv, half):
    resk = float(WK @ fv)
    resg = float(WG @ fv)
    reskh = 0.5 * resk
    resasc = float(WK @ np.abs(fv - reskh))
    resabs = float(WK @ np.abs(fv))
    value = resk * half
    err = abs((resk - resg) * half)
    resasc *= half
    resabs *= half
    if resasc != 0.0 and err != 0.0:
        scaled = (200.0 * err / resasc) ** 1.5
        err = resasc * scaled if scaled < 1.0 else resasc
    return value, max(err, 50.0 * _EPS * resabs)


_active = "numpy"
if _HAVE_NUMBA and os.environ.get("FRACINEQ_NO_NUMBA", "") not in ("1", "true", "yes"):
    _active = "numba"


def backend_name():
    """Name of the panel backend currently in use: 'numba' or 'numpy'."""
    return _active


def set_backend(name):
    """Select the panel backend at runtime (used by the benchmark)."""
    global _active
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not _HAVE_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    _active = name


def have_numba():
    return _HAVE_NUMBA


def cell(spec: IntegrandSpec, lo: float, hi: float):
    """One Gauss-Kronrod panel of a table-described integrand.

    Returns ``(value, err)`` where err is the QUADPACK-damped estimate.
    """
    fn = _cell_jit if _active == "numba" else _cell_numpy
    return fn(
        spec.fcode,
        spec.fparams,
        spec.deriv,
        spec.kcode,
        spec.kparams,
        spec.tcode,
        spec.tparams,
        lo,
        hi,
    )


def cell_callable(f, lo: float, hi: float):
    """Panel evaluation for an arbitrary scalar Python callable."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    fv = np.array([f(mid + half * NODES[j]) for j in range(15)], dtype=np.float64)
    return _panel_from_values(fv, half)


def warmup():
    """Trigger (cached) jit compilation so timed runs never pay for it."""
    if _active != "numba":
        return
    spec = IntegrandSpec(F_LOG)
    cell(spec, 1.0, 2.0)
    cell(
        IntegrandSpec(
            F_LOGSQ,
            kcode=K_LEMMA,
            kparams=np.array([1.0, 0.5, 1.5, 1.0, 0.0]),
            tcode=T_LO,
            tparams=np.array([0.0, 2.0]),
        ),
        0.0,
        1.0,
    )
