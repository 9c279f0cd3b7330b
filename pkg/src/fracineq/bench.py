"""Timing comparison of the two panel backends.

Run as ``python -m fracineq.bench``. Each workload is executed once per
backend after a warmup call; the compiled backend is skipped when numba
is not importable. Numbers are wall seconds, lower is better.
"""

from __future__ import annotations

import time

from . import kernels
from .bounds import BoundKind, verify_instance
from .fracint import Interval
from .funcspace import ClassParams, lookup
from .functionals import Params, i_f_direct, i_f_lemma
from .harness import SweepSpec, draw_instances
from .quadrature import DEFAULT_CONFIG


def _bench_weights():
    from .bounds import _abc

    total = 0.0
    for i in range(12):
        al = 0.3 + 0.4 * i
        for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
            for rho in (-3.0, -0.5, 0.0, 1.5, 4.0):
                total += _abc(al, lam, rho, 1, 0.7, DEFAULT_CONFIG)
    return total


def _bench_identity():
    f = lookup("xlogx")
    iv = Interval(0.5, 4.0)
    total = 0.0
    for al in (0.4, 0.9, 1.7, 2.6, 3.8):
        for lam in (0.0, 1.0 / 3.0, 0.7, 1.0):
            p = Params(iv, 1.7, lam, al, 1.0, ClassParams(1.0, 1.0))
            total += abs(i_f_direct(f, p) - i_f_lemma(f, p))
    return total


def _bench_verify():
    spec = SweepSpec(n_samples=25, seed=5)
    instances, _ = draw_instances(spec)
    n_pass = 0
    for inst in instances:
        rep = verify_instance(inst.kind, inst.f, inst.p, inst.cert, M=inst.M)
        n_pass += rep.passed
    return n_pass


_WORKLOADS = (
    ("weight integrals (360 quadratures)", _bench_weights),
    ("identity dual evaluation (20 pairs)", _bench_identity),
    ("sweep verify (75 instances)", _bench_verify),
)


def main():
    backends = ["numpy"]
    if kernels.have_numba():
        backends.insert(0, "numba")
    else:
        print("numba not importable; timing the numpy backend only")
    previous = kernels.backend_name()
    times = {}
    try:
        for backend in backends:
            kernels.set_backend(backend)
            _bench_weights()  # warmup covers JIT compilation
            times[backend] = []
            for name, fn in _WORKLOADS:
                t0 = time.perf_counter()
                fn()
                times[backend].append(time.perf_counter() - t0)
    finally:
        kernels.set_backend(previous)
    width = max(len(n) for n, _ in _WORKLOADS)
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for i, (name, _) in enumerate(_WORKLOADS):
        row = f"{name:<{width}}  " + "  ".join(f"{times[b][i]:>9.4f}s" for b in backends)
        if len(backends) == 2:
            ratio = times["numpy"][i] / max(times["numba"][i], 1e-12)
            row += f"  {ratio:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
