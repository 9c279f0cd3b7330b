"""Command-line front end.

Every subcommand is a thin shell over one library call; printed numbers
are the library results serialized at 17 significant digits, nothing
recomputed. Exit codes: 0 all checks passed, 1 at least one verification
failure, 2 usage or domain error (one-line diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import sys

from .bounds import BoundKind, verify_instance
from .errors import FracineqError
from .fracint import Interval, rl_left, rl_right
from .funcspace import ClassParams, check_class, resolve
from .functionals import Params
from .harness import (
    CSV_COLUMNS,
    _row_values,
    check_identity_suite,
    load_sweep_spec,
    run_acceptance,
    run_sweep,
)


def _g(v) -> str:
    return f"{float(v):.17g}"


def _cmd_rl(args) -> int:
    f = resolve(args.f)
    if args.right:
        if args.b is None:
            raise FracineqError("--right requires --b")
        res = rl_right(f, args.b, args.alpha, args.x)
    else:
        if args.a is None:
            raise FracineqError("the left-sided operator requires --a")
        res = rl_left(f, args.a, args.alpha, args.x)
    print(_g(res.value))
    print(
        f"err_estimate={_g(res.err_estimate)} subdivisions={res.subdivisions} "
        f"converged={res.converged}"
    )
    return 0


def _cmd_identity(args) -> int:
    functions = [args.f] if args.f else None
    m_values = (args.m,) if args.m is not None else (0.3, 0.7, 1.0)
    summary = check_identity_suite(functions=functions, m_values=m_values)
    print(f"max_rel_dev={_g(summary.max_rel_dev)} worst=({summary.worst})")
    print(f"max_rel_dev_m={_g(summary.max_rel_dev_m)} worst_m=({summary.worst_m})")
    print(f"sign_second_term={summary.m_sign} pairs={summary.n_checked}")
    print("identity:", "ok" if summary.passed else "violated")
    return 0 if summary.passed else 1


def _cmd_classify(args) -> int:
    f = resolve(args.f)
    params = ClassParams(args.s, args.m)
    cert = check_class(f, args.cls, params, (args.lo, args.hi))
    print(f"{f.name}: {cert.class_name} -> {cert.verdict} (samples={cert.samples_used})")
    if cert.witness is not None:
        w = cert.witness
        print(
            f"witness: x={_g(w.x)} y={_g(w.y)} t={_g(w.t)} "
            f"lhs={_g(w.lhs)} rhs={_g(w.rhs)} gap={_g(w.gap)}"
        )
    return 0 if cert.certified else 1


_VERIFY_KINDS = {
    "hh": (BoundKind("hh", "left"), BoundKind("hh", "right")),
    "ga-s": (BoundKind("ga-s"),),
    "quasi": (BoundKind("quasi-geometric"),),
    "sm": (BoundKind("sm-ga"),),
}


def _cmd_verify(args) -> int:
    if args.theorem != "hh" and (args.lam is None or args.q is None):
        raise FracineqError(f"theorem {args.theorem} requires --lambda and --q")
    lam = 0.0 if args.lam is None else args.lam
    q = 1.0 if args.q is None else args.q
    f = resolve(args.f)
    p = Params(Interval(args.a, args.b), args.x, lam, args.alpha, q, ClassParams(args.s, args.m))
    print(",".join(CSV_COLUMNS))
    ok = True
    for kind in _VERIFY_KINDS[args.theorem]:
        rep = verify_instance(kind, f, p, instance_id=f"cli-{kind.label.replace('/', '-')}")
        print(",".join(_row_values(rep)))
        ok = ok and rep.passed
    return 0 if ok else 1


def _cmd_sweep(args) -> int:
    spec = load_sweep_spec(args.spec)
    result = run_sweep(spec, args.out)
    s = result.summary
    print(f"rows={s['n_rows']} violations={s['violations']} errors={s['errors']} seed={s['seed']}")
    for kind, d in s["per_kind"].items():
        ms = "n/a" if d["min_slack"] is None else _g(d["min_slack"])
        print(f"  {kind}: n={d['n']} violations={d['violations']} min_slack={ms}")
    print(f"sign_second_term={s['sign_second_term']}")
    for fnd in s["findings"]:
        print(f"  finding: {fnd['theorem']}/{fnd['corollary']} rel_gap={_g(fnd['max_rel_gap'])}")
    print(f"wrote {result.csv_path} and {result.json_path}")
    return 1 if s["violations"] else 0


def _cmd_suite(args) -> int:
    results = run_acceptance(quick=args.quick)
    for r in results:
        print(r.line)
    ok = all(r.passed for r in results)
    print("suite:", "ok" if ok else "FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fracineq",
        description="Fractional integrals on log scales and slack verification of their bounds.",
    )
    sub = ap.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("rl", help="evaluate one fractional integral of f along logs")
    p.add_argument("--f", required=True, help="function name or generator spec")
    p.add_argument("--a", type=float, help="left endpoint (left-sided operator)")
    p.add_argument("--b", type=float, help="right endpoint (with --right)")
    p.add_argument("--x", type=float, required=True, help="evaluation point")
    p.add_argument("--alpha", type=float, required=True, help="order, > 0")
    p.add_argument("--right", action="store_true", help="use the right-sided operator")
    p.set_defaults(func=_cmd_rl)

    p = sub.add_parser("identity", help="dual-evaluate the derivative representation")
    p.add_argument("--f", help="restrict to one function (default: whole registry)")
    p.add_argument("--m", type=float, help="restrict the m-weighted grid to one m")
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("classify", help="certify or refute a convexity class on samples")
    p.add_argument("--f", required=True)
    p.add_argument("--class", dest="cls", required=True,
                   choices=["ga", "ga-s", "gg", "quasi", "sm"])
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="verify one bound instance and print its slack row")
    p.add_argument("--theorem", required=True, choices=["hh", "ga-s", "quasi", "sm"])
    p.add_argument("--f", required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--q", type=float)
    p.add_argument("--s", type=float, default=1.0)
    p.add_argument("--m", type=float, default=1.0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="run a seeded sweep from a TOML spec")
    p.add_argument("--spec", required=True, help="TOML sweep specification file")
    p.add_argument("--out", required=True, help="output prefix for .csv and .json")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("suite", help="run the acceptance criteria")
    p.add_argument("--quick", action="store_true", help="reduced sample counts")
    p.set_defaults(func=_cmd_suite)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FracineqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
