"""Fractional integrals along logarithmic scales and slack verification
of the convexity-based bounds they satisfy.

The package computes both sides of each supported bound independently:
left sides from adaptive quadrature of the defining integrals, right
sides from closed-form or one-dimensional weight integrals, then reports
slack = rhs - lhs per instance. Hypotheses are certified on sample grids
before a bound is claimed, and every sweep is reproducible from its
seed.
"""

from .bounds import (
    AuditEntry,
    BoundKind,
    COROLLARIES,
    DerivBoundM,
    EXPECTED_FINDINGS,
    SlackReport,
    THEOREMS,
    a_integrals,
    b_integrals,
    c_integrals,
    corollary_audit,
    lhs,
    rhs,
    tol_verify,
    verify_instance,
)
from .errors import (
    DomainError,
    FracineqError,
    GGRequiresPositive,
    HypothesisNotCertified,
    InvalidAlpha,
    KindParameterMismatch,
    MissingDerivative,
    MissingM,
    NonConvergence,
    NonFiniteIntegrand,
    UnknownFunction,
)
from .fracint import (
    Interval,
    classical_integral,
    rl_left,
    rl_log_pair,
    rl_order_zero,
    rl_right,
)
from .funcspace import (
    ClassCertificate,
    ClassParams,
    FunctionHandle,
    Witness,
    abs_deriv_pow,
    check_class,
    lookup,
    make_ga_convex,
    make_ga_deriv,
    make_ga_s_convex,
    make_sm_deriv,
    registry,
    resolve,
)
from .functionals import (
    Params,
    hh_chain,
    hh_middle,
    i_f_direct,
    i_f_lemma,
    i_f_m_direct,
    i_f_m_lemma,
)
from .harness import (
    Boxes,
    SweepSpec,
    check_hh_suite,
    check_identity_suite,
    load_sweep_spec,
    resolve_m_sign,
    run_acceptance,
    run_sweep,
)
from .quadrature import DEFAULT_CONFIG, QuadConfig, QuadResult
from .special import a1_closed, gamma

__version__ = "0.1.0"

__all__ = [
    "AuditEntry",
    "BoundKind",
    "Boxes",
    "COROLLARIES",
    "ClassCertificate",
    "ClassParams",
    "DEFAULT_CONFIG",
    "DerivBoundM",
    "DomainError",
    "EXPECTED_FINDINGS",
    "FracineqError",
    "FunctionHandle",
    "GGRequiresPositive",
    "HypothesisNotCertified",
    "Interval",
    "InvalidAlpha",
    "KindParameterMismatch",
    "MissingDerivative",
    "MissingM",
    "NonConvergence",
    "NonFiniteIntegrand",
    "Params",
    "QuadConfig",
    "QuadResult",
    "SlackReport",
    "SweepSpec",
    "THEOREMS",
    "UnknownFunction",
    "Witness",
    "a1_closed",
    "a_integrals",
    "abs_deriv_pow",
    "b_integrals",
    "c_integrals",
    "check_class",
    "check_hh_suite",
    "check_identity_suite",
    "classical_integral",
    "corollary_audit",
    "gamma",
    "hh_chain",
    "hh_middle",
    "i_f_direct",
    "i_f_lemma",
    "i_f_m_direct",
    "i_f_m_lemma",
    "lhs",
    "load_sweep_spec",
    "lookup",
    "make_ga_convex",
    "make_ga_deriv",
    "make_ga_s_convex",
    "make_sm_deriv",
    "registry",
    "resolve",
    "resolve_m_sign",
    "rhs",
    "rl_left",
    "rl_log_pair",
    "rl_order_zero",
    "rl_right",
    "run_acceptance",
    "run_sweep",
    "tol_verify",
    "verify_instance",
]
