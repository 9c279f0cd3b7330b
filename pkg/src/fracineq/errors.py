"""Exception hierarchy shared across the package.

Every error raised on purpose by this library derives from
:class:`FracineqError`, so callers can catch one base class. Domain and
usage errors additionally derive from :class:`ValueError` because they
signal bad arguments, not bad state.
"""

from __future__ import annotations


class FracineqError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FracineqError, ValueError):
    """An argument violates a documented precondition or invariant."""


class InvalidAlpha(DomainError):
    """A fractional order alpha was not a positive finite real."""


class KindParameterMismatch(DomainError):
    """Parameters contradict the fixed values a named inequality form requires."""


class UnknownFunction(DomainError):
    """A function name does not resolve to a registered or generated handle."""


class NonConvergence(FracineqError):
    """Adaptive quadrature exhausted its budget before reaching tolerance.

    Carries the best available result in :attr:`result` (a QuadResult with
    ``converged=False``) so callers can still use the estimate.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class NonFiniteIntegrand(FracineqError):
    """The integrand produced NaN or infinity at an interior evaluation node."""


class MissingDerivative(FracineqError):
    """An operation required a derivative evaluator the handle does not carry."""


class MissingM(FracineqError):
    """An Ostrowski-type bound was requested without a derivative bound M."""


class GGRequiresPositive(FracineqError):
    """A GG-convexity check sampled a nonpositive function value."""


class HypothesisNotCertified(FracineqError):
    """verify_instance was given a certificate that does not support the bound."""
