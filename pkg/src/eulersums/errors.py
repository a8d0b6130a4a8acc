"""Exception taxonomy for the numerical evaluators.

``EvaluationError`` covers every failure of a numeric routine;
``DomainError`` marks the subset where the *request* is outside the
supported region (poles, degenerate denominators, unsupported strips)
rather than a convergence shortfall.  The CLI maps all of these to its
evaluation-domain exit code, with a machine-readable reason string.
"""

from __future__ import annotations

__all__ = [
    "EvaluationError",
    "DomainError",
    "NonConvergence",
    "PoleProximity",
    "UnsupportedRegion",
    "DenominatorDegenerate",
    "QuadratureFailure",
]


class EvaluationError(Exception):
    """Base class for numeric-evaluation failures."""

    reason = "evaluation_error"


class NonConvergence(EvaluationError):
    """The configured truncation orders cannot meet the target tolerance."""

    reason = "non_convergence"


class QuadratureFailure(EvaluationError):
    """Quadrature refinement stalled above the target tolerance."""

    reason = "quadrature_failure"


class DomainError(EvaluationError):
    """The evaluation point is outside the supported region."""

    reason = "domain_error"


class PoleProximity(DomainError):
    """The evaluation point is within tolerance of a pole."""

    reason = "pole"


class UnsupportedRegion(DomainError):
    """The evaluation point lies in a region the evaluator does not cover."""

    reason = "unsupported_region"


class DenominatorDegenerate(DomainError):
    """A conversion denominator (e.g. 1 - 2^(1-s)) is within tolerance of 0."""

    reason = "denominator_degenerate"
