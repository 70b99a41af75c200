"""Exception types shared across the package."""

from __future__ import annotations


class RingwaveError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RingwaveError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UnsupportedConfigurationError(RingwaveError, ValueError):
    """The field configuration cannot supply the requested quantity."""


class EvaluationError(RingwaveError, ArithmeticError):
    """A field or integrand evaluation produced a non-finite value."""
