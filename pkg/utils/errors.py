# utils/errors.py


class RecolorError(Exception):
    """Base class for every error raised by the recolouring engines."""

    exit_code = 3


class InputError(RecolorError, ValueError):
    """Malformed graph, colouring, rotation or sequence data."""

    exit_code = 1


class PreconditionError(RecolorError, ValueError):
    """Well-formed input that an engine cannot accept."""

    exit_code = 2


class InfeasibleError(PreconditionError):
    """Some vertex has no admissible colour left."""


class UnsupportedError(PreconditionError):
    """Regime the engines do not cover (k < d + 2)."""


class InvariantViolation(RecolorError, RuntimeError):
    """An internal guarantee failed. Always a bug, never an expected outcome."""

    exit_code = 3
