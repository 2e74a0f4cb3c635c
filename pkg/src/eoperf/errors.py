"""Exception types shared across the package."""

from __future__ import annotations


class EoperfError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(EoperfError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DegenerateSceneError(DomainError):
    """Target and background carry no light at all; contrast is undefined."""


class FitError(EoperfError, ValueError):
    """Curve fitting cannot proceed on the given observations."""


class ScenarioParseError(EoperfError, ValueError):
    """A scenario file violates the key/value grammar.

    ``line_no`` is 1-based and may be None for file-level problems such as
    a missing required key. ``key`` names the offending key when known.
    """

    def __init__(self, message: str, *, line_no: int | None = None, key: str | None = None):
        self.line_no = line_no
        self.key = key
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


class NegativeSnrWarning(RuntimeWarning):
    """Required SNR came out negative (detection rate below false-alarm rate)."""
