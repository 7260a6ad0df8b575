"""Exception hierarchy.

Every error raised for bad user input derives from :class:`HooklineError`
(itself a ``ValueError``), which the CLI maps to exit status 2.
"""


class HooklineError(ValueError):
    """Base class for invalid-input errors."""


class ParseError(HooklineError):
    pass


class NotFibonacci(HooklineError):
    """The permutation is not a direct sum of blocks ``1`` and ``21``."""


class DomainError(HooklineError):
    """An operation was applied outside its domain (wrong class, wrong path kind)."""


class ShapeMismatch(HooklineError):
    pass


class ResourceLimitExceeded(HooklineError):
    """Requested enumeration is larger than the configured bound."""
