"""Exception types raised by the library.

Every domain error derives from :class:`DomainError`, which is a
``ValueError``; the CLI maps these to exit code 2.
"""


class DomainError(ValueError):
    """Base class for validation and mathematical precondition failures."""


class NotDivisible(DomainError):
    pass


class NotLaurent(DomainError):
    pass


class NotFactorable(DomainError):
    pass


class MalformedWord(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class BandInvalid(DomainError):
    pass


class NotRealizable(DomainError):
    pass


class BadDirection(DomainError):
    pass


class InsufficientTerms(DomainError):
    pass


class HasLoop(DomainError):
    pass


class HasTwoCycle(DomainError):
    pass


class NotACycle(DomainError):
    pass


class NotAcyclic(DomainError):
    pass


class NotConnected(DomainError):
    pass


class LaurentViolation(DomainError):
    """A value that must be a Laurent polynomial failed to normalize."""


class NonIntegralStep(DomainError):
    """A frieze division that must be exact left a remainder."""
