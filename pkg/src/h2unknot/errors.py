"""Exception hierarchy.

Domain errors (bad input) derive from :class:`DomainError`; the CLI maps
them to exit status 2.  :class:`SymmetryFailure` signals a broken internal
invariant and maps to exit status 3.
"""


class DomainError(ValueError):
    pass


class NonCoprime(DomainError):
    pass


class InvalidParameter(DomainError):
    pass


class DegenerateFraction(DomainError):
    pass


class EvenOrder(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class NonUnit(DomainError):
    pass


class MismatchedOrder(DomainError):
    pass


class TrivialSummand(DomainError):
    pass


class SymmetryFailure(AssertionError):
    pass
