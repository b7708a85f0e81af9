"""Exception hierarchy.

Every failure that comes from asking for a value outside an operation's
domain derives from :class:`DomainError`; the command line maps those to
exit status 1.
"""


class PadicError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(PadicError, ValueError):
    """An input lies outside the domain of the requested operation."""


class DenominatorDivisibleByP(DomainError):
    pass


class NotAUnit(DomainError):
    pass


class PDividesN(DomainError):
    pass


class NotOrdinary(DomainError):
    pass


class XCongruentOne(DomainError):
    pass


class RIsOne(DomainError):
    pass


class NoValidN(DomainError):
    pass


class OutsideDomain(DomainError):
    pass


class NonUnitConstantTerm(DomainError):
    pass


class NotImplementedGeneralS(DomainError):
    pass


class DivisionNotExact(PadicError, ArithmeticError):
    """An exact division by a power of p found a nonzero remainder."""


class Inconsistent(PadicError, ArithmeticError):
    """Independently computed data contradict each other."""


class PrecisionError(PadicError, ArithmeticError):
    """Not enough p-adic digits are known to produce a result."""
