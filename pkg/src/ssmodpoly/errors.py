"""Exception hierarchy shared by all modules.

Every deliberate failure derives from ``SsmpError``; the CLI maps the class
name to an exit status and a message prefix.
"""


class SsmpError(Exception):
    pass


# arith
class NotInImage(SsmpError):
    pass


class TowerConstructionFailed(SsmpError):
    pass


# poly
class DuplicateAbscissa(SsmpError):
    pass


# ec
class TowerTooSmall(SsmpError):
    pass


class WrongOrder(SsmpError):
    pass


class NotSplit(SsmpError):
    pass


class SingularCurve(SsmpError):
    pass


# quat
class UnsupportedPrime(SsmpError):
    pass


class SearchExhausted(SsmpError):
    pass


class KlptFailure(SsmpError):
    pass


# deuring
class StartingCurveUnavailable(SsmpError):
    pass


class NotSupersingular(SsmpError):
    pass


class SearchBudgetExceeded(SsmpError):
    pass


# sieve
class RangeTooLarge(SsmpError):
    pass


class StreamExhausted(SsmpError):
    pass


class BadReduction(SsmpError):
    pass


# crt
class ModulusReuse(SsmpError):
    pass


class IncompleteUpdateSet(SsmpError):
    pass


class UnknownModulus(SsmpError):
    pass


class AmbiguousLift(SsmpError):
    """The value sits within rounding distance of half the modulus product."""


# eval
class InsufficientClasses(SsmpError):
    pass


class NotInPrimeField(SsmpError):
    """A j-invariant outside F_p was passed where F_p is required."""


# weber
class DegenerateDenominator(SsmpError):
    pass


class GcdDegreeNotOne(SsmpError):
    pass


class GcdNotDegreeOne(SsmpError):
    pass


class FallbackFailed(SsmpError):
    pass
