"""Exception types shared across the package.

Every error raised on a violated precondition derives from
:class:`ArithSetsError`. Input-parsing failures additionally derive from
:class:`ParseError` so the command line can map them to their own exit code.
"""


class ArithSetsError(Exception):
    """Base class for all package errors."""


class ParseError(ArithSetsError, ValueError):
    pass


class SetParseError(ParseError):
    pass


class WordParseError(ParseError):
    pass


# intpoly
class NotDivisible(ArithSetsError, ArithmeticError):
    pass


class NotSquarefree(ArithSetsError, ArithmeticError):
    pass


class NonConvergence(ArithSetsError, ArithmeticError):
    pass


# exactlin
class BadModulus(ArithSetsError, ValueError):
    pass


class ZeroVector(ArithSetsError, ValueError):
    pass


# zarith
class DuplicateElements(ArithSetsError, ValueError):
    pass


class DoesNotGenerate(ArithSetsError, ValueError):
    pass


class CardinalityNotPrime(ArithSetsError, ValueError):
    pass


class ModulusTooSmall(ArithSetsError, ValueError):
    pass


class WrongInitialCount(ArithSetsError, ValueError):
    pass


class NotBArithmetic(ArithSetsError):
    pass


class NotPArithmetic(ArithSetsError):
    pass


class BadCertificate(ArithSetsError, ValueError):
    pass


class BadParameters(ArithSetsError, ValueError):
    pass


# freegrp
class RankMismatch(ArithSetsError, ValueError):
    pass


class NotConnected(ArithSetsError, ValueError):
    pass


class NoValidShift(ArithSetsError, RuntimeError):
    """The greedy tiler found no admissible shift; this indicates a bug."""


class InsufficientCoverage(ArithSetsError, ValueError):
    pass


class HypothesesViolated(ArithSetsError, ValueError):
    pass
