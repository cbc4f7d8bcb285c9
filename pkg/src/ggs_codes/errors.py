"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class GGSError(Exception):
    """Base class for every error raised by this package."""


# finite fields
class NonPrimeP(GGSError, ValueError):
    pass


class ReducibleModulus(GGSError, ValueError):
    pass


class NoGeneratorFound(GGSError, RuntimeError):
    pass


class FieldMismatch(GGSError, TypeError):
    pass


class InverseOfZero(GGSError, ZeroDivisionError):
    pass


class IncompatibleDegrees(GGSError, ValueError):
    pass


class HomomorphismCheckFailed(GGSError, RuntimeError):
    pass


# curve
class EvenN(GGSError, ValueError):
    pass


class QNotPrimePower(GGSError, ValueError):
    pass


class CountMismatch(GGSError, RuntimeError):
    pass


class InfinitePoint(GGSError, ValueError):
    pass


# semigroups
class GcdNotOne(GGSError, ValueError):
    pass


class IndexBeyondBound(GGSError, IndexError):
    pass


class NotAnElement(GGSError, ValueError):
    pass


class NotANongap(GGSError, ValueError):
    pass


class OutOfRange(GGSError, ValueError):
    pass


class PreconditionViolated(GGSError, ValueError):
    pass


class ConsistencyFailure(GGSError, RuntimeError):
    pass


# codes and derived parameters
class RankDeficient(GGSError, RuntimeError):
    pass


class HypothesisViolated(GGSError, ValueError):
    """A proposition was applied outside its hypotheses.

    ``failed`` names the inequality (or membership) that does not hold.
    """

    def __init__(self, failed: str, detail: str = ""):
        self.failed = failed
        msg = failed if not detail else f"{failed}: {detail}"
        super().__init__(msg)


class TripleMismatch(GGSError, ValueError):
    pass


# automorphisms
class NotAPermutation(GGSError, RuntimeError):
    pass


class OrderCheckFailed(GGSError, RuntimeError):
    pass
