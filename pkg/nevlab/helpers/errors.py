# Copyright (C) <2026>  <nevlab contributors>
# License: https://www.gnu.org/licenses/agpl-3.0.txt

"""Exceptions raised by the nevlab helpers.

Every error carries the process exit code the command line uses for it:

- 2: invalid input (bad config, object outside its domain)
- 3: numerical non-convergence
"""


class NevlabError(Exception):
    exit_code = 1

    def __init__(self, message: str = "", field: str = None) -> None:
        super().__init__(message)
        self.message = message
        self.field = field

    def to_record(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "field": self.field
        }


class ConfigError(NevlabError):
    exit_code = 2


class DomainError(NevlabError, ValueError):
    exit_code = 2


class NumericalError(NevlabError, ArithmeticError):
    exit_code = 3


class ConstantPolynomial(DomainError):
    pass


class NotUnitVector(DomainError):
    pass


class BadRadius(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class NotInner(DomainError):
    pass


class AtomSingularity(DomainError):
    pass


class NotASelfMap(DomainError):
    pass


class ConstantMap(DomainError):
    pass


class AtBasePoint(DomainError):
    pass


class BasePointInDisk(DomainError):
    pass


class DiskNotInDomain(DomainError):
    pass


class SequenceViolation(DomainError):
    pass


class InsufficientProfile(DomainError):
    pass


class NoConvergence(NumericalError):
    def __init__(self, message: str = "", residuals=None) -> None:
        super().__init__(message)
        self.residuals = list(residuals) if residuals is not None else []


class ZeroNearContour(NumericalError):
    pass


class NonIntegerWinding(NumericalError):
    pass
