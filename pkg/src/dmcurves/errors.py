"""Exception hierarchy.

Every error raised on bad mathematical input derives from ``DomainError`` so the
CLI can map it to exit code 1; plain ``ValueError``/``TypeError`` are reserved
for programming mistakes.
"""


class DomainError(Exception):
    """Base class for errors caused by mathematically invalid input."""


class NotPrime(DomainError):
    pass


class ReducibleModulus(DomainError):
    pass


class DegreeMismatch(DomainError):
    pass


class FieldMismatch(DomainError):
    pass


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class EvenCharacteristic(DomainError):
    pass


class NonIntegralCoefficient(DomainError):
    """Power sums do not come from an integer L-polynomial of the stated genus."""


class FunctionalEquationViolated(DomainError):
    pass


class OddDegree(DomainError):
    pass


class NonMonic(DomainError):
    pass


class NotWeil(DomainError):
    pass


class NotDivisible(DomainError):
    pass


class NotSquarefree(DomainError):
    pass


class SingularPointFound(DomainError):
    def __init__(self, k, point):
        super().__init__(f"singular point over extension of degree {k}: {point}")
        self.k = k
        self.point = point


class InvalidModel(DomainError):
    pass


class BudgetExceeded(DomainError):
    def __init__(self, needed, budget):
        super().__init__(f"enumeration of {needed} points exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


class ImpossibleCounts(DomainError):
    pass


class CaseRequiresSquareQ(DomainError):
    pass
