"""Exception hierarchy. Every error raised by the package derives from PhinaryError."""


class PhinaryError(Exception):
    pass


class DomainError(PhinaryError, ValueError):
    pass


class DivisionByZero(PhinaryError, ZeroDivisionError):
    pass


class NotPhinary(DomainError):
    pass


class NegativeInput(DomainError):
    pass


class MalformedDigits(DomainError):
    pass


class NonTerminating(PhinaryError):
    pass


class InverseUndefined(DomainError):
    pass


class ExceptionalPair(DomainError):
    pass


class OracleBoundExceeded(DomainError):
    pass


class InconclusiveBound(PhinaryError):
    pass


class DepthLimit(DomainError):
    pass


class DegenerateConfiguration(DomainError):
    pass


class PointAtInfinity(DomainError):
    pass
