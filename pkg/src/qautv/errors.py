"""Exception hierarchy.

Everything raised for bad input derives from :class:`DomainError` so the CLI
can map it to exit status 1.  :class:`InvariantViolation` is reserved for
results that would contradict a proven statement (exit status 2).
"""


class DomainError(ValueError):
    pass


class InvalidWord(DomainError):
    pass


class IncompleteInput(DomainError):
    pass


class NotAMember(DomainError):
    pass


class InvalidAntichain(DomainError):
    pass


class IncompleteCover(DomainError):
    pass


class NotBijection(DomainError):
    pass


class UndefinedOnVertex(DomainError):
    pass


class MalformedDecomposition(DomainError):
    pass


class InvalidDepth(DomainError):
    pass


class BoundExceeded(DomainError):
    pass


class IsTorsion(DomainError):
    pass


class HasNontrivialFiniteOrbits(DomainError):
    pass


class InvalidOrder(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class InvariantViolation(AssertionError):
    pass
