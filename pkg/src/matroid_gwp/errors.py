"""Exception hierarchy shared by all modules."""


class MatroidError(ValueError):
    pass


class EmptyBasisFamily(MatroidError):
    pass


class UnequalBasisCardinality(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    def __init__(self, first, second, element):
        self.pair = (first, second)
        self.element = element
        super().__init__(
            f"basis exchange fails for B1={first}, B2={second}, x={element}"
        )


class ElementOutOfRange(MatroidError):
    pass


class GroundSetTooLarge(MatroidError):
    pass


class InvalidElongation(MatroidError):
    pass


class FieldError(ValueError):
    pass


class NonPrimeCharacteristic(FieldError):
    pass


class FieldTooLarge(FieldError):
    pass


class RankDeficientMatrix(FieldError):
    pass


class InterpolationInconsistency(ArithmeticError):
    pass


class MissingDegree(ValueError):
    pass


class MissingEntry(ValueError):
    pass


class InconsistentTables(ValueError):
    pass


class EnumerationBudgetExceeded(RuntimeError):
    pass


class ParseError(ValueError):
    """Input file could not be parsed; carries a 1-based line number."""

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
