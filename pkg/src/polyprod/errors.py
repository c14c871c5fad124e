"""Exception hierarchy shared by all modules."""


class PolytopeError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateId(PolytopeError):
    pass


class DanglingCover(PolytopeError):
    pass


class NotGraded(PolytopeError):
    pass


class NotBounded(PolytopeError):
    pass


class UnknownId(PolytopeError):
    pass


class NotComparable(PolytopeError):
    pass


class SearchBudgetExceeded(PolytopeError):
    pass


class ClosureBudgetExceeded(PolytopeError):
    pass


class MissingProvenance(PolytopeError):
    pass


class NonPositiveExponent(PolytopeError):
    pass


class BudgetExceeded(PolytopeError):
    pass


class ParseError(PolytopeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MixedOperatorsWithoutParens(ParseError):
    pass
