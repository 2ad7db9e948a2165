"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class LogicError(ValueError):
    """Base class for invalid logics and invalid references into them."""


class EmptyContext(LogicError):
    """A context with fewer than two atoms."""


class DuplicateAtomInContext(LogicError):
    pass


class DuplicateContext(LogicError):
    pass


class UnknownCatalogName(LogicError):
    pass


class BadParams(LogicError):
    pass


class UnknownAtom(LogicError):
    pass


class MissingAtom(LogicError):
    """An assignment or map that is not total on the atoms of a logic."""


class EmptyStateSet(LogicError):
    pass


class LengthMismatch(ValueError):
    pass


class InvalidWeights(ValueError):
    pass


class MissingVector(LogicError):
    pass


class DimensionMismatch(ValueError):
    pass


class NotUnitVector(ValueError):
    pass


class EmptyTargets(ValueError):
    pass


class ParseError(ValueError):
    """Input text could not be turned into a document.

    ``line`` and ``col`` are 1-based; either may be ``None`` when the
    problem is not tied to a position (e.g. malformed JSON structure).
    """

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col or 1}: {message}"
        super().__init__(message)


class DSLSyntaxError(ParseError):
    pass


class UnknownAtomReference(ParseError):
    pass


class DSLDimensionMismatch(ParseError, DimensionMismatch):
    pass
