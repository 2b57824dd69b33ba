"""Exception types shared across the toolkit."""

from __future__ import annotations


class OmlatError(Exception):
    """Base class for every structural or usage error raised by omlat."""


class DuplicateNameError(OmlatError):
    pass


class UnknownElementError(OmlatError):
    pass


class CycleDetectedError(OmlatError):
    """The input relation is not antisymmetric, i.e. not a partial order."""


class NotALatticeError(OmlatError):
    """Some pair has no unique least upper / greatest lower bound."""

    def __init__(self, message: str, pair: tuple[str, str] | None = None, kind: str = ""):
        super().__init__(message)
        self.pair = pair
        self.kind = kind  # "join" or "meet"


class NotBoundedError(OmlatError):
    pass


class SizeLimitExceededError(OmlatError):
    pass


class TableNotTotalError(OmlatError):
    pass


class ParseError(OmlatError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class NotOrthomodularError(OmlatError):
    """Construction precondition failed; carries the offending report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class HypothesisViolatedError(OmlatError):
    def __init__(self, message: str, axiom: str = "", witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class UnknownAxiomIdError(OmlatError):
    pass
