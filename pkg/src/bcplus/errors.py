"""Exception hierarchy shared by every stage of the pipeline."""

from __future__ import annotations


class BcplusError(Exception):
    """Base class for all errors reported to the user."""


class FormulaError(BcplusError):
    """Ill-formed formula, or an atom outside the signature in use."""


class DeclarationError(BcplusError):
    """Bad constant, sort or object declaration."""


class DescriptionError(BcplusError):
    """One or more causal laws violate the syntactic provisos of their form."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


class BudgetExceeded(BcplusError):
    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"search budget of {limit} candidates exceeded")


class SourceError(BcplusError):
    """Error tied to a position in an input file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(where + message)


class ParseError(SourceError):
    pass


class GroundingError(SourceError):
    pass


class QueryError(BcplusError):
    pass
