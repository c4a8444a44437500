"""Exception hierarchy shared by the engine, the DSL and the CLI."""

from __future__ import annotations


class ExpDomainError(Exception):
    """Base class for every domain-level failure (CLI exit code 1)."""


class EmptyUniverse(ExpDomainError):
    """The constraints admit no consistent truth assignment."""


class DuplicateAtom(ExpDomainError):
    pass


class UnknownAtom(ExpDomainError):
    def __init__(self, name: str, message: str | None = None):
        self.name = name
        super().__init__(message or f"unknown atom {name!r}")


class AtomCapExceeded(ExpDomainError):
    pass


class InvalidActual(ExpDomainError):
    pass


class MixedContexts(ExpDomainError):
    pass


class ArityMismatch(ExpDomainError):
    pass


class InvalidBasis(ExpDomainError):
    pass


class ClosureCapExceeded(ExpDomainError):
    """Closure would exceed the member cap; use membership-query mode instead."""


class NotInDomain(ExpDomainError):
    pass


class UnknownPossibility(ExpDomainError):
    pass


class EnumerationCapExceeded(ExpDomainError):
    pass


class NotMaterialized(ExpDomainError):
    """The operation needs an explicit member list but the domain is query-only."""


class EmptyList(ExpDomainError):
    pass


class InvalidTest(ExpDomainError):
    pass


class SpecError(ExpDomainError):
    """A problem in a text document, always carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class SpecSyntaxError(SpecError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.expected = frozenset(expected)
        if self.expected:
            message = f"{message}; expected one of: {', '.join(sorted(self.expected))}"
        super().__init__(message, line, column)


class UndeclaredAtom(SpecError, UnknownAtom):
    """An expression in a document names an atom that the document never declares."""

    def __init__(self, name: str, line: int, column: int):
        self.message = f"unknown atom {name!r}"
        self.line = line
        self.column = column
        UnknownAtom.__init__(self, name, f"{line}:{column}: {self.message}")


class DuplicateAtomDeclaration(SpecError, DuplicateAtom):
    def __init__(self, message: str, line: int, column: int):
        self.message, self.line, self.column = message, line, column
        DuplicateAtom.__init__(self, f"{line}:{column}: {message}")


class DuplicateSection(SpecError):
    pass
