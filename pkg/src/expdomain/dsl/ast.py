"""Expression trees for propositional statements and the document model."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Union


@dataclass(frozen=True)
class Loc:
    line: int
    column: int


@dataclass(frozen=True)
class Atom:
    name: str
    loc: Loc | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Const:
    value: bool
    loc: Loc | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Not:
    child: Expr
    loc: Loc | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class And:
    left: Expr
    right: Expr
    loc: Loc | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Or:
    left: Expr
    right: Expr
    loc: Loc | None = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class Implies:
    left: Expr
    right: Expr
    loc: Loc | None = field(default=None, compare=False, repr=False)


Expr = Union[Atom, Const, Not, And, Or, Implies]

TRUE = Const(True)
FALSE = Const(False)


def atoms_of(expr: Expr) -> Iterator[Atom]:
    """Yield every atom occurrence in ``expr``, left to right."""
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            yield node
        elif isinstance(node, Not):
            stack.append(node.child)
        elif isinstance(node, (And, Or, Implies)):
            stack.append(node.right)
            stack.append(node.left)


@dataclass(frozen=True)
class ContextSpec:
    """A parsed ``.exd`` document: one context with its constraints and basis.

    Equality is structural; source locations are ignored.
    """

    name: str
    atoms: tuple[str, ...]
    constraints: tuple[Expr, ...] = ()
    basis: tuple[Expr, ...] = ()
    actual: tuple[tuple[str, bool], ...] = ()


@dataclass(frozen=True)
class TestDecl:
    __test__ = False

    name: str
    terminates_at: int | None  # None: the test diverges


@dataclass(frozen=True)
class Scenario:
    tests: tuple[TestDecl, ...]
    goal: str  # "conj" or "dovetail"
    operands: tuple[str, ...]
    budget: int
