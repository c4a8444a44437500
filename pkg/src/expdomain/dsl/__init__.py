"""Text front end: the ``.exd`` document grammar and simulation scenarios."""

from .ast import (FALSE, TRUE, And, Atom, Const, ContextSpec, Expr, Implies, Loc, Not, Or, Scenario,
                  TestDecl, atoms_of)
from .parser import parse_expr, parse_scenario, parse_spec
from .printer import format_expr, print_spec

__all__ = [
    "And", "Atom", "Const", "ContextSpec", "Expr", "FALSE", "Implies", "Loc", "Not", "Or", "Scenario",
    "TRUE", "TestDecl", "atoms_of", "format_expr", "parse_expr", "parse_scenario", "parse_spec",
    "print_spec",
]
