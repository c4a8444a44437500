"""Canonical, minimally parenthesized rendering of expressions and documents."""

from __future__ import annotations

from .ast import And, Atom, Const, ContextSpec, Expr, Implies, Not, Or

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, Atom: 5, Const: 5}
_SYMBOL = {Implies: "->", Or: "|", And: "&"}


def format_expr(expr: Expr) -> str:
    if isinstance(expr, Atom):
        return expr.name
    if isinstance(expr, Const):
        return "true" if expr.value else "false"
    if isinstance(expr, Not):
        inner = format_expr(expr.child)
        return "!" + (inner if _PREC[type(expr.child)] >= _PREC[Not] else f"({inner})")
    prec = _PREC[type(expr)]
    left, right = format_expr(expr.left), format_expr(expr.right)
    lp, rp = _PREC[type(expr.left)], _PREC[type(expr.right)]
    if isinstance(expr, Implies):
        # right-associative
        left_wrap, right_wrap = lp <= prec, rp < prec
    else:
        left_wrap, right_wrap = lp < prec, rp <= prec
    if left_wrap:
        left = f"({left})"
    if right_wrap:
        right = f"({right})"
    return f"{left} {_SYMBOL[type(expr)]} {right}"


def print_spec(spec: ContextSpec) -> str:
    lines = [f"context {spec.name} {{", f"  atoms: {', '.join(spec.atoms)};"]
    if spec.constraints:
        lines.append("  constraints: " + " ".join(format_expr(c) + ";" for c in spec.constraints))
    if spec.basis:
        lines.append("  basis: " + ", ".join(format_expr(b) for b in spec.basis) + ";")
    if spec.actual:
        lines.append("  actual: " + ", ".join(f"{k}={'T' if v else 'F'}" for k, v in spec.actual) + ";")
    lines.append("}")
    return "\n".join(lines) + "\n"
