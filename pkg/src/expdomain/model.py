"""Load a parsed document into an engine model (context, basis, domains, space)."""

from __future__ import annotations

from dataclasses import dataclass

from .dsl import ContextSpec, Expr
from .domains import (Basis, ExperimentalDomain, PossibilitySpace, TheoreticalDomain, build_domain,
                      possibilities)
from .errors import ClosureCapExceeded, InvalidBasis
from .statements import Context, Statement, build_context, eval_statement


@dataclass(frozen=True)
class Model:
    spec: ContextSpec
    context: Context
    basis: Basis
    experimental: ExperimentalDomain
    theoretical: TheoreticalDomain
    space: PossibilitySpace

    def statement(self, expr: Expr | str) -> Statement:
        return eval_statement(self.context, expr)


def context_from_spec(spec: ContextSpec) -> Context:
    actual = dict(spec.actual) if spec.actual else None
    return build_context(spec.atoms, spec.constraints, actual=actual)


def load_model(spec: ContextSpec) -> Model:
    """Build every engine object for ``spec``; large closures fall back to membership queries."""
    ctx = context_from_spec(spec)
    if not spec.basis:
        raise InvalidBasis(f"context {spec.name!r} declares no basis")
    basis = Basis(ctx, tuple(eval_statement(ctx, b) for b in spec.basis))
    try:
        exp, tdom = build_domain(basis)
    except ClosureCapExceeded:
        exp, tdom = build_domain(basis, membership_only=True)
    return Model(spec, ctx, basis, exp, tdom, possibilities(exp))
