"""Independent reference semantics: explicit assignment dictionaries, no bitsets."""

from __future__ import annotations

import itertools

from expdomain.dsl import And, Atom, Const, Expr, Implies, Not, Or


def evaluate(expr: Expr, assignment: dict[str, bool]) -> bool:
    if isinstance(expr, Atom):
        return assignment[expr.name]
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Not):
        return not evaluate(expr.child, assignment)
    if isinstance(expr, And):
        return evaluate(expr.left, assignment) and evaluate(expr.right, assignment)
    if isinstance(expr, Or):
        return evaluate(expr.left, assignment) or evaluate(expr.right, assignment)
    if isinstance(expr, Implies):
        return (not evaluate(expr.left, assignment)) or evaluate(expr.right, assignment)
    raise TypeError(expr)


def all_assignments(atoms):
    for values in itertools.product([False, True], repeat=len(atoms)):
        yield dict(zip(atoms, values))


def admissible(atoms, constraints):
    return [a for a in all_assignments(atoms) if all(evaluate(c, a) for c in constraints)]


def naive_closure(seeds, ops):
    """Worklist fixpoint of ``seeds`` under the given unary/binary set operations."""
    family = set(seeds)
    frontier = list(family)
    unary, binary = ops
    while frontier:
        new = set()
        for a in frontier:
            for f in unary:
                new.add(f(a))
            for b in list(family):
                for g in binary:
                    new.add(g(a, b))
        new -= family
        family |= new
        frontier = list(new)
    return family


def literal_dovetail(tests, max_rounds=10_000):
    """Step-by-step replay of the round schedule, charging each round in full."""
    total = 0
    for n in range(1, max_rounds + 1):
        done = False
        for t in tests[:n]:
            total += n
            if t.terminates_at is not None and t.terminates_at <= n:
                done = True
        if done:
            return n, total
    return None, None
