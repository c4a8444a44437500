"""Statements over a finite constraint context.

A :class:`Context` fixes a list of atoms and the set of admissible truth
assignments.  Assignment ``j`` gives atom ``i`` the value ``(j >> i) & 1``,
and every set of assignments is stored as a Python ``int`` bitmask over the
full ``2**N`` assignment space.  A :class:`Statement` is just such a bitmask
(its truth set), always a subset of the admissible mask, so two statements
are equal exactly when they are equivalent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Iterator, Sequence

from .dsl import And, Atom, Const, Expr, Implies, Not, Or, parse_expr
from .errors import (ArityMismatch, AtomCapExceeded, DuplicateAtom, EmptyUniverse, InvalidActual,
                     MixedContexts, UnknownAtom)

DEFAULT_ATOM_CAP = 20


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _atom_mask(i: int, n: int) -> int:
    period = 1 << (i + 1)
    mask = ((1 << (1 << i)) - 1) << (1 << i)
    length = period
    total = 1 << n
    while length < total:
        mask |= mask << length
        length <<= 1
    return mask


@dataclass(frozen=True, eq=False)
class Context:
    """Atoms plus admissible assignments; compared by identity."""

    atoms: tuple[str, ...]
    admissible: int
    actual: int | None = None
    atom_masks: tuple[int, ...] = field(repr=False, default=())

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def full(self) -> int:
        return (1 << (1 << len(self.atoms))) - 1

    def index(self, name: str) -> int:
        try:
            return self.atoms.index(name)
        except ValueError:
            raise UnknownAtom(name) from None

    def assignment(self, j: int) -> dict[str, bool]:
        return {name: bool((j >> i) & 1) for i, name in enumerate(self.atoms)}

    def assignments(self) -> list[int]:
        return list(iter_bits(self.admissible))

    def count(self) -> int:
        return self.admissible.bit_count()

    @property
    def top(self) -> Statement:
        return Statement(self, self.admissible)

    @property
    def bottom(self) -> Statement:
        return Statement(self, 0)

    def atom(self, name: str) -> Statement:
        return Statement(self, self.atom_masks[self.index(name)] & self.admissible)

    def statement(self, expr: Expr | str) -> Statement:
        return eval_statement(self, expr)

    def all_statements(self) -> Iterator[Statement]:
        """Every statement of the context, one per subset of admissible assignments."""
        members = self.assignments()
        for k in range(1 << len(members)):
            yield Statement(self, sum(1 << members[i] for i in iter_bits(k)))

    def truth(self, stmt: Statement) -> bool:
        """Truth value under the designated actual assignment."""
        if self.actual is None:
            raise InvalidActual("context has no designated actual assignment")
        return bool((stmt.bits >> self.actual) & 1)


@dataclass(frozen=True)
class Statement:
    context: Context
    bits: int

    def _peer(self, other: Statement) -> None:
        if other.context is not self.context:
            raise MixedContexts("statements belong to different contexts")

    def __and__(self, other: Statement) -> Statement:
        self._peer(other)
        return Statement(self.context, self.bits & other.bits)

    def __or__(self, other: Statement) -> Statement:
        self._peer(other)
        return Statement(self.context, self.bits | other.bits)

    def __invert__(self) -> Statement:
        return Statement(self.context, self.context.admissible ^ self.bits)

    def holds_at(self, assignment: int) -> bool:
        return bool((self.bits >> assignment) & 1)

    @property
    def is_tautology(self) -> bool:
        return self.bits == self.context.admissible

    @property
    def is_contradiction(self) -> bool:
        return self.bits == 0

    def __repr__(self) -> str:
        return f"Statement({self.bits:#x}/{self.context.admissible:#x})"


class PossibilitySet(Enum):
    """Truth values a statement's content allows."""

    BOTH = frozenset({False, True})
    FALSE = frozenset({False})
    TRUE = frozenset({True})

    def __contains__(self, value: object) -> bool:
        return value in self.value


@dataclass(frozen=True)
class TruthTable:
    """A truth function of ``arity`` arguments.

    ``outputs[k]`` is the result for the input vector whose ``i``-th argument
    is ``(k >> i) & 1``.
    """

    arity: int
    outputs: tuple[bool, ...]

    def __post_init__(self):
        if len(self.outputs) != 1 << self.arity:
            raise ArityMismatch(f"table of arity {self.arity} needs {1 << self.arity} outputs")

    @classmethod
    def from_function(cls, arity: int, fn: Callable[..., bool]) -> TruthTable:
        rows = (tuple(bool((k >> i) & 1) for i in range(arity)) for k in range(1 << arity))
        return cls(arity, tuple(bool(fn(*row)) for row in rows))

    def __call__(self, *values: bool) -> bool:
        if len(values) != self.arity:
            raise ArityMismatch(f"expected {self.arity} values, got {len(values)}")
        return self.outputs[sum(int(bool(v)) << i for i, v in enumerate(values))]


NOT = TruthTable.from_function(1, lambda a: not a)
AND = TruthTable.from_function(2, lambda a, b: a and b)
OR = TruthTable.from_function(2, lambda a, b: a or b)
XOR = TruthTable.from_function(2, lambda a, b: a != b)
IMPLIES = TruthTable.from_function(2, lambda a, b: (not a) or b)

BINARY_TABLES = tuple(TruthTable(2, tuple(bool((k >> r) & 1) for r in range(4))) for k in range(16))


@dataclass(frozen=True)
class RelationReport:
    equivalent: bool
    narrower: bool
    broader: bool
    compatible: bool
    independent: bool


def _eval_bits(ctx: Context, expr: Expr) -> int:
    """Truth set of ``expr`` over the full assignment space (ignores admissibility)."""
    full = ctx.full
    if isinstance(expr, Atom):
        return ctx.atom_masks[ctx.index(expr.name)]
    if isinstance(expr, Const):
        return full if expr.value else 0
    if isinstance(expr, Not):
        return full ^ _eval_bits(ctx, expr.child)
    if isinstance(expr, And):
        return _eval_bits(ctx, expr.left) & _eval_bits(ctx, expr.right)
    if isinstance(expr, Or):
        return _eval_bits(ctx, expr.left) | _eval_bits(ctx, expr.right)
    if isinstance(expr, Implies):
        return (full ^ _eval_bits(ctx, expr.left)) | _eval_bits(ctx, expr.right)
    raise TypeError(f"not an expression: {expr!r}")


def _as_expr(expr: Expr | str) -> Expr:
    return parse_expr(expr) if isinstance(expr, str) else expr


def build_context(atoms: Sequence[str], constraints: Iterable[Expr | str] = (),
                  actual: dict[str, bool] | None = None, cap: int = DEFAULT_ATOM_CAP) -> Context:
    """Context whose admissible assignments satisfy every constraint.

    >>> build_context(["a"], ["a"]).count()
    1
    """
    atoms = tuple(atoms)
    if len(set(atoms)) != len(atoms):
        dup = next(a for a in atoms if atoms.count(a) > 1)
        raise DuplicateAtom(f"atom {dup!r} declared twice")
    if len(atoms) > cap:
        raise AtomCapExceeded(f"{len(atoms)} atoms exceeds the cap of {cap}")
    masks = tuple(_atom_mask(i, len(atoms)) for i in range(len(atoms)))
    probe = Context(atoms, (1 << (1 << len(atoms))) - 1, None, masks)
    admissible = probe.full
    for c in constraints:
        admissible &= _eval_bits(probe, _as_expr(c))
    if not admissible:
        raise EmptyUniverse("constraints admit no consistent truth assignment")
    actual_index = None
    if actual is not None:
        missing = [a for a in atoms if a not in actual]
        extra = [a for a in actual if a not in atoms]
        if extra:
            raise UnknownAtom(extra[0])
        if missing:
            raise InvalidActual(f"actual assignment leaves {', '.join(missing)} unassigned")
        actual_index = sum(1 << i for i, a in enumerate(atoms) if actual[a])
        if not (admissible >> actual_index) & 1:
            raise InvalidActual("actual assignment violates the constraints")
    return Context(atoms, admissible, actual_index, masks)


def eval_statement(ctx: Context, expr: Expr | str) -> Statement:
    return Statement(ctx, _eval_bits(ctx, _as_expr(expr)) & ctx.admissible)


def poss_of(stmt: Statement) -> PossibilitySet:
    if stmt.bits == stmt.context.admissible:
        return PossibilitySet.TRUE
    if stmt.bits == 0:
        return PossibilitySet.FALSE
    return PossibilitySet.BOTH


def _same_context(stmts: Sequence[Statement]) -> Context:
    ctx = stmts[0].context
    if any(s.context is not ctx for s in stmts):
        raise MixedContexts("statements belong to different contexts")
    return ctx


def combine(table: TruthTable, stmts: Sequence[Statement]) -> Statement:
    """Apply a truth function pointwise to the truth sets of ``stmts``."""
    if table.arity != len(stmts):
        raise ArityMismatch(f"table of arity {table.arity} applied to {len(stmts)} statements")
    if not stmts:
        raise ArityMismatch("combine needs at least one statement")
    ctx = _same_context(stmts)
    adm = ctx.admissible
    result = 0
    for k, out in enumerate(table.outputs):
        if not out:
            continue
        cell = adm
        for i, s in enumerate(stmts):
            cell &= s.bits if (k >> i) & 1 else adm ^ s.bits
            if not cell:
                break
        result |= cell
    return Statement(ctx, result)


def independent(stmts: Sequence[Statement]) -> bool:
    """Every combination of the statements' possible values is jointly realizable."""
    if not stmts:
        return True
    ctx = _same_context(stmts)
    adm = ctx.admissible
    choices = [sorted(poss_of(s).value) for s in stmts]
    for combo in itertools.product(*choices):
        cell = adm
        for s, t in zip(stmts, combo):
            cell &= s.bits if t else adm ^ s.bits
        if not cell:
            return False
    return True


def relation(s1: Statement, s2: Statement) -> RelationReport:
    ctx = _same_context([s1, s2])
    narrower = (s1.bits & (ctx.admissible ^ s2.bits)) == 0
    broader = (s2.bits & (ctx.admissible ^ s1.bits)) == 0
    return RelationReport(
        equivalent=s1.bits == s2.bits,
        narrower=narrower,
        broader=broader,
        compatible=(s1.bits & s2.bits) != 0,
        independent=independent([s1, s2]),
    )


def equivalent(s1: Statement, s2: Statement) -> bool:
    _same_context([s1, s2])
    return s1.bits == s2.bits


def narrower(s1: Statement, s2: Statement) -> bool:
    ctx = _same_context([s1, s2])
    return (s1.bits & (ctx.admissible ^ s2.bits)) == 0


def compatible(s1: Statement, s2: Statement) -> bool:
    _same_context([s1, s2])
    return (s1.bits & s2.bits) != 0


def disjunction(stmts: Iterable[Statement], ctx: Context) -> Statement:
    bits = 0
    for s in stmts:
        if s.context is not ctx:
            raise MixedContexts("statements belong to different contexts")
        bits |= s.bits
    return Statement(ctx, bits)


def conjunction(stmts: Iterable[Statement], ctx: Context) -> Statement:
    bits = ctx.admissible
    for s in stmts:
        if s.context is not ctx:
            raise MixedContexts("statements belong to different contexts")
        bits &= s.bits
    return Statement(ctx, bits)
