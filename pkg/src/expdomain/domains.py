"""Experimental and theoretical domains generated by a verifiable basis."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (ClosureCapExceeded, InvalidBasis, MixedContexts, NotInDomain, NotMaterialized,
                     UnknownPossibility)
from .statements import Context, Statement, iter_bits

DEFAULT_CLOSURE_CAP = 1 << 16


@dataclass(frozen=True)
class Basis:
    context: Context
    members: tuple[Statement, ...]

    def __post_init__(self):
        if not self.members:
            raise InvalidBasis("a basis needs at least one statement")
        if any(m.context is not self.context for m in self.members):
            raise MixedContexts("basis members belong to different contexts")

    def __len__(self) -> int:
        return len(self.members)


def _meet_closure(generators: Iterable[int], cap: int) -> set[int]:
    family: set[int] = set()
    for g in generators:
        family |= {g & f for f in family}
        family.add(g)
        if len(family) > cap:
            raise ClosureCapExceeded(f"closure exceeds {cap} members")
    return family


def _join_closure(generators: Iterable[int], cap: int) -> set[int]:
    family = {0}
    for g in generators:
        family |= {g | f for f in family}
        if len(family) > cap:
            raise ClosureCapExceeded(f"closure exceeds {cap} members")
    return family


def _partition(adm: int, basis: Sequence[int]) -> list[tuple[tuple[bool, ...], int]]:
    """Split the admissible assignments by their truth vector over ``basis``."""
    parts: list[tuple[tuple[bool, ...], int]] = [((), adm)]
    for b in basis:
        refined = []
        for label, cell in parts:
            inside, outside = cell & b, cell & ~b
            if inside:
                refined.append((label + (True,), inside))
            if outside:
                refined.append((label + (False,), outside))
        parts = refined
    return parts


class ExperimentalDomain:
    """Closure of a basis under finite conjunction and disjunction, plus top and bottom.

    ``members`` holds the truth sets of every member when the closure has been
    materialized; otherwise it is ``None`` and :meth:`contains` answers
    membership from the basis cells alone.
    """

    def __init__(self, basis: Basis, members: frozenset[int] | None):
        self.basis = basis
        self.context = basis.context
        self.members = members
        self.theoretical: TheoreticalDomain | None = None
        self._cells = _partition(self.context.admissible, [m.bits for m in basis.members])
        cover = {}
        for _, cell in self._cells:
            nbhd = self.context.admissible
            for b in basis.members:
                if cell & b.bits:
                    nbhd &= b.bits
            cover[cell] = nbhd
        self._neighborhood = cover

    @property
    def materialized(self) -> bool:
        return self.members is not None

    def statements(self) -> list[Statement]:
        if self.members is None:
            raise NotMaterialized("experimental domain is in membership-query mode")
        return [Statement(self.context, bits) for bits in sorted(self.members)]

    def contains(self, stmt: Statement) -> bool:
        if stmt.context is not self.context:
            raise MixedContexts("statement belongs to a different context")
        if self.members is not None:
            return stmt.bits in self.members
        # open iff it is a union of cells, each cell's smallest basis neighborhood included
        for cell, nbhd in self._neighborhood.items():
            hit = cell & stmt.bits
            if hit and (hit != cell or nbhd & ~stmt.bits):
                return False
        return True

    def __len__(self) -> int:
        if self.members is None:
            raise NotMaterialized("experimental domain is in membership-query mode")
        return len(self.members)


class TheoreticalDomain:
    """Closure of an experimental domain under negation, conjunction and disjunction."""

    def __init__(self, domain: ExperimentalDomain, members: frozenset[int] | None):
        self.domain = domain
        self.context = domain.context
        self.members = members
        domain.theoretical = self

    @property
    def materialized(self) -> bool:
        return self.members is not None

    def statements(self) -> list[Statement]:
        if self.members is None:
            raise NotMaterialized("theoretical domain is in membership-query mode")
        return [Statement(self.context, bits) for bits in sorted(self.members)]

    def contains(self, stmt: Statement) -> bool:
        if stmt.context is not self.context:
            raise MixedContexts("statement belongs to a different context")
        if self.members is not None:
            return stmt.bits in self.members
        return all(not (cell & stmt.bits) or cell & stmt.bits == cell for _, cell in self.domain._cells)

    def __len__(self) -> int:
        if self.members is None:
            raise NotMaterialized("theoretical domain is in membership-query mode")
        return len(self.members)


def build_domain(basis: Basis, cap: int = DEFAULT_CLOSURE_CAP,
                 membership_only: bool = False) -> tuple[ExperimentalDomain, TheoreticalDomain]:
    """Close ``basis`` into its experimental and theoretical domains.

    Raises :class:`ClosureCapExceeded` when either closure outgrows ``cap``;
    pass ``membership_only=True`` to skip materialization altogether.
    """
    ctx = basis.context
    if membership_only:
        exp = ExperimentalDomain(basis, None)
        return exp, TheoreticalDomain(exp, None)
    adm = ctx.admissible
    gens = [m.bits for m in basis.members]
    meets = _meet_closure(gens, cap)
    opens = _join_closure(sorted(meets), cap)
    opens |= {0, adm}
    if len(opens) > cap:
        raise ClosureCapExceeded(f"closure exceeds {cap} members")
    exp = ExperimentalDomain(basis, frozenset(opens))

    literals = gens + [adm ^ g for g in gens] + [adm]
    cells = _meet_closure(literals, cap)
    algebra = _join_closure(sorted(cells), cap)
    algebra |= {adm}
    if len(algebra) > cap:
        raise ClosureCapExceeded(f"closure exceeds {cap} members")
    return exp, TheoreticalDomain(exp, frozenset(algebra))


class StatementClass(Enum):
    DECIDABLE = "Decidable"
    VERIFIABLE_ONLY = "VerifiableOnly"
    THEORETICAL_ONLY = "TheoreticalOnly"
    OUTSIDE = "Outside"


def classify(tdom: TheoreticalDomain, stmt: Statement) -> StatementClass:
    """Where ``stmt`` sits relative to the domains.

    Top and bottom come out :attr:`StatementClass.DECIDABLE` because both are
    members of every experimental domain.
    """
    exp = tdom.domain
    if exp.contains(stmt):
        return StatementClass.DECIDABLE if exp.contains(~stmt) else StatementClass.VERIFIABLE_ONLY
    if tdom.contains(stmt):
        return StatementClass.THEORETICAL_ONLY
    return StatementClass.OUTSIDE


def format_label(label: tuple[bool, ...]) -> str:
    return "".join("T" if v else "F" for v in label)


@dataclass(frozen=True)
class PossibilitySpace:
    """Possibilities of a domain sorted by label string; a possibility's id is its position."""

    domain: ExperimentalDomain
    possibilities: tuple[Statement, ...]
    labels: tuple[tuple[bool, ...], ...]

    def __len__(self) -> int:
        return len(self.possibilities)

    @property
    def full(self) -> int:
        return (1 << len(self.possibilities)) - 1

    def index(self, p: Statement) -> int:
        for i, q in enumerate(self.possibilities):
            if q == p:
                return i
        raise UnknownPossibility(f"{p!r} is not a possibility of this space")

    def label_of(self, i: int) -> str:
        return format_label(self.labels[i])

    def compatible_ids(self, stmt: Statement) -> int:
        """Bitmask of the ids of possibilities compatible with ``stmt``."""
        mask = 0
        for i, p in enumerate(self.possibilities):
            if p.bits & stmt.bits:
                mask |= 1 << i
        return mask

    def join(self, ids: int) -> Statement:
        """Disjunction of the possibilities whose ids are set in ``ids``."""
        bits = 0
        for i in iter_bits(ids):
            bits |= self.possibilities[i].bits
        return Statement(self.domain.context, bits)


def possibilities(domain: ExperimentalDomain) -> PossibilitySpace:
    cells = sorted(domain._cells, key=lambda lc: format_label(lc[0]))
    ctx = domain.context
    return PossibilitySpace(
        domain=domain,
        possibilities=tuple(Statement(ctx, cell) for _, cell in cells),
        labels=tuple(label for label, _ in cells),
    )


def possibility_oracle(tdom: TheoreticalDomain, stmt: Statement) -> bool:
    """Literal possibility test: non-contradictory, and every theoretical
    statement is either implied by ``stmt`` or incompatible with it."""
    if stmt.context is not tdom.context:
        raise MixedContexts("statement belongs to a different context")
    if tdom.members is None:
        raise NotMaterialized("the oracle scans every theoretical member")
    if stmt.bits == 0:
        return False
    x = stmt.bits
    return all(not (x & ~s) or not (x & s) for s in tdom.members)


def dnf(space: PossibilitySpace, stmt: Statement) -> tuple[Statement, ...]:
    """Possibilities compatible with an experimental statement; their disjunction is ``stmt``."""
    if not space.domain.contains(stmt):
        raise NotInDomain("statement is not in the experimental domain")
    return tuple(p for p in space.possibilities if p.bits & stmt.bits)


def label(space: PossibilitySpace, p: Statement) -> tuple[bool, ...]:
    return space.labels[space.index(p)]
