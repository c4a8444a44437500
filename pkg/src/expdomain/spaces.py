"""Natural topology and sigma-algebra on a possibility space.

Subsets of the possibilities are bitmasks over possibility ids (the
positions in :attr:`PossibilitySpace.possibilities`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .domains import PossibilitySpace, TheoreticalDomain
from .errors import EnumerationCapExceeded, NotInDomain, NotMaterialized
from .statements import Statement, compatible, equivalent, iter_bits, narrower

DEFAULT_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class PossibilitySubset:
    space: PossibilitySpace = field(repr=False, compare=False)
    members: int

    def ids(self) -> list[int]:
        return list(iter_bits(self.members))

    def labels(self) -> list[str]:
        return [self.space.label_of(i) for i in iter_bits(self.members)]

    def __len__(self) -> int:
        return self.members.bit_count()

    def __contains__(self, i: int) -> bool:
        return bool((self.members >> i) & 1)


def canonical(family: Iterable[int]) -> list[int]:
    """Sort a set family by size, then by the sorted id list."""
    return sorted(set(family), key=lambda m: (m.bit_count(), list(iter_bits(m))))


@dataclass(frozen=True)
class Topology:
    """Open sets of a possibility space (``opens`` is ``None`` in subbasis-only mode)."""

    space: PossibilitySpace
    opens: frozenset[int] | None
    subbasis: tuple[int, ...]

    def open_sets(self) -> list[PossibilitySubset]:
        if self.opens is None:
            raise NotMaterialized("topology was built in subbasis-only mode")
        return [PossibilitySubset(self.space, m) for m in canonical(self.opens)]


@dataclass(frozen=True)
class SigmaAlgebra:
    space: PossibilitySpace
    sets: frozenset[int]

    def measurable_sets(self) -> list[PossibilitySubset]:
        return [PossibilitySubset(self.space, m) for m in canonical(self.sets)]


@dataclass(frozen=True)
class PropertyReport:
    """Checks on the natural structures of one possibility space.

    A possibility counts as approximately verifiable when the intersection
    of all open sets containing it is the singleton of that possibility.
    """

    is_topology: bool
    is_t0: bool
    is_second_countable: bool
    subbasis: tuple[int, ...]
    is_hausdorff: bool
    is_discrete: bool
    sigma_is_algebra: bool
    sigma_is_borel: bool
    approx_verifiable: dict[str, bool]

    @property
    def all_approx_verifiable(self) -> bool:
        return all(self.approx_verifiable.values())


def _check_cap(space: PossibilitySpace, cap: int) -> None:
    if len(space) > cap:
        raise EnumerationCapExceeded(f"{len(space)} possibilities exceeds the cap of {cap}")


def verifiable_set(space: PossibilitySpace, stmt: Statement) -> PossibilitySubset:
    if not space.domain.contains(stmt):
        raise NotInDomain("statement is not in the experimental domain")
    return PossibilitySubset(space, space.compatible_ids(stmt))


def _theory(space: PossibilitySpace) -> TheoreticalDomain:
    tdom = space.domain.theoretical
    if tdom is None:
        raise NotMaterialized("experimental domain has no theoretical domain attached")
    return tdom


def theoretical_set(space: PossibilitySpace, stmt: Statement) -> PossibilitySubset:
    if not _theory(space).contains(stmt):
        raise NotInDomain("statement is not in the theoretical domain")
    return PossibilitySubset(space, space.compatible_ids(stmt))


def generate_opens(subbasis: Iterable[int], full: int) -> frozenset[int]:
    """All unions of finite intersections of ``subbasis``, with the empty set and ``full``."""
    meets: set[int] = set()
    for s in subbasis:
        meets |= {s & m for m in meets}
        meets.add(s)
    opens = {0}
    for m in sorted(meets):
        opens |= {m | o for o in opens}
    opens.add(full)
    return frozenset(opens)


def natural_topology(space: PossibilitySpace, cap: int = DEFAULT_ENUMERATION_CAP,
                     subbasis_only: bool = False) -> Topology:
    """Verifiable sets of every experimental statement."""
    subbasis = tuple(space.compatible_ids(b) for b in space.domain.basis.members)
    if len(space) > cap:
        if subbasis_only:
            return Topology(space, None, subbasis)
        _check_cap(space, cap)
    if space.domain.materialized:
        opens = frozenset(space.compatible_ids(s) for s in space.domain.statements())
    else:
        opens = generate_opens(subbasis, space.full)
    return Topology(space, opens, subbasis)


def natural_sigma_algebra(space: PossibilitySpace, cap: int = DEFAULT_ENUMERATION_CAP) -> SigmaAlgebra:
    """Theoretical sets of every theoretical statement."""
    _check_cap(space, cap)
    tdom = _theory(space)
    if not tdom.materialized:
        raise NotMaterialized("theoretical domain is in membership-query mode")
    return SigmaAlgebra(space, frozenset(space.compatible_ids(s) for s in tdom.statements()))


def borel_of(top: Topology) -> SigmaAlgebra:
    """Smallest family containing the opens closed under complement and union.

    On a finite set this is the algebra whose atoms are the classes of points
    that no open set separates; it is built as all unions of those atoms.
    """
    if top.opens is None:
        raise NotMaterialized("topology was built in subbasis-only mode")
    full = top.space.full
    atoms = [full] if full else []
    for o in top.opens:
        refined = []
        for a in atoms:
            inside, outside = a & o, a & ~o
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        atoms = refined
    sets = {0}
    for a in atoms:
        sets |= {a | s for s in sets}
    return SigmaAlgebra(top.space, frozenset(sets))


def is_topology(opens: frozenset[int], full: int) -> bool:
    if 0 not in opens or full not in opens:
        return False
    family = list(opens)
    for i, a in enumerate(family):
        for b in family[i + 1:]:
            if (a & b) not in opens or (a | b) not in opens:
                return False
    return True


def is_sigma_algebra(sets: frozenset[int], full: int) -> bool:
    if 0 not in sets or full not in sets:
        return False
    if any((full ^ s) not in sets for s in sets):
        return False
    family = list(sets)
    return all((a | b) in sets for i, a in enumerate(family) for b in family[i + 1:])


def is_t0(opens: frozenset[int], n: int) -> bool:
    for x in range(n):
        for y in range(x + 1, n):
            if not any(((o >> x) ^ (o >> y)) & 1 for o in opens):
                return False
    return True


def is_hausdorff(opens: frozenset[int], n: int) -> bool:
    """Every pair of distinct points has disjoint open neighborhoods."""
    ordered = sorted(opens, key=int.bit_count)
    for x in range(n):
        around_x = [o for o in ordered if (o >> x) & 1]
        for y in range(x + 1, n):
            around_y = [o for o in ordered if (o >> y) & 1]
            if not any(not (u & v) for u in around_x for v in around_y):
                return False
    return True


def is_discrete(opens: frozenset[int], n: int) -> bool:
    return len(opens) == 1 << n


def approx_verifiable(opens: frozenset[int], n: int) -> list[bool]:
    """Whether each point's minimal open neighborhood is its own singleton."""
    flags = []
    for x in range(n):
        nbhd = (1 << n) - 1
        for o in opens:
            if (o >> x) & 1:
                nbhd &= o
        flags.append(nbhd == 1 << x)
    return flags


def check_properties(space: PossibilitySpace, cap: int = DEFAULT_ENUMERATION_CAP) -> PropertyReport:
    top = natural_topology(space, cap)
    sigma = natural_sigma_algebra(space, cap)
    n, full = len(space), space.full
    opens = top.opens
    flags = approx_verifiable(opens, n)
    return PropertyReport(
        is_topology=is_topology(opens, full),
        is_t0=is_t0(opens, n),
        is_second_countable=generate_opens(top.subbasis, full) == opens,
        subbasis=top.subbasis,
        is_hausdorff=is_hausdorff(opens, n),
        is_discrete=is_discrete(opens, n),
        sigma_is_algebra=is_sigma_algebra(sigma.sets, full),
        sigma_is_borel=borel_of(top).sets == sigma.sets,
        approx_verifiable={space.label_of(i): f for i, f in enumerate(flags)},
    )


TABLE_II_ROWS = ("conjunction", "disjunction", "negation", "equivalence", "narrower", "broader",
                 "compatibility")


def correspondence_rows(space: PossibilitySpace, s1: Statement, s2: Statement) -> dict[str, bool]:
    """Each statement-operator / set-operator row, evaluated for one pair."""
    def theo(s: Statement) -> int:
        return theoretical_set(space, s).members

    a1, a2 = theo(s1), theo(s2)
    return {
        "conjunction": theo(s1 & s2) == a1 & a2,
        "disjunction": theo(s1 | s2) == a1 | a2,
        "negation": theo(~s1) == space.full ^ a1,
        "equivalence": equivalent(s1, s2) == (a1 == a2),
        "narrower": narrower(s1, s2) == (a1 & ~a2 == 0),
        "broader": narrower(s2, s1) == (a2 & ~a1 == 0),
        "compatibility": compatible(s1, s2) == (a1 & a2 != 0),
    }


def correspondence_check(space: PossibilitySpace, s1: Statement, s2: Statement) -> bool:
    return all(correspondence_rows(space, s1, s2).values())
