import itertools
import random

import pytest

from corpus import instance_corpus, make_instance
from oracles import naive_closure
from expdomain.domains import Basis, build_domain, dnf, possibilities
from expdomain.errors import EnumerationCapExceeded, NotInDomain, NotMaterialized
from expdomain.spaces import (approx_verifiable, borel_of, check_properties, correspondence_check,
                              correspondence_rows, generate_opens, is_discrete, is_hausdorff, is_t0,
                              is_topology, natural_sigma_algebra, natural_topology, theoretical_set,
                              verifiable_set)
from expdomain.statements import build_context, eval_statement


def ids_by_label(space, *labels):
    mask = 0
    for i in range(len(space)):
        if space.label_of(i) in labels:
            mask |= 1 << i
    return mask


def test_verifiable_set_examples(animals):
    space = animals.space
    assert sorted(verifiable_set(space, animals.statement("cat")).labels()) == ["TFF", "TFT"]
    assert verifiable_set(space, animals.context.top).members == space.full
    assert verifiable_set(space, animals.context.bottom).members == 0
    with pytest.raises(NotInDomain):
        verifiable_set(space, animals.statement("!black"))


def test_theoretical_set_examples(animals, sierpinski):
    assert theoretical_set(sierpinski.space, sierpinski.statement("!s")).labels() == ["F"]
    assert theoretical_set(animals.space, animals.context.top).members == animals.space.full
    assert sorted(theoretical_set(animals.space, animals.statement("!cat & !dog")).labels()) == ["FFF", "FFT"]
    with pytest.raises(NotInDomain):
        theoretical_set(animals.space, animals.statement("mammal & !cat & !dog"))


def test_sierpinski_topology(sierpinski):
    top = natural_topology(sierpinski.space)
    t = ids_by_label(sierpinski.space, "T")
    assert top.opens == {0, t, sierpinski.space.full}
    assert top.subbasis == (t,)


def test_discrete_and_indiscrete(decidable):
    assert natural_topology(decidable.space).opens == {0, 1, 2, 3}
    ctx = build_context(["a"])
    inst = make_instance(ctx, [ctx.top])
    assert natural_topology(inst.space).opens == {0, 1}
    assert natural_sigma_algebra(inst.space).sets == {0, 1}


def test_sigma_examples(sierpinski, animals):
    assert natural_sigma_algebra(sierpinski.space).sets == {0, 1, 2, 3}
    assert borel_of(natural_topology(sierpinski.space)).sets == {0, 1, 2, 3}
    sigma = natural_sigma_algebra(animals.space)
    assert len(sigma.sets) == 64 and sigma.sets == set(range(64))


def test_borel_of_discrete_spaces():
    for n in range(1, 5):
        ctx = build_context([f"x{i}" for i in range(n)])
        members = [eval_statement(ctx, f"x{i}") for i in range(n)]
        members += [~m for m in members]
        inst = make_instance(ctx, members)
        assert len(inst.space) == 2 ** n
        top = natural_topology(inst.space)
        assert is_discrete(top.opens, len(inst.space))
        assert borel_of(top).sets == set(range(1 << len(inst.space)))


def test_borel_matches_naive_fixpoint():
    for inst in instance_corpus(seed=41, count=40, max_atoms=5, max_basis=3, max_points=5):
        top = natural_topology(inst.space)
        full = inst.space.full
        naive = naive_closure(top.opens, ([lambda a: full ^ a], [lambda a, b: a | b]))
        assert borel_of(top).sets == naive


def test_borel_idempotent():
    for inst in instance_corpus(seed=43, count=30, max_atoms=5, max_basis=3):
        sigma = natural_sigma_algebra(inst.space)
        as_top = type(natural_topology(inst.space))(inst.space, sigma.sets, ())
        assert borel_of(as_top).sets == sigma.sets


def test_properties_sierpinski(sierpinski):
    report = check_properties(sierpinski.space)
    assert report.is_t0 and not report.is_hausdorff and report.sigma_is_borel
    assert report.approx_verifiable == {"T": True, "F": False}
    assert report.is_topology and report.is_second_countable


def test_properties_decidable(decidable):
    report = check_properties(decidable.space)
    assert report.is_hausdorff and report.all_approx_verifiable and report.is_discrete


def test_properties_interval(interval):
    report = check_properties(interval.space)
    assert report.is_t0 and not report.is_hausdorff
    # grid points (0,0,0,1,0) and (0,0,0,0,1) lie only in the wide intervals
    assert report.approx_verifiable == {"FFTFT": True, "FTFTT": True, "TFFTF": True,
                                        "FFFTF": False, "FFFFT": False}


def test_enumeration_cap():
    ctx = build_context([f"x{i}" for i in range(5)])
    basis = Basis(ctx, tuple(eval_statement(ctx, f"x{i}") for i in range(5)))
    exp, _ = build_domain(basis, membership_only=True)
    space = possibilities(exp)
    assert len(space) == 32
    with pytest.raises(EnumerationCapExceeded):
        natural_topology(space, cap=16)
    top = natural_topology(space, cap=16, subbasis_only=True)
    assert top.opens is None and len(top.subbasis) == 5
    with pytest.raises(NotMaterialized):
        borel_of(top)
    with pytest.raises(EnumerationCapExceeded):
        check_properties(space, cap=16)
    # query mode still yields the opens by subbasis generation below the cap
    assert len(natural_topology(space, cap=32).opens) == len(generate_opens(top.subbasis, space.full))


def test_topology_from_domain_matches_subbasis_generation():
    for inst in instance_corpus(seed=47, count=60, max_atoms=6, max_basis=4, max_points=10):
        top = natural_topology(inst.space)
        assert generate_opens(top.subbasis, inst.space.full) == top.opens


def test_verifiable_set_injective_and_matches_dnf():
    for inst in instance_corpus(seed=53, count=50, max_atoms=5, max_basis=3):
        space = inst.space
        top = natural_topology(space)
        images = {}
        for s in inst.experimental.statements():
            u = verifiable_set(space, s).members
            assert u in top.opens
            assert images.setdefault(u, s.bits) == s.bits
            assert u == sum(1 << space.index(p) for p in dnf(space, s))


def _brute_t0(opens, n):
    return all(any(((o >> x) & 1) != ((o >> y) & 1) for o in opens)
               for x, y in itertools.combinations(range(n), 2))


def test_separation_checks_on_arbitrary_topologies():
    rng = random.Random(59)
    for _ in range(200):
        n = rng.randint(1, 5)
        subbasis = [rng.randrange(1 << n) for _ in range(rng.randint(0, 4))]
        opens = generate_opens(subbasis, (1 << n) - 1)
        assert is_topology(opens, (1 << n) - 1)
        assert is_t0(opens, n) == _brute_t0(opens, n)
        hausdorff = is_hausdorff(opens, n)
        assert hausdorff == is_discrete(opens, n) == all(approx_verifiable(opens, n))


def test_is_topology_rejects_non_topologies():
    assert not is_topology(frozenset({0, 1, 2}), 3)
    assert not is_topology(frozenset({1, 3}), 3)


def test_correspondence_examples(animals):
    cat, mammal = animals.statement("cat"), animals.statement("mammal")
    assert not animals.theoretical.contains(mammal)
    cat_or_dog = animals.statement("cat | dog")
    rows = correspondence_rows(animals.space, cat, cat_or_dog)
    assert all(rows.values())
    assert theoretical_set(animals.space, cat).members & ~theoretical_set(animals.space, cat_or_dog).members == 0
    assert correspondence_check(animals.space, cat, ~cat)


def test_correspondence_random():
    rng = random.Random(61)
    for inst in instance_corpus(seed=67, count=30, max_atoms=6, max_basis=3):
        members = inst.theoretical.statements()
        for _ in range(50):
            assert correspondence_check(inst.space, rng.choice(members), rng.choice(members))
