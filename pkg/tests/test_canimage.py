import numpy as np
import pytest

from conftest import make_group, point_set
from services.bench.families import dihedral_group, grid_group
from services.bench.random_source import random_group, random_subset
from services.errors import CanImageError, SearchTimeout
from services.group.perm_group import PermGroup
from services.group.permutation import identity
from services.oracle.brute import set_orbit
from services.search.canimage import (
    SINGLE_MAX_ORBIT,
    STRATEGIES,
    CandidateList,
    Refiner,
    Selector,
    Signature,
    can_image_recurse,
    canonical_image,
    get_strategy,
    orbcount,
    refine,
    select_point,
)
from services.search.minimage import minimal_image
from services.search.ordering import BaseOrdering
from services.search.stats import Candidate

ALL_STRATEGIES = list(STRATEGIES.values()) + [SINGLE_MAX_ORBIT]


def test_strategy_table():
    assert len(STRATEGIES) == 9
    plus_min = get_strategy('RareOrbitPlusMin')
    assert (plus_min.selector, plus_min.refiner) == (Selector.RARE_ORBIT, Refiner.PLUS_MIN)
    assert get_strategy('singlemaxorbit') is SINGLE_MAX_ORBIT
    with pytest.raises(CanImageError):
        get_strategy('bestorbit')


def test_orbcount_example():
    group = make_group(8, "(1,4)", "(2,8)", "(5,6)", "(7,8)")
    assert orbcount(group, point_set(8, 1, 3, 5, 6)) == (1, 0, 1, 2)
    assert orbcount(group, point_set(8)) == (0, 0, 0, 0)


def test_orbcount_invariant_under_group(ex26, rng):
    s = point_set(6, 2, 3, 5)
    stabilizer = ex26.point_stabilizer(1)
    for _ in range(10):
        g = stabilizer.random_element(rng)
        assert orbcount(stabilizer, g.act_set(s)) == orbcount(stabilizer, s)


@pytest.mark.parametrize("name", ['minorbit', 'rareorbit'])
def test_selectors_pick_point_four(split_group, name):
    candidates = CandidateList.of_sets([point_set(10, 3, 6, 7)])
    assert select_point(get_strategy(name), split_group, candidates) == 4


def test_select_point_needs_nontrivial_group():
    with pytest.raises(CanImageError):
        select_point(get_strategy('minorbit'), PermGroup.trivial(3), CandidateList.of_sets([point_set(3, 1)]))


def test_select_point_degenerate_case(split_group):
    candidates = CandidateList.of_sets([point_set(10, 3, 7)])
    assert select_point(get_strategy('maxorbit'), split_group, candidates) is None


def test_selector_objectives_differ():
    group = make_group(9, "(1,2)", "(3,4,5,6,7)")
    candidates = CandidateList.of_sets([point_set(9, 1, 3, 4, 5)])
    assert select_point(get_strategy('minorbit'), group, candidates) == 1
    assert select_point(get_strategy('maxorbit'), group, candidates) == 3
    assert select_point(get_strategy('rareorbit'), group, candidates) == 1
    assert select_point(get_strategy('commonorbit'), group, candidates) == 3
    # log(1)/2 = 0 against log(3)/5 > 0
    assert select_point(get_strategy('rareratioorbit'), group, candidates) == 1
    assert select_point(get_strategy('commonratioorbit'), group, candidates) == 3


def test_point_refinement_keeps_sets_through_fixed_points(ex26):
    s = point_set(6, 2, 3, 5)
    expanded = CandidateList.of_sets([q.act_set(s) for q in ex26.coset_representatives(1)])
    stabilizer = ex26.point_stabilizer(1)
    kept = refine(get_strategy('minorbit'), stabilizer, expanded)
    assert len(kept) == 1
    assert kept.sets()[0] in set_orbit(stabilizer, point_set(6, 1, 2, 3))


def test_refine_single_candidate_is_itself(ex26):
    single = CandidateList.of_sets([point_set(6, 1, 2)])
    assert refine(get_strategy('rareorbitplusrare'), ex26, single).sets() == single.sets()


def test_plus_min_keeps_least_orbit_count():
    group = make_group(4, "(1,2)", "(3,4)")
    expanded = CandidateList.of_sets([point_set(4, 1), point_set(4, 3)])
    kept = refine(get_strategy('rareorbitplusmin'), group, expanded)
    assert [c.members for c in kept.sets()] == [(3,)]


def test_orbit_target_drawn_from_whole_expanded_list():
    group = make_group(6, "(2,3)", "(4,5)")
    expanded = CandidateList.of_sets([point_set(6, 1, 2), point_set(6, 1, 4), point_set(6, 2, 4)])
    kept = refine(get_strategy('rareorbitplusmin'), group, expanded)
    # {2,4} has the least orbit counts but misses fixed point 1, so the first cell stays whole
    assert [c.members for c in kept.sets()] == [(1, 2), (1, 4)]


def test_plus_rare_and_plus_common_use_weighted_frequency():
    group = make_group(4, "(1,2)", "(3,4)")
    entries = [
        Candidate(point_set(4, 1), identity(4), 2),
        Candidate(point_set(4, 3), identity(4), 1),
    ]
    expanded = CandidateList.of(entries)
    rare = refine(get_strategy('rareorbitplusrare'), group, expanded)
    common = refine(get_strategy('rareorbitpluscommon'), group, expanded)
    assert [c.members for c in rare.sets()] == [(3,)]
    assert [c.members for c in common.sets()] == [(1,)]


def test_candidate_list_validation():
    with pytest.raises(CanImageError):
        CandidateList.of([])
    with pytest.raises(CanImageError):
        CandidateList.of_sets([point_set(4, 1), point_set(4, 1, 2)])


def test_recurse_on_trivial_group_takes_least_set():
    candidates = CandidateList.of_sets([point_set(6, 2, 3, 5), point_set(6, 1, 3, 5)])
    best, signature = can_image_recurse(PermGroup.trivial(6), candidates, Signature(),
                                        get_strategy('minorbit'), BaseOrdering.natural(6))
    assert best.set.members == (1, 3, 5)
    assert len(signature) == 0


def test_trivial_group_returns_input():
    s = point_set(5, 1, 4)
    result = canonical_image(PermGroup.trivial(5), s, 'rareorbitplusmin')
    assert result.image == s
    assert result.witness.is_identity()


@pytest.mark.parametrize("strategy", ALL_STRATEGIES, ids=lambda s: s.name)
def test_canonical_image_invariant_on_worked_example(ex26, strategy):
    rng = np.random.default_rng(31)
    s = point_set(6, 2, 3, 5)
    expected = canonical_image(ex26, s, strategy)
    assert expected.witness.act_set(s) == expected.image
    assert ex26.contains(expected.witness)
    for _ in range(50):
        moved = ex26.random_element(rng).act_set(s)
        result = canonical_image(ex26, moved, strategy)
        assert result.image == expected.image
        assert result.witness.act_set(moved) == result.image


@pytest.mark.parametrize("strategy", ALL_STRATEGIES, ids=lambda s: s.name)
def test_canonical_images_separate_orbits(strategy):
    group = dihedral_group(8)
    orbit_of = {}
    for s in (random_subset(8, 3, seed) for seed in range(40)):
        if s.indices in orbit_of:
            continue
        for member in set_orbit(group, s):
            orbit_of[member.indices] = s.indices
    image_of_orbit = {}
    for indices, representative in orbit_of.items():
        image = canonical_image(group, point_set(8, *[i + 1 for i in indices]), strategy).image
        image_of_orbit.setdefault(representative, set()).add(image.indices)
    assert all(len(images) == 1 for images in image_of_orbit.values())
    distinct = [next(iter(images)) for images in image_of_orbit.values()]
    assert len(set(distinct)) == len(distinct)


def test_canonical_image_under_reverse_order_is_invariant(ex26):
    rng = np.random.default_rng(4)
    ordering = BaseOrdering.reverse(6)
    s = point_set(6, 1, 4)
    expected = canonical_image(ex26, s, 'rareorbitplusmin', ordering).image
    for _ in range(20):
        moved = ex26.random_element(rng).act_set(s)
        assert canonical_image(ex26, moved, 'rareorbitplusmin', ordering).image == expected


def test_canonical_node_budget():
    with pytest.raises(SearchTimeout) as info:
        canonical_image(grid_group(4), random_subset(16, 8, 2), 'minorbit', node_budget=5)
    assert info.value.stats.nodes == 5


def test_selector_and_refiner_equivariance():
    rng = np.random.default_rng(77)
    natural = BaseOrdering.natural(8)
    for _ in range(60):
        group = random_group(8, rng, 1)
        if group.is_trivial():
            continue
        sets = [random_subset(8, 3, rng) for _ in range(4)]
        moved = [group.random_element(rng).act_set(s) for s in sets]
        for strategy in ALL_STRATEGIES:
            original = CandidateList.of_sets(sets)
            shuffled = CandidateList.of_sets(moved[::-1])
            assert select_point(strategy, group, original) == select_point(strategy, group, shuffled)
            kept = refine(strategy, group, original, natural)
            kept_moved = refine(strategy, group, shuffled, natural)
            assert sorted(minimal_image(group, s).image.indices for s in kept.sets()) == \
                sorted(minimal_image(group, s).image.indices for s in kept_moved.sets())
