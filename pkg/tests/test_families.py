from itertools import combinations
from math import comb, factorial

import numpy as np
import pytest

from conftest import point_set
from services.bench.families import (
    adversarial_instance,
    cyclic_group,
    dihedral_group,
    ext_elt,
    ext_group,
    grid_group,
    induced_permutation,
    mset_group,
    rank_subset,
    symmetric_group,
    unrank_subset,
)
from services.bench.random_source import (
    random_conjugate,
    random_group,
    random_permutation,
    random_subset,
)
from services.errors import CanImageError
from services.group.permutation import identity, parse_cycles
from services.oracle.brute import brute_min
from services.search.ordering import BaseOrdering


def test_grid_group_order_and_transitivity():
    assert grid_group(3).order() == 36
    assert grid_group(4).order() == factorial(4) ** 2
    assert len(grid_group(2).orbits()) == 1
    assert len(grid_group(5).fixed_points()) == 0


@pytest.mark.parametrize("n", [1, 41])
def test_grid_group_size_cap(n):
    with pytest.raises(CanImageError):
        grid_group(n)


def test_grid_group_preserves_rows_and_columns():
    n = 4
    group = grid_group(n)
    rows = [set(range(i * n, (i + 1) * n)) for i in range(n)]
    for g in group.generators:
        for row in rows:
            assert {g.table[x] for x in row} in rows


def test_small_families():
    assert cyclic_group(7).order() == 7
    assert dihedral_group(8).order() == 16
    assert symmetric_group(4).order() == 24
    with pytest.raises(CanImageError):
        dihedral_group(2)


def test_mset_groups():
    group = mset_group(4, 2)
    assert group.degree == 6
    assert group.order() == 24
    small = mset_group(3, 2)
    assert small.degree == 3
    assert small.order() == 6
    assert mset_group(7, 3).degree == comb(7, 3)


@pytest.mark.parametrize("n, m", [(4, 1), (4, 4), (30, 5)])
def test_mset_group_caps(n, m):
    with pytest.raises(CanImageError):
        mset_group(n, m)


def test_subset_ranking_is_lexicographic():
    subsets = list(combinations(range(1, 7), 3))
    assert [rank_subset(s, 6) for s in subsets] == list(range(len(subsets)))
    assert [unrank_subset(r, 6, 3) for r in range(len(subsets))] == subsets
    with pytest.raises(CanImageError):
        unrank_subset(comb(6, 3), 6, 3)


def test_induced_action_commutes_with_ranking():
    rng = np.random.default_rng(8)
    n, m = 6, 3
    assert induced_permutation(identity(n), n, m).is_identity()
    for _ in range(10):
        g = random_permutation(n, rng)
        induced = induced_permutation(g, n, m)
        for subset in combinations(range(1, n + 1), m):
            image = sorted(g.act_point(x) for x in subset)
            assert rank_subset(image, n) == induced.table[rank_subset(subset, n)]


def test_ext_elt_example():
    g = parse_cycles("(1,3,4)", 4)
    assert ext_elt(g, 4, 3).act_point(12) == 9
    assert ext_elt(identity(4), 4, 3).is_identity()


def test_ext_is_a_homomorphism():
    rng = np.random.default_rng(9)
    for _ in range(100):
        a = random_permutation(5, rng)
        b = random_permutation(5, rng)
        assert ext_elt(a * b, 5, 3) == ext_elt(a, 5, 3) * ext_elt(b, 5, 3)


def test_ext_group_isomorphic_and_block_preserving():
    rng = np.random.default_rng(10)
    for _ in range(10):
        group = random_group(4, rng)
        extended = ext_group(group, 3)
        assert extended.degree == 12
        assert extended.order() == group.order()
        blocks = [set(range(k * 4, (k + 1) * 4)) for k in range(3)]
        for g in extended.generators:
            for block in blocks:
                assert {g.table[x] for x in block} == block


def test_adversarial_instance_small_example():
    group, target = adversarial_instance(symmetric_group(2), point_set(2, 1))
    assert group.degree == 6
    assert target.members == (1, 3, 6)
    assert brute_min(group, target, BaseOrdering.reverse(6)).image == target


def test_adversarial_instance_with_empty_set():
    group, target = adversarial_instance(cyclic_group(3), point_set(3))
    assert target.members == (4, 8, 12)
    assert brute_min(group, target, BaseOrdering.reverse(12)).image == target


def test_adversarial_instance_properties_on_random_groups():
    rng = np.random.default_rng(12)
    for _ in range(100):
        n = int(rng.integers(2, 5))
        group = random_group(n, rng, int(rng.integers(1, 3)))
        s = random_subset(n, int(rng.integers(0, n + 1)), rng)
        extended, target = adversarial_instance(group, s)
        degree = extended.degree
        assert brute_min(extended, target, BaseOrdering.reverse(degree)).image == target
        natural_min = brute_min(extended, target).image
        first_block = tuple(p for p in natural_min.members if p <= n)
        assert first_block == brute_min(group, s).image.members


def test_random_source_is_deterministic(ex26):
    first_group, first_sigma = random_conjugate(ex26, 42)
    second_group, second_sigma = random_conjugate(ex26, 42)
    assert first_sigma == second_sigma
    assert first_group.order() == ex26.order()
    assert random_subset(10, 5, 42) == random_subset(10, 5, 42)
    subset = random_subset(10, 5, 7)
    assert len(subset) == 5
    assert all(1 <= p <= 10 for p in subset)
    with pytest.raises(CanImageError):
        random_subset(3, 4, 1)
