"""
Group families used by the benchmarks, and the ext construction that embeds a
group into a larger degree.

Only generators are exposed; the searches never see the product or induced
structure behind a family.
"""
import logging
from itertools import combinations
from math import comb

from services.errors import CanImageError
from services.group.perm_group import PermGroup
from services.group.permutation import Permutation, PointSet

logger = logging.getLogger("Families")

GRID_MAX_SIZE = 40
MSET_MAX_DEGREE = 10_000


def _cycle_table(n):
    return tuple((i + 1) % n for i in range(n))


def _swap_table(n):
    table = list(range(n))
    table[0], table[1] = 1, 0
    return tuple(table)


def symmetric_group(n):
    """S_n generated by (1,2) and (1,2,...,n)."""
    if n < 1:
        raise CanImageError(f"symmetric group needs n >= 1, got {n}")
    if n == 1:
        return PermGroup.trivial(1)
    return PermGroup([Permutation(_swap_table(n)), Permutation(_cycle_table(n))], n)


def cyclic_group(n):
    if n < 1:
        raise CanImageError(f"cyclic group needs n >= 1, got {n}")
    return PermGroup([Permutation(_cycle_table(n))], n)


def dihedral_group(n):
    """Symmetries of an n-gon: the rotation and the reflection fixing point 1."""
    if n < 3:
        raise CanImageError(f"dihedral group needs n >= 3, got {n}")
    reflection = Permutation(tuple((n - i) % n for i in range(n)))
    return PermGroup([Permutation(_cycle_table(n)), reflection], n)


def grid_group(n):
    """
    S_n x S_n acting on an n x n grid, rows and columns permuted independently.

    Point (i, j) is numbered (i-1)*n + j. The generators swap or cycle the rows
    and swap or cycle the columns.

    Args:
        n (int): side length, 2 <= n <= 40

    Returns:
        PermGroup: a group of degree n^2 and order (n!)^2
    """
    if n < 2 or n > GRID_MAX_SIZE:
        raise CanImageError(f"grid size must be in 2..{GRID_MAX_SIZE}, got {n}")
    generators = []
    for sigma in (_swap_table(n), _cycle_table(n)):
        rows = tuple(sigma[i] * n + j for i in range(n) for j in range(n))
        columns = tuple(i * n + sigma[j] for i in range(n) for j in range(n))
        generators.extend([Permutation(rows), Permutation(columns)])
    return PermGroup(generators, n * n)


def rank_subset(subset, n):
    """0-based lexicographic rank of an m-subset of {1..n}."""
    members = sorted(subset)
    m = len(members)
    rank = 0
    previous = 0
    for position, value in enumerate(members):
        for skipped in range(previous + 1, value):
            rank += comb(n - skipped, m - position - 1)
        previous = value
    return rank


def unrank_subset(rank, n, m):
    """The m-subset of {1..n} with the given 0-based lexicographic rank, as a sorted tuple."""
    if rank < 0 or rank >= comb(n, m):
        raise CanImageError(f"rank {rank} outside 0..{comb(n, m) - 1}")
    members = []
    value = 1
    for position in range(m):
        while True:
            count = comb(n - value, m - position - 1)
            if rank < count:
                members.append(value)
                value += 1
                break
            rank -= count
            value += 1
    return tuple(members)


def induced_permutation(g, n, m):
    """The action of a permutation of {1..n} on the lexicographically ranked m-subsets."""
    subsets = list(combinations(range(n), m))
    position = {subset: index for index, subset in enumerate(subsets)}
    table = g.table
    return Permutation(tuple(position[tuple(sorted(table[x] for x in s))] for s in subsets))


def mset_group(n, m):
    """
    S_n acting on the m-subsets of {1..n}.

    Point k is the k-th m-subset in lexicographic order (1-based).

    Args:
        n (int): size of the underlying set
        m (int): subset size, 2 <= m < n with C(n, m) <= 10^4

    Returns:
        PermGroup: the induced group of degree C(n, m)
    """
    if m < 2 or m >= n:
        raise CanImageError(f"m-set group needs 2 <= m < n, got n={n}, m={m}")
    degree = comb(n, m)
    if degree > MSET_MAX_DEGREE:
        raise CanImageError(f"C({n},{m}) = {degree} exceeds the cap of {MSET_MAX_DEGREE}")
    base = symmetric_group(n)
    generators = [induced_permutation(g, n, m) for g in base.generators]
    logger.debug(f"m-set group n={n}, m={m}: degree {degree}")
    return PermGroup(generators, degree)


def ext_elt(g, n, k):
    """
    Replicate g on k consecutive blocks of n points.

    Point j maps to q*n + r^g where q = (j-1) // n and r = (j-1) mod n + 1.
    """
    if g.degree != n:
        raise CanImageError(f"element of degree {g.degree} is not on {n} points")
    if k < 1:
        raise CanImageError(f"block count must be positive, got {k}")
    table = g.table
    return Permutation(tuple((j // n) * n + table[j % n] for j in range(k * n)))


def ext_group(group, k):
    """The image of `group` under ext_elt, acting on k*n points."""
    n = group.degree
    return PermGroup([ext_elt(g, n, k) for g in group.generators], n * k)


def adversarial_instance(group, point_set):
    """
    An instance that is hard for the reverse ordering to prune.

    Embeds the group into n+1 blocks and adds the markers l*n + l for l in
    1..n, one per block after the first. The result is its own minimal image under
    the reverse order, while its natural minimal image restricted to the first
    block is the natural minimal image of the input.

    Returns:
        tuple: (PermGroup of degree (n+1)*n, PointSet T)
    """
    n = group.degree
    if point_set.degree != n:
        raise CanImageError(f"set of degree {point_set.degree} is not on {n} points")
    extended = ext_group(group, n + 1)
    markers = [l * n + l for l in range(1, n + 1)]
    members = list(point_set.members) + markers
    return extended, PointSet.of(members, (n + 1) * n)
