"""
Orderings of the domain and the induced order on subsets.

A base ordering is a permutation sigma with x <=_sigma y iff x^sigma <= y^sigma.
A set A is less than B when the smallest point of their symmetric difference
belongs to A.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

from services.errors import CanImageError, DegreeMismatchError
from services.group.permutation import Permutation, act_set, parse_cycles, reversal
from services.utils.cache import get_conjugate

logger = logging.getLogger("Ordering")

ORDER_SPECS = ('natural', 'reverse', 'fixedminorbit', 'fixedmaxorbit', 'perm:<cycles>')


@dataclass(frozen=True)
class BaseOrdering:
    """A total order on {1..n} given by a permutation."""

    sigma: Permutation
    name: str = field(default="custom", compare=False)

    @classmethod
    def natural(cls, degree):
        return cls(Permutation.identity(degree), "natural")

    @classmethod
    def reverse(cls, degree):
        return cls(reversal(degree), "reverse")

    @classmethod
    def from_indices(cls, indices, name="custom"):
        """Ordering in which the 0-based points appear in the given sequence."""
        if sorted(indices) != list(range(len(indices))):
            raise CanImageError(f"ordering must list every point exactly once: {indices}")
        table = [0] * len(indices)
        for position, point in enumerate(indices):
            table[point] = position
        return cls(Permutation(tuple(table)), name)

    @classmethod
    def from_sequence(cls, points, name="custom"):
        """Ordering from 1-based points listed smallest first."""
        return cls.from_indices([p - 1 for p in points], name)

    @property
    def degree(self):
        return self.sigma.degree

    @property
    def rank(self):
        """rank[i] is the position of the 0-based point i in this order."""
        return self.sigma.table

    @cached_property
    def _sequence_indices(self):
        indices = [0] * self.degree
        for point, position in enumerate(self.rank):
            indices[position] = point
        return tuple(indices)

    def sequence_indices(self):
        """0-based points, smallest first."""
        return self._sequence_indices

    def sequence(self):
        """1-based points, smallest first."""
        return [i + 1 for i in self._sequence_indices]

    def is_natural(self):
        return self.sigma.is_identity()

    def less(self, x, y):
        return self.rank[x - 1] < self.rank[y - 1]

    def set_key(self, indices):
        """
        A sort key realising the set order on 0-based member tuples.

        Comparing sorted rank sequences, with the domain size appended as an
        end marker, decides A < B exactly at the smallest point of the
        symmetric difference.
        """
        rank = self.rank
        return tuple(sorted(rank[i] for i in indices)) + (len(rank),)


def _check_degree(ordering, *point_sets):
    for point_set in point_sets:
        if point_set.degree != ordering.degree:
            raise DegreeMismatchError(ordering.degree, point_set.degree)


def set_less(a, b, ordering):
    """Strict set order: True iff A is less than B and A != B."""
    _check_degree(ordering, a, b)
    difference = set(a.indices).symmetric_difference(b.indices)
    if not difference:
        return False
    rank = ordering.rank
    smallest = min(difference, key=lambda i: rank[i])
    return smallest in set(a.indices)


def min_of_list(sets, ordering):
    """The least PointSet of a nonempty list under the set order."""
    if not sets:
        raise CanImageError("min_of_list needs at least one set")
    _check_degree(ordering, *sets)
    return min(sets, key=lambda s: ordering.set_key(s.indices))


def _orbit_size_order(group, prefer_small, cumulative, name):
    remain = set(range(group.degree))
    order = []
    current = group
    while remain:
        if cumulative and current.is_trivial():
            # Every orbit is a singleton from here on
            order.extend(sorted(remain))
            break
        qualifying = [o.indices for o in current.orbits() if any(x in remain for x in o.indices)]
        sizes = [len(o) for o in qualifying]
        target = min(sizes) if prefer_small else max(sizes)
        point = min(x for o in qualifying if len(o) == target for x in o if x in remain)
        remain.discard(point)
        order.append(point)
        stabilized = current if cumulative else group
        current = stabilized.stabilizer_of_index(point)
    logger.debug(f"{name} ordering: {[i + 1 for i in order]}")
    return BaseOrdering.from_indices(order, name)


def fixed_min_orbit(group, cumulative=True):
    """
    Static ordering that places points of small orbits first.

    Repeatedly takes the smallest point of a smallest orbit (among orbits that
    still contain unordered points) of the current stabilizer and then
    stabilizes it.

    Args:
        group (PermGroup): the acting group
        cumulative (bool): stabilize inside the current stabilizer (default);
            False stabilizes each chosen point in the original group instead

    Returns:
        BaseOrdering: the computed ordering
    """
    return _orbit_size_order(group, True, cumulative, "fixedminorbit")


def fixed_max_orbit(group, cumulative=True):
    """Like fixed_min_orbit, but prefers the largest qualifying orbit."""
    return _orbit_size_order(group, False, cumulative, "fixedmaxorbit")


def transport(group, point_set, ordering):
    """
    Move a problem under `ordering` to the natural order.

    Returns:
        tuple: (G^sigma, S^sigma, sigma); the minimal image under `ordering`
        is the natural minimal image of the transported problem mapped back
        by sigma^-1
    """
    _check_degree(ordering, point_set)
    sigma = ordering.sigma
    if sigma.is_identity():
        return group, point_set, sigma
    return get_conjugate(group, sigma), act_set(sigma, point_set), sigma


def parse_order_spec(spec, group):
    """Resolve a command-line order specifier against a group."""
    text = spec.strip()
    degree = group.degree
    if text == 'natural':
        return BaseOrdering.natural(degree)
    if text == 'reverse':
        return BaseOrdering.reverse(degree)
    if text == 'fixedminorbit':
        return fixed_min_orbit(group)
    if text == 'fixedmaxorbit':
        return fixed_max_orbit(group)
    if text.startswith('perm:'):
        return BaseOrdering(parse_cycles(text[len('perm:'):], degree), text)
    raise CanImageError(f"unknown order {spec!r}, expected one of {', '.join(ORDER_SPECS)}")
