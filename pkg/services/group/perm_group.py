"""
Finitely generated permutation groups
"""
import logging
from dataclasses import dataclass
from typing import Optional

from services.errors import CanImageError, DegreeMismatchError
from services.group.chain import StabilizerChain
from services.group.permutation import Permutation, PointSet

logger = logging.getLogger("PermGroup")


@dataclass(frozen=True)
class OrbitList:
    """
    Orbits of a group sorted by their smallest member under a base ordering.

    `index[i]` is the position (in `orbits`) of the orbit containing the
    0-based point i.
    """

    orbits: tuple
    index: tuple

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def __getitem__(self, position):
        return self.orbits[position]

    def orbit_of(self, point):
        """The orbit containing a 1-based point."""
        return self.orbits[self.index[point - 1]]


class PermGroup:
    """
    A permutation group given by generators, with a lazily built stabilizer chain.

    The chain is built once, on first use, by deterministic Schreier-Sims with
    base points taken in natural order. Build it eagerly with `build_chain()`
    before sharing a group across threads or timing a search.
    """

    def __init__(self, generators, degree=None, chain=None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise CanImageError("the degree is needed for a group without generators")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(degree, g.degree, "generator degree")
        unique = []
        seen = set()
        for g in generators:
            if not g.is_identity() and g.table not in seen:
                seen.add(g.table)
                unique.append(g)
        self._degree = degree
        self._generators = tuple(unique)
        self._chain = chain
        self._partition = None
        self._rooted = {}

    @classmethod
    def from_generators(cls, generators, degree=None):
        return cls(generators, degree)

    @classmethod
    def trivial(cls, degree):
        return cls([], degree)

    @property
    def degree(self):
        return self._degree

    @property
    def generators(self):
        return self._generators

    @property
    def chain(self):
        if self._chain is None:
            self._chain = StabilizerChain(self._degree, self._generators)
            logger.debug(f"Stabilizer chain ready: degree {self._degree}, order {self._chain.order()}")
        return self._chain

    def build_chain(self):
        """Force chain construction now."""
        return self.chain

    def order(self):
        if not self._generators:
            return 1
        return self.chain.order()

    def is_trivial(self):
        return not self._generators

    def contains(self, p):
        if p.degree != self._degree:
            raise DegreeMismatchError(self._degree, p.degree)
        if p.is_identity():
            return True
        return self.chain.contains(p)

    def _orbit_partition(self):
        """Orbits as lists of 0-based points, in natural order of their minima."""
        if self._partition is None:
            seen = [False] * self._degree
            partition = []
            for start in range(self._degree):
                if seen[start]:
                    continue
                seen[start] = True
                orbit = [start]
                position = 0
                while position < len(orbit):
                    x = orbit[position]
                    for g in self._generators:
                        y = g.table[x]
                        if not seen[y]:
                            seen[y] = True
                            orbit.append(y)
                    position += 1
                partition.append(sorted(orbit))
            self._partition = partition
        return self._partition

    def orbit(self, point):
        """The orbit of a 1-based point, as a PointSet."""
        for orbit in self._orbit_partition():
            if point - 1 in orbit:
                return PointSet.from_indices(orbit, self._degree)
        raise CanImageError(f"point {point} outside 1..{self._degree}")

    def orbits(self, ordering=None):
        """
        The orbit list sorted by smallest member under `ordering`.

        Args:
            ordering (BaseOrdering, optional): defaults to the natural order

        Returns:
            OrbitList: a partition of the domain
        """
        partition = self._orbit_partition()
        if ordering is not None:
            rank = ordering.rank
            partition = sorted(partition, key=lambda orbit: min(rank[i] for i in orbit))
        index = [0] * self._degree
        for position, orbit in enumerate(partition):
            for i in orbit:
                index[i] = position
        return OrbitList(
            orbits=tuple(PointSet.from_indices(orbit, self._degree) for orbit in partition),
            index=tuple(index),
        )

    def fixed_points(self):
        """Union of the singleton orbits."""
        return PointSet.from_indices(
            [orbit[0] for orbit in self._orbit_partition() if len(orbit) == 1], self._degree
        )

    def moves(self, index):
        """Whether the 0-based point lies in a non-singleton orbit."""
        return any(g.table[index] != index for g in self._generators)

    def rooted_chain(self, index):
        """A stabilizer chain whose first base point is the 0-based point `index`."""
        chain = self.chain
        if chain.levels and chain.levels[0].base_point == index:
            return chain
        if index not in self._rooted:
            self._rooted[index] = StabilizerChain(self._degree, self._generators, base_prefix=[index])
        return self._rooted[index]

    def stabilizer_of_index(self, index):
        """Point stabilizer of a 0-based point, sharing the tail of a rooted chain."""
        if not self.moves(index):
            return self
        tail = self.rooted_chain(index).tail(1)
        return PermGroup(tail.strong_generators(), self._degree, chain=tail)

    def point_stabilizer(self, point):
        """The subgroup fixing a 1-based point."""
        self._check_point(point)
        return self.stabilizer_of_index(point - 1)

    def transversal_to(self, index):
        """
        Left coset representatives of the stabilizer of a 0-based point.

        Returns:
            dict: for every 0-based x in the orbit, one element mapping x to `index`
        """
        if not self.moves(index):
            return {index: Permutation.identity(self._degree)}
        level = self.rooted_chain(index).levels[0]
        return {x: level.transversal[x].inverse() for x in level.orbit}

    def coset_representatives(self, point, ordering=None):
        """
        One element per coset of the stabilizer of `point`.

        Each orbit point x is mapped to `point` by exactly one representative;
        the list is sorted by x under `ordering` (natural by default).
        """
        self._check_point(point)
        reps = self.transversal_to(point - 1)
        rank = ordering.rank if ordering is not None else range(self._degree)
        return [reps[x] for x in sorted(reps, key=lambda x: rank[x])]

    def element_mapping(self, x, y) -> Optional[Permutation]:
        """Some element mapping 1-based x to y, or None when there is none."""
        self._check_point(x)
        self._check_point(y)
        if x == y:
            return Permutation.identity(self._degree)
        if not self.moves(x - 1):
            return None
        level = self.rooted_chain(x - 1).levels[0]
        return level.transversal.get(y - 1)

    def conjugate(self, sigma):
        """The group generated by sigma^-1 g sigma over the generators g."""
        if sigma.degree != self._degree:
            raise DegreeMismatchError(self._degree, sigma.degree)
        sigma_inverse = sigma.inverse()
        return PermGroup([sigma_inverse * g * sigma for g in self._generators], self._degree)

    def random_element(self, rng):
        """A uniformly random element, drawn from the chain transversals with a numpy Generator."""
        element = Permutation.identity(self._degree)
        if self.is_trivial():
            return element
        for level in self.chain.levels:
            x = level.orbit[int(rng.integers(len(level.orbit)))]
            element = level.transversal[x] * element
        return element

    def _check_point(self, point):
        if point < 1 or point > self._degree:
            raise CanImageError(f"point {point} outside 1..{self._degree}")

    def __repr__(self):
        gens = ", ".join(str(g) for g in self._generators)
        return f"PermGroup(degree={self._degree}, generators=[{gens}])"


def from_generators(generators, degree=None):
    return PermGroup.from_generators(generators, degree)


def orbits(group, ordering=None):
    return group.orbits(ordering)


def point_stabilizer(group, point):
    return group.point_stabilizer(point)


def coset_representatives(group, point, ordering=None):
    return group.coset_representatives(point, ordering)


def element_mapping(group, x, y):
    return group.element_mapping(x, y)


def order(group):
    return group.order()


def contains(group, p):
    return group.contains(p)


def fixed_points(group):
    return group.fixed_points()


def conjugate(group, sigma):
    return group.conjugate(sigma)
