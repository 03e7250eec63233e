"""
Deterministic Schreier-Sims stabilizer chains.

Each level stores its base point, the strong generators fixing all earlier
base points, and an explicit transversal: for every point x of the basic orbit
one group element mapping the base point to x. New base points are the
smallest point moved by the element that needs one, unless a base prefix is
requested.
"""
import logging
from dataclasses import dataclass, field

from services.group.permutation import Permutation

logger = logging.getLogger("StabilizerChain")


@dataclass
class ChainLevel:
    """One level of the chain; all points are 0-based."""

    base_point: int
    generators: list = field(default_factory=list)
    transversal: dict = field(default_factory=dict)
    orbit: list = field(default_factory=list)

    def recompute_orbit(self, degree):
        """Rebuild orbit and transversal by breadth-first search over the generators."""
        root = Permutation.identity(degree)
        self.transversal = {self.base_point: root}
        self.orbit = [self.base_point]
        position = 0
        while position < len(self.orbit):
            x = self.orbit[position]
            ux = self.transversal[x]
            for s in self.generators:
                y = s.table[x]
                if y not in self.transversal:
                    self.transversal[y] = ux * s
                    self.orbit.append(y)
            position += 1

    @property
    def orbit_size(self):
        return len(self.orbit)


class StabilizerChain:
    """
    A base and strong generating set for the group generated by `generators`.

    Args:
        degree (int): the domain size
        generators (list): generating permutations
        base_prefix (list, optional): 0-based points that must open the base
    """

    def __init__(self, degree, generators, base_prefix=None):
        self.degree = degree
        self.levels = []
        self._build([g for g in generators if not g.is_identity()], list(base_prefix or []))

    @classmethod
    def from_levels(cls, degree, levels):
        """Wrap already computed levels, e.g. the tail of a larger chain."""
        chain = cls.__new__(cls)
        chain.degree = degree
        chain.levels = levels
        return chain

    @property
    def base(self):
        return [level.base_point for level in self.levels]

    def order(self):
        result = 1
        for level in self.levels:
            result *= level.orbit_size
        return result

    def strong_generators(self):
        """Distinct strong generators, top level first."""
        out = []
        seen = set()
        for level in self.levels:
            for g in level.generators:
                if g.table not in seen:
                    seen.add(g.table)
                    out.append(g)
        return out

    def sift(self, g, start=0):
        """
        Strip g through the levels from `start` on.

        Returns:
            tuple: (residue, level index where stripping stopped); the index is
            len(levels) when every level was passed
        """
        for j in range(start, len(self.levels)):
            level = self.levels[j]
            x = g.table[level.base_point]
            u = level.transversal.get(x)
            if u is None:
                return g, j
            g = g * u.inverse()
        return g, len(self.levels)

    def contains(self, g):
        if g.degree != self.degree:
            return False
        residue, _ = self.sift(g)
        return residue.is_identity()

    def tail(self, start):
        """The chain of the stabilizer of the first `start` base points."""
        return StabilizerChain.from_levels(self.degree, self.levels[start:])

    def _append_level(self, point):
        self.levels.append(ChainLevel(base_point=point))

    def _build(self, generators, base_prefix):
        for point in base_prefix:
            self._append_level(point)
        for g in generators:
            if all(g.table[level.base_point] == level.base_point for level in self.levels):
                self._append_level(g.moved_points()[0])
        for level in self.levels:
            level.generators = [
                g for g in generators
                if all(g.table[b] == b for b in self._base_before(level))
            ]
            level.recompute_orbit(self.degree)

        i = len(self.levels) - 1
        while i >= 0:
            restart_at = self._schreier_pass(i)
            if restart_at is None:
                i -= 1
            else:
                i = restart_at
        logger.debug(f"Built chain of degree {self.degree}, base {self.base}, order {self.order()}")

    def _base_before(self, level):
        out = []
        for other in self.levels:
            if other is level:
                break
            out.append(other.base_point)
        return out

    def _schreier_pass(self, i):
        """Sift every Schreier generator of level i; returns the level to resume at or None."""
        level = self.levels[i]
        for x in list(level.orbit):
            ux = level.transversal[x]
            for s in list(level.generators):
                y = s.table[x]
                h = ux * s * level.transversal[y].inverse()
                if h.is_identity():
                    continue
                residue, j = self.sift(h, i + 1)
                if j == len(self.levels) and residue.is_identity():
                    continue
                if j == len(self.levels):
                    self._append_level(residue.moved_points()[0])
                for k in range(i + 1, j + 1):
                    self.levels[k].generators.append(residue)
                    self.levels[k].recompute_orbit(self.degree)
                return j
        return None
