"""
Permutations and point sets on a fixed finite domain.

Points are 1-based at every public boundary (cycle text, set literals, JSON)
and 0-based inside the image tables. Products are read left to right:
x^(pq) = (x^p)^q.
"""
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from services.errors import CycleParseError, DegreeMismatchError

CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)?\s*\)")


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as a 0-based image table."""

    table: tuple

    @classmethod
    def identity(cls, degree):
        if degree < 1:
            raise CycleParseError(f"degree must be positive, got {degree}")
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images):
        """Build from a 1-based image list, so [2, 1, 3] is (1,2) on 3 points."""
        table = tuple(i - 1 for i in images)
        if sorted(table) != list(range(len(table))):
            raise CycleParseError(f"not a permutation: {list(images)}")
        return cls(table)

    @classmethod
    def from_cycles(cls, cycles, degree):
        """Build from 1-based cycles given as sequences of points."""
        table = list(range(degree))
        seen = set()
        for cycle in cycles:
            for point in cycle:
                if point < 1 or point > degree:
                    raise CycleParseError(f"point {point} outside 1..{degree}")
                if point in seen:
                    raise CycleParseError(f"point {point} repeated")
                seen.add(point)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                table[a - 1] = b - 1
        return cls(tuple(table))

    @property
    def degree(self):
        return len(self.table)

    @property
    def images(self):
        """The 1-based image list."""
        return tuple(i + 1 for i in self.table)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.table))

    def moved_points(self):
        """0-based points not fixed by this permutation."""
        return [i for i, j in enumerate(self.table) if i != j]

    def compose(self, other):
        """Left-to-right product: first self, then other."""
        if other.degree != self.degree:
            raise DegreeMismatchError(self.degree, other.degree)
        second = other.table
        return Permutation(tuple(second[i] for i in self.table))

    __mul__ = compose

    @cached_property
    def _inverse(self):
        table = [0] * len(self.table)
        for i, j in enumerate(self.table):
            table[j] = i
        return Permutation(tuple(table))

    def inverse(self):
        return self._inverse

    def act_point(self, point):
        """Image of a 1-based point."""
        if point < 1 or point > self.degree:
            raise CycleParseError(f"point {point} outside 1..{self.degree}")
        return self.table[point - 1] + 1

    def act_set(self, point_set):
        """Setwise image of a PointSet."""
        if point_set.degree != self.degree:
            raise DegreeMismatchError(self.degree, point_set.degree)
        return PointSet.from_indices(map_indices(self, point_set.indices), self.degree)

    def cycles(self):
        """Non-trivial cycles as 1-based tuples, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.table[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.table[start]
            while j != start:
                seen.add(j)
                cycle.append(j)
                j = self.table[j]
            out.append(tuple(i + 1 for i in cycle))
        return out

    def __str__(self):
        return format_cycles(self)


@dataclass(frozen=True)
class PointSet:
    """A subset of {1..n}; `indices` is the sorted 0-based member tuple."""

    indices: tuple
    degree: int

    @classmethod
    def of(cls, members, degree):
        """Build from 1-based members, validating range and duplicates."""
        members = list(members)
        for point in members:
            if point < 1 or point > degree:
                raise CycleParseError(f"point {point} outside 1..{degree}")
        if len(set(members)) != len(members):
            raise CycleParseError(f"duplicate point in set {members}")
        return cls(tuple(sorted(p - 1 for p in members)), degree)

    @classmethod
    def from_indices(cls, indices, degree):
        return cls(tuple(sorted(indices)), degree)

    @classmethod
    def empty(cls, degree):
        return cls((), degree)

    @property
    def members(self):
        return tuple(i + 1 for i in self.indices)

    def union(self, other):
        _check_same_degree(self, other)
        return PointSet.from_indices(set(self.indices) | set(other.indices), self.degree)

    def intersection(self, other):
        _check_same_degree(self, other)
        return PointSet.from_indices(set(self.indices) & set(other.indices), self.degree)

    def __len__(self):
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, point):
        return (point - 1) in self.indices

    def __str__(self):
        return "{" + ",".join(str(p) for p in self.members) + "}"


def _check_same_degree(a, b):
    if a.degree != b.degree:
        raise DegreeMismatchError(a.degree, b.degree)


def map_indices(perm, indices: Iterable[int]):
    """Image of 0-based points as a sorted tuple; the hot path of every search."""
    table = perm.table
    return tuple(sorted(table[i] for i in indices))


def identity(degree):
    return Permutation.identity(degree)


def compose(p, q):
    return p.compose(q)


def inverse(p):
    return p.inverse()


def act_point(p, point):
    return p.act_point(point)


def act_set(p, point_set):
    return p.act_set(point_set)


def reversal(degree):
    """The order-reversing permutation i -> n+1-i."""
    return Permutation(tuple(degree - 1 - i for i in range(degree)))


def parse_cycles(text, degree):
    """
    Parse disjoint-cycle notation such as "(1,4)(2,3)(5,6)".

    Args:
        text (str): cycles, fixed points omitted, "()" for the identity
        degree (int): the domain size n

    Returns:
        Permutation: the parsed permutation of degree n
    """
    stripped = text.strip()
    if not stripped:
        raise CycleParseError("empty permutation text, use () for the identity")
    cycles = []
    position = 0
    for match in CYCLE_RE.finditer(stripped):
        gap = stripped[position:match.start()]
        if gap.strip():
            raise CycleParseError(f"could not parse permutation {text!r}")
        position = match.end()
        body = match.group(1)
        if body:
            cycles.append([int(x) for x in body.split(",")])
    if stripped[position:].strip() or position == 0:
        raise CycleParseError(f"could not parse permutation {text!r}")
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p):
    """Render a permutation in cycle notation; the identity is "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in cycle) + ")" for cycle in cycles)


def parse_point_set(text, degree):
    """Parse "2,3,5" or "{2,3,5}"; "" and "{}" give the empty set."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    body = body.strip()
    if not body:
        return PointSet.empty(degree)
    try:
        members = [int(token) for token in body.split(",")]
    except ValueError:
        raise CycleParseError(f"could not parse set {text!r}")
    return PointSet.of(members, degree)
