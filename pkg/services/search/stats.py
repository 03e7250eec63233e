"""
Result and statistics types shared by the searches
"""
import time
from dataclasses import dataclass, field

from services.errors import SearchTimeout
from services.group.permutation import Permutation, PointSet, format_cycles


@dataclass
class SearchStats:
    """Counters gathered during one search; `elapsed` is in seconds."""

    nodes: int = 0
    depth: int = 0
    elapsed: float = 0.0

    @property
    def elapsed_ms(self):
        return round(self.elapsed * 1000.0, 3)


@dataclass(frozen=True)
class Candidate:
    """A candidate set together with the element that produced it from the input."""

    set: PointSet
    elt: Permutation
    weight: int = 1


@dataclass(frozen=True)
class MinResult:
    """Image, witness and statistics of a finished search."""

    image: PointSet
    witness: Permutation
    stats: SearchStats = field(default_factory=SearchStats)

    def to_dict(self):
        """The JSON shape printed by the command line."""
        return {
            'image': list(self.image.members),
            'witness': format_cycles(self.witness),
            'nodes': self.stats.nodes,
            'depth': self.stats.depth,
        }


class NodeMeter:
    """
    Counts materialized candidate sets and enforces an optional node budget.

    Args:
        budget (int, optional): abort with SearchTimeout once more nodes are needed
    """

    def __init__(self, budget=None):
        self.budget = budget
        self.stats = SearchStats()
        self._started = time.perf_counter()

    def add(self, count=1):
        self.stats.nodes += count
        if self.budget is not None and self.stats.nodes > self.budget:
            self.stats.nodes = self.budget
            self.finish()
            raise SearchTimeout(self.budget, self.stats)

    def descend(self):
        self.stats.depth += 1

    def finish(self):
        self.stats.elapsed = time.perf_counter() - self._started
        return self.stats
