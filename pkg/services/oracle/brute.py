"""
Exhaustive ground truth for small groups: element enumeration and set orbits
"""
import logging
from dataclasses import dataclass

from services.errors import CanImageError, DegreeMismatchError, OracleBudgetError
from services.group.permutation import Permutation, PointSet, map_indices
from services.search.ordering import BaseOrdering
from services.search.stats import MinResult, SearchStats

logger = logging.getLogger("Oracle")

DEFAULT_MAX_ORDER = 10_000
DEFAULT_MAX_SET_ORBIT = 10_000


@dataclass(frozen=True)
class ElementBudget:
    """Caps on how much the oracle may enumerate."""

    max_order: int = DEFAULT_MAX_ORDER
    max_set_orbit: int = DEFAULT_MAX_SET_ORBIT

    def __post_init__(self):
        if self.max_order < 1 or self.max_set_orbit < 1:
            raise CanImageError(
                f"oracle budgets must be positive, got {self.max_order} and {self.max_set_orbit}"
            )


def elements(group, budget=None):
    """
    Every element of the group exactly once, as products of chain transversals.

    Raises:
        OracleBudgetError: when the group order exceeds budget.max_order
    """
    budget = budget or ElementBudget()
    size = group.order()
    if size > budget.max_order:
        raise OracleBudgetError("group order", size, budget.max_order)
    found = [Permutation.identity(group.degree)]
    if group.is_trivial():
        return found
    for level in reversed(group.chain.levels):
        reps = [level.transversal[x] for x in level.orbit]
        found = [h * u for h in found for u in reps]
    return found


def brute_min(group, point_set, ordering=None, budget=None):
    """
    The least image over all group elements, with the least witness table.

    Returns:
        MinResult: `stats.nodes` is the number of elements tried
    """
    if point_set.degree != group.degree:
        raise DegreeMismatchError(group.degree, point_set.degree, "set degree")
    if ordering is None:
        ordering = BaseOrdering.natural(group.degree)
    best = None
    all_elements = elements(group, budget)
    for g in all_elements:
        image = map_indices(g, point_set.indices)
        key = (ordering.set_key(image), g.table)
        if best is None or key < best[0]:
            best = (key, image, g)
    _, image, witness = best
    return MinResult(PointSet(image, group.degree), witness, SearchStats(nodes=len(all_elements)))


def set_orbit(group, point_set, budget=None):
    """
    The orbit of a set, by breadth-first search over the generators.

    Returns:
        list: distinct PointSets, the input first

    Raises:
        OracleBudgetError: when the orbit outgrows budget.max_set_orbit
    """
    if point_set.degree != group.degree:
        raise DegreeMismatchError(group.degree, point_set.degree, "set degree")
    budget = budget or ElementBudget()
    seen = {point_set.indices}
    orbit = [point_set.indices]
    position = 0
    while position < len(orbit):
        current = orbit[position]
        for g in group.generators:
            image = map_indices(g, current)
            if image not in seen:
                seen.add(image)
                orbit.append(image)
                if len(orbit) > budget.max_set_orbit:
                    raise OracleBudgetError("set orbit", len(orbit), budget.max_set_orbit)
        position += 1
    logger.debug(f"Set orbit of {point_set} has {len(orbit)} members")
    return [PointSet(indices, group.degree) for indices in orbit]
