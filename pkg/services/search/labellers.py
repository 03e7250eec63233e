"""
Named labelling strategies shared by the checker, the benchmark runner and the CLI
"""
from dataclasses import dataclass
from typing import Callable, Optional

from services.errors import CanImageError
from services.search.canimage import SINGLE_MAX_ORBIT, STRATEGIES, canonical_image
from services.search.minimage import minimal_image
from services.search.ordering import (
    BaseOrdering,
    fixed_max_orbit,
    fixed_min_orbit,
    parse_order_spec,
)

STATIC_LABELLERS = ('minimage', 'minimage-natural', 'minimage-reverse', 'fixedminorbit', 'fixedmaxorbit')


@dataclass(frozen=True)
class Labeller:
    """
    A canonical labelling function of sets under a group.

    `ordering_for` builds the base ordering from the group; it must depend on
    the group alone so that the labelling stays constant on orbits.
    """

    name: str
    ordering_for: Callable
    strategy: Optional[object] = None

    def __call__(self, group, point_set, node_budget=None):
        ordering = self.ordering_for(group)
        if self.strategy is None:
            return minimal_image(group, point_set, ordering, node_budget=node_budget)
        return canonical_image(group, point_set, self.strategy, ordering, node_budget=node_budget)


def _order_for(order):
    if order is None:
        return lambda group: BaseOrdering.natural(group.degree)
    return lambda group: parse_order_spec(order, group)


def labeller_names():
    """Every name accepted by resolve_labeller."""
    return list(STATIC_LABELLERS) + list(STRATEGIES) + [SINGLE_MAX_ORBIT.name]


def resolve_labeller(name, order=None):
    """
    Turn a labeller name into a Labeller.

    Args:
        name (str): a static name such as "fixedminorbit" or a strategy name
        order (str, optional): order specifier for "minimage" and the dynamic strategies

    Returns:
        Labeller: the labelling function
    """
    key = name.strip().lower()
    if key == 'minimage':
        return Labeller(key, _order_for(order))
    if key == 'minimage-natural':
        return Labeller(key, _order_for(None))
    if key == 'minimage-reverse':
        return Labeller(key, lambda group: BaseOrdering.reverse(group.degree))
    if key == 'fixedminorbit':
        return Labeller(key, fixed_min_orbit)
    if key == 'fixedmaxorbit':
        return Labeller(key, fixed_max_orbit)
    if key in STRATEGIES:
        return Labeller(key, _order_for(order), STRATEGIES[key])
    if key == SINGLE_MAX_ORBIT.name:
        return Labeller(key, _order_for(order), SINGLE_MAX_ORBIT)
    raise CanImageError(f"unknown strategy {name!r}, expected one of {', '.join(labeller_names())}")
