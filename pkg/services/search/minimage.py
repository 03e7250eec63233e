"""
Minimal images of point sets under a base ordering.

The search walks the domain in order while stabilizing one point at a time.
At a point beta either no candidate can reach beta (so no image contains any
point of its orbit) or the minimal image contains beta, and every candidate is
mapped into beta through the coset representatives of the stabilizer.
"""
import logging
from enum import Enum

from services.errors import DegreeMismatchError, SearchTimeout
from services.group.permutation import Permutation, PointSet, map_indices
from services.search.ordering import BaseOrdering, transport
from services.search.stats import MinResult, NodeMeter

logger = logging.getLogger("MinimalImage")


class Comparison(Enum):
    STRICTLY_LESS = "StrictlyLess"
    STRICTLY_GREATER = "StrictlyGreater"
    UNDECIDED = "Undecided"


def _merge(candidates, dedup):
    """Collapse candidates with equal sets, keeping the least witness table."""
    if not dedup:
        return candidates
    merged = {}
    for indices, elt in candidates:
        kept = merged.get(indices)
        if kept is None or elt.table < kept.table:
            merged[indices] = elt
    return list(merged.items())


def _natural_search(group, indices, meter, dedup):
    """Minimal image under the natural order; returns (indices, witness)."""
    degree = group.degree
    candidates = [(indices, Permutation.identity(degree))]
    meter.add(1)
    current = group
    decided = [False] * degree
    for beta in range(degree):
        if current.is_trivial():
            break
        if decided[beta]:
            continue
        transversal = current.transversal_to(beta)
        reached = [
            (candidate, elt, x)
            for candidate, elt in candidates
            for x in candidate if x in transversal
        ]
        if not reached:
            for x in transversal:
                decided[x] = True
            logger.debug(f"Point {beta + 1}: orbit of size {len(transversal)} avoided")
            continue

        mapped = []
        for candidate, elt, x in reached:
            t = transversal[x]
            mapped.append((map_indices(t, candidate), elt * t))
        meter.add(len(mapped))
        candidates = _merge(mapped, dedup)
        decided[beta] = True
        current = current.stabilizer_of_index(beta)
        meter.descend()
        logger.debug(f"Point {beta + 1}: {len(candidates)} candidates at depth {meter.stats.depth}")

    return min(candidates, key=lambda c: (c[0], c[1].table))


def minimal_image(group, point_set, ordering=None, node_budget=None, dedup=True):
    """
    The least image of `point_set` under `group` for a base ordering.

    Non-natural orderings are handled by conjugating the problem to the natural
    order and mapping the answer back.

    Args:
        group (PermGroup): the acting group
        point_set (PointSet): the input set
        ordering (BaseOrdering, optional): defaults to the natural order
        node_budget (int, optional): raise SearchTimeout beyond this many nodes
        dedup (bool): merge candidates with equal sets

    Returns:
        MinResult: image, a witness mapping the input to it, and statistics
    """
    if point_set.degree != group.degree:
        raise DegreeMismatchError(group.degree, point_set.degree, "set degree")
    if ordering is None:
        ordering = BaseOrdering.natural(group.degree)

    meter = NodeMeter(node_budget)
    if not point_set.indices:
        meter.add(1)
        return MinResult(point_set, Permutation.identity(group.degree), meter.finish())

    moved_group, moved_set, sigma = transport(group, point_set, ordering)
    try:
        indices, witness = _natural_search(moved_group, moved_set.indices, meter, dedup)
    except SearchTimeout as e:
        logger.info(f"Minimal image of {point_set} stopped: {str(e)}")
        raise
    except Exception as e:
        logger.error(f"Error computing minimal image of {point_set}: {str(e)}")
        raise

    sigma_inverse = sigma.inverse()
    if not sigma.is_identity():
        indices = map_indices(sigma_inverse, indices)
        witness = sigma * witness * sigma_inverse
    stats = meter.finish()
    logger.info(f"Minimal image under {ordering.name}: {stats.nodes} nodes, depth {stats.depth}")
    return MinResult(PointSet(indices, group.degree), witness, stats)


def cheap_compare(group, s, t, ordering=None):
    """
    Compare the minimal images of two sets from orbit structure alone.

    Scans the orbits in order for the first one that is not full in both sets
    or empty in both. If it is empty in exactly one of them, the minimal image
    of the other set is the smaller one.

    Returns:
        Comparison: STRICTLY_LESS when Min(S) precedes Min(T), STRICTLY_GREATER
        for the mirrored case, otherwise UNDECIDED
    """
    if s.degree != group.degree or t.degree != group.degree:
        raise DegreeMismatchError(group.degree, s.degree if s.degree != group.degree else t.degree)
    if len(s) != len(t):
        return Comparison.UNDECIDED
    s_members = set(s.indices)
    t_members = set(t.indices)
    for orbit in group.orbits(ordering):
        in_s = sum(1 for x in orbit.indices if x in s_members)
        in_t = sum(1 for x in orbit.indices if x in t_members)
        size = len(orbit)
        if (in_s == 0 and in_t == 0) or (in_s == size and in_t == size):
            continue
        if in_t == 0 and in_s > 0:
            return Comparison.STRICTLY_LESS
        if in_s == 0 and in_t > 0:
            return Comparison.STRICTLY_GREATER
        return Comparison.UNDECIDED
    return Comparison.UNDECIDED
