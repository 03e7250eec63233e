"""
Canonical images with dynamic point selection and ordered refinement.

The ordered partitions of the search are never built. Each level keeps only the
candidates whose refinement keys are minimal, which is the first cell of the
refined partition, and remembers the keys in a Signature.
"""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum

from services.errors import CanImageError, DegreeMismatchError, SearchTimeout
from services.group.permutation import Permutation, PointSet, map_indices
from services.search.ordering import BaseOrdering
from services.search.stats import Candidate, MinResult, NodeMeter

logger = logging.getLogger("CanImage")


class Selector(Enum):
    MIN_ORBIT = "MinOrbit"
    MAX_ORBIT = "MaxOrbit"
    RARE_ORBIT = "RareOrbit"
    COMMON_ORBIT = "CommonOrbit"
    RARE_RATIO_ORBIT = "RareRatioOrbit"
    COMMON_RATIO_ORBIT = "CommonRatioOrbit"
    SINGLE_MAX_ORBIT = "SingleMaxOrbit"


class Refiner(Enum):
    FIXED_POINTS_ONLY = "FixedPointsOnly"
    PLUS_MIN = "PlusMin"
    PLUS_RARE = "PlusRare"
    PLUS_COMMON = "PlusCommon"


@dataclass(frozen=True)
class Strategy:
    selector: Selector
    refiner: Refiner
    name: str

    def __str__(self):
        return self.name


STRATEGIES = {
    'minorbit': Strategy(Selector.MIN_ORBIT, Refiner.FIXED_POINTS_ONLY, 'minorbit'),
    'maxorbit': Strategy(Selector.MAX_ORBIT, Refiner.FIXED_POINTS_ONLY, 'maxorbit'),
    'rareorbit': Strategy(Selector.RARE_ORBIT, Refiner.FIXED_POINTS_ONLY, 'rareorbit'),
    'commonorbit': Strategy(Selector.COMMON_ORBIT, Refiner.FIXED_POINTS_ONLY, 'commonorbit'),
    'rareratioorbit': Strategy(Selector.RARE_RATIO_ORBIT, Refiner.FIXED_POINTS_ONLY, 'rareratioorbit'),
    'commonratioorbit': Strategy(Selector.COMMON_RATIO_ORBIT, Refiner.FIXED_POINTS_ONLY, 'commonratioorbit'),
    'rareorbitplusmin': Strategy(Selector.RARE_ORBIT, Refiner.PLUS_MIN, 'rareorbitplusmin'),
    'rareorbitplusrare': Strategy(Selector.RARE_ORBIT, Refiner.PLUS_RARE, 'rareorbitplusrare'),
    'rareorbitpluscommon': Strategy(Selector.RARE_ORBIT, Refiner.PLUS_COMMON, 'rareorbitpluscommon'),
}

# A guess at a strategy that is only ever named, kept apart from the others
SINGLE_MAX_ORBIT = Strategy(Selector.SINGLE_MAX_ORBIT, Refiner.FIXED_POINTS_ONLY, 'singlemaxorbit')


def get_strategy(name):
    """Look a strategy up by its command-line name."""
    key = name.strip().lower()
    if key == SINGLE_MAX_ORBIT.name:
        return SINGLE_MAX_ORBIT
    if key not in STRATEGIES:
        raise CanImageError(f"unknown strategy {name!r}, expected one of {', '.join(STRATEGIES)}")
    return STRATEGIES[key]


@dataclass(frozen=True)
class Signature:
    """Refinement keys shared by every surviving candidate, oldest first."""

    keys: tuple = ()

    def extend(self, *keys):
        return Signature(self.keys + tuple(keys))

    def __len__(self):
        return len(self.keys)


@dataclass(frozen=True)
class CandidateList:
    """A nonempty list of candidates whose sets all have the same size."""

    entries: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if not self.entries:
            raise CanImageError("a candidate list cannot be empty")
        sizes = {len(c.set) for c in self.entries}
        if len(sizes) != 1:
            raise CanImageError(f"candidate sets differ in size: {sorted(sizes)}")

    @classmethod
    def of(cls, candidates):
        return cls(tuple(candidates))

    @classmethod
    def of_sets(cls, sets):
        """Candidates for plain sets, each with the identity as its element."""
        return cls(tuple(Candidate(s, Permutation.identity(s.degree)) for s in sets))

    def sets(self):
        return [c.set for c in self.entries]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def orbcount(group, point_set, ordering=None):
    """
    Intersection sizes of `point_set` with each orbit of `group`.

    Returns:
        tuple: one count per orbit, orbits sorted by smallest member under `ordering`
    """
    if point_set.degree != group.degree:
        raise DegreeMismatchError(group.degree, point_set.degree, "set degree")
    return _orbcount(group.orbits(ordering), point_set.indices)


def _orbcount(orbit_list, indices):
    counts = [0] * len(orbit_list)
    for x in indices:
        counts[orbit_list.index[x]] += 1
    return tuple(counts)


def _selection_score(selector, size, count):
    if selector is Selector.MIN_ORBIT:
        return size
    if selector in (Selector.MAX_ORBIT, Selector.SINGLE_MAX_ORBIT):
        return -size
    if selector is Selector.RARE_ORBIT:
        return count
    if selector is Selector.COMMON_ORBIT:
        return -count
    if selector is Selector.RARE_RATIO_ORBIT:
        return math.log(count) / size
    return -math.log(count) / size


def _select_index(strategy, group, candidates, ordering):
    """0-based selected point, or None when no moved orbit meets a candidate."""
    orbit_list = group.orbits(ordering)
    weights = [0] * len(orbit_list)
    for candidate in candidates:
        for x in candidate.set.indices:
            weights[orbit_list.index[x]] += candidate.weight

    best = None
    for position, orbit in enumerate(orbit_list):
        size = len(orbit)
        if size == 1:
            continue
        count = weights[position]
        if count == 0 and strategy.selector is not Selector.SINGLE_MAX_ORBIT:
            continue
        score = (_selection_score(strategy.selector, size, count), position)
        if best is None or score < best[0]:
            best = (score, orbit)
    if best is None:
        return None
    rank = ordering.rank
    return min(best[1].indices, key=lambda i: rank[i])


def select_point(strategy, group, candidates, ordering=None):
    """
    The point the next level stabilizes, chosen by the strategy's selector.

    Only orbits of size above one that meet some candidate take part; ties go
    to the orbit with the smallest least member, and that member is returned.

    Returns:
        int: a 1-based point, or None in the degenerate case where every
        candidate is fixed by the group
    """
    if group.is_trivial():
        raise CanImageError("point selection needs a nontrivial group")
    if ordering is None:
        ordering = BaseOrdering.natural(group.degree)
    index = _select_index(strategy, group, list(candidates), ordering)
    return None if index is None else index + 1


def _merge(candidates):
    """Merge equal sets, adding weights and keeping the least witness table."""
    merged = {}
    for candidate in candidates:
        kept = merged.get(candidate.set.indices)
        if kept is None:
            merged[candidate.set.indices] = candidate
            continue
        elt = candidate.elt if candidate.elt.table < kept.elt.table else kept.elt
        merged[candidate.set.indices] = Candidate(kept.set, elt, kept.weight + candidate.weight)
    return list(merged.values())


def _point_key(fixed, candidate):
    members = set(candidate.set.indices)
    return tuple(0 if p in members else 1 for p in fixed)


def _orbit_target(refiner, counted):
    frequency = {}
    for vector, candidate in counted:
        frequency[vector] = frequency.get(vector, 0) + candidate.weight
    if refiner is Refiner.PLUS_MIN:
        return min(frequency)
    if refiner is Refiner.PLUS_RARE:
        return min(frequency, key=lambda v: (frequency[v], v))
    return min(frequency, key=lambda v: (-frequency[v], v))


def _refine(strategy, group, expanded, ordering):
    """Keep the candidates in the first cell; returns (survivors, new keys)."""
    rank = ordering.rank
    fixed = sorted(group.fixed_points().indices, key=lambda i: rank[i])
    keyed = [(_point_key(fixed, c), c) for c in expanded]
    first = min(key for key, _ in keyed)
    keys = [first]

    if strategy.refiner is not Refiner.FIXED_POINTS_ONLY and len(expanded) > 1:
        orbit_list = group.orbits(ordering)
        counted = [(_orbcount(orbit_list, c.set.indices), c) for c in expanded]
        target = _orbit_target(strategy.refiner, counted)
        # second key: 0 when the candidate has the target orbit counts
        keyed = [(key, 0 if vector == target else 1, c)
                 for (key, c), (vector, _) in zip(keyed, counted)]
        best = min((key, hit) for key, hit, _ in keyed)
        survivors = [c for key, hit, c in keyed if (key, hit) == best]
        keys.append(target)
    else:
        survivors = [c for key, c in keyed if key == first]
    return survivors, keys


def refine(strategy, group, expanded, ordering=None):
    """
    Split an expanded candidate list and keep its first cell.

    Every candidate is keyed by its membership of the fixed points of `group`,
    members first, in base order. Orbit-count refiners also pick a target
    orbit-count vector from the whole expanded list (PlusMin: least vector;
    PlusRare: least frequent; PlusCommon: most frequent; ties to the least
    vector) and key each candidate by whether it has that vector, after the
    point key. Frequencies count candidate weights.

    Returns:
        CandidateList: the surviving candidates
    """
    if ordering is None:
        ordering = BaseOrdering.natural(group.degree)
    survivors, _ = _refine(strategy, group, list(expanded), ordering)
    return CandidateList.of(survivors)


def _least(candidates, ordering):
    return min(candidates, key=lambda c: (ordering.set_key(c.set.indices), c.elt.table))


def can_image_recurse(group, candidates, signature, strategy, ordering, meter=None):
    """
    Run the canonical image search from a candidate list down to the trivial group.

    Each level selects a point, expands every candidate through coset
    representatives ordered by the point they send to the selected one, merges
    duplicates, stabilizes the point and refines. The recursion is unrolled
    into a loop.

    Returns:
        tuple: (Candidate, Signature) for the canonical candidate
    """
    if meter is None:
        meter = NodeMeter()
    current = group
    entries = list(candidates)
    rank = ordering.rank
    while not current.is_trivial():
        beta = _select_index(strategy, current, entries, ordering)
        if beta is None:
            logger.debug("Every candidate is fixed by the current group")
            break
        transversal = current.transversal_to(beta)
        reps = [transversal[x] for x in sorted(transversal, key=lambda x: rank[x])]
        expanded = [
            Candidate(PointSet(map_indices(q, c.set.indices), c.set.degree), c.elt * q, c.weight)
            for c in entries
            for q in reps
        ]
        meter.add(len(expanded))
        current = current.stabilizer_of_index(beta)
        entries, keys = _refine(strategy, current, _merge(expanded), ordering)
        signature = signature.extend(beta, *keys)
        meter.descend()
        logger.debug(
            f"Stabilized {beta + 1}: {len(expanded)} expanded, {len(entries)} kept, "
            f"depth {meter.stats.depth}"
        )
    return _least(entries, ordering), signature


def canonical_image(group, point_set, strategy, ordering=None, node_budget=None):
    """
    Canonical image of a set: a fixed member of its orbit, equal for the whole orbit.

    The base ordering is part of the canonical function, so images computed
    under different orderings are not comparable.

    Args:
        group (PermGroup): the acting group
        point_set (PointSet): the input set
        strategy (Strategy or str): selector and refiner, or a strategy name
        ordering (BaseOrdering, optional): defaults to the natural order
        node_budget (int, optional): raise SearchTimeout beyond this many nodes

    Returns:
        MinResult: the canonical image, a canonizing element and statistics
    """
    if point_set.degree != group.degree:
        raise DegreeMismatchError(group.degree, point_set.degree, "set degree")
    if isinstance(strategy, str):
        strategy = get_strategy(strategy)
    if ordering is None:
        ordering = BaseOrdering.natural(group.degree)

    meter = NodeMeter(node_budget)
    meter.add(1)
    start = CandidateList.of([Candidate(point_set, Permutation.identity(group.degree))])
    try:
        best, _ = can_image_recurse(group, start, Signature(), strategy, ordering, meter)
    except SearchTimeout as e:
        logger.info(f"Canonical image with {strategy} stopped: {str(e)}")
        raise
    except Exception as e:
        logger.error(f"Error computing canonical image of {point_set} with {strategy}: {str(e)}")
        raise
    stats = meter.finish()
    logger.info(f"Canonical image with {strategy}: {stats.nodes} nodes, depth {stats.depth}")
    return MinResult(best.set, best.elt, stats)
