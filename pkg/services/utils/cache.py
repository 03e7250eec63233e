"""
In-process caches for group computations that are repeated across searches
"""
import logging

cache_logger = logging.getLogger('Cache')

# Conjugated groups keyed by (generator tables, conjugator table)
_conjugate_cache = {}
CACHE_MAX_ENTRIES = 64

_cache_stats = {
    'hits': 0,
    'misses': 0,
}


def _conjugate_key(group, sigma):
    return (group.degree, tuple(g.table for g in group.generators), sigma.table)


def get_conjugate(group, sigma):
    """
    Return group^sigma, computing it at most once per (group, sigma) pair.

    The conjugated group keeps its stabilizer chain once built, so repeated
    minimal-image queries under the same base ordering reuse it.

    Args:
        group (PermGroup): the group to conjugate
        sigma (Permutation): the conjugating permutation

    Returns:
        PermGroup: the conjugate group
    """
    key = _conjugate_key(group, sigma)
    cached = _conjugate_cache.get(key)
    if cached is not None:
        _cache_stats['hits'] += 1
        return cached

    _cache_stats['misses'] += 1
    conjugated = group.conjugate(sigma)
    if len(_conjugate_cache) >= CACHE_MAX_ENTRIES:
        # Evict the oldest entry
        oldest = next(iter(_conjugate_cache))
        del _conjugate_cache[oldest]
        cache_logger.debug("Evicted oldest conjugate group from cache")
    _conjugate_cache[key] = conjugated
    return conjugated


def cache_stats():
    """Hit and miss counters plus the current size."""
    return dict(_cache_stats, size=len(_conjugate_cache))


def clear_caches():
    """Drop every cached entry and reset the counters."""
    _conjugate_cache.clear()
    _cache_stats['hits'] = 0
    _cache_stats['misses'] = 0
    cache_logger.info("Cleared group caches")
