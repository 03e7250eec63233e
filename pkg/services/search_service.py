"""
Search service for minimal and canonical images.
This module re-exports the searches and the oracle behind one import.
"""
from services.oracle import ElementBudget, brute_min, check_canonical_contract, set_orbit
from services.search import (
    BaseOrdering,
    canonical_image,
    cheap_compare,
    get_strategy,
    labeller_names,
    minimal_image,
    parse_order_spec,
    resolve_labeller,
)

__all__ = [
    'ElementBudget',
    'brute_min',
    'check_canonical_contract',
    'set_orbit',
    'BaseOrdering',
    'canonical_image',
    'cheap_compare',
    'get_strategy',
    'labeller_names',
    'minimal_image',
    'parse_order_spec',
    'resolve_labeller',
]
