"""
Minimal and canonical image searches
"""
from services.search.stats import Candidate, MinResult, NodeMeter, SearchStats
from services.search.ordering import (
    BaseOrdering,
    fixed_max_orbit,
    fixed_min_orbit,
    min_of_list,
    parse_order_spec,
    set_less,
    transport,
)
from services.search.minimage import Comparison, cheap_compare, minimal_image
from services.search.canimage import (
    STRATEGIES,
    CandidateList,
    Refiner,
    Selector,
    Signature,
    Strategy,
    can_image_recurse,
    canonical_image,
    get_strategy,
    orbcount,
    refine,
    select_point,
)
from services.search.labellers import Labeller, labeller_names, resolve_labeller

__all__ = [
    'Candidate',
    'MinResult',
    'NodeMeter',
    'SearchStats',
    'BaseOrdering',
    'fixed_max_orbit',
    'fixed_min_orbit',
    'min_of_list',
    'parse_order_spec',
    'set_less',
    'transport',
    'Comparison',
    'cheap_compare',
    'minimal_image',
    'STRATEGIES',
    'CandidateList',
    'Refiner',
    'Selector',
    'Signature',
    'Strategy',
    'can_image_recurse',
    'canonical_image',
    'get_strategy',
    'orbcount',
    'refine',
    'select_point',
    'Labeller',
    'labeller_names',
    'resolve_labeller',
]
