"""
Permutation and permutation-group package
"""
from services.group.permutation import (
    Permutation,
    PointSet,
    act_point,
    act_set,
    compose,
    format_cycles,
    identity,
    inverse,
    parse_cycles,
    parse_point_set,
    reversal,
)
from services.group.chain import StabilizerChain
from services.group.perm_group import (
    OrbitList,
    PermGroup,
    coset_representatives,
    element_mapping,
    from_generators,
    orbits,
    point_stabilizer,
)

__all__ = [
    'Permutation',
    'PointSet',
    'StabilizerChain',
    'OrbitList',
    'PermGroup',
    'act_point',
    'act_set',
    'compose',
    'format_cycles',
    'identity',
    'inverse',
    'parse_cycles',
    'parse_point_set',
    'reversal',
    'coset_representatives',
    'element_mapping',
    'from_generators',
    'orbits',
    'point_stabilizer',
]
