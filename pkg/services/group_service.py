"""
Group service for building and inspecting permutation groups.
This module re-exports the core functionality from the modular group package
and adds the group sources used by the command line.
"""
import logging

from services.errors import CanImageError
from services.group import (
    PermGroup,
    Permutation,
    PointSet,
    act_point,
    act_set,
    compose,
    coset_representatives,
    element_mapping,
    format_cycles,
    from_generators,
    identity,
    inverse,
    orbits,
    parse_cycles,
    parse_point_set,
    point_stabilizer,
)
from services.storage_service import load_group_file

logger = logging.getLogger("PermGroup")


def group_from_text(generators_text, degree):
    """
    Build a group from inline generators separated by ';'.

    Args:
        generators_text (str): e.g. "(1,4)(2,3)(5,6);(1,2,6)"
        degree (int): the domain size

    Returns:
        PermGroup: the generated group
    """
    if degree is None:
        raise CanImageError("--degree is required with inline generators")
    parts = [part for part in generators_text.split(';') if part.strip()]
    return PermGroup([parse_cycles(part, degree) for part in parts], degree)


def resolve_group(group_path=None, generators_text=None, degree=None):
    """Load a group from exactly one source: a group file or inline generators."""
    if (group_path is None) == (generators_text is None):
        raise CanImageError("give exactly one of --group or --generators")
    try:
        if group_path is not None:
            return load_group_file(group_path)
        return group_from_text(generators_text, degree)
    except Exception as e:
        logger.error(f"Error resolving group: {str(e)}")
        raise


__all__ = [
    'PermGroup',
    'Permutation',
    'PointSet',
    'act_point',
    'act_set',
    'compose',
    'coset_representatives',
    'element_mapping',
    'format_cycles',
    'from_generators',
    'identity',
    'inverse',
    'orbits',
    'parse_cycles',
    'parse_point_set',
    'point_stabilizer',
    'group_from_text',
    'resolve_group',
]
