"""
The checked-in collection of small groups under groups/
"""
import logging
import os

from services.storage_service import list_group_files, load_group_file

logger = logging.getLogger("Collection")


def load_collection(directory="groups"):
    """
    Load every group file of a directory.

    Returns:
        dict: file stem -> PermGroup, in sorted file order
    """
    groups = {}
    for path in list_group_files(directory):
        name = os.path.splitext(os.path.basename(path))[0]
        groups[name] = load_group_file(path)
    logger.info(f"Loaded {len(groups)} groups from {directory}")
    return groups


def load_groups(paths):
    """Load the given group files; returns a dict keyed by file stem."""
    return {os.path.splitext(os.path.basename(p))[0]: load_group_file(p) for p in paths}
