"""
Shared fixtures for the test suite
"""
from pathlib import Path

import numpy as np
import pytest
from click.testing import CliRunner

from app import create_cli
from services.group.perm_group import PermGroup
from services.group.permutation import PointSet, parse_cycles

GROUPS_DIR = Path(__file__).resolve().parent.parent / "groups"


def make_group(degree, *cycles):
    """A group from generators in cycle notation."""
    return PermGroup([parse_cycles(c, degree) for c in cycles], degree)


def point_set(degree, *members):
    return PointSet.of(members, degree)


@pytest.fixture
def groups_dir():
    return GROUPS_DIR


@pytest.fixture
def ex26():
    """<(1,4)(2,3)(5,6), (1,2,6)> on six points, order 18."""
    return make_group(6, "(1,4)(2,3)(5,6)", "(1,2,6)")


@pytest.fixture
def split_group():
    """<(1,2),(4,5),(5,6),(8,9)> on ten points."""
    return make_group(10, "(1,2)", "(4,5)", "(5,6)", "(8,9)")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def cli():
    return create_cli({'LOG_LEVEL': 'WARNING'})


@pytest.fixture
def runner():
    return CliRunner()
