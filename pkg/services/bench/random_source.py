"""
Seeded randomness for instances: every draw goes through numpy's PCG64 generator
"""
import numpy as np

from services.errors import CanImageError
from services.group.perm_group import PermGroup
from services.group.permutation import Permutation, PointSet


def make_rng(seed):
    """A numpy Generator for an int seed, a seed sequence list, or an existing Generator."""
    return np.random.default_rng(seed)


def random_permutation(degree, seed):
    """A uniformly random permutation from a Fisher-Yates shuffle."""
    rng = make_rng(seed)
    return Permutation(tuple(int(i) for i in rng.permutation(degree)))


def random_conjugate(group, seed):
    """
    A random conjugate of the group, which randomizes how the natural order meets it.

    Returns:
        tuple: (G^sigma, sigma)
    """
    sigma = random_permutation(group.degree, seed)
    return group.conjugate(sigma), sigma


def random_subset(degree, size, seed):
    """A uniformly random subset of {1..degree} with exactly `size` members."""
    if size < 0 or size > degree:
        raise CanImageError(f"cannot draw {size} points from {degree}")
    rng = make_rng(seed)
    chosen = rng.choice(degree, size=size, replace=False)
    return PointSet.from_indices((int(i) for i in chosen), degree)


def random_group(degree, seed, generator_count=2):
    """A group generated by random permutations; used for small property checks."""
    rng = make_rng(seed)
    generators = [random_permutation(degree, rng) for _ in range(generator_count)]
    return PermGroup(generators, degree)
