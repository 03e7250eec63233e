"""
Group families and the benchmark runner
"""
from services.bench.families import (
    adversarial_instance,
    cyclic_group,
    dihedral_group,
    ext_elt,
    ext_group,
    grid_group,
    induced_permutation,
    mset_group,
    rank_subset,
    symmetric_group,
    unrank_subset,
)
from services.bench.random_source import random_conjugate, random_group, random_permutation, random_subset
from services.bench.collection import load_collection, load_groups
from services.bench.runner import (
    CSV_HEADER,
    ExperimentConfig,
    ResultRow,
    SummaryRow,
    format_summary,
    rows_as_csv,
    run_suite,
    summarize,
    write_results,
)

__all__ = [
    'adversarial_instance',
    'cyclic_group',
    'dihedral_group',
    'ext_elt',
    'ext_group',
    'grid_group',
    'induced_permutation',
    'mset_group',
    'rank_subset',
    'symmetric_group',
    'unrank_subset',
    'random_conjugate',
    'random_group',
    'random_permutation',
    'random_subset',
    'load_collection',
    'load_groups',
    'CSV_HEADER',
    'ExperimentConfig',
    'ResultRow',
    'SummaryRow',
    'format_summary',
    'rows_as_csv',
    'run_suite',
    'summarize',
    'write_results',
]
