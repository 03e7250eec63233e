"""
Deterministic experiment runner comparing labelling strategies by node count
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, field

import numpy as np

from services.bench.collection import load_groups
from services.bench.families import grid_group, mset_group
from services.bench.random_source import random_conjugate, random_subset
from services.errors import CanImageError, SearchTimeout
from services.search.labellers import resolve_labeller
from services.storage_service import rows_to_csv, write_csv

logger = logging.getLogger("BenchRunner")

FAMILIES = ('grid', 'mset', 'file')
ALLOWED_FRACTIONS = (2, 4, 8)
CSV_HEADER = ('family', 'instance', 'degree', 'strategy', 'fraction', 'seed',
              'solved', 'nodes', 'depth', 'elapsed_ms')
DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One benchmark run: a family of groups, set sizes given as fractions of the
    degree, and the strategies to compare.

    `sizes` are grid side lengths or the n of m-set groups; `group_files` are
    used by the "file" family.
    """

    family: str
    strategies: tuple
    sizes: tuple = ()
    fractions: tuple = (2,)
    seed: int = 0
    node_budget: int = DEFAULT_NODE_BUDGET
    repeats: int = 1
    mset_m: int = 2
    group_files: tuple = ()
    conjugate: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CanImageError(f"unknown family {self.family!r}, expected one of {', '.join(FAMILIES)}")
        if not self.strategies:
            raise CanImageError("at least one strategy is needed")
        for name in self.strategies:
            resolve_labeller(name)
        bad = [f for f in self.fractions if f not in ALLOWED_FRACTIONS]
        if bad or not self.fractions:
            raise CanImageError(f"fractions must be drawn from {ALLOWED_FRACTIONS}, got {self.fractions}")
        if self.family == 'file' and not self.group_files:
            raise CanImageError("the file family needs at least one group file")
        if self.family != 'file' and not self.sizes:
            raise CanImageError(f"the {self.family} family needs sizes")
        if self.repeats < 1 or self.node_budget < 1 or self.workers < 1:
            raise CanImageError("repeats, node budget and workers must be positive")


@dataclass(frozen=True)
class ResultRow:
    family: str
    instance: str
    degree: int
    strategy: str
    fraction: int
    seed: int
    solved: bool
    nodes: int
    depth: int
    elapsed_ms: float
    instance_index: int = field(default=0, compare=False)
    repeat: int = field(default=0, compare=False)

    def csv_fields(self):
        return astuple(self)[:len(CSV_HEADER)]

    def sort_key(self):
        return (self.instance_index, self.fraction, self.repeat, self.strategy)


@dataclass(frozen=True)
class SummaryRow:
    strategy: str
    fraction: int
    solved: int
    total: int
    median_nodes: float
    largest_degree: int


@dataclass(frozen=True)
class _Cell:
    family: str
    instance: str
    instance_index: int
    group: object
    point_set: object
    strategy: str
    fraction: int
    repeat: int
    seed: int
    node_budget: int


def build_instances(config):
    """
    The groups of a config as (instance id, PermGroup) pairs, in run order.
    """
    if config.family == 'grid':
        instances = [(f"grid-{n}", grid_group(n)) for n in config.sizes]
    elif config.family == 'mset':
        instances = [(f"mset-{n}-{config.mset_m}", mset_group(n, config.mset_m)) for n in config.sizes]
    else:
        instances = list(load_groups(config.group_files).items())
    for _, group in instances:
        group.build_chain()
    return instances


def _cells(config, instances):
    for index, (instance, group) in enumerate(instances):
        for fraction in config.fractions:
            for repeat in range(config.repeats):
                rng = np.random.default_rng([config.seed, index, fraction, repeat])
                acting = group
                if config.conjugate:
                    acting, _ = random_conjugate(group, rng)
                    acting.build_chain()
                point_set = random_subset(group.degree, group.degree // fraction, rng)
                for strategy in config.strategies:
                    yield _Cell(config.family, instance, index, acting, point_set, strategy,
                                fraction, repeat, config.seed, config.node_budget)


def run_cell(cell):
    """Run one strategy on one instance; budget exhaustion yields an unsolved row."""
    labeller = resolve_labeller(cell.strategy)
    try:
        result = labeller(cell.group, cell.point_set, node_budget=cell.node_budget)
        solved, stats = True, result.stats
        nodes = stats.nodes
    except SearchTimeout as e:
        solved, stats = False, e.stats
        nodes = cell.node_budget
    return ResultRow(
        family=cell.family,
        instance=cell.instance,
        degree=cell.group.degree,
        strategy=cell.strategy,
        fraction=cell.fraction,
        seed=cell.seed,
        solved=solved,
        nodes=nodes,
        depth=stats.depth,
        elapsed_ms=stats.elapsed_ms,
        instance_index=cell.instance_index,
        repeat=cell.repeat,
    )


def run_suite(config):
    """
    Run every (instance, fraction, repeat, strategy) cell of a config.

    Every strategy sees the same random subset for a given instance, fraction
    and repeat. Rows come back sorted, so equal configs give equal rows apart
    from elapsed_ms.

    Returns:
        list: ResultRow objects
    """
    instances = build_instances(config)
    cells = list(_cells(config, instances))
    logger.info(f"Running {len(cells)} cells for family {config.family} with {config.workers} worker(s)")
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = list(pool.map(run_cell, cells))
    else:
        rows = [run_cell(cell) for cell in cells]
    unsolved = sum(1 for row in rows if not row.solved)
    if unsolved:
        logger.warning(f"{unsolved} of {len(rows)} cells ran out of node budget")
    return sorted(rows, key=lambda row: row.sort_key())


def rows_as_csv(rows):
    return rows_to_csv(CSV_HEADER, [_csv_values(row) for row in rows])


def write_results(rows, path):
    write_csv(path, CSV_HEADER, [_csv_values(row) for row in rows])


def _csv_values(row):
    values = list(row.csv_fields())
    values[CSV_HEADER.index('solved')] = 'true' if row.solved else 'false'
    return values


def summarize(rows):
    """
    Per strategy and fraction: solved count, median nodes and the largest solved degree.

    Unsolved rows enter the median with their budget as node count.
    """
    groups = {}
    for row in rows:
        groups.setdefault((row.strategy, row.fraction), []).append(row)
    summary = []
    for (strategy, fraction), members in sorted(groups.items()):
        solved = [row for row in members if row.solved]
        summary.append(SummaryRow(
            strategy=strategy,
            fraction=fraction,
            solved=len(solved),
            total=len(members),
            median_nodes=float(np.median([row.nodes for row in members])),
            largest_degree=max((row.degree for row in solved), default=0),
        ))
    return summary


def format_summary(summary):
    """Plain-text summary table, one line per strategy and fraction."""
    lines = ["strategy fraction solved/total median_nodes largest"]
    for row in summary:
        lines.append(
            f"{row.strategy} n/{row.fraction} {row.solved}/{row.total} "
            f"{row.median_nodes:g} {row.largest_degree}"
        )
    return "\n".join(lines)
