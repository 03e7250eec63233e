"""
Checks that a labeller is a canonical labelling function on one set orbit
"""
import logging
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from services.errors import OracleBudgetError
from services.group.permutation import format_cycles
from services.oracle.brute import ElementBudget, set_orbit
from services.search.labellers import resolve_labeller

logger = logging.getLogger("Oracle")

MAX_REPORTED_VIOLATIONS = 10
DEFAULT_SAMPLES = 100


@dataclass(frozen=True)
class Violation:
    """One broken property: `kind` is "orbit" (image outside the orbit) or "invariance"."""

    kind: str
    input: list
    image: list
    expected: Optional[list]
    witness: str

    def to_dict(self):
        return {
            'kind': self.kind,
            'input': self.input,
            'image': self.image,
            'expected': self.expected,
            'witness': self.witness,
        }


@dataclass
class ContractReport:
    strategy: str
    checked: int = 0
    violation_count: int = 0
    orbit_size: Optional[int] = None
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return self.violation_count == 0

    def record(self, violation):
        self.violation_count += 1
        if len(self.violations) < MAX_REPORTED_VIOLATIONS:
            self.violations.append(violation)

    def to_dict(self):
        return {
            'strategy': self.strategy,
            'passed': self.passed,
            'checked': self.checked,
            'orbit_size': self.orbit_size,
            'violation_count': self.violation_count,
            'violations': [v.to_dict() for v in self.violations],
        }


def _sound(group, point_set, result):
    witness = result.witness
    return witness.act_set(point_set) == result.image and group.contains(witness)


def check_canonical_contract(group, point_set, strategy, samples=None, budget=None, seed=0,
                             labeller=None):
    """
    Verify that a labeller maps a set into its orbit and is constant on that orbit.

    The whole orbit is checked when it fits in the budget; otherwise `samples`
    random images of the set are checked instead.

    Args:
        group (PermGroup): the acting group
        point_set (PointSet): the orbit representative
        strategy (str): labeller name, used when `labeller` is not given
        samples (int, optional): number of random images for large orbits
        budget (ElementBudget, optional): oracle caps
        seed (int): seed for the random images
        labeller (callable, optional): an explicit labelling function

    Returns:
        ContractReport: counts and the first violations found
    """
    budget = budget or ElementBudget()
    labeller = labeller or resolve_labeller(strategy)
    report = ContractReport(strategy=strategy)

    try:
        members = set_orbit(group, point_set, budget)
        report.orbit_size = len(members)
    except OracleBudgetError as e:
        logger.info(f"Sampling instead of enumerating: {str(e)}")
        rng = np.random.default_rng(seed)
        count = samples or DEFAULT_SAMPLES
        members = [point_set] + [group.random_element(rng).act_set(point_set) for _ in range(count)]

    expected = labeller(group, point_set)
    for member in members:
        result = expected if member == point_set else labeller(group, member)
        report.checked += 1
        if not _sound(group, member, result):
            report.record(Violation(
                'orbit', list(member.members), list(result.image.members), None,
                format_cycles(result.witness),
            ))
        if result.image != expected.image:
            report.record(Violation(
                'invariance', list(member.members), list(result.image.members),
                list(expected.image.members), format_cycles(result.witness),
            ))

    logger.info(
        f"Contract for {strategy}: {report.checked} sets checked, "
        f"{report.violation_count} violations"
    )
    return report
