"""
Brute-force oracles for small instances
"""
from services.oracle.brute import ElementBudget, brute_min, elements, set_orbit
from services.oracle.contract import ContractReport, Violation, check_canonical_contract

__all__ = [
    'ElementBudget',
    'brute_min',
    'elements',
    'set_orbit',
    'ContractReport',
    'Violation',
    'check_canonical_contract',
]
