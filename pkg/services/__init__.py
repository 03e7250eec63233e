"""
Services package for the application.
This package contains the group, search, oracle and benchmark services.
"""
from services import group_service, search_service
from services.errors import (
    BudgetExceededError,
    CanImageError,
    CycleParseError,
    DegreeMismatchError,
    GroupFileError,
    OracleBudgetError,
    SearchTimeout,
)
from services.group_service import *
from services.search_service import *
from services.storage_service import load_group_file, save_group_file, write_csv

# Define what's available when using "from services import *"
__all__ = [
    # Errors
    'BudgetExceededError',
    'CanImageError',
    'CycleParseError',
    'DegreeMismatchError',
    'GroupFileError',
    'OracleBudgetError',
    'SearchTimeout',
    # Storage
    'load_group_file',
    'save_group_file',
    'write_csv',
] + group_service.__all__ + search_service.__all__
