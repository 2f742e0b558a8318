"""
Utility Functions Module

This module provides the constants, exceptions, reports and logging setup
shared by every other part of the application.

Components
----------
Constants:
    ZERO_ID, PAIR_SEPARATOR, DOCUMENT_KINDS, EXIT_OK, EXIT_FAILURE, EXIT_USAGE:
        Reserved ids, document kinds and CLI exit statuses

Classes:
    StructuralError, RefusalError, LawViolationError:
        Malformed input, unmet preconditions and failed runtime assertions
    ValidationReport, Violation, Verdict:
        Validator and law outcomes with witnesses

Functions:
    setup_logging:
        Route log records to standard error

The modules utils_serialize, utils_generate and utils_render depend on the
models and are imported directly rather than re-exported here.
"""

from .utils_constants import ZERO_ID
from .utils_constants import PAIR_SEPARATOR
from .utils_constants import DOCUMENT_KINDS
from .utils_constants import EXIT_OK
from .utils_constants import EXIT_FAILURE
from .utils_constants import EXIT_USAGE
from .utils_errors import StructuralError
from .utils_errors import RefusalError
from .utils_errors import LawViolationError
from .utils_report import ValidationReport
from .utils_report import Violation
from .utils_report import Verdict
from .utils_logging import setup_logging


__all__ = [
    'ZERO_ID',
    'PAIR_SEPARATOR',
    'DOCUMENT_KINDS',
    'EXIT_OK',
    'EXIT_FAILURE',
    'EXIT_USAGE',
    'StructuralError',
    'RefusalError',
    'LawViolationError',
    'ValidationReport',
    'Violation',
    'Verdict',
    'setup_logging'
]
