"""
Exceptions raised across the application.

Structural problems (malformed input) and refusals (unmet preconditions) are
exceptions; law and validator outcomes are reported as values instead
(see utils_report).
"""

# Python Standard Library
from typing import Any, Optional










class StructuralError(ValueError):
    """
    Malformed input: unknown ids, non-total maps, duplicate ids, wrong
    morphism direction, mismatched endpoints or an unreadable document.

    Attributes
    ----------
    location : str
        Path of the offending value inside its document, '' when unknown
    """
    def __init__(self, message: str, location: str = ''):
        self.location = location
        if location:
            message = f'{location}: {message}'
        super().__init__(message)


class RefusalError(ValueError):
    """
    An operation refused to run because its precondition does not hold.

    Attributes
    ----------
    report : Any
        Report or verdict explaining the refusal
    """
    def __init__(self, message: str, report: Optional[Any] = None):
        self.report = report
        super().__init__(message)


class LawViolationError(AssertionError):
    """
    A runtime assertion derived from a theorem failed, which means the input
    was corrupted after validation or the implementation is wrong.
    """
    def __init__(self, message: str, report: Optional[Any] = None):
        self.report = report
        super().__init__(message)
