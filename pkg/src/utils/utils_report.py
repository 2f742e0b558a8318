"""
Validation reports and verdicts.

Every boolean answer the application gives comes with a witness, and every
validator returns a report listing each violated clause.

Classes:
    Violation:
        One violated clause with its message and witness
    ValidationReport:
        Ordered collection of violations; empty means valid
    Verdict:
        Boolean outcome with a witness; truthy iff the property holds
"""

# Python Standard Library
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional










def jsonable(value: Any) -> Any:
    """
    Convert a witness into a JSON-ready structure with deterministic ordering.
    """
    if value is None or isinstance(value, (bool, int, float, str)):
        return value

    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)

    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]

    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}

    to_dict = getattr(value, 'to_dict', None)
    if callable(to_dict):
        return to_dict()

    return str(value)


@dataclass(frozen=True)
class Violation:
    """
    A single violated clause.

    Attributes
    ----------
    clause : str
        Short name of the violated requirement (e.g. 'transitivity')
    message : str
        Human readable description
    witness : Any
        Elements demonstrating the failure
    """
    clause: str
    message: str
    witness: Any = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'clause': self.clause,
            'message': self.message,
            'witness': jsonable(self.witness),
        }


@dataclass
class ValidationReport:
    """
    Result of a validator.

    Attributes
    ----------
    subject : str
        What was validated (e.g. 'lattice', 'sps')
    violations : List[Violation]
        Violations in discovery order
    warnings : List[Violation]
        Findings that do not make the subject invalid

    Public Methods
    --------------
        add(clause, message, witness=None) -> None
            Record a violation
        warn(clause, message, witness=None) -> None
            Record a warning
        extend(other, prefix='') -> None
            Merge the violations of a nested report
        clauses() -> List[str]
            Names of the violated clauses
        to_dict() -> Dict[str, Any]
            JSON-ready representation
    """
    subject: str
    violations: List[Violation] = field(default_factory=list)
    warnings: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)

    def __len__(self) -> int:
        return len(self.violations)

    def add(self, clause: str, message: str, witness: Any = None) -> None:
        self.violations.append(Violation(clause, message, witness))

    def warn(self, clause: str, message: str, witness: Any = None) -> None:
        self.warnings.append(Violation(clause, message, witness))

    def extend(self, other: Iterable[Violation], prefix: str = '') -> None:
        for violation in other:
            clause = f'{prefix}{violation.clause}' if prefix else violation.clause
            self.violations.append(Violation(clause, violation.message, violation.witness))

    def clauses(self) -> List[str]:
        return [violation.clause for violation in self.violations]

    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'subject': self.subject,
            'valid': self.ok,
            'violations': [violation.to_dict() for violation in self.violations],
        }
        if self.warnings:
            result['warnings'] = [warning.to_dict() for warning in self.warnings]
        return result


@dataclass(frozen=True)
class Verdict:
    """
    Boolean outcome with a witness.

    Attributes
    ----------
    holds : bool
        Whether the checked property holds
    witness : Any
        Counterexample when it does not hold (or a constructed object when it does)
    message : str
        Optional explanation
    """
    holds: bool
    witness: Any = None
    message: str = ''

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            'holds': self.holds,
            'witness': jsonable(self.witness),
            'message': self.message,
        }
