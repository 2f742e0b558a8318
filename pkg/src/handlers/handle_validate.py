"""
Validation Handlers

This module validates documents of every kind. Other handlers call
validate_object before computing anything, so invalid input is reported
the same way everywhere.

Functions:
    Public:
        validate_object: Report for any decoded model object
        require_valid: Raise RefusalError on an invalid object
        handle_validate: The `validate` verb

    Private (internal use only):
        _endpoints: Merge the reports of a map's source and target
"""

# Python Standard Library
import argparse
import logging
from typing import Any, List, Tuple

# Local
from src.config import ConfigManager
from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_closure import is_continuous
from src.models.model_closure import validate_closure_space
from src.models.model_entity import StateTestEntity
from src.models.model_entity import is_unital_product_entity
from src.models.model_functors import BCLMorphism
from src.models.model_functors import BasedCompleteLattice
from src.models.model_functors import check_bcl_morphism
from src.models.model_functors import validate_bcl
from src.models.model_order import CompleteLattice
from src.models.model_order import MonotoneMap
from src.models.model_order import is_monotone
from src.models.model_order import validate_lattice
from src.models.model_product import ProductWitness
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import check_morphism
from src.models.model_spsys import validate_sps
from src.utils.utils_constants import EXIT_FAILURE
from src.utils.utils_constants import EXIT_OK
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import ValidationReport
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import load
from src.utils.utils_serialize import report_document










logger = logging.getLogger(__name__)


def _endpoints(report: ValidationReport, source: Any, target: Any) -> bool:
    """
    Add the reports of both endpoints; True when both are valid.
    """
    source_report = validate_object(source)
    target_report = validate_object(target)
    report.extend(source_report, prefix='source.')
    report.extend(target_report, prefix='target.')

    return source_report.ok and target_report.ok


def validate_object(obj: Any) -> ValidationReport:
    """
    Validator report for any model object.

    Maps and morphisms are checked only once their endpoints are valid.
    """
    if isinstance(obj, CompleteLattice):
        return validate_lattice(obj)

    if isinstance(obj, ClosureSpace):
        return validate_closure_space(obj)

    if isinstance(obj, StatePropertySystem):
        return validate_sps(obj)

    if isinstance(obj, BasedCompleteLattice):
        return validate_bcl(obj)

    if isinstance(obj, StateTestEntity):
        # Every structurally sound entity is valid; unital products are reported by `entity compile`
        return ValidationReport('entity')

    if isinstance(obj, SPMorphism):
        report = ValidationReport('sp_morphism')
        if _endpoints(report, obj.source, obj.target):
            report.extend(check_morphism(obj))
        return report

    if isinstance(obj, BCLMorphism):
        report = ValidationReport('bcl_morphism')
        if _endpoints(report, obj.source, obj.target):
            report.extend(check_bcl_morphism(obj))
        return report

    if isinstance(obj, MonotoneMap):
        report = ValidationReport('lattice_map')
        if _endpoints(report, obj.source, obj.target):
            verdict = is_monotone(obj)
            if not verdict:
                report.add('monotonicity', verdict.message, verdict.witness)
        return report

    if isinstance(obj, PointMap):
        report = ValidationReport('continuous_map')
        if _endpoints(report, obj.source, obj.target):
            verdict = is_continuous(obj)
            if not verdict:
                report.add('continuity', verdict.message, verdict.witness)
        return report

    if isinstance(obj, ProductWitness):
        report = ValidationReport('witness')
        report.extend(validate_sps(obj.product), prefix='product.')
        for i, projection in enumerate(obj.projections, start=1):
            report.extend(validate_object(projection), prefix=f's{i}.')
        return report

    raise StructuralError(f'cannot validate {type(obj).__name__}')


def require_valid(obj: Any) -> Any:
    """
    Return obj unchanged, or raise RefusalError carrying its report.
    """
    report = validate_object(obj)
    if not report.ok:
        raise RefusalError(f'invalid {report.subject}: {report.first().clause}', report)

    return obj


def handle_validate(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    """
    Validate each input file.

    Parameters
    ----------
    config : ConfigManager
        Custom container for validating, storing and retrieving application settings
    args : argparse.Namespace
        Parsed arguments with `files`

    Returns
    -------
    Tuple[int, List[Document]]
        EXIT_OK when every file is valid, EXIT_FAILURE otherwise, and one
        report per file
    """
    outputs = []
    status = EXIT_OK

    for path in args.files:
        logger.debug('validating %s', path)
        obj = load(path)
        report = validate_object(obj)
        payload = dict(report.to_dict(), file=path)

        if isinstance(obj, StateTestEntity):
            payload['unital_product'] = is_unital_product_entity(obj).to_dict()

        if not report.ok:
            status = EXIT_FAILURE
        outputs.append(report_document(payload))

    return status, outputs
