"""
Entity Handlers

Functions:
    Public:
        handle_entity_compile: `entity compile`, the system and its quotient map
"""

# Python Standard Library
import argparse
import logging
from typing import List, Tuple

# Local
from src.config import ConfigManager
from src.models.model_entity import StateTestEntity
from src.models.model_entity import compile_to_sps
from src.models.model_entity import equivalence_classes
from src.models.model_entity import is_state_determined_entity
from src.models.model_spsys import validate_sps
from src.utils.utils_constants import EXIT_OK
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import StructuralError
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import encode
from src.utils.utils_serialize import load
from src.utils.utils_serialize import report_document










logger = logging.getLogger(__name__)


def handle_entity_compile(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    """
    Compile a unital product entity.

    Returns
    -------
    Tuple[int, List[Document]]
        The sps document followed by a report with the quotient map, the
        equivalence classes and whether η is injective

    Raises
    ------
    RefusalError
        If the entity is not a unital product entity
    """
    entity = load(args.file)
    if not isinstance(entity, StateTestEntity):
        raise StructuralError('entity compile expects an entity document')

    system, quotient = compile_to_sps(entity)
    report = validate_sps(system)
    if not report.ok:
        raise LawViolationError('compiled system is not a valid state property system', report)
    logger.debug('entity compiled to %d properties', len(system.lattice))

    payload = {
        'quotient': quotient,
        'classes': {class_id: list(members) for class_id, members in equivalence_classes(entity).items()},
        'state_determined': is_state_determined_entity(entity).holds,
    }

    return EXIT_OK, [encode(system), report_document(payload)]
