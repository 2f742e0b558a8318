"""
Morphism Handlers

Functions:
    Public:
        handle_check_morphism: `check-morphism`
        handle_compose: `compose f g` (g after f)
        handle_adjoint: `adjoint --lower|--upper`
"""

# Python Standard Library
import argparse
import logging
from typing import List, Tuple

# Local
from src.config import ConfigManager
from src.handlers.handle_validate import require_valid
from src.handlers.handle_validate import validate_object
from src.models.model_closure import PointMap
from src.models.model_closure import compose_point_maps
from src.models.model_functors import BCLMorphism
from src.models.model_functors import compose_bcl_morphisms
from src.models.model_galois import adjoint_failure
from src.models.model_galois import lower_adjoint
from src.models.model_galois import upper_adjoint
from src.models.model_order import MonotoneMap
from src.models.model_order import compose_maps
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import compose_morphisms
from src.models.model_spsys import is_isomorphism
from src.utils.utils_constants import EXIT_FAILURE
from src.utils.utils_constants import EXIT_OK
from src.utils.utils_errors import StructuralError
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import encode
from src.utils.utils_serialize import load
from src.utils.utils_serialize import report_document










logger = logging.getLogger(__name__)

MORPHISM_TYPES = (SPMorphism, BCLMorphism, MonotoneMap, PointMap)


def handle_check_morphism(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    """
    Validate a morphism or map, reporting isomorphism for SP morphisms.
    """
    obj = load(args.file)
    if not isinstance(obj, MORPHISM_TYPES):
        raise StructuralError('check-morphism expects sp_morphism, bcl_morphism, lattice_map or continuous_map')

    report = validate_object(obj)
    payload = report.to_dict()
    if report.ok and isinstance(obj, SPMorphism):
        payload['isomorphism'] = is_isomorphism(obj).holds

    return (EXIT_OK if report.ok else EXIT_FAILURE), [report_document(payload)]


def handle_compose(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    """
    g ∘ f for two morphisms of the same kind.
    """
    f = require_valid(load(args.first))
    g = require_valid(load(args.second))

    if type(f) is not type(g) or not isinstance(f, MORPHISM_TYPES):
        raise StructuralError('compose expects two morphisms of the same kind')

    if isinstance(f, SPMorphism):
        composite = compose_morphisms(f, g)
    elif isinstance(f, BCLMorphism):
        composite = compose_bcl_morphisms(f, g)
    elif isinstance(f, PointMap):
        composite = compose_point_maps(f, g)
    else:
        composite = compose_maps(f, g)

    return EXIT_OK, [encode(composite)]


def handle_adjoint(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]:
    """
    Lower or upper adjoint of a lattice map. When it does not exist the
    report names the subset whose meet (join) is not preserved.
    """
    f = require_valid(load(args.file))
    if not isinstance(f, MonotoneMap):
        raise StructuralError('adjoint expects a lattice_map document')

    limit = config.get('SUBSET_EXHAUSTIVE_LIMIT')
    adjoint = lower_adjoint(f, limit) if args.lower else upper_adjoint(f, limit)

    if adjoint is None:
        verdict = adjoint_failure(f, args.lower, limit)
        payload = {
            'adjoint': 'lower' if args.lower else 'upper',
            'exists': False,
            'reason': verdict.to_dict(),
        }
        return EXIT_FAILURE, [report_document(payload)]

    return EXIT_OK, [encode(adjoint)]
