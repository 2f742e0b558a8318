"""
Product Handlers

Functions:
    Public:
        handle_product: `product a b`, the product and its projections
        handle_mediate: `mediate witness f1 f2`, the factorization through P
        handle_verify_universal: `verify-universal witness f1 f2`
"""

# Python Standard Library
import argparse
import logging
from typing import List, Tuple

# Local
from src.config import ConfigManager
from src.handlers.handle_validate import require_valid
from src.models.model_product import ProductWitness
from src.models.model_product import mediating_morphism
from src.models.model_product import sp_product
from src.models.model_product import verify_universal_property
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.utils.utils_constants import EXIT_FAILURE
from src.utils.utils_constants import EXIT_OK
from src.utils.utils_errors import StructuralError
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import encode
from src.utils.utils_serialize import load
from src.utils.utils_serialize import report_document










logger = logging.getLogger(__name__)


def handle_product(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    """
    P, s1 and s2 as three documents, or one witness document with --witness.
    """
    first = require_valid(load(args.first))
    second = require_valid(load(args.second))
    if not isinstance(first, StatePropertySystem) or not isinstance(second, StatePropertySystem):
        raise StructuralError('product expects two sps documents')

    witness = sp_product(first, second)
    if args.witness:
        return EXIT_OK, [encode(witness)]

    return EXIT_OK, [encode(witness.product)] + [encode(s) for s in witness.projections]


def _load_legs(args: argparse.Namespace) -> Tuple[ProductWitness, SPMorphism, SPMorphism]:
    witness = require_valid(load(args.witness_file))
    f1 = require_valid(load(args.f1))
    f2 = require_valid(load(args.f2))
    if not isinstance(witness, ProductWitness):
        raise StructuralError('expected a witness document')
    if not isinstance(f1, SPMorphism) or not isinstance(f2, SPMorphism):
        raise StructuralError('expected two sp_morphism documents')

    return witness, f1, f2


def handle_mediate(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    witness, f1, f2 = _load_legs(args)
    return EXIT_OK, [encode(mediating_morphism(witness, f1, f2))]


def handle_verify_universal(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]:
    """
    Exhaustive uniqueness check of the factorization through the product.

    Raises
    ------
    RefusalError
        If the instance exceeds the configured bounds
    """
    witness, f1, f2 = _load_legs(args)
    verdict = verify_universal_property(
        witness,
        f1,
        f2,
        max_states=config.get('UNIVERSAL_MAX_SOURCE_STATES'),
        max_properties=config.get('UNIVERSAL_MAX_SOURCE_PROPERTIES'),
        max_candidates=config.get('UNIVERSAL_MAX_CANDIDATES')
    )
    payload = dict(verdict.to_dict(), mediating=encode(mediating_morphism(witness, f1, f2)).to_json())

    return (EXIT_OK if verdict else EXIT_FAILURE), [report_document(payload)]
