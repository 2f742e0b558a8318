"""
Conversion Handlers

This module dispatches the functors by input kind and runs the checks that
only need one input.

Functions:
    Public:
        handle_convert: `convert --to cls|sps|bcl`
        handle_cartan: `cartan [--property a]`
        handle_t0: `t0`
        handle_roundtrip: `roundtrip`, the equivalence laws on one input

    Private (internal use only):
        _convert: Functor choice per (input type, target)
        _roundtrip_laws: Law outcomes per input type
"""

# Python Standard Library
import argparse
import logging
from typing import Any, Callable, Dict, List, Tuple, Union

# Local
from src.config import ConfigManager
from src.handlers.handle_validate import require_valid
from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_closure import is_T0
from src.models.model_closure import point_closure
from src.models.model_closure import set_token
from src.models.model_functors import BCLMorphism
from src.models.model_functors import BasedCompleteLattice
from src.models.model_functors import counit_epsilon
from src.models.model_functors import functor_F
from src.models.model_functors import functor_F_morphism
from src.models.model_functors import functor_G
from src.models.model_functors import functor_G_morphism
from src.models.model_functors import functor_H
from src.models.model_functors import functor_H_morphism
from src.models.model_functors import functor_K
from src.models.model_functors import functor_K_morphism
from src.models.model_functors import unit_eta
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import cartan_map
from src.models.model_spsys import check_morphism
from src.models.model_spsys import kappa_map
from src.models.model_spsys import state_determination_checks
from src.utils.utils_constants import EXIT_FAILURE
from src.utils.utils_constants import EXIT_OK
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_render import render_report
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import encode
from src.utils.utils_serialize import load
from src.utils.utils_serialize import report_document
from src.utils.utils_serialize import to_bytes










logger = logging.getLogger(__name__)

Output = Union[Document, str]


def _convert(obj: Any, target: str) -> Any:
    """
    Apply the functor that takes obj's category to `target`.

    Raises
    ------
    StructuralError
        When no functor goes from the input kind to the target
    """
    if target == 'cls':
        if isinstance(obj, StatePropertySystem):
            return functor_F(obj)
        if isinstance(obj, SPMorphism):
            return functor_F_morphism(obj)

    if target == 'sps':
        if isinstance(obj, ClosureSpace):
            return functor_G(obj)
        if isinstance(obj, PointMap):
            return functor_G_morphism(obj)
        if isinstance(obj, BasedCompleteLattice):
            return functor_K(obj)
        if isinstance(obj, BCLMorphism):
            return functor_K_morphism(obj)

    if target == 'bcl':
        if isinstance(obj, StatePropertySystem):
            return functor_H(obj)
        if isinstance(obj, SPMorphism):
            return functor_H_morphism(obj)

    raise StructuralError(f'cannot convert a {type(obj).__name__} to {target}')


def handle_convert(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Output]]: # pylint: disable=unused-argument
    obj = require_valid(load(args.file))
    logger.debug('converting %s to %s', type(obj).__name__, args.to)

    return EXIT_OK, [encode(_convert(obj, args.to))]


def handle_cartan(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Output]]: # pylint: disable=unused-argument
    """
    κ of one property, or of every property.
    """
    system = require_valid(load(args.file))
    if not isinstance(system, StatePropertySystem):
        raise StructuralError('cartan expects an sps document')

    if args.property is not None:
        payload = {'property': args.property, 'kappa': sorted(cartan_map(system, args.property))}
    else:
        payload = {'kappa': {a: sorted(states) for a, states in kappa_map(system).items()}}

    return EXIT_OK, [report_document(payload)]


def handle_t0(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Output]]: # pylint: disable=unused-argument
    """
    T0 of a closure space, or state determination of a system.

    Exits with EXIT_FAILURE when the property does not hold.
    """
    obj = require_valid(load(args.file))

    if isinstance(obj, ClosureSpace):
        verdict = is_T0(obj)
        payload: Dict[str, Any] = {'subject': 'closure_space', 'T0': verdict.to_dict()}
        holds = verdict.holds
    elif isinstance(obj, StatePropertySystem):
        checks = state_determination_checks(obj)
        payload = {'subject': 'sps', 'checks': {name: verdict.to_dict() for name, verdict in checks.items()}}
        outcomes = {verdict.holds for verdict in checks.values()}
        if len(outcomes) != 1:
            raise LawViolationError('state-determination checks disagree', payload)
        holds = outcomes.pop()
        payload['state_determined'] = holds
    else:
        raise StructuralError('t0 expects a closure_space or sps document')

    return (EXIT_OK if holds else EXIT_FAILURE), [report_document(payload)]


def _attempt(check: Callable[[], bool]) -> bool:
    try:
        return bool(check())
    except (LawViolationError, RefusalError) as e:
        logger.warning('law check raised: %s', e)
        return False


def _roundtrip_laws(obj: Any) -> Dict[str, bool]:
    laws: Dict[str, Callable[[], bool]] = {}

    if isinstance(obj, ClosureSpace):
        laws['FG_identity'] = lambda: to_bytes(functor_F(functor_G(obj))) == to_bytes(obj)
        laws['epsilon_isomorphism'] = lambda: check_morphism(counit_epsilon(functor_G(obj))).ok
        if is_T0(obj):
            names = {x: set_token(point_closure(obj, x)) for x in obj.points}
            renamed = ClosureSpace(names.values(), [[names[x] for x in s] for s in obj.closed_sets])
            laws['T0_composite'] = lambda: functor_F(functor_K(functor_H(functor_G(obj)))) == renamed

    elif isinstance(obj, StatePropertySystem):
        laws['epsilon_isomorphism'] = lambda: check_morphism(counit_epsilon(obj)).ok
        laws['FG_identity'] = lambda: to_bytes(functor_F(functor_G(functor_F(obj)))) == to_bytes(functor_F(obj))
        laws['HK_identity'] = lambda: to_bytes(functor_H(functor_K(functor_H(obj)))) == to_bytes(functor_H(obj))
        if all(v.holds for v in state_determination_checks(obj).values()):
            laws['eta_isomorphism'] = lambda: check_morphism(unit_eta(obj)).ok

    elif isinstance(obj, BasedCompleteLattice):
        laws['HK_identity'] = lambda: to_bytes(functor_H(functor_K(obj))) == to_bytes(obj)
        laws['eta_isomorphism'] = lambda: check_morphism(unit_eta(functor_K(obj))).ok
        laws['eta_fixes_base'] = lambda: all(p == q for p, q in unit_eta(functor_K(obj)).m.items())

    elif isinstance(obj, PointMap):
        laws['FG_identity'] = lambda: to_bytes(functor_F_morphism(functor_G_morphism(obj))) == to_bytes(obj)

    elif isinstance(obj, BCLMorphism):
        laws['HK_identity'] = lambda: functor_H_morphism(functor_K_morphism(obj)) == obj

    else:
        raise StructuralError(f'roundtrip does not apply to a {type(obj).__name__}')

    return {name: _attempt(check) for name, check in laws.items()}


def handle_roundtrip(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Output]]:
    """
    Check F∘G, G∘F, H∘K and K∘H on one input.
    """
    obj = require_valid(load(args.file))
    outcomes = _roundtrip_laws(obj)
    ok = all(outcomes.values())

    payload = {
        'subject': args.file,
        'ok': ok,
        'laws': {
            name: {'passed': int(holds), 'failed': int(not holds), 'failing_seeds': []}
            for name, holds in outcomes.items()
        },
    }
    status = EXIT_OK if ok else EXIT_FAILURE

    if args.format == 'markdown':
        return status, [render_report(config, payload)]

    return status, [report_document(payload)]
