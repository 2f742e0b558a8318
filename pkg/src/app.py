"""
SPCLS Project

Main program file that parses the command line, applies flag overrides to
the configuration and routes each verb to its handler. This file serves as
the central coordinator for:

- Building the argument parser for every verb
- Loading settings and applying command-line overrides
- Dispatching to the handlers and printing their documents
- Mapping exceptions to exit statuses and error reports

Exit statuses: 0 valid/success, 1 law or validation failure (including
refusals), 2 structural or usage error. Standard output carries only
documents; logs go to standard error.
"""

# Python Standard Library
import argparse
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

# Local
from .config import ConfigManager
from .handlers import handle_adjoint
from .handlers import handle_cartan
from .handlers import handle_check_morphism
from .handlers import handle_compose
from .handlers import handle_convert
from .handlers import handle_entity_compile
from .handlers import handle_gen
from .handlers import handle_laws
from .handlers import handle_mediate
from .handlers import handle_product
from .handlers import handle_roundtrip
from .handlers import handle_t0
from .handlers import handle_validate
from .handlers import handle_verify_universal
from .utils import EXIT_FAILURE
from .utils import EXIT_USAGE
from .utils import LawViolationError
from .utils import RefusalError
from .utils import StructuralError
from .utils import setup_logging
from .utils.utils_generate import GENERATED_KINDS
from .utils.utils_report import jsonable
from .utils.utils_serialize import Document
from .utils.utils_serialize import canonical_serialize










logger = logging.getLogger(__name__)

Handler = Callable[[ConfigManager, argparse.Namespace], Tuple[int, List[Any]]]


def build_parser() -> argparse.ArgumentParser:
    """
    Argument parser with one subcommand per verb.
    """
    parser = argparse.ArgumentParser(
        prog='spcls',
        description='State property systems, closure spaces and based complete lattices.'
    )
    parser.add_argument('--verbose', action='store_true', help='log debug messages to standard error')
    verbs = parser.add_subparsers(dest='verb', required=True)

    validate = verbs.add_parser('validate', help='validate documents of any kind')
    validate.add_argument('files', nargs='+')
    validate.set_defaults(handler=handle_validate)

    convert = verbs.add_parser('convert', help='apply F, G, H or K by input kind')
    convert.add_argument('--to', required=True, choices=('cls', 'sps', 'bcl'))
    convert.add_argument('file')
    convert.set_defaults(handler=handle_convert)

    cartan = verbs.add_parser('cartan', help='Cartan map of a state property system')
    cartan.add_argument('--property', default=None)
    cartan.add_argument('file')
    cartan.set_defaults(handler=handle_cartan)

    t0 = verbs.add_parser('t0', help='T0 of a closure space or state determination of a system')
    t0.add_argument('file')
    t0.set_defaults(handler=handle_t0)

    check = verbs.add_parser('check-morphism', help='validate a morphism or map')
    check.add_argument('file')
    check.set_defaults(handler=handle_check_morphism)

    compose = verbs.add_parser('compose', help='compose two morphisms: second after first')
    compose.add_argument('first')
    compose.add_argument('second')
    compose.set_defaults(handler=handle_compose)

    adjoint = verbs.add_parser('adjoint', help='lower or upper adjoint of a lattice map')
    side = adjoint.add_mutually_exclusive_group(required=True)
    side.add_argument('--lower', action='store_true')
    side.add_argument('--upper', action='store_true')
    adjoint.add_argument('file')
    adjoint.set_defaults(handler=handle_adjoint)

    entity = verbs.add_parser('entity', help='state test entities')
    entity_verbs = entity.add_subparsers(dest='entity_verb', required=True)
    compile_entity = entity_verbs.add_parser('compile', help='compile a unital product entity')
    compile_entity.add_argument('file')
    compile_entity.set_defaults(handler=handle_entity_compile)

    product = verbs.add_parser('product', help='product of two systems with its projections')
    product.add_argument('first')
    product.add_argument('second')
    product.add_argument('--witness', action='store_true', help='emit one witness document')
    product.set_defaults(handler=handle_product)

    for name, handler, text in (
        ('mediate', handle_mediate, 'mediating morphism into a product'),
        ('verify-universal', handle_verify_universal, 'exhaustive universal-property check'),
    ):
        legs = verbs.add_parser(name, help=text)
        legs.add_argument('witness_file', metavar='witness')
        legs.add_argument('f1')
        legs.add_argument('f2')
        legs.set_defaults(handler=handler)

    roundtrip = verbs.add_parser('roundtrip', help='equivalence laws on one input')
    roundtrip.add_argument('file')
    roundtrip.add_argument('--format', choices=('json', 'markdown'), default='json')
    roundtrip.set_defaults(handler=handle_roundtrip)

    gen = verbs.add_parser('gen', help='generate a seeded instance')
    gen.add_argument('--kind', required=True, choices=GENERATED_KINDS)
    gen.add_argument('--seed', type=int)
    gen.add_argument('--max-states', type=int)
    gen.add_argument('--max-props', type=int)
    gen.add_argument('--max-tests', type=int)
    gen.set_defaults(handler=handle_gen)

    laws = verbs.add_parser('laws', help='run the category-law harness')
    laws.add_argument('--trials', type=int)
    laws.add_argument('--seed', type=int)
    laws.add_argument('--max-states', type=int)
    laws.add_argument('--max-props', type=int)
    laws.add_argument('--format', choices=('json', 'markdown'), default='json')
    laws.set_defaults(handler=handle_laws)

    return parser


def load_config(args: argparse.Namespace) -> ConfigManager:
    """
    Settings from the config modules with flag overrides applied.

    Raises
    ------
    StructuralError
        If a flag value is out of range for its setting
    """
    config = ConfigManager()

    overrides: Dict[str, Tuple[type, Any]] = {
        'DEFAULT_SEED': (int, getattr(args, 'seed', None)),
        'DEFAULT_TRIALS': (int, getattr(args, 'trials', None)),
        'MAX_STATES': (int, getattr(args, 'max_states', None)),
        'MAX_PROPERTIES': (int, getattr(args, 'max_props', None)),
        'MAX_TESTS': (int, getattr(args, 'max_tests', None)),
    }
    try:
        changes = config.load_settings_from_args(overrides)
    except ValueError as e:
        raise StructuralError(f'bad option value: {e}') from e
    logger.debug('config overrides: %s', changes)

    return config


def _error_document(error: str, e: Exception) -> Document:
    payload: Dict[str, Any] = {'error': error, 'message': str(e)}
    location = getattr(e, 'location', '')
    if location:
        payload['location'] = location
    report = getattr(e, 'report', None)
    if report is not None:
        payload['report'] = jsonable(report)
    return Document('report', payload)


def _write(outputs: Sequence[Any]) -> None:
    for output in outputs:
        if isinstance(output, Document):
            sys.stdout.write(canonical_serialize(output).decode('utf-8') + '\n')
        else:
            sys.stdout.write(output)
    sys.stdout.flush()


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command line.

    Parameters
    ----------
    argv : Optional[Sequence[str]]
        Arguments without the program name; sys.argv[1:] when None

    Returns
    -------
    int
        Exit status
    """
    parser = build_parser()

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.verbose)
    handler: Handler = args.handler

    try:
        config = load_config(args)
        status, outputs = handler(config, args)
    except StructuralError as e:
        logger.error('structural error: %s', e)
        _write([_error_document('structural', e)])
        return EXIT_USAGE
    except RefusalError as e:
        logger.warning('refused: %s', e)
        _write([_error_document('refusal', e)])
        return EXIT_FAILURE
    except LawViolationError as e:
        logger.error('law violation: %s', e)
        _write([_error_document('law_violation', e)])
        return EXIT_FAILURE

    _write(outputs)
    return status


def main() -> None:
    sys.exit(cli_main())

