"""
Generation and Law Handlers

Functions:
    Public:
        handle_gen: `gen --kind K`, one seeded instance
        handle_laws: `laws`, the category-law harness
"""

# Python Standard Library
import argparse
import logging
from typing import List, Tuple, Union

# Local
from src.config import ConfigManager
from src.models.model_laws import law_harness
from src.utils.utils_constants import EXIT_FAILURE
from src.utils.utils_constants import EXIT_OK
from src.utils.utils_generate import GeneratorConfig
from src.utils.utils_generate import generate
from src.utils.utils_render import render_report
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import report_document










logger = logging.getLogger(__name__)


def handle_gen(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Document]]: # pylint: disable=unused-argument
    generator_config = GeneratorConfig(
        kind=args.kind,
        seed=config.get('DEFAULT_SEED'),
        max_states=config.get('MAX_STATES'),
        max_properties=config.get('MAX_PROPERTIES'),
        max_tests=config.get('MAX_TESTS')
    )

    return EXIT_OK, [generate(generator_config)]


def handle_laws(config: ConfigManager, args: argparse.Namespace) -> Tuple[int, List[Union[Document, str]]]:
    """
    Run the harness with the configured trials, seed and bounds.

    Returns
    -------
    Tuple[int, List[Union[Document, str]]]
        EXIT_FAILURE when any law failed; the report as JSON or markdown
    """
    report = law_harness(
        trials=config.get('DEFAULT_TRIALS'),
        seed=config.get('DEFAULT_SEED'),
        max_states=config.get('MAX_STATES'),
        max_properties=config.get('MAX_PROPERTIES')
    )
    status = EXIT_OK if report.ok else EXIT_FAILURE

    if args.format == 'markdown':
        return status, [render_report(config, report.to_dict())]

    return status, [report_document(report.to_dict())]
