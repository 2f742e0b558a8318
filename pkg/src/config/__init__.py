"""
Configuration Module

This module centralizes configuration management for the application, providing
access to exhaustive-check thresholds, generator defaults and paths. It serves
as a single entry point for all configuration needs across the application.

Components
----------
ConfigManager : class
    A class responsible for managing dictionary-based configuration settings
    and providing controlled access to configuration values.

Configuration Variables:
    Exhaustive Check Settings:
        SUBSET_EXHAUSTIVE_LIMIT : int
            Carrier size up to which every subset is enumerated
        ORACLE_LIMIT : int
            Carrier size up to which exponential oracles run
        UNIVERSAL_MAX_SOURCE_STATES : int
            Universal-property check bound on the states of Q
        UNIVERSAL_MAX_SOURCE_PROPERTIES : int
            Universal-property check bound on the properties of Q
        UNIVERSAL_MAX_CANDIDATES : int
            Universal-property check bound on enumerated candidates

    Generator Settings:
        DEFAULT_SEED : int
            Seed used when none is given
        DEFAULT_TRIALS : int
            Law harness trial count
        MAX_STATES, MAX_PROPERTIES, MAX_TESTS, MAX_CLOSED_SETS : int
            Size bounds of generated instances
        DUPLICATE_STATE_RATE : float
            Probability of generating a non-state-determined system

    Path Settings:
        TEMPLATES_DIR : str
            Directory path for Jinja2 templates

This module consolidates imports from various configuration submodules to
provide a streamlined interface for accessing all configuration components.
"""

from .config_manager import ConfigManager
from .config_limits import SUBSET_EXHAUSTIVE_LIMIT
from .config_limits import ORACLE_LIMIT
from .config_limits import UNIVERSAL_MAX_SOURCE_STATES
from .config_limits import UNIVERSAL_MAX_SOURCE_PROPERTIES
from .config_limits import UNIVERSAL_MAX_CANDIDATES
from .config_generator import DEFAULT_SEED
from .config_generator import DEFAULT_TRIALS
from .config_generator import MAX_STATES
from .config_generator import MAX_PROPERTIES
from .config_generator import MAX_TESTS
from .config_generator import MAX_CLOSED_SETS
from .config_generator import DUPLICATE_STATE_RATE
from .config_paths import TEMPLATES_DIR


__all__ = [
    'ConfigManager',
    'SUBSET_EXHAUSTIVE_LIMIT',
    'ORACLE_LIMIT',
    'UNIVERSAL_MAX_SOURCE_STATES',
    'UNIVERSAL_MAX_SOURCE_PROPERTIES',
    'UNIVERSAL_MAX_CANDIDATES',
    'DEFAULT_SEED',
    'DEFAULT_TRIALS',
    'MAX_STATES',
    'MAX_PROPERTIES',
    'MAX_TESTS',
    'MAX_CLOSED_SETS',
    'DUPLICATE_STATE_RATE',
    'TEMPLATES_DIR'
]
