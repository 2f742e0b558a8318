"""
Settings for one spcls run

Defaults come from the UPPERCASE constants of the config_*.py modules;
command-line flags may override numeric settings for the current run.
"""

# Python Standard Library
from typing import Dict, Any, Optional, Tuple
import importlib
import logging










logger = logging.getLogger(__name__)

CONFIG_MODULES = (
    'src.config.config_limits',
    'src.config.config_generator',
    'src.config.config_paths',
)

Change = Dict[str, Any]


def _coerce(raw: Any, kind: type) -> Optional[Any]:
    """
    Coerce a raw flag value to the setting's type.

    Returns
    -------
    Optional[Any]
        The coerced value, or None when the value cannot be read as `kind`.
    """
    if isinstance(raw, bool):
        return None

    if kind in (int, float):
        try:
            return kind(raw)
        except (TypeError, ValueError):
            return None

    return raw if isinstance(raw, kind) else None


def _acceptable(value: Any) -> bool:
    """Booleans and negative numbers are never valid settings."""
    if isinstance(value, bool):
        return False
    return not (isinstance(value, (int, float)) and value < 0)


class ConfigManager:
    """
    Run settings for spcls.

    Attributes
    ----------
        config : Dict[str, Any]
            Current settings: the oracle and enumeration bounds
            (SUBSET_EXHAUSTIVE_LIMIT, ORACLE_LIMIT, UNIVERSAL_MAX_*), the
            generator bounds and defaults (DEFAULT_SEED, DEFAULT_TRIALS,
            MAX_*, DUPLICATE_STATE_RATE) and TEMPLATES_DIR.

    Public Methods
    --------------
        get(key) -> Optional[Any]
        get_all() -> Dict[str, Any]
        update(key, value) -> bool
        load_settings_from_args(config_vars) -> Dict[str, Dict[str, Any]]
    """
    def __init__(self):
        self.config: Dict[str, Any] = {}

        for module_name in CONFIG_MODULES:
            self._absorb(module_name)


    def _absorb(self, module_name: str) -> None:
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            logger.error('Cannot import settings module %s: %s', module_name, e)
            return

        for name, value in vars(module).items():
            if not name.isupper():
                continue
            if _acceptable(value):
                self.config[name] = value
            else:
                logger.warning('Ignoring setting %s=%r from %s', name, value, module_name)


    def _assign(self, key: str, raw: Any) -> Optional[Change]:
        """
        Coerce `raw` to the type of the current setting and store it.

        Returns
        -------
        Optional[Change]
            {'old_value', 'new_value'} when the setting changed, else None.

        Raises
        ------
        ValueError
            If `raw` is not a valid value for the setting; the setting is
            left unchanged
        """
        old = self.config[key]
        new = _coerce(raw, type(old))

        if new is None or not _acceptable(new):
            raise ValueError(f'{key}: {raw!r} is not a nonnegative {type(old).__name__}')

        if new == old:
            return None

        self.config[key] = new
        logger.debug('Setting %s: %r -> %r', key, old, new)
        return {'old_value': old, 'new_value': new}


    def load_settings_from_args(self, config_vars: Dict[str, Tuple[type, Any]]) -> Dict[str, Change]:
        """
        Apply command-line overrides.

        Parameters
        ----------
        config_vars : Dict[str, Tuple[type, Any]]
            Setting name to (type, flag value); flags left unset are None
            and leave the setting alone.

        Returns
        -------
        Dict[str, Change]
            The settings that changed.

        Raises
        ------
        ValueError
            On the first override that is not a valid value for its setting
        """
        changes = {}

        for key, (kind, raw) in config_vars.items():
            if raw is None:
                continue

            if key not in self.config:
                value = _coerce(raw, kind)
                if value is None or not _acceptable(value):
                    raise ValueError(f'{key}: {raw!r} is not a nonnegative {kind.__name__}')
                self.config[key] = value
                continue

            change = self._assign(key, raw)
            if change:
                changes[key] = change

        return changes


    def get(self, key: str) -> Optional[Any]:
        return self.config.get(key)


    def get_all(self) -> Dict[str, Any]:
        return dict(self.config)


    def update(self, key: str, value: Any) -> bool:
        """
        Set one known setting; True when its value changed.
        """
        if key not in self.config:
            logger.error('Unknown setting %s', key)
            return False

        try:
            return self._assign(key, value) is not None
        except ValueError as e:
            logger.error('Rejected update: %s', e)
            return False
