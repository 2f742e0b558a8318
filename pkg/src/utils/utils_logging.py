"""
Logging setup for the command line.

Reports go to standard output as JSON, so log records are sent to standard
error only.
"""

# Python Standard Library
import logging
import sys










LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'


def setup_logging(verbose: bool = False) -> None:
    """
    Configure the root logger for a CLI invocation.

    Parameters
    ----------
    verbose : bool
        DEBUG level when True, WARNING otherwise
    """
    level = logging.DEBUG if verbose else logging.WARNING

    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(level)
