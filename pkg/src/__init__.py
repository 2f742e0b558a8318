"""
SPCLS Project
"""

from .app import cli_main
from .app import main


__all__ = ['cli_main', 'main']
