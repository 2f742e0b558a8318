"""
Entry point for `python -m src`.
"""

from .app import main


main()
