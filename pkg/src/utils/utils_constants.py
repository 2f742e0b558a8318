"""
Global Constants

This module defines constant values used throughout the application.
These values are intended to be immutable and context-independent.

Constants
---------
ZERO_ID : str
    Id of the fresh bottom element added to a product property lattice
PAIR_SEPARATOR : str
    Separator of product state and property ids ("p⊗q")
SET_OPEN, SET_CLOSE, SET_DELIMITER : str
    Characters of set tokens ("{x,y}") naming closed sets as lattice elements
DOCUMENT_KINDS : tuple
    Every document kind understood by the parser
EXIT_OK, EXIT_FAILURE, EXIT_USAGE : int
    CLI exit statuses (valid, law or validation failure, structural or usage error)
"""










ZERO_ID = '0'
PAIR_SEPARATOR = '⊗'
SET_OPEN = '{'
SET_CLOSE = '}'
SET_DELIMITER = ','

DOCUMENT_KINDS = (
    'lattice',
    'closure_space',
    'sps',
    'sp_morphism',
    'entity',
    'bcl',
    'bcl_morphism',
    'lattice_map',
    'continuous_map',
    'witness',
    'report',
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
