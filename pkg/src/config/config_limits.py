"""
Exhaustive Checks: Subset Enumeration
===========================================================================

Controls when subset families are enumerated exhaustively.

Parameters
----------
SUBSET_EXHAUSTIVE_LIMIT : int
    Carrier size up to which meet/join preservation and meet-closure of
    actual-property sets are checked over every subset. Larger carriers
    are checked over pairs plus the empty family, which suffices for
    finite lattices.
    Default: 12

ORACLE_LIMIT : int
    Carrier size up to which exponential oracles (every subset has an
    infimum, every family of tests has a product) may be run.
    Default: 10
"""
SUBSET_EXHAUSTIVE_LIMIT=12
ORACLE_LIMIT=10





"""
Universal Property: Exhaustive Enumeration Bounds
===========================================================================

Bounds for verify_universal_property, which enumerates every pair of maps
(m, n) from the test object Q into the product.

Parameters
----------
UNIVERSAL_MAX_SOURCE_STATES : int
    Largest number of states of Q accepted.
    Default: 3
UNIVERSAL_MAX_SOURCE_PROPERTIES : int
    Largest property lattice of Q accepted.
    Default: 5
UNIVERSAL_MAX_CANDIDATES : int
    Largest number of candidate pairs |Σ_P|^|Σ_Q| * |L_Q|^|L_P| accepted.
    Default: 250000
"""
UNIVERSAL_MAX_SOURCE_STATES=3
UNIVERSAL_MAX_SOURCE_PROPERTIES=5
UNIVERSAL_MAX_CANDIDATES=250000
