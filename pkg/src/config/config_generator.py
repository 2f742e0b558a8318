"""
Generator: Seed and Trial Count
===========================================================================

Parameters
----------
DEFAULT_SEED : int
    Seed used by `gen` and `laws` when --seed is not given. Environment
    variables are never consulted.
    Default: 42
DEFAULT_TRIALS : int
    Number of trials run by `laws` when --trials is not given.
    Default: 100
"""
DEFAULT_SEED=42
DEFAULT_TRIALS=100





"""
Generator: Size Bounds
===========================================================================

Parameters
----------
MAX_STATES : int
    Largest state set (points of closure spaces, states of entities).
    Default: 5
MAX_PROPERTIES : int
    Largest property lattice (closed-set family) of a generated system.
    Default: 12
MAX_TESTS : int
    Largest test set of a generated entity after repair.
    Default: 8
MAX_CLOSED_SETS : int
    Largest closed-set family of a generated closure space.
    Default: 20

Notes:
    The effective bound on generated property lattices is
    min(MAX_PROPERTIES, MAX_CLOSED_SETS).
"""
MAX_STATES=5
MAX_PROPERTIES=12
MAX_TESTS=8
MAX_CLOSED_SETS=20





"""
Generator: Non-state-determined Instances
===========================================================================

Parameters
----------
DUPLICATE_STATE_RATE : float
    Probability that a generated state property system receives a
    duplicated state (same actual properties as an existing one).
    Default: 0.3
"""
DUPLICATE_STATE_RATE=0.3
