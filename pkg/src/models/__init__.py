"""
Models Module

This module holds the domain logic of the application: finite orders and
lattices, closure spaces, state property systems and their morphisms, state
test entities, Galois adjoints, the functors F, G, H and K, and products.
Every function here is pure; models never read files or print.

Components
----------
Classes:
    CompleteLattice, MonotoneMap:
        Finite lattices and maps between them
    ClosureSpace, PointMap:
        Closure spaces and point maps
    StatePropertySystem, SPMorphism:
        State property systems and their morphisms
    StateTestEntity:
        Operational (Σ, Q, η) data
    BasedCompleteLattice, BCLMorphism:
        Lattices with an order-generating base
    ProductWitness:
        A product with its projections

The law harness lives in model_laws and is imported directly, since it
depends on the generators in src.utils.
"""

from .model_order import CompleteLattice
from .model_order import MonotoneMap
from .model_closure import ClosureSpace
from .model_closure import PointMap
from .model_spsys import StatePropertySystem
from .model_spsys import SPMorphism
from .model_entity import StateTestEntity
from .model_functors import BasedCompleteLattice
from .model_functors import BCLMorphism
from .model_product import ProductWitness


__all__ = [
    'CompleteLattice',
    'MonotoneMap',
    'ClosureSpace',
    'PointMap',
    'StatePropertySystem',
    'SPMorphism',
    'StateTestEntity',
    'BasedCompleteLattice',
    'BCLMorphism',
    'ProductWitness'
]
