"""
Small hand-built instances shared by the test modules.
"""

# Python Standard Library
import random
from typing import Sequence, Tuple

# Local
from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_closure import close_family
from src.models.model_closure import preimage
from src.models.model_entity import StateTestEntity
from src.models.model_functors import functor_G
from src.models.model_functors import functor_G_morphism
from src.models.model_order import CompleteLattice
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.utils.utils_generate import gen_closure_space










def chain(names: Sequence[str]) -> CompleteLattice:
    """
    Chain lattice with names listed from bottom to top.
    """
    leq = [(x, y) for i, x in enumerate(names) for y in names[i:]]
    return CompleteLattice(names, leq)


def diamond() -> CompleteLattice:
    """
    0 < x, y < I with x and y incomparable.
    """
    leq = [('0', '0'), ('x', 'x'), ('y', 'y'), ('I', 'I'), ('0', 'x'), ('0', 'y'), ('0', 'I'), ('x', 'I'), ('y', 'I')]
    return CompleteLattice(['0', 'x', 'y', 'I'], leq)


def two_state_system() -> StatePropertySystem:
    """
    States p, q over the chain 0 < a < I with ξ(p) = {a, I}, ξ(q) = {I}.
    """
    return StatePropertySystem(['p', 'q'], chain(['0', 'a', 'I']), {'p': ['a', 'I'], 'q': ['I']})


def two_state_entity() -> StateTestEntity:
    """
    Unit τ, zero δ and a test α certain only in p.
    """
    return StateTestEntity(['p', 'q'], ['τ', 'δ', 'α'], {'p': ['τ', 'α'], 'q': ['τ']})


def sierpinski() -> ClosureSpace:
    return ClosureSpace(['p', 'q'], [[], ['p'], ['p', 'q']])


def indiscrete(points: Sequence[str] = ('p', 'q')) -> ClosureSpace:
    return ClosureSpace(points, [[], list(points)])


def discrete_pair() -> ClosureSpace:
    return ClosureSpace(['p', 'q'], [[], ['p'], ['q'], ['p', 'q']])


def legs_into(rng: random.Random, first: ClosureSpace, second: ClosureSpace, max_points: int = 2) -> Tuple[SPMorphism, SPMorphism]:
    """
    Morphisms G(m1): G(Q) -> G(first) and G(m2): G(Q) -> G(second) out of a
    common random source closure space Q.
    """
    points = [f'u{i}' for i in range(rng.randint(1, max_points))]
    graphs = [{x: rng.choice(space.points) for x in points} for space in (first, second)]

    pulled = []
    for space, graph in zip((first, second), graphs):
        trial_map = PointMap(ClosureSpace(points, [points, []]), space, graph)
        pulled.extend(sorted(preimage(trial_map, closed)) for closed in space.closed_sets)
    source = close_family(points, pulled)

    return (
        functor_G_morphism(PointMap(source, first, graphs[0])),
        functor_G_morphism(PointMap(source, second, graphs[1])),
    )


def tiny_factor(rng: random.Random, prefix: str) -> Tuple[ClosureSpace, StatePropertySystem]:
    """
    A closure space on at most two points with at most three closed sets,
    and its state property system.
    """
    space = gen_closure_space(rng, 2, 3, prefix=prefix)
    return space, functor_G(space)
