"""
Seeded Instance Generators

Random instances for the CLI `gen` verb and the law harness. Every
generator takes a `random.Random`, so a run is fixed by its seed string:
`random.Random(f'{seed}:{trial}')` uses Mersenne Twister (MT19937) seeded
through SHA-512 of the string, which is stable across platforms.

Every generated instance passes its validator.

Functions:
    Public:
        trial_rng: Generator state for one trial
        gen_closure_space, gen_point_map_into, gen_continuous_map
        gen_sps, gen_sp_morphism, gen_composable_morphisms
        gen_entity, gen_lattice, gen_monotone_map, gen_bcl
        generate: GeneratorConfig -> Document
"""

# Python Standard Library
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

# Local
from src.config import DEFAULT_SEED
from src.config import DUPLICATE_STATE_RATE
from src.config import MAX_CLOSED_SETS
from src.config import MAX_PROPERTIES
from src.config import MAX_STATES
from src.config import MAX_TESTS
from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_closure import close_family
from src.models.model_closure import preimage
from src.models.model_entity import StateTestEntity
from src.models.model_functors import BasedCompleteLattice
from src.models.model_functors import functor_G
from src.models.model_functors import functor_G_morphism
from src.models.model_functors import functor_H
from src.models.model_order import CompleteLattice
from src.models.model_order import ElementId
from src.models.model_order import MonotoneMap
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import compose_morphisms
from src.models.model_spsys import dedupe_states
from src.models.model_spsys import duplicate_state
from src.models.model_spsys import inverse_morphism
from src.models.model_spsys import relabel_system
from src.utils.utils_errors import StructuralError
from src.utils.utils_serialize import Document
from src.utils.utils_serialize import encode










logger = logging.getLogger(__name__)

GENERATED_KINDS = (
    'closure_space',
    'continuous_map',
    'sps',
    'sp_morphism',
    'entity',
    'lattice',
    'lattice_map',
    'bcl',
)


@dataclass(frozen=True)
class GeneratorConfig:
    """
    What to generate and how big.

    Attributes
    ----------
    kind : str
        One of GENERATED_KINDS
    seed : int
        Unsigned 64-bit seed
    max_states, max_properties, max_tests : int
        Size bounds, each at least 1 (max_tests at least 2)
    """
    kind: str
    seed: int = DEFAULT_SEED
    max_states: int = MAX_STATES
    max_properties: int = MAX_PROPERTIES
    max_tests: int = MAX_TESTS

    def __post_init__(self):
        if self.kind not in GENERATED_KINDS:
            raise StructuralError(f'cannot generate kind {self.kind!r}')
        if not 0 <= self.seed < 2 ** 64:
            raise StructuralError('seed must be an unsigned 64-bit integer')
        if min(self.max_states, self.max_properties) < 1 or self.max_tests < 2:
            raise StructuralError('size bounds must be at least 1 (tests at least 2)')


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f'{seed}:{trial}')


def _points(prefix: str, count: int) -> List[ElementId]:
    return [f'{prefix}{i}' for i in range(count)]


def _random_subset(rng: random.Random, items: List[ElementId]) -> List[ElementId]:
    return [x for x in items if rng.random() < 0.5]


def _grow(rng: random.Random, points: List[ElementId], family: List[List[ElementId]], max_closed: int) -> ClosureSpace:
    """
    Close the family, then add random subsets while the closure stays
    within max_closed sets.
    """
    space = close_family(points, family)
    for _ in range(rng.randint(0, 2 * len(points))):
        candidate = close_family(points, [list(s) for s in space.closed_sets] + [_random_subset(rng, points)])
        if len(candidate.closed_sets) <= max_closed:
            space = candidate

    return space


def gen_closure_space(rng: random.Random, max_points: int = MAX_STATES, max_closed: int = MAX_CLOSED_SETS, prefix: str = 'p') -> ClosureSpace:
    points = _points(prefix, rng.randint(1, max_points))
    return _grow(rng, points, [], max(max_closed, 2))


def gen_point_map_into(rng: random.Random, target: ClosureSpace, max_points: int = MAX_STATES, max_closed: int = MAX_CLOSED_SETS, prefix: str = 'p') -> PointMap:
    """
    Continuous map into `target` from a fresh space: pick the map first,
    then give the source every preimage of a closed set.
    """
    points = _points(prefix, rng.randint(1, max_points))
    graph = {x: rng.choice(target.points) for x in points}
    trial_map = PointMap(ClosureSpace(points, [points, []]), target, graph)
    pulled = [sorted(preimage(trial_map, closed)) for closed in target.closed_sets]
    source = _grow(rng, points, pulled, max(max_closed, len(target.closed_sets)))

    return PointMap(source, target, graph)


def gen_continuous_map(rng: random.Random, max_points: int = MAX_STATES, max_closed: int = MAX_CLOSED_SETS) -> PointMap:
    target = gen_closure_space(rng, max_points, max_closed, prefix='q')
    return gen_point_map_into(rng, target, max_points, max_closed)


def _property_names(system: StatePropertySystem) -> Dict[ElementId, ElementId]:
    lattice = system.lattice
    names = {lattice.bottom: '0', lattice.top: 'I'}
    others = [a for a in lattice.elements if a not in names]
    names.update({a: f'a{i + 1}' for i, a in enumerate(others)})
    return names


def _relabel(system: StatePropertySystem) -> Tuple[StatePropertySystem, SPMorphism]:
    return relabel_system(system, {p: p for p in system.states}, _property_names(system))


def _maybe_duplicate(rng: random.Random, system: StatePropertySystem, rate: float, prefix: str) -> Tuple[StatePropertySystem, Optional[SPMorphism]]:
    if rng.random() >= rate:
        return system, None
    original = rng.choice(system.states)
    return duplicate_state(system, original, f'{prefix}{len(system.states)}')


def gen_sps(rng: random.Random, max_states: int = MAX_STATES, max_properties: int = MAX_PROPERTIES, duplicate_rate: float = DUPLICATE_STATE_RATE) -> StatePropertySystem:
    """
    G of a random closure space with properties renamed to 0, I, a1, ...,
    and with probability duplicate_rate one state duplicated.
    """
    points = max(1, max_states - 1)
    space = gen_closure_space(rng, points, max_properties)
    system, _ = _relabel(functor_G(space))
    if max_states > 1:
        system, _ = _maybe_duplicate(rng, system, duplicate_rate, 'p')

    return system


def _relabel_morphism(f: SPMorphism) -> SPMorphism:
    _, source_iso = _relabel(f.source)
    _, target_iso = _relabel(f.target)
    return compose_morphisms(compose_morphisms(source_iso, f), inverse_morphism(target_iso))


def gen_sp_morphism(rng: random.Random, max_states: int = MAX_STATES, max_properties: int = MAX_PROPERTIES, duplicate_rate: float = DUPLICATE_STATE_RATE) -> SPMorphism:
    """
    G of a random continuous map, renamed, with the source optionally
    enlarged by a duplicated state.
    """
    points = max(1, max_states - 1)
    f = _relabel_morphism(functor_G_morphism(gen_continuous_map(rng, points, max_properties)))
    if max_states > 1:
        _, collapse = _maybe_duplicate(rng, f.source, duplicate_rate, 'p')
        if collapse is not None:
            f = compose_morphisms(collapse, f)

    return f


def gen_composable_morphisms(rng: random.Random, max_states: int = MAX_STATES, max_properties: int = MAX_PROPERTIES) -> Tuple[PointMap, PointMap]:
    """
    Continuous maps C1 -> C2 -> C3.
    """
    third = gen_closure_space(rng, max_states, max_properties, prefix='r')
    second = gen_point_map_into(rng, third, max_states, max_properties, prefix='q')
    first = gen_point_map_into(rng, second.source, max_states, max_properties, prefix='p')

    return first, second


def _close_truesets(states: List[ElementId], truesets: List[frozenset]) -> List[frozenset]:
    closed = set(truesets) | {frozenset(states), frozenset()}
    pending = list(closed)
    while pending:
        current = pending.pop()
        for other in list(closed):
            meet = current & other
            if meet not in closed:
                closed.add(meet)
                pending.append(meet)

    return sorted(closed, key=lambda s: (len(s), sorted(s)))


def gen_entity(rng: random.Random, max_states: int = MAX_STATES, max_tests: int = MAX_TESTS) -> StateTestEntity:
    """
    Random η over random tests, repaired into a unital product entity by
    adding unit, zero and missing intersection tests.

    When the repair needs more than max_tests tests the draw is retried
    with fewer random tests; with none the entity has only a unit and a
    zero test. Spare room may hold a test equivalent to an existing one.
    """
    states = _points('s', rng.randint(1, max_states))
    for count in range(rng.randint(0, max_tests), -1, -1):
        truesets = [frozenset(_random_subset(rng, states)) for _ in range(count)]
        closed = _close_truesets(states, truesets)
        if len(closed) <= max_tests:
            break

    tests = {f't{i}': trueset for i, trueset in enumerate(closed)}
    if len(tests) < max_tests and rng.random() < 0.5:
        tests[f't{len(tests)}'] = tests[rng.choice(sorted(tests))]

    eta = {p: [t for t, trueset in tests.items() if p in trueset] for p in states}
    return StateTestEntity(states, list(tests), eta)


def gen_lattice(rng: random.Random, max_elements: int = MAX_PROPERTIES) -> CompleteLattice:
    """
    Lattice of closed sets of a random closure space, renamed.
    """
    space = gen_closure_space(rng, max(1, min(MAX_STATES, max_elements)), max(2, max_elements))
    system, _ = _relabel(functor_G(space))

    return system.lattice


def gen_monotone_map(rng: random.Random, source: CompleteLattice, target: CompleteLattice) -> MonotoneMap:
    """
    Assign elements in order of increasing ideal size, each to a random
    element above the images of everything below it.
    """
    order = sorted(source.elements, key=lambda x: (len(source.downset(x)), x))
    graph: Dict[ElementId, ElementId] = {}
    for x in order:
        below = [graph[y] for y in source.downset(x) if y != x]
        choices = [c for c in target.elements if all(target.le(b, c) for b in below)]
        graph[x] = rng.choice(choices)

    return MonotoneMap(source, target, graph)


def gen_bcl(rng: random.Random, max_states: int = MAX_STATES, max_properties: int = MAX_PROPERTIES) -> BasedCompleteLattice:
    return functor_H(dedupe_states(gen_sps(rng, max_states, max_properties)))


def generate(config: GeneratorConfig) -> Document:
    """
    One instance of the configured kind as a document.
    """
    rng = random.Random(str(config.seed))
    kind = config.kind
    logger.debug('generating %s with seed %d', kind, config.seed)

    if kind == 'closure_space':
        obj = gen_closure_space(rng, config.max_states, config.max_properties)
    elif kind == 'continuous_map':
        obj = gen_continuous_map(rng, config.max_states, config.max_properties)
    elif kind == 'sps':
        obj = gen_sps(rng, config.max_states, config.max_properties)
    elif kind == 'sp_morphism':
        obj = gen_sp_morphism(rng, config.max_states, config.max_properties)
    elif kind == 'entity':
        obj = gen_entity(rng, config.max_states, config.max_tests)
    elif kind == 'lattice':
        obj = gen_lattice(rng, config.max_properties)
    elif kind == 'lattice_map':
        source = gen_lattice(rng, config.max_properties)
        target = gen_lattice(rng, config.max_properties)
        obj = gen_monotone_map(rng, source, target)
    else:
        obj = gen_bcl(rng, config.max_states, config.max_properties)

    return encode(obj)
