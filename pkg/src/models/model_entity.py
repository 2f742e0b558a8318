"""
State Test Entities

Raw operational data (Σ, Q, η): states, yes/no tests, and for each state the
tests that are certain to answer yes. Everything here is computed from the
trueset index trueset(α) = {p : α ∈ η(p)}.

A unital product entity compiles to a state property system whose lattice
is Q modulo equal truesets, ordered by trueset inclusion. Classes are named
by their lexicographically least test.

Functions:
    Public:
        test_implication, state_implication: The two implication preorders
        test_preorder, entity_state_preorder: The same as FinitePreorders
        find_product_test: A test whose trueset is the intersection
        find_supremum_test: Product of the common upper bounds
        classify_unit_zero: Always-true and never-true tests
        is_unital_product_entity: Unit, zero and pairwise products
        all_products_realized: Exponential oracle over every family
        equivalence_classes: Q/≈ keyed by trueset
        compile_to_sps: Entity -> state property system + quotient
        is_state_determined_entity: η injective
"""

# Python Standard Library
import logging
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple

# Local
from src.models.model_order import ElementId
from src.models.model_order import FinitePreorder
from src.models.model_order import check_element_ids
from src.models.model_order import check_id_collection
from src.models.model_order import lattice_from_order
from src.models.model_spsys import StatePropertySystem
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import Verdict










logger = logging.getLogger(__name__)


class StateTestEntity:
    """
    A state test entity (Σ, Q, η).

    Attributes
    ----------
        states : Tuple[ElementId, ...]
            Sorted states Σ
        tests : Tuple[ElementId, ...]
            Sorted tests Q
        eta : Dict[ElementId, FrozenSet[ElementId]]
            Tests certain to answer yes in each state
        truesets : Dict[ElementId, FrozenSet[ElementId]]
            States in which each test is certain
    """
    def __init__(self, states: Iterable[ElementId], tests: Iterable[ElementId], eta: Mapping[ElementId, Iterable[ElementId]], location: str = ''):
        self.states = check_element_ids(states, f'{location}.states' if location else 'states')
        self.tests = check_element_ids(tests, f'{location}.tests' if location else 'tests')
        if not self.states:
            raise StructuralError('state set must be nonempty', location)

        missing = [p for p in self.states if p not in eta]
        if missing:
            raise StructuralError(f'η is not total, missing states {missing}', location)
        extra = sorted(p for p in eta if p not in self.states)
        if extra:
            raise StructuralError(f'η references unknown states {extra}', location)

        known = frozenset(self.tests)
        self.eta: Dict[ElementId, FrozenSet[ElementId]] = {}
        for p in self.states:
            certain = check_id_collection(eta[p], f'{location}.eta.{p}' if location else f'eta.{p}')
            unknown = sorted(t for t in certain if t not in known)
            if unknown:
                raise StructuralError(f'η({p}) references unknown tests {unknown}', location)
            self.eta[p] = certain

        truesets: Dict[ElementId, set] = {t: set() for t in self.tests}
        for p, certain in self.eta.items():
            for t in certain:
                truesets[t].add(p)
        self.truesets: Dict[ElementId, FrozenSet[ElementId]] = {t: frozenset(s) for t, s in truesets.items()}


    def trueset(self, test: ElementId) -> FrozenSet[ElementId]:
        if test not in self.truesets:
            raise StructuralError(f'unknown test {test!r}')
        return self.truesets[test]


    def certain(self, p: ElementId) -> FrozenSet[ElementId]:
        if p not in self.eta:
            raise StructuralError(f'unknown state {p!r}')
        return self.eta[p]


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StateTestEntity):
            return NotImplemented
        return self.states == other.states and self.tests == other.tests and self.eta == other.eta


    def __hash__(self) -> int:
        return hash((self.states, self.tests, tuple(sorted(self.eta.items()))))


    def __repr__(self) -> str:
        return f'StateTestEntity({list(self.states)}, {list(self.tests)})'


def test_implication(entity: StateTestEntity, alpha: ElementId, beta: ElementId) -> bool:
    """
    α < β iff trueset(α) ⊆ trueset(β).
    """
    return entity.trueset(alpha) <= entity.trueset(beta)


def state_implication(entity: StateTestEntity, p: ElementId, q: ElementId) -> bool:
    """
    p < q iff η(q) ⊆ η(p).
    """
    return entity.certain(q) <= entity.certain(p)


def test_preorder(entity: StateTestEntity) -> FinitePreorder:
    tests = entity.tests
    return FinitePreorder(tests, [(a, b) for a in tests for b in tests if test_implication(entity, a, b)])


def entity_state_preorder(entity: StateTestEntity) -> FinitePreorder:
    states = entity.states
    return FinitePreorder(states, [(p, q) for p in states for q in states if state_implication(entity, p, q)])


def _intersection(entity: StateTestEntity, family: Iterable[ElementId]) -> FrozenSet[ElementId]:
    result = frozenset(entity.states)
    for test in family:
        result = result & entity.trueset(test)
    return result


def _test_with_trueset(entity: StateTestEntity, wanted: FrozenSet[ElementId]) -> Optional[ElementId]:
    for test in entity.tests:
        if entity.truesets[test] == wanted:
            return test
    return None


def find_product_test(entity: StateTestEntity, family: Iterable[ElementId]) -> Optional[ElementId]:
    """
    Least test id whose trueset is ⋂ trueset(α) over the family.

    The empty family asks for an always-true test. Returns None when no
    test realizes the intersection.
    """
    return _test_with_trueset(entity, _intersection(entity, family))


def find_supremum_test(entity: StateTestEntity, family: Iterable[ElementId]) -> Optional[ElementId]:
    """
    Product of every test implied by each member of the family.

    For a unital product entity this is a least upper bound in (Q, <).
    """
    members = list(family)
    for test in members:
        entity.trueset(test)
    union = frozenset().union(*(entity.truesets[t] for t in members)) if members else frozenset()
    upper = [t for t in entity.tests if union <= entity.truesets[t]]

    return find_product_test(entity, upper)


def classify_unit_zero(entity: StateTestEntity) -> Tuple[List[ElementId], List[ElementId]]:
    """
    Returns
    -------
    Tuple[List[ElementId], List[ElementId]]
        (unit tests, zero tests), each sorted
    """
    everything = frozenset(entity.states)
    unit = [t for t in entity.tests if entity.truesets[t] == everything]
    zero = [t for t in entity.tests if not entity.truesets[t]]

    return unit, zero


def is_unital_product_entity(entity: StateTestEntity) -> Verdict:
    """
    Zero test, unit test and a product test for every pair of tests.

    Pairwise closure suffices for every nonempty finite family; the empty
    family is the unit test.

    Returns
    -------
    Verdict
        On failure the message is 'no zero test', 'no unit test' or names
        the first pair {α, β} whose intersection is not a trueset
    """
    unit, zero = classify_unit_zero(entity)
    if not zero:
        return Verdict(False, None, 'no zero test')
    if not unit:
        return Verdict(False, None, 'no unit test')

    realized = set(entity.truesets.values())
    for alpha, beta in combinations(entity.tests, 2):
        if entity.truesets[alpha] & entity.truesets[beta] not in realized:
            return Verdict(False, [alpha, beta], f'no product test for {{{alpha}, {beta}}}')

    return Verdict(True)


def all_products_realized(entity: StateTestEntity) -> bool:
    """
    Exponential oracle: every family of tests, the empty one included, has
    a product test.
    """
    for size in range(len(entity.tests) + 1):
        for family in combinations(entity.tests, size):
            if find_product_test(entity, family) is None:
                return False

    return True


def equivalence_classes(entity: StateTestEntity) -> Dict[ElementId, Tuple[ElementId, ...]]:
    """
    Q/≈ where α ≈ β iff their truesets are equal.

    Returns
    -------
    Dict[ElementId, Tuple[ElementId, ...]]
        Class id (least member) to its sorted members
    """
    by_trueset: Dict[FrozenSet[ElementId], List[ElementId]] = {}
    for test in entity.tests:
        by_trueset.setdefault(entity.truesets[test], []).append(test)

    return {members[0]: tuple(members) for members in by_trueset.values()}


def compile_to_sps(entity: StateTestEntity) -> Tuple[StatePropertySystem, Dict[ElementId, ElementId]]:
    """
    Compile a unital product entity to a state property system.

    Parameters
    ----------
    entity : StateTestEntity
        Must be a unital product entity

    Returns
    -------
    Tuple[StatePropertySystem, Dict[ElementId, ElementId]]
        The system (L = Q/≈ ordered by trueset inclusion, ξ(p) the classes
        of η(p)) and the quotient map from tests to class ids

    Raises
    ------
    RefusalError
        If the entity is not a unital product entity
    """
    verdict = is_unital_product_entity(entity)
    if not verdict:
        raise RefusalError(f'entity is not a unital product entity: {verdict.message}', verdict)

    classes = equivalence_classes(entity)
    quotient = {test: class_id for class_id, members in classes.items() for test in members}
    trueset_of = {class_id: entity.truesets[class_id] for class_id in classes}

    lattice = lattice_from_order(classes, lambda a, b: trueset_of[a] <= trueset_of[b])
    xi = {p: {quotient[t] for t in entity.eta[p]} for p in entity.states}
    logger.debug('compiled entity with %d tests into %d properties', len(entity.tests), len(lattice))

    return StatePropertySystem(entity.states, lattice, xi), quotient


def is_state_determined_entity(entity: StateTestEntity) -> Verdict:
    """
    η injective; witness is a pair of states with equal η.
    """
    seen: Dict[FrozenSet[ElementId], ElementId] = {}
    for p in entity.states:
        if entity.eta[p] in seen:
            return Verdict(False, (seen[entity.eta[p]], p), f'η({seen[entity.eta[p]]}) = η({p})')
        seen[entity.eta[p]] = p

    return Verdict(True)
