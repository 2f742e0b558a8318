import random

import hypothesis
import hypothesis.strategies as strat
import pytest

from src.models import model_entity
from src.models.model_entity import StateTestEntity
from src.models.model_entity import all_products_realized
from src.models.model_entity import classify_unit_zero
from src.models.model_entity import compile_to_sps
from src.models.model_entity import equivalence_classes
from src.models.model_entity import find_product_test
from src.models.model_entity import find_supremum_test
from src.models.model_entity import is_state_determined_entity
from src.models.model_entity import is_unital_product_entity
from src.models.model_spsys import is_state_determined
from src.models.model_spsys import validate_sps
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_generate import gen_entity


seeds = strat.integers(min_value=0, max_value=2 ** 32)


def test_truesets(entity):
    assert entity.trueset('τ') == frozenset({'p', 'q'})
    assert entity.trueset('δ') == frozenset()
    assert entity.trueset('α') == frozenset({'p'})


def test_unknown_test_in_eta():
    with pytest.raises(StructuralError, match='unknown tests'):
        StateTestEntity(['p'], ['τ'], {'p': ['ω']})


def test_implications(entity):
    assert model_entity.test_implication(entity, 'α', 'τ')
    assert not model_entity.test_implication(entity, 'τ', 'α')
    assert model_entity.state_implication(entity, 'p', 'q')
    assert model_entity.test_preorder(entity).le('δ', 'α')
    assert model_entity.entity_state_preorder(entity).le('p', 'q')


def test_unit_and_zero(entity):
    assert classify_unit_zero(entity) == (['τ'], ['δ'])


def test_product_and_supremum_tests(entity):
    assert find_product_test(entity, ['α', 'τ']) == 'α'
    assert find_product_test(entity, []) == 'τ'
    assert find_supremum_test(entity, ['δ', 'α']) == 'α'
    assert find_supremum_test(entity, []) == 'δ'


def test_two_state_entity_is_unital_product(entity):
    assert is_unital_product_entity(entity)
    assert all_products_realized(entity)


def test_missing_zero_is_named_first():
    entity = StateTestEntity(['p'], ['τ'], {'p': ['τ']})
    verdict = is_unital_product_entity(entity)
    assert verdict.message == 'no zero test'


def test_missing_unit_is_named():
    entity = StateTestEntity(['p', 'q'], ['δ', 'α'], {'p': ['α'], 'q': []})
    assert is_unital_product_entity(entity).message == 'no unit test'


def test_missing_product_is_witnessed():
    entity = StateTestEntity(
        ['p', 'q', 'r'],
        ['τ', 'δ', 'α', 'β'],
        {'p': ['τ', 'α'], 'q': ['τ', 'α', 'β'], 'r': ['τ', 'β']}
    )
    verdict = is_unital_product_entity(entity)
    assert not verdict
    assert verdict.witness == ['α', 'β']
    assert not all_products_realized(entity)


def test_compile_refuses_non_unital_entity():
    entity = StateTestEntity(['p'], ['τ'], {'p': ['τ']})
    with pytest.raises(RefusalError, match='no zero test'):
        compile_to_sps(entity)


def test_compile_two_state_entity(entity):
    system, quotient = compile_to_sps(entity)
    assert validate_sps(system).ok
    assert quotient == {'τ': 'τ', 'δ': 'δ', 'α': 'α'}
    assert system.lattice.top == 'τ'
    assert system.lattice.bottom == 'δ'
    assert system.xi == {'p': frozenset({'τ', 'α'}), 'q': frozenset({'τ'})}


def test_equivalent_tests_share_a_property():
    entity = StateTestEntity(['p', 'q'], ['τ', 'δ', 'α', 'β'], {'p': ['τ', 'α', 'β'], 'q': ['τ']})
    assert equivalence_classes(entity) == {'δ': ('δ',), 'α': ('α', 'β'), 'τ': ('τ',)}
    system, quotient = compile_to_sps(entity)
    assert quotient['β'] == 'α'
    assert len(system.lattice) == 3


def test_state_determined_entity(entity):
    assert is_state_determined_entity(entity)
    twin = StateTestEntity(['p', 'q'], ['τ', 'δ'], {'p': ['τ'], 'q': ['τ']})
    verdict = is_state_determined_entity(twin)
    assert verdict.witness == ('p', 'q')


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_generated_entities_are_unital_product_entities(seed):
    entity = gen_entity(random.Random(seed), 5, 8)
    assert len(entity.tests) <= 8
    assert is_unital_product_entity(entity)
    assert all_products_realized(entity)


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_compiled_meets_are_product_tests(seed):
    rng = random.Random(seed)
    entity = gen_entity(rng, 5, 8)
    system, quotient = compile_to_sps(entity)
    assert validate_sps(system).ok

    family = [t for t in entity.tests if rng.random() < 0.5]
    product = find_product_test(entity, family)
    assert quotient[product] == system.lattice.meet({quotient[t] for t in family})


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_injective_eta_iff_compiled_system_is_state_determined(seed):
    entity = gen_entity(random.Random(seed), 5, 8)
    system, _ = compile_to_sps(entity)
    assert bool(is_state_determined_entity(entity)) == bool(is_state_determined(system))
