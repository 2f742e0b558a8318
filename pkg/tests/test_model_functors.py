import random

import hypothesis
import hypothesis.strategies as strat
import pytest

from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_closure import compose_point_maps
from src.models.model_closure import identity_point_map
from src.models.model_functors import BCLMorphism
from src.models.model_functors import BasedCompleteLattice
from src.models.model_functors import check_bcl_morphism
from src.models.model_functors import compose_bcl_morphisms
from src.models.model_functors import counit_epsilon
from src.models.model_functors import functor_F
from src.models.model_functors import functor_F_morphism
from src.models.model_functors import functor_G
from src.models.model_functors import functor_G_morphism
from src.models.model_functors import functor_H
from src.models.model_functors import functor_H_morphism
from src.models.model_functors import functor_K
from src.models.model_functors import functor_K_morphism
from src.models.model_functors import identity_bcl_morphism
from src.models.model_functors import unit_eta
from src.models.model_functors import validate_bcl
from src.models.model_order import MonotoneMap
from src.models.model_spsys import check_morphism
from src.models.model_spsys import compose_morphisms
from src.models.model_spsys import dedupe_states
from src.models.model_spsys import duplicate_state
from src.models.model_spsys import identity_morphism
from src.models.model_spsys import validate_sps
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_generate import gen_bcl
from src.utils.utils_generate import gen_composable_morphisms
from src.utils.utils_generate import gen_sp_morphism
from src.utils.utils_generate import gen_sps
from src.utils.utils_serialize import to_bytes
from tests.builders import chain


seeds = strat.integers(min_value=0, max_value=2 ** 32)


def test_F_of_two_state_system_is_sierpinski(system, sierpinski):
    assert functor_F(system) == sierpinski


def test_G_of_sierpinski(sierpinski):
    result = functor_G(sierpinski)
    assert validate_sps(result).ok
    assert result.lattice.elements == ('{p,q}', '{p}', '{}')
    assert result.xi == {'p': frozenset({'{p}', '{p,q}'}), 'q': frozenset({'{p,q}'})}


def test_G_rejects_reserved_characters():
    with pytest.raises(StructuralError, match='reserved'):
        functor_G(ClosureSpace(['a,b'], [[], ['a,b']]))


def test_G_refuses_discontinuous_maps(sierpinski):
    swap = PointMap(sierpinski, sierpinski, {'p': 'q', 'q': 'p'})
    with pytest.raises(RefusalError, match='not continuous'):
        functor_G_morphism(swap)


def test_counit_of_two_state_system(system):
    epsilon = counit_epsilon(system)
    assert epsilon.m == {'p': 'p', 'q': 'q'}
    assert epsilon.n == {'0': '{}', 'a': '{p}', 'I': '{p,q}'}
    assert check_morphism(epsilon).ok


def test_H_of_two_state_system(system):
    bcl = functor_H(system)
    assert bcl.base == ('I', 'a')
    assert validate_bcl(bcl).ok


def test_K_of_H(system):
    k = functor_K(functor_H(system))
    assert k.xi == {'a': frozenset({'a', 'I'}), 'I': frozenset({'I'})}


def test_unit_of_two_state_system(system):
    eta = unit_eta(system)
    assert eta.m == {'p': 'a', 'q': 'I'}
    assert check_morphism(eta).ok


def test_unit_refuses_duplicated_states(system):
    enlarged, _ = duplicate_state(system, 'p', 'p2')
    with pytest.raises(RefusalError, match='not state-determined'):
        unit_eta(enlarged)


def test_zero_in_base_is_reported(chain3):
    assert 'zero_in_base' in validate_bcl(BasedCompleteLattice(chain3, ['0', 'a', 'I'])).clauses()


def test_base_must_generate_the_order(chain3):
    report = validate_bcl(BasedCompleteLattice(chain3, ['I']))
    assert report.clauses() == ['order_generating']
    assert report.first().witness == 'a'


def test_base_outside_the_lattice_is_structural(chain3):
    with pytest.raises(StructuralError, match='unknown lattice elements'):
        BasedCompleteLattice(chain3, ['z'])


def test_bcl_morphism_must_preserve_the_base(chain3, chain2):
    source = BasedCompleteLattice(chain3, ['a', 'I'])
    target = BasedCompleteLattice(chain2, ['I'])
    collapse = BCLMorphism(source, target, MonotoneMap(chain3, chain2, {'0': '0', 'a': '0', 'I': 'I'}))
    report = check_bcl_morphism(collapse)
    assert report.clauses() == ['base_preservation']
    assert report.first().witness == 'a'


def test_K_refuses_maps_without_upper_adjoint(chain3, chain2):
    source = BasedCompleteLattice(chain2, ['I'])
    target = BasedCompleteLattice(chain3, ['a', 'I'])
    constant = BCLMorphism(source, target, MonotoneMap(chain2, chain3, {'0': 'a', 'I': 'a'}))
    assert 'join_preservation' in check_bcl_morphism(constant).clauses()
    with pytest.raises(RefusalError, match='does not preserve joins'):
        functor_K_morphism(constant)


def test_bcl_morphism_carriers_are_checked(chain3, chain2):
    bcl = BasedCompleteLattice(chain3, ['a', 'I'])
    with pytest.raises(StructuralError, match='carriers'):
        BCLMorphism(bcl, bcl, MonotoneMap(chain2, chain2, {'0': '0', 'I': 'I'}))


def test_identity_functors_on_a_chain_system():
    system = functor_K(BasedCompleteLattice(chain(['0', 'a', 'b', 'I']), ['a', 'b', 'I']))
    assert validate_sps(system).ok
    assert functor_H_morphism(identity_morphism(system)) == identity_bcl_morphism(functor_H(system))


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_FG_is_the_identity_on_closure_spaces(seed):
    first, _ = gen_composable_morphisms(random.Random(seed), 5, 16)
    assert to_bytes(functor_F(functor_G(first.source))) == to_bytes(first.source)
    assert functor_F_morphism(functor_G_morphism(first)) == first


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=50, deadline=None)
def test_G_preserves_identity_and_composition(seed):
    first, second = gen_composable_morphisms(random.Random(seed), 4, 10)
    space = first.source
    assert functor_G_morphism(identity_point_map(space)) == identity_morphism(functor_G(space))
    assert functor_G_morphism(compose_point_maps(first, second)) == compose_morphisms(
        functor_G_morphism(first), functor_G_morphism(second)
    )


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_counit_is_a_natural_isomorphism(seed):
    f = gen_sp_morphism(random.Random(seed), 5, 12)
    gf = functor_G_morphism(functor_F_morphism(f))
    assert compose_morphisms(gf, counit_epsilon(f.target)) == compose_morphisms(counit_epsilon(f.source), f)


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_HK_is_the_identity_on_based_lattices(seed):
    bcl = gen_bcl(random.Random(seed), 5, 10)
    assert validate_bcl(bcl).ok
    assert to_bytes(functor_H(functor_K(bcl))) == to_bytes(bcl)


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=50, deadline=None)
def test_H_and_K_morphisms_round_trip(seed):
    f = gen_sp_morphism(random.Random(seed), 4, 10)
    h = functor_H_morphism(f)
    assert check_bcl_morphism(h).ok
    k = functor_K_morphism(h)
    assert check_morphism(k).ok
    assert functor_H_morphism(k) == h


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=50, deadline=None)
def test_H_preserves_composition(seed):
    first, second = gen_composable_morphisms(random.Random(seed), 4, 10)
    g1, g2 = functor_G_morphism(first), functor_G_morphism(second)
    assert functor_H_morphism(compose_morphisms(g1, g2)) == compose_bcl_morphisms(functor_H_morphism(g1), functor_H_morphism(g2))


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=80, deadline=None)
def test_unit_is_an_isomorphism_on_state_determined_systems(seed):
    system = dedupe_states(gen_sps(random.Random(seed), 5, 12))
    eta = unit_eta(system)
    assert check_morphism(eta).ok
