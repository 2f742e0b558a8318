"""
Seeded batteries over many generated instances: the functor round trips,
the unit and counit, state determination, adjoints, entity compilation,
the product's universal property, and sensitivity of the validators to
single corruptions.
"""

import itertools

import pytest

from src.models.model_closure import ClosureSpace
from src.models.model_closure import validate_closure_space
from src.models.model_entity import compile_to_sps
from src.models.model_entity import find_product_test
from src.models.model_entity import is_state_determined_entity
from src.models.model_entity import is_unital_product_entity
from src.models.model_functors import counit_epsilon
from src.models.model_functors import functor_F
from src.models.model_functors import functor_F_morphism
from src.models.model_functors import functor_G
from src.models.model_functors import functor_G_morphism
from src.models.model_functors import functor_H
from src.models.model_functors import functor_H_morphism
from src.models.model_functors import functor_K
from src.models.model_functors import functor_K_morphism
from src.models.model_functors import unit_eta
from src.models.model_galois import lower_adjoint
from src.models.model_galois import upper_adjoint
from src.models.model_order import CompleteLattice
from src.models.model_order import compose_maps
from src.models.model_order import preserves_joins
from src.models.model_order import preserves_meets
from src.models.model_order import validate_lattice
from src.models.model_product import mediating_morphism
from src.models.model_product import sp_product
from src.models.model_product import verify_universal_property
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import check_morphism
from src.models.model_spsys import compose_morphisms
from src.models.model_spsys import dedupe_states
from src.models.model_spsys import duplicate_state
from src.models.model_spsys import identity_morphism
from src.models.model_spsys import is_isomorphism
from src.models.model_spsys import is_state_determined
from src.models.model_spsys import state_determination_checks
from src.models.model_spsys import validate_sps
from src.utils.utils_generate import gen_bcl
from src.utils.utils_generate import gen_closure_space
from src.utils.utils_generate import gen_composable_morphisms
from src.utils.utils_generate import gen_continuous_map
from src.utils.utils_generate import gen_entity
from src.utils.utils_generate import gen_lattice
from src.utils.utils_generate import gen_monotone_map
from src.utils.utils_generate import gen_sp_morphism
from src.utils.utils_generate import gen_sps
from src.utils.utils_generate import trial_rng
from src.utils.utils_serialize import to_bytes
from tests.builders import diamond
from tests.builders import legs_into
from tests.builders import tiny_factor
from tests.builders import two_state_system


SEED = 20240601


def rngs(count):
    return (trial_rng(SEED, i) for i in range(count))


def test_FG_is_the_identity_on_spaces_and_maps():
    for rng in rngs(500):
        space = gen_closure_space(rng, 6, 20)
        assert to_bytes(functor_F(functor_G(space))) == to_bytes(space)

    for rng in rngs(200):
        m = gen_continuous_map(rng, 6, 20)
        assert functor_F_morphism(functor_G_morphism(m)) == m


def test_counit_is_a_natural_isomorphism():
    for rng in rngs(500):
        epsilon = counit_epsilon(gen_sps(rng, 6, 12))
        assert check_morphism(epsilon).ok
        assert is_isomorphism(epsilon)

    for rng in rngs(200):
        f = gen_sp_morphism(rng, 6, 12)
        gf = functor_G_morphism(functor_F_morphism(f))
        assert compose_morphisms(gf, counit_epsilon(f.target)) == compose_morphisms(counit_epsilon(f.source), f)


def test_state_determination_checks_agree():
    outcomes = set()
    for i, rng in enumerate(rngs(500)):
        system = gen_sps(rng, 6, 12, duplicate_rate=0.5 if i % 2 else 0.0)
        verdicts = {verdict.holds for verdict in state_determination_checks(system).values()}
        assert len(verdicts) == 1, i
        outcomes |= verdicts

    assert outcomes == {True, False}


def test_adjoints_of_random_lattice_maps():
    for rng in rngs(300):
        f = gen_monotone_map(rng, gen_lattice(rng, 8), gen_lattice(rng, 8))

        lower = lower_adjoint(f)
        assert (lower is not None) == bool(preserves_meets(f))
        if lower is not None:
            assert upper_adjoint(lower) == f

        upper = upper_adjoint(f)
        assert (upper is not None) == bool(preserves_joins(f))
        if upper is not None:
            assert lower_adjoint(upper) == f


def test_lower_adjoint_reverses_composition():
    for rng in rngs(100):
        g1, g2 = gen_composable_morphisms(rng, 4, 8)
        first, second = functor_G_morphism(g1).n_map, functor_G_morphism(g2).n_map
        composite = compose_maps(second, first)
        assert lower_adjoint(composite) == compose_maps(lower_adjoint(first), lower_adjoint(second))


def test_HK_is_the_identity_on_based_lattices():
    for rng in rngs(300):
        bcl = gen_bcl(rng, 6, 10)
        assert to_bytes(functor_H(functor_K(bcl))) == to_bytes(bcl)


def test_unit_is_a_natural_isomorphism_on_state_determined_systems():
    for rng in rngs(300):
        system = dedupe_states(gen_sps(rng, 6, 12))
        eta = unit_eta(system)
        assert check_morphism(eta).ok
        assert is_isomorphism(eta)

    for rng in rngs(100):
        # systems in the image of K are state-determined
        g = functor_K_morphism(functor_H_morphism(gen_sp_morphism(rng, 5, 10)))
        khg = functor_K_morphism(functor_H_morphism(g))
        assert compose_morphisms(g, unit_eta(g.target)) == compose_morphisms(unit_eta(g.source), khg)


def test_entity_compilation():
    for rng in rngs(300):
        entity = gen_entity(rng, 5, 8)
        assert is_unital_product_entity(entity)

        system, quotient = compile_to_sps(entity)
        assert validate_sps(system).ok

        lattice = system.lattice
        for alpha, beta in itertools.combinations(entity.tests, 2):
            product = find_product_test(entity, [alpha, beta])
            assert quotient[product] == lattice.meet_pair(quotient[alpha], quotient[beta])

        assert is_state_determined_entity(entity).holds == is_state_determined(system).holds


def test_mediating_morphism_is_the_only_factorization():
    for rng in rngs(50):
        first_space, first = tiny_factor(rng, 'a')
        second_space, second = tiny_factor(rng, 'b')
        witness = sp_product(first, second)
        f1, f2 = legs_into(rng, first_space, second_space)
        assert len(f1.source.states) <= 2
        assert len(f1.source.lattice) <= 4

        verdict = verify_universal_property(witness, f1, f2)
        assert verdict, verdict.message
        assert verdict.witness['survivors'] == 1
        assert verdict.witness['equals_mediating']
        assert check_morphism(mediating_morphism(witness, f1, f2)).ok


def test_dropping_the_empty_set_is_caught():
    for rng in rngs(100):
        space = gen_closure_space(rng, 6, 20)
        assert validate_closure_space(space).ok
        dropped = ClosureSpace(space.points, [s for s in space.closed_sets if s])
        assert 'empty_set' in validate_closure_space(dropped).clauses()


def test_flipping_one_n_edge_is_caught():
    system = two_state_system()
    flipped = SPMorphism(system, system, {'p': 'p', 'q': 'q'}, {'0': '0', 'a': 'I', 'I': 'I'})
    report = check_morphism(flipped)
    assert 'covariance' in report.clauses()
    assert report.first().witness == ('a', 'q')

    for rng in rngs(100):
        f = gen_sp_morphism(rng, 5, 10)
        a = rng.choice(f.target.lattice.elements)
        others = [b for b in f.source.lattice.elements if b != f.n[a]]
        if not others:
            continue
        n = dict(f.n)
        n[a] = rng.choice(others)
        report = check_morphism(SPMorphism(f.source, f.target, f.m, n))
        assert not report.ok
        assert report.first().witness is not None


def test_duplicating_a_state_is_caught():
    for rng in rngs(100):
        system = dedupe_states(gen_sps(rng, 5, 10))
        assert is_state_determined(system)
        p = rng.choice(system.states)
        enlarged, _ = duplicate_state(system, p, 'copy')
        verdict = is_state_determined(enlarged)
        assert not verdict
        assert set(verdict.witness) == {p, 'copy'}


@pytest.mark.parametrize('lattice, dropped, witness', [
    (diamond(), ('0', 'x'), ('0', 'x')),
    (two_state_system().lattice, ('0', 'a'), ('0', 'a')),
])
def test_breaking_one_meet_is_caught(lattice, dropped, witness):
    assert validate_lattice(lattice).ok
    broken = CompleteLattice(lattice.elements, [pair for pair in lattice.leq if pair != dropped])
    report = validate_lattice(broken)
    assert report.clauses() == ['completeness']
    assert report.first().witness == witness


def test_identity_passes_before_mutation():
    assert check_morphism(identity_morphism(two_state_system())).ok
    assert validate_sps(functor_G(gen_closure_space(trial_rng(SEED, 0), 6, 20))).ok
