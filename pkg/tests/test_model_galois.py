import random

import hypothesis
import hypothesis.strategies as strat
import pytest

from src.models.model_functors import functor_G_morphism
from src.models.model_galois import GaloisConnection
from src.models.model_galois import adjoint_failure
from src.models.model_galois import check_adjunction
from src.models.model_galois import lower_adjoint
from src.models.model_galois import upper_adjoint
from src.models.model_order import MonotoneMap
from src.models.model_order import all_monotone_maps
from src.models.model_order import compose_maps
from src.models.model_order import identity_map
from src.models.model_order import preserves_joins
from src.models.model_order import preserves_meets
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import StructuralError
from src.utils.utils_generate import gen_composable_morphisms
from src.utils.utils_generate import gen_lattice
from src.utils.utils_generate import gen_monotone_map
from tests.builders import chain
from tests.builders import diamond


seeds = strat.integers(min_value=0, max_value=2 ** 32)

SMALL_LATTICES = [
    chain(['0']),
    chain(['0', 'I']),
    chain(['0', 'a', 'I']),
    chain(['0', 'a', 'b', 'I']),
    diamond(),
]


def test_lower_adjoint_of_a_chain_projection(chain3, chain2):
    n = MonotoneMap(chain3, chain2, {'0': '0', 'a': '0', 'I': 'I'})
    d = lower_adjoint(n)
    assert d is not None
    assert d.graph == {'0': '0', 'I': 'I'}
    assert check_adjunction(n, d)


def test_no_lower_adjoint_without_meet_preservation(diamond, chain2):
    n = MonotoneMap(diamond, chain2, {'0': '0', 'x': 'I', 'y': 'I', 'I': 'I'})
    assert lower_adjoint(n) is None
    failure = adjoint_failure(n, lower=True)
    assert failure.witness == ('x', 'y')


def test_no_upper_adjoint_without_join_preservation(chain3, chain2):
    f = MonotoneMap(chain3, chain2, {x: 'I' for x in chain3})
    assert upper_adjoint(f) is None
    assert adjoint_failure(f, lower=False).witness == ()


def test_identity_is_self_adjoint(diamond):
    identity = identity_map(diamond)
    assert lower_adjoint(identity) == identity
    assert upper_adjoint(identity) == identity


def test_carrier_mismatch_is_structural(chain2, chain3):
    with pytest.raises(StructuralError, match='carrier mismatch'):
        check_adjunction(identity_map(chain2), identity_map(chain3))


@pytest.mark.parametrize('source', SMALL_LATTICES, ids=lambda l: f'{len(l)}-{"x" in l}')
@pytest.mark.parametrize('target', SMALL_LATTICES, ids=lambda l: f'{len(l)}-{"x" in l}')
def test_adjoints_exist_exactly_when_preserved(source, target):
    for f in all_monotone_maps(source, target):
        lower = lower_adjoint(f)
        upper = upper_adjoint(f)
        assert (lower is not None) == bool(preserves_meets(f))
        assert (upper is not None) == bool(preserves_joins(f))
        if lower is not None:
            assert upper_adjoint(lower) == f
        if upper is not None:
            assert lower_adjoint(upper) == f


@pytest.mark.parametrize('source', SMALL_LATTICES, ids=lambda l: f'{len(l)}-{"x" in l}')
@pytest.mark.parametrize('target', SMALL_LATTICES, ids=lambda l: f'{len(l)}-{"x" in l}')
def test_lower_adjoint_is_the_only_adjoint(source, target):
    candidates = list(all_monotone_maps(target, source))
    for n in all_monotone_maps(source, target):
        adjoints = [d for d in candidates if check_adjunction(n, d)]
        lower = lower_adjoint(n)
        assert adjoints == ([lower] if lower is not None else [])


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=100, deadline=None)
def test_random_maps_adjoint_round_trip(seed):
    rng = random.Random(seed)
    f = gen_monotone_map(rng, gen_lattice(rng, 8), gen_lattice(rng, 8))
    lower = lower_adjoint(f)
    assert (lower is not None) == bool(preserves_meets(f))
    if lower is not None:
        assert upper_adjoint(lower) == f


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=100, deadline=None)
def test_lower_adjoint_of_composite(seed):
    # property maps of composable morphisms preserve meets
    g1, g2 = gen_composable_morphisms(random.Random(seed), 4, 8)
    first, second = functor_G_morphism(g1).n_map, functor_G_morphism(g2).n_map
    composite = compose_maps(second, first)
    assert lower_adjoint(composite) == compose_maps(lower_adjoint(first), lower_adjoint(second))


@pytest.mark.parametrize('source', SMALL_LATTICES, ids=lambda l: f'{len(l)}-{"x" in l}')
@pytest.mark.parametrize('target', SMALL_LATTICES, ids=lambda l: f'{len(l)}-{"x" in l}')
def test_adjoints_preserve_the_dual_operation(source, target):
    for f in all_monotone_maps(source, target):
        lower = lower_adjoint(f)
        upper = upper_adjoint(f)
        if lower is not None:
            assert preserves_joins(lower)
        if upper is not None:
            assert preserves_meets(upper)


@hypothesis.given(seeds)
@hypothesis.settings(max_examples=100, deadline=None)
def test_upper_adjoint_of_composite(seed):
    g1, g2 = gen_composable_morphisms(random.Random(seed), 4, 8)
    first, second = functor_G_morphism(g1).n_map, functor_G_morphism(g2).n_map
    d_first, d_second = lower_adjoint(first), lower_adjoint(second)
    composite = compose_maps(d_first, d_second)
    assert upper_adjoint(composite) == compose_maps(upper_adjoint(d_second), upper_adjoint(d_first))


def test_galois_connection_holds_an_adjoint_pair(chain3, chain2):
    n = MonotoneMap(chain3, chain2, {'0': '0', 'a': '0', 'I': 'I'})
    connection = GaloisConnection(upper=n, lower=lower_adjoint(n))
    assert connection.lower.graph == {'0': '0', 'I': 'I'}


def test_galois_connection_rejects_a_non_adjoint_pair(diamond):
    swap = MonotoneMap(diamond, diamond, {'0': '0', 'x': 'y', 'y': 'x', 'I': 'I'})
    with pytest.raises(LawViolationError, match='not a Galois connection'):
        GaloisConnection(upper=identity_map(diamond), lower=swap)
