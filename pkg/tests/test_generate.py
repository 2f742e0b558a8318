import random

import pytest

from src.handlers.handle_validate import validate_object
from src.models.model_spsys import is_state_determined
from src.utils.utils_errors import StructuralError
from src.utils.utils_generate import GENERATED_KINDS
from src.utils.utils_generate import GeneratorConfig
from src.utils.utils_generate import gen_sps
from src.utils.utils_generate import generate
from src.utils.utils_generate import trial_rng
from src.utils.utils_serialize import canonical_serialize
from src.utils.utils_serialize import decode


@pytest.mark.parametrize('kind', GENERATED_KINDS)
def test_generated_documents_are_valid(kind):
    for seed in range(5):
        document = generate(GeneratorConfig(kind=kind, seed=seed, max_states=4, max_properties=8, max_tests=6))
        assert document.kind == kind
        assert validate_object(decode(document)).ok


@pytest.mark.parametrize('kind', GENERATED_KINDS)
def test_generation_is_deterministic(kind):
    config = GeneratorConfig(kind=kind, seed=1234)
    assert canonical_serialize(generate(config)) == canonical_serialize(generate(config))


def test_trial_rng_is_seeded_by_string():
    assert trial_rng(42, 3).random() == random.Random('42:3').random()


def test_duplicates_appear_at_full_rate():
    system = gen_sps(random.Random(0), 4, 8, duplicate_rate=1.0)
    assert not is_state_determined(system)


@pytest.mark.parametrize('kwargs', [
    {'kind': 'topos'},
    {'kind': 'sps', 'seed': -1},
    {'kind': 'sps', 'seed': 2 ** 64},
    {'kind': 'sps', 'max_states': 0},
    {'kind': 'entity', 'max_tests': 1},
])
def test_bad_generator_config(kwargs):
    with pytest.raises(StructuralError):
        GeneratorConfig(**kwargs)
