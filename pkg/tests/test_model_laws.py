import pytest

from src.models.model_functors import counit_epsilon
from src.models.model_laws import LawReport
from src.models.model_laws import law_harness
from src.models.model_spsys import SPMorphism
from src.utils.utils_errors import StructuralError


def swapped_counit(system):
    """
    ε with the images of top and bottom exchanged.
    """
    epsilon = counit_epsilon(system)
    lattice = system.lattice
    n = dict(epsilon.n)
    n[lattice.top], n[lattice.bottom] = n[lattice.bottom], n[lattice.top]
    return SPMorphism(epsilon.source, epsilon.target, epsilon.m, n)


def test_harness_passes_on_generated_instances():
    report = law_harness(trials=4, seed=42, max_states=4, max_properties=8)
    assert report.ok, report.failed_laws()
    for law in ('FG_identity_objects', 'epsilon_isomorphism', 'HK_identity_objects', 'sp0_equivalence', 'product_preorder_componentwise'):
        assert report.laws[law].passed == 4


def test_harness_is_reproducible():
    first = law_harness(trials=3, seed=7, max_states=4, max_properties=8)
    second = law_harness(trials=3, seed=7, max_states=4, max_properties=8)
    assert first.to_dict() == second.to_dict()


def test_zero_trials_is_an_empty_passing_report():
    report = law_harness(trials=0, seed=1)
    assert report.ok
    assert report.to_dict()['laws'] == {}


def test_corrupted_counit_is_caught_with_its_seeds():
    report = law_harness(trials=2, seed=5, max_states=4, max_properties=8, counit=swapped_counit)
    assert not report.ok
    assert 'epsilon_isomorphism' in report.failed_laws()
    assert report.laws['epsilon_isomorphism'].failing_seeds == ['5:0', '5:1']


@pytest.mark.parametrize('kwargs', [
    {'trials': -1},
    {'trials': 1, 'max_states': 0},
    {'trials': 1, 'max_properties': 1},
])
def test_bad_harness_arguments_are_structural(kwargs):
    with pytest.raises(StructuralError):
        law_harness(**kwargs)


def test_report_records_failing_seeds_in_order():
    report = LawReport(trials=3, seed=9, max_states=2, max_properties=4)
    report.record('law', True, '9:0')
    report.record('law', False, '9:1')
    report.record('law', False, '9:2')
    assert report.to_dict()['laws']['law'] == {'passed': 1, 'failed': 2, 'failing_seeds': ['9:1', '9:2']}
    assert not report.ok
