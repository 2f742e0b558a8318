import json

import pytest

from src.app import cli_main
from src.models.model_closure import ClosureSpace
from src.models.model_entity import StateTestEntity
from src.models.model_order import MonotoneMap
from src.models.model_product import sp_product
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import identity_morphism
from src.utils.utils_serialize import to_bytes
from tests.builders import chain
from tests.builders import diamond
from tests.builders import indiscrete


def run(capsys, *argv):
    status = cli_main(list(argv))
    out = capsys.readouterr().out
    return status, out


def documents(out):
    return [json.loads(line) for line in out.splitlines() if line]


def test_validate_valid_system(capsys, write_doc, system):
    status, out = run(capsys, 'validate', write_doc(system))
    assert status == 0
    [report] = documents(out)
    assert report['kind'] == 'report'
    assert report['valid'] is True


def test_validate_reports_every_file(capsys, write_doc, system):
    broken = ClosureSpace(['p', 'q'], [['p'], ['p', 'q']])
    status, out = run(capsys, 'validate', write_doc(system), write_doc(broken))
    assert status == 1
    first, second = documents(out)
    assert first['valid'] and not second['valid']
    assert second['violations'][0]['clause'] == 'empty_set'


def test_validate_entity_reports_unital_product(capsys, write_doc):
    entity = StateTestEntity(['p'], ['τ'], {'p': ['τ']})
    status, out = run(capsys, 'validate', write_doc(entity))
    assert status == 0
    assert documents(out)[0]['unital_product']['message'] == 'no zero test'


def test_malformed_json_exits_two(capsys, tmp_path):
    path = tmp_path / 'bad.json'
    path.write_bytes(b'{"kind": "sps",')
    status, out = run(capsys, 'validate', str(path))
    assert status == 2
    assert documents(out)[0]['error'] == 'structural'


def test_unknown_verb_exits_two(capsys):
    assert cli_main(['frobnicate']) == 2


def test_convert_system_to_closure_space(capsys, write_doc, system, sierpinski):
    status, out = run(capsys, 'convert', '--to', 'cls', write_doc(system))
    assert status == 0
    assert out.strip().encode('utf-8') == to_bytes(sierpinski)


def test_convert_without_a_functor_exits_two(capsys, write_doc, entity):
    status, _ = run(capsys, 'convert', '--to', 'bcl', write_doc(entity))
    assert status == 2


def test_convert_refuses_invalid_input(capsys, write_doc, chain3):
    broken = ClosureSpace(['p', 'q'], [['p'], ['p', 'q']])
    status, out = run(capsys, 'convert', '--to', 'sps', write_doc(broken))
    assert status == 1
    assert documents(out)[0]['error'] == 'refusal'


def test_cartan_of_one_property(capsys, write_doc, system):
    status, out = run(capsys, 'cartan', '--property', 'a', write_doc(system))
    assert status == 0
    assert documents(out)[0]['kappa'] == ['p']


def test_t0(capsys, write_doc, sierpinski):
    assert run(capsys, 't0', write_doc(sierpinski))[0] == 0
    status, out = run(capsys, 't0', write_doc(indiscrete()))
    assert status == 1
    assert documents(out)[0]['T0']['witness'] == ['p', 'q']


def test_check_morphism_with_flipped_edge(capsys, write_doc, system):
    broken = SPMorphism(system, system, {'p': 'p', 'q': 'q'}, {'0': '0', 'a': 'I', 'I': 'I'})
    status, out = run(capsys, 'check-morphism', write_doc(broken))
    assert status == 1
    clauses = [v['clause'] for v in documents(out)[0]['violations']]
    assert 'covariance' in clauses


def test_check_identity_reports_isomorphism(capsys, write_doc, system):
    status, out = run(capsys, 'check-morphism', write_doc(identity_morphism(system)))
    assert status == 0
    assert documents(out)[0]['isomorphism'] is True


def test_compose_identities(capsys, write_doc, system):
    path = write_doc(identity_morphism(system))
    status, out = run(capsys, 'compose', path, path)
    assert status == 0
    assert out.strip().encode('utf-8') == to_bytes(identity_morphism(system))


def test_adjoint_missing_names_the_subset(capsys, write_doc, chain2):
    n = MonotoneMap(diamond(), chain2, {'0': '0', 'x': 'I', 'y': 'I', 'I': 'I'})
    status, out = run(capsys, 'adjoint', '--lower', write_doc(n))
    assert status == 1
    report = documents(out)[0]
    assert report['exists'] is False
    assert report['reason']['witness'] == ['x', 'y']


def test_upper_adjoint_of_identity(capsys, write_doc, chain3):
    identity = MonotoneMap(chain3, chain3, {x: x for x in chain3})
    status, out = run(capsys, 'adjoint', '--upper', write_doc(identity))
    assert status == 0
    assert documents(out)[0]['graph'] == {'0': '0', 'a': 'a', 'I': 'I'}


def test_entity_compile(capsys, write_doc, entity):
    status, out = run(capsys, 'entity', 'compile', write_doc(entity))
    assert status == 0
    system, report = documents(out)
    assert system['kind'] == 'sps'
    assert report['quotient'] == {'α': 'α', 'δ': 'δ', 'τ': 'τ'}
    assert report['state_determined'] is True


def test_entity_compile_refuses(capsys, write_doc):
    entity = StateTestEntity(['p', 'q'], ['δ', 'α'], {'p': ['α'], 'q': []})
    status, out = run(capsys, 'entity', 'compile', write_doc(entity))
    assert status == 1
    assert documents(out)[0]['error'] == 'refusal'


def test_product_emits_three_documents(capsys, write_doc, system):
    path = write_doc(system)
    status, out = run(capsys, 'product', path, path)
    assert status == 0
    kinds = [doc['kind'] for doc in documents(out)]
    assert kinds == ['sps', 'sp_morphism', 'sp_morphism']


def test_verify_universal_on_identity_legs(capsys, write_doc, system):
    witness = write_doc(sp_product(system, system))
    leg = write_doc(identity_morphism(system))
    status, out = run(capsys, 'verify-universal', witness, leg, leg)
    assert status == 0
    report = documents(out)[0]
    assert report['holds'] is True
    assert report['witness']['survivors'] == 1
    assert report['mediating']['m'] == {'p': 'p⊗p', 'q': 'q⊗q'}


def test_verify_universal_refuses_large_sources(capsys, write_doc):
    states = ['p', 'q', 'r', 's']
    system = StatePropertySystem(states, chain(['0', 'I']), {p: ['I'] for p in states})
    witness = write_doc(sp_product(system, system))
    leg = write_doc(identity_morphism(system))
    status, out = run(capsys, 'verify-universal', witness, leg, leg)
    assert status == 1
    error = documents(out)[0]
    assert error['error'] == 'refusal'
    assert error['report']['source_states'] == 4


def test_mediate(capsys, write_doc, system):
    witness = write_doc(sp_product(system, system))
    leg = write_doc(identity_morphism(system))
    status, out = run(capsys, 'mediate', witness, leg, leg)
    assert status == 0
    assert documents(out)[0]['m'] == {'p': 'p⊗p', 'q': 'q⊗q'}


def test_gen_is_reproducible(capsys):
    first = run(capsys, 'gen', '--kind', 'sps', '--seed', '9')
    second = run(capsys, 'gen', '--kind', 'sps', '--seed', '9')
    assert first == second
    assert first[0] == 0
    assert documents(first[1])[0]['kind'] == 'sps'


def test_laws_json(capsys):
    status, out = run(capsys, 'laws', '--trials', '2', '--seed', '3', '--max-states', '3', '--max-props', '6')
    assert status == 0
    report = documents(out)[0]
    assert report['ok'] is True
    assert report['trials'] == 2
    assert report['laws']['FG_identity_objects']['passed'] == 2


def test_laws_markdown(capsys):
    status, out = run(capsys, 'laws', '--trials', '1', '--max-states', '3', '--max-props', '6', '--format', 'markdown')
    assert status == 0
    assert out.startswith('# Law report')
    assert '| FG_identity_objects | 1 | 0 |' in out


def test_roundtrip_on_a_closure_space(capsys, write_doc, sierpinski):
    status, out = run(capsys, 'roundtrip', write_doc(sierpinski))
    assert status == 0
    laws = documents(out)[0]['laws']
    assert set(laws) == {'FG_identity', 'epsilon_isomorphism', 'T0_composite'}


@pytest.mark.parametrize('lattice', [chain(['0', 'I']), diamond()])
def test_validate_lattices(capsys, write_doc, lattice):
    assert run(capsys, 'validate', write_doc(lattice))[0] == 0


@pytest.mark.parametrize('xi', [{'p': 5}, {'p': 'aI'}])
def test_badly_typed_actual_properties_exit_two(capsys, write_doc, xi):
    body = {
        'kind': 'sps',
        'states': ['p'],
        'lattice': {'kind': 'lattice', 'elements': ['0', 'I', 'a'], 'leq': [['0', '0'], ['0', 'I'], ['0', 'a'], ['I', 'I'], ['a', 'I'], ['a', 'a']]},
        'xi': xi,
    }
    status, out = run(capsys, 'validate', write_doc(body))
    assert status == 2
    [error] = documents(out)
    assert error['error'] == 'structural'
    assert error['location'] == 'xi.p'


def test_closure_space_given_as_strings_exits_two(capsys, write_doc):
    status, out = run(capsys, 'validate', write_doc({'kind': 'closure_space', 'points': ['x', 'y'], 'closed_sets': [[], 'xy']}))
    assert status == 2
    assert documents(out)[0]['location'] == 'closed_sets[1]'


def test_repeated_closed_sets_are_a_warning(capsys, write_doc):
    body = {'kind': 'closure_space', 'points': ['p', 'q'], 'closed_sets': [[], ['q'], ['q'], ['q', 'p']]}
    status, out = run(capsys, 'validate', write_doc(body))
    assert status == 0
    [report] = documents(out)
    assert report['valid'] is True
    assert [w['clause'] for w in report['warnings']] == ['repeated_closed_set']


@pytest.mark.parametrize('argv', [
    ['gen', '--kind', 'sps', '--seed=-5'],
    ['laws', '--trials=-3'],
    ['gen', '--kind', 'sps', '--max-states=-1'],
])
def test_negative_option_values_exit_two(capsys, argv):
    status, out = run(capsys, *argv)
    assert status == 2
    [error] = documents(out)
    assert error['error'] == 'structural'
    assert 'bad option value' in error['message']
