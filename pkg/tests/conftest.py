# Third-Party Libraries
import pytest

# Local
from src.config import ConfigManager
from src.utils.utils_serialize import dumps
from src.utils.utils_serialize import encode
from tests import builders


@pytest.fixture
def chain3():
    return builders.chain(['0', 'a', 'I'])


@pytest.fixture
def chain2():
    return builders.chain(['0', 'I'])


@pytest.fixture
def diamond():
    return builders.diamond()


@pytest.fixture
def system():
    return builders.two_state_system()


@pytest.fixture
def entity():
    return builders.two_state_entity()


@pytest.fixture
def sierpinski():
    return builders.sierpinski()


@pytest.fixture
def config():
    return ConfigManager()


@pytest.fixture
def write_doc(tmp_path):
    """
    Write a model object (or a raw dict) as a JSON document and return its path.
    """
    counter = {'n': 0}

    def write(obj, name=None):
        counter['n'] += 1
        path = tmp_path / (name or f'doc{counter["n"]}.json')
        body = obj if isinstance(obj, dict) else encode(obj).to_json()
        path.write_bytes(dumps(body))
        return str(path)

    return write
