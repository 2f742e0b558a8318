"""
Document Formats and Canonical Serialization

Every input and output of the CLI is a JSON object with a "kind" field.
Documents are decoded into model objects, which both checks their shape and
gives a canonical form: encoding a decoded document sorts every element
list, relation, set and key, so equal objects serialize to equal bytes.

Functions:
    Public:
        parse_document: Bytes -> Document (shape-checked)
        canonical_serialize: Document -> canonical UTF-8 bytes
        decode: Document -> model object
        encode: Model object -> Document
        to_bytes: Model object -> canonical bytes
        read_document, load: Documents and objects from files
"""

# Python Standard Library
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Tuple

# Local
from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_entity import StateTestEntity
from src.models.model_functors import BCLMorphism
from src.models.model_functors import BasedCompleteLattice
from src.models.model_order import CompleteLattice
from src.models.model_order import MonotoneMap
from src.models.model_product import ProductWitness
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.utils.utils_constants import DOCUMENT_KINDS
from src.utils.utils_errors import StructuralError










@dataclass
class Document:
    """
    A parsed document.

    Attributes
    ----------
    kind : str
        One of DOCUMENT_KINDS
    payload : Dict[str, Any]
        Every field except "kind"
    """
    kind: str
    payload: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return dict(self.payload, kind=self.kind)


def _reject_duplicates(pairs: List[Tuple[str, Any]]) -> Dict[str, Any]:
    result: Dict[str, Any] = {}
    for key, value in pairs:
        if key in result:
            raise StructuralError(f'duplicate key {key!r}')
        result[key] = value
    return result


def _field(body: Mapping[str, Any], name: str, location: str, expected: type) -> Any:
    if name not in body:
        raise StructuralError(f'missing field {name!r}', location)
    value = body[name]
    if not isinstance(value, expected):
        raise StructuralError(f'field {name!r} must be a {expected.__name__}', location)
    return value


def _document_from_json(body: Any, location: str = '') -> Document:
    if not isinstance(body, dict):
        raise StructuralError('document must be a JSON object', location)
    kind = body.get('kind')
    if kind is None:
        raise StructuralError("missing field 'kind'", location)
    if kind not in DOCUMENT_KINDS:
        raise StructuralError(f'unknown kind {kind!r}', location)

    return Document(kind, {key: value for key, value in body.items() if key != 'kind'})


def _nested(body: Mapping[str, Any], name: str, kind: str, location: str) -> Document:
    path = f'{location}.{name}' if location else name
    document = _document_from_json(_field(body, name, location, dict), path)
    if document.kind != kind:
        raise StructuralError(f'expected a {kind} document, got {document.kind!r}', path)
    return document


def _sub(location: str, name: str) -> str:
    return f'{location}.{name}' if location else name


def _id(value: Any, location: str) -> str:
    if not isinstance(value, str):
        raise StructuralError(f'id must be a string, got {value!r}', location)
    return value


def _ids(value: Any, location: str) -> List[str]:
    if not isinstance(value, list):
        raise StructuralError(f'expected a list of ids, got {value!r}', location)
    return [_id(token, f'{location}[{i}]') for i, token in enumerate(value)]


def _id_field(body: Mapping[str, Any], name: str, location: str) -> List[str]:
    return _ids(_field(body, name, location, list), _sub(location, name))


def _id_map(body: Mapping[str, Any], name: str, location: str) -> Dict[str, str]:
    value = _field(body, name, location, dict)
    path = _sub(location, name)
    return {key: _id(target, f'{path}.{key}') for key, target in value.items()}


def _id_set_map(body: Mapping[str, Any], name: str, location: str) -> Dict[str, List[str]]:
    value = _field(body, name, location, dict)
    path = _sub(location, name)
    return {key: _ids(members, f'{path}.{key}') for key, members in value.items()}


def _pairs(value: Any, location: str) -> List[Tuple[str, str]]:
    pairs = []
    for i, pair in enumerate(value):
        if not isinstance(pair, list) or len(pair) != 2:
            raise StructuralError('order pair must be a two-element list', f'{location}[{i}]')
        pairs.append((_id(pair[0], f'{location}[{i}][0]'), _id(pair[1], f'{location}[{i}][1]')))
    return pairs


def _decode_lattice(document: Document, location: str) -> CompleteLattice:
    body = document.payload
    return CompleteLattice(
        _id_field(body, 'elements', location),
        _pairs(_field(body, 'leq', location, list), _sub(location, 'leq')),
        location
    )


def _decode_sps(document: Document, location: str) -> StatePropertySystem:
    body = document.payload
    lattice = _decode_lattice(_nested(body, 'lattice', 'lattice', location), _sub(location, 'lattice'))
    return StatePropertySystem(_id_field(body, 'states', location), lattice, _id_set_map(body, 'xi', location), location)


def _decode_closure_space(document: Document, location: str) -> ClosureSpace:
    body = document.payload
    path = _sub(location, 'closed_sets')
    closed_sets = [_ids(subset, f'{path}[{i}]') for i, subset in enumerate(_field(body, 'closed_sets', location, list))]
    return ClosureSpace(_id_field(body, 'points', location), closed_sets, location)


def _decode_bcl(document: Document, location: str) -> BasedCompleteLattice:
    body = document.payload
    lattice = _decode_lattice(_nested(body, 'lattice', 'lattice', location), _sub(location, 'lattice'))
    return BasedCompleteLattice(lattice, _id_field(body, 'base', location), location)


def decode(document: Document, location: str = '') -> Any:
    """
    Build the model object a document describes.

    Raises
    ------
    StructuralError
        On a missing field, unknown id, non-total map or a nested document
        of the wrong kind; the message names the location
    """
    body = document.payload
    kind = document.kind

    if kind == 'lattice':
        return _decode_lattice(document, location)

    if kind == 'closure_space':
        return _decode_closure_space(document, location)

    if kind == 'sps':
        return _decode_sps(document, location)

    if kind == 'entity':
        return StateTestEntity(
            _id_field(body, 'states', location),
            _id_field(body, 'tests', location),
            _id_set_map(body, 'eta', location),
            location
        )

    if kind == 'bcl':
        return _decode_bcl(document, location)

    if kind == 'sp_morphism':
        source = _decode_sps(_nested(body, 'source', 'sps', location), _sub(location, 'source'))
        target = _decode_sps(_nested(body, 'target', 'sps', location), _sub(location, 'target'))
        return SPMorphism(source, target, _id_map(body, 'm', location), _id_map(body, 'n', location), location)

    if kind == 'lattice_map':
        source = _decode_lattice(_nested(body, 'source', 'lattice', location), _sub(location, 'source'))
        target = _decode_lattice(_nested(body, 'target', 'lattice', location), _sub(location, 'target'))
        return MonotoneMap(source, target, _id_map(body, 'graph', location), location)

    if kind == 'continuous_map':
        source = _decode_closure_space(_nested(body, 'source', 'closure_space', location), _sub(location, 'source'))
        target = _decode_closure_space(_nested(body, 'target', 'closure_space', location), _sub(location, 'target'))
        return PointMap(source, target, _id_map(body, 'graph', location), location)

    if kind == 'bcl_morphism':
        source = _decode_bcl(_nested(body, 'source', 'bcl', location), _sub(location, 'source'))
        target = _decode_bcl(_nested(body, 'target', 'bcl', location), _sub(location, 'target'))
        graph = _id_map(body, 'graph', location)
        return BCLMorphism(source, target, MonotoneMap(source.lattice, target.lattice, graph, location), location)

    if kind == 'witness':
        product = _decode_sps(_nested(body, 'product', 'sps', location), _sub(location, 'product'))
        projections = _field(body, 'projections', location, list)
        factors = _field(body, 'factors', location, list)
        if len(projections) != 2 or len(factors) != 2:
            raise StructuralError('a witness needs exactly two projections and two factors', location)
        decoded_projections = tuple(
            decode(_document_from_json(p, _sub(location, f'projections[{i}]')), _sub(location, f'projections[{i}]'))
            for i, p in enumerate(projections)
        )
        decoded_factors = tuple(
            _decode_sps(_document_from_json(s, _sub(location, f'factors[{i}]')), _sub(location, f'factors[{i}]'))
            for i, s in enumerate(factors)
        )
        for i, projection in enumerate(decoded_projections):
            if not isinstance(projection, SPMorphism) or projection.source != product or projection.target != decoded_factors[i]:
                raise StructuralError('projection endpoints do not match the product and its factors', _sub(location, f'projections[{i}]'))
        return ProductWitness(product, decoded_projections, decoded_factors)

    return dict(body)


def _encode_lattice(lattice: CompleteLattice) -> Dict[str, Any]:
    return {'kind': 'lattice', 'elements': list(lattice.elements), 'leq': [list(pair) for pair in sorted(lattice.leq)]}


def _encode_sps(system: StatePropertySystem) -> Dict[str, Any]:
    return {
        'kind': 'sps',
        'states': list(system.states),
        'lattice': _encode_lattice(system.lattice),
        'xi': {p: sorted(system.xi[p]) for p in system.states},
    }


def _encode_closure_space(space: ClosureSpace) -> Dict[str, Any]:
    return {'kind': 'closure_space', 'points': list(space.points), 'closed_sets': [list(s) for s in space.closed_sets]}


def _encode_bcl(bcl: BasedCompleteLattice) -> Dict[str, Any]:
    return {'kind': 'bcl', 'lattice': _encode_lattice(bcl.lattice), 'base': list(bcl.base)}


def _encode_sp_morphism(f: SPMorphism) -> Dict[str, Any]:
    return {'kind': 'sp_morphism', 'source': _encode_sps(f.source), 'target': _encode_sps(f.target), 'm': dict(f.m), 'n': dict(f.n)}


def encode(obj: Any) -> Document:
    """
    Document of a model object, with every list in canonical order.
    """
    if isinstance(obj, CompleteLattice):
        body = _encode_lattice(obj)
    elif isinstance(obj, ClosureSpace):
        body = _encode_closure_space(obj)
    elif isinstance(obj, StatePropertySystem):
        body = _encode_sps(obj)
    elif isinstance(obj, StateTestEntity):
        body = {'kind': 'entity', 'states': list(obj.states), 'tests': list(obj.tests), 'eta': {p: sorted(obj.eta[p]) for p in obj.states}}
    elif isinstance(obj, BasedCompleteLattice):
        body = _encode_bcl(obj)
    elif isinstance(obj, SPMorphism):
        body = _encode_sp_morphism(obj)
    elif isinstance(obj, MonotoneMap):
        body = {'kind': 'lattice_map', 'source': _encode_lattice(obj.source), 'target': _encode_lattice(obj.target), 'graph': dict(obj.graph)}
    elif isinstance(obj, PointMap):
        body = {'kind': 'continuous_map', 'source': _encode_closure_space(obj.source), 'target': _encode_closure_space(obj.target), 'graph': dict(obj.graph)}
    elif isinstance(obj, BCLMorphism):
        body = {'kind': 'bcl_morphism', 'source': _encode_bcl(obj.source), 'target': _encode_bcl(obj.target), 'graph': dict(obj.f.graph)}
    elif isinstance(obj, ProductWitness):
        body = {
            'kind': 'witness',
            'product': _encode_sps(obj.product),
            'projections': [_encode_sp_morphism(s) for s in obj.projections],
            'factors': [_encode_sps(s) for s in obj.factors],
        }
    else:
        raise StructuralError(f'cannot encode {type(obj).__name__}')

    return _document_from_json(body)


def report_document(payload: Mapping[str, Any]) -> Document:
    return Document('report', dict(payload))


def parse_document(data: bytes) -> Document:
    """
    Parse and shape-check one document.

    Raises
    ------
    StructuralError
        On invalid UTF-8 or JSON, duplicate keys, an unknown kind or any
        shape problem found while decoding
    """
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise StructuralError(f'input is not UTF-8: {e}') from e

    try:
        body = json.loads(text, object_pairs_hook=_reject_duplicates)
    except json.JSONDecodeError as e:
        raise StructuralError(f'invalid JSON: {e.msg} at line {e.lineno} column {e.colno}') from e

    document = _document_from_json(body)
    decode(document)

    return document


def dumps(body: Any) -> bytes:
    return json.dumps(body, sort_keys=True, ensure_ascii=False, separators=(',', ':')).encode('utf-8')


def canonical_serialize(document: Document) -> bytes:
    """
    Deterministic bytes: sorted keys, sorted element lists and set members,
    no insignificant whitespace.
    """
    if document.kind == 'report':
        return dumps(document.to_json())

    return dumps(encode(decode(document)).to_json())


def to_bytes(obj: Any) -> bytes:
    return dumps(encode(obj).to_json())


def read_document(path: str) -> Document:
    """
    Parse the document stored at path.

    Raises
    ------
    StructuralError
        If the file cannot be read or does not hold a valid document
    """
    try:
        with open(path, 'rb') as file:
            data = file.read()
    except OSError as e:
        raise StructuralError(f'cannot read {path}: {e.strerror}') from e

    return parse_document(data)


def load(path: str) -> Any:
    """
    Model object of the document stored at path.
    """
    return decode(read_document(path))
