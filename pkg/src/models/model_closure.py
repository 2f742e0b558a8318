"""
Closure Spaces

Finite closure spaces (Z, 𝒢): a point set with a family of closed subsets
containing Z and ∅ and closed under intersection. Provides the closure
operator, T0 testing and continuity of point maps.

Closed sets are stored canonically: each one as a sorted tuple of points,
the family sorted by (size, members). Two spaces are equal exactly when
their canonical forms are.

Functions:
    Public:
        set_token: Lattice element id naming a point subset ("{x,y}")
        validate_closure_space: Closure-system report
        close_family: Intersection closure of an arbitrary family (+ Z, ∅)
        closure_of, point_closure: The closure operator
        is_T0: T0 check with a witness pair
        specialization_preorder: x < y iff cl{x} ⊆ cl{y}
        preimage, is_continuous, continuity_oracle: Continuity of point maps
        identity_point_map, compose_point_maps: Map plumbing
"""

# Python Standard Library
from collections import Counter
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

# Local
from src.config import ORACLE_LIMIT
from src.models.model_order import ElementId
from src.models.model_order import FinitePreorder
from src.models.model_order import check_element_ids
from src.models.model_order import check_id_collection
from src.utils.utils_constants import SET_CLOSE
from src.utils.utils_constants import SET_DELIMITER
from src.utils.utils_constants import SET_OPEN
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import ValidationReport
from src.utils.utils_report import Verdict










PointSet = Tuple[ElementId, ...]


def canonical_set(points: Iterable[ElementId]) -> PointSet:
    return tuple(sorted(set(points)))


def canonical_family(family: Iterable[Iterable[ElementId]]) -> Tuple[PointSet, ...]:
    members = {canonical_set(subset) for subset in family}
    return tuple(sorted(members, key=lambda subset: (len(subset), subset)))


def set_token(points: Iterable[ElementId]) -> ElementId:
    """
    Id of a point subset used as a lattice element, e.g. '{x,y}'.
    """
    return f'{SET_OPEN}{SET_DELIMITER.join(canonical_set(points))}{SET_CLOSE}'


class ClosureSpace:
    """
    A finite point set with a family of closed subsets.

    Construction canonicalizes and checks that closed sets only contain
    known points; validate_closure_space checks the closure-system laws.

    Attributes
    ----------
        points : Tuple[ElementId, ...]
            Sorted point set Z
        closed_sets : Tuple[Tuple[ElementId, ...], ...]
            Canonical family 𝒢
        repeated_closed_sets, repeated_points : Tuple[Tuple[ElementId, ...], ...]
            Closed sets given more than once, or given with a repeated point;
            canonicalization drops the repetition
    """
    def __init__(self, points: Iterable[ElementId], closed_sets: Iterable[Iterable[ElementId]], location: str = ''):
        self.points = check_element_ids(points, location)
        if not self.points:
            raise StructuralError('point set must be nonempty', location)

        known = frozenset(self.points)
        family: List[FrozenSet[ElementId]] = []
        repeated_points = set()
        for i, subset in enumerate(closed_sets):
            path = f'{location}.closed_sets[{i}]' if location else f'closed_sets[{i}]'
            members = check_id_collection(subset, path)
            unknown = sorted(x for x in members if x not in known)
            if unknown:
                raise StructuralError(f'closed set references unknown points {unknown}', path)
            if isinstance(subset, (list, tuple)) and len(subset) != len(members):
                repeated_points.add(canonical_set(members))
            family.append(members)

        counts = Counter(family)
        self.closed_sets = canonical_family(family)
        self.repeated_closed_sets = tuple(s for s in self.closed_sets if counts[frozenset(s)] > 1)
        self.repeated_points = tuple(s for s in self.closed_sets if s in repeated_points)
        self._closed = frozenset(frozenset(subset) for subset in self.closed_sets)


    def is_closed(self, subset: Iterable[ElementId]) -> bool:
        return frozenset(subset) in self._closed


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosureSpace):
            return NotImplemented
        return self.points == other.points and self.closed_sets == other.closed_sets


    def __hash__(self) -> int:
        return hash((self.points, self.closed_sets))


    def __repr__(self) -> str:
        return f'ClosureSpace({list(self.points)}, {[list(s) for s in self.closed_sets]})'


def validate_closure_space(space: ClosureSpace) -> ValidationReport:
    """
    Check Z ∈ 𝒢, ∅ ∈ 𝒢 and closure under pairwise intersection.

    Returns
    -------
    ValidationReport
        Intersection witnesses are the pairs of closed sets whose
        intersection is missing. Repeated closed sets or points are
        warnings and leave the space valid.
    """
    report = ValidationReport('closure_space')

    for subset in space.repeated_closed_sets:
        report.warn('repeated_closed_set', f'{list(subset)} is listed more than once', list(subset))
    for subset in space.repeated_points:
        report.warn('repeated_point', f'{list(subset)} is listed with a repeated point', list(subset))

    if not space.is_closed(space.points):
        report.add('full_set', 'Z ∉ 𝒢', list(space.points))

    if not space.is_closed(()):
        report.add('empty_set', '∅ ∉ 𝒢', [])

    for first, second in combinations(space.closed_sets, 2):
        meet = set(first) & set(second)
        if not space.is_closed(meet):
            report.add('intersection', f'{list(first)} ∩ {list(second)} = {sorted(meet)} ∉ 𝒢', [list(first), list(second)])

    return report


def close_family(points: Iterable[ElementId], family: Iterable[Iterable[ElementId]]) -> ClosureSpace:
    """
    Smallest closure system on the points containing the family, Z and ∅.
    """
    point_tuple = canonical_set(points)
    closed = {frozenset(point_tuple), frozenset()}
    pending = [frozenset(subset) for subset in family]

    while pending:
        candidate = pending.pop()
        if candidate in closed:
            continue
        new = {candidate & member for member in closed}
        closed.add(candidate)
        pending.extend(subset for subset in new if subset not in closed)

    return ClosureSpace(point_tuple, closed)


def closure_of(space: ClosureSpace, subset: Iterable[ElementId]) -> FrozenSet[ElementId]:
    """
    cl(Y) = ⋂{G ∈ 𝒢 : Y ⊆ G}.
    """
    wanted = frozenset(subset)
    unknown = sorted(x for x in wanted if x not in space.points)
    if unknown:
        raise StructuralError(f'unknown points {unknown}')

    result = frozenset(space.points)
    for closed in space.closed_sets:
        if wanted.issubset(closed):
            result = result & frozenset(closed)

    return result


def point_closure(space: ClosureSpace, x: ElementId) -> FrozenSet[ElementId]:
    return closure_of(space, (x,))


def is_T0(space: ClosureSpace) -> Verdict: # pylint: disable=invalid-name
    """
    cl{x} = cl{y} implies x = y; the witness is the first offending pair.
    """
    seen: Dict[FrozenSet[ElementId], ElementId] = {}
    for x in space.points:
        closure = point_closure(space, x)
        if closure in seen:
            return Verdict(False, (seen[closure], x), f'cl({seen[closure]}) = cl({x})')
        seen[closure] = x

    return Verdict(True)


def specialization_preorder(space: ClosureSpace) -> FinitePreorder:
    """
    x < y iff cl{x} ⊆ cl{y}, i.e. x lies in the closure of y.
    """
    closures = {x: point_closure(space, x) for x in space.points}
    leq = [(x, y) for x in space.points for y in space.points if closures[x] <= closures[y]]

    return FinitePreorder(space.points, leq)


class PointMap:
    """
    A total map between the points of two closure spaces.

    Attributes
    ----------
        source : ClosureSpace
        target : ClosureSpace
        graph : Dict[ElementId, ElementId]
    """
    def __init__(self, source: ClosureSpace, target: ClosureSpace, graph: Mapping[ElementId, ElementId], location: str = ''):
        missing = [x for x in source.points if x not in graph]
        if missing:
            raise StructuralError(f'point map is not total, missing {missing}', location)
        extra = sorted(x for x in graph if x not in source.points)
        if extra:
            raise StructuralError(f'point map references unknown source points {extra}', location)
        outside = sorted({y for y in graph.values() if y not in target.points})
        if outside:
            raise StructuralError(f'point map values outside the target space {outside}', location)

        self.source = source
        self.target = target
        self.graph = {x: graph[x] for x in source.points}


    def __call__(self, x: ElementId) -> ElementId:
        return self.graph[x]


    def image(self, subset: Iterable[ElementId]) -> FrozenSet[ElementId]:
        return frozenset(self.graph[x] for x in subset)


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.graph == other.graph


    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.graph.items()))))


    def __repr__(self) -> str:
        return f'PointMap({self.graph})'


def preimage(m: PointMap, subset: Iterable[ElementId]) -> FrozenSet[ElementId]:
    wanted = frozenset(subset)
    return frozenset(x for x in m.source.points if m(x) in wanted)


def is_continuous(m: PointMap) -> Verdict:
    """
    m⁻¹(F) is closed in the source for every closed F of the target;
    the witness is the first failing F.
    """
    for closed in m.target.closed_sets:
        pulled = preimage(m, closed)
        if not m.source.is_closed(pulled):
            return Verdict(False, list(closed), f'preimage of {list(closed)} is {sorted(pulled)}, not closed')

    return Verdict(True)


def continuity_oracle(m: PointMap, limit: int = ORACLE_LIMIT) -> bool:
    """
    Closure-image characterization: m(cl′(Y)) ⊆ cl(m(Y)) for every Y.
    Refused above `limit` source points.
    """
    points = m.source.points
    if len(points) > limit:
        raise RefusalError(f'oracle limited to {limit} points, got {len(points)}')

    for size in range(len(points) + 1):
        for subset in combinations(points, size):
            if not m.image(closure_of(m.source, subset)) <= closure_of(m.target, m.image(subset)):
                return False

    return True


def identity_point_map(space: ClosureSpace) -> PointMap:
    return PointMap(space, space, {x: x for x in space.points})


def compose_point_maps(f: PointMap, g: PointMap) -> PointMap:
    """
    g ∘ f (f first).
    """
    if f.target != g.source:
        raise StructuralError('cannot compose: target of the first map differs from source of the second')

    return PointMap(f.source, g.target, {x: g(f(x)) for x in f.source.points})
