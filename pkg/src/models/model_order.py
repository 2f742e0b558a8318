"""
Finite Orders and Complete Lattices

Finite preorders, posets and complete lattices with brute-force order
computations. Every other model module builds on these types.

Orders are stored extensionally as sets of pairs (x, y) meaning x < y.
Internally a lattice indexes its elements and keeps each principal ideal
and filter as an integer bitmask, so a meet is the element whose ideal
equals the intersection of the ideals of its arguments.

Functions:
    Public:
        validate_preorder: Reflexivity/transitivity report
        validate_poset: Preorder report plus antisymmetry
        is_complete_lattice: Top + pairwise meets check with a witness
        validate_lattice: Full lattice report
        every_subset_has_meet: Exponential oracle for completeness
        lattice_from_order: Build a lattice from an order predicate
        preserves_meets, preserves_joins: Preservation checks with witnesses
        is_monotone: Monotonicity check with a witness
        identity_map, compose_maps: Map plumbing
        all_monotone_maps: Enumerate every monotone map between two lattices
"""

# Python Standard Library
from itertools import combinations
from typing import Any, Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

# Local
from src.config import ORACLE_LIMIT
from src.config import SUBSET_EXHAUSTIVE_LIMIT
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import ValidationReport
from src.utils.utils_report import Verdict










ElementId = str
Pair = Tuple[ElementId, ElementId]


def check_element_ids(tokens: Iterable[ElementId], location: str = '') -> Tuple[ElementId, ...]:
    """
    Check that every token is a nonempty string and that tokens are unique.

    Parameters
    ----------
    tokens : Iterable[ElementId]
        Candidate ids
    location : str
        Document path used in error messages

    Returns
    -------
    Tuple[ElementId, ...]
        The tokens sorted

    Raises
    ------
    StructuralError
        On an empty or non-string token, or on a duplicate
    """
    seen = set()
    for token in tokens:
        if not isinstance(token, str) or not token:
            raise StructuralError(f'element id must be a nonempty string, got {token!r}', location)
        if token in seen:
            raise StructuralError(f'duplicate element id {token!r}', location)
        seen.add(token)

    return tuple(sorted(seen))


def check_id_collection(value: Any, location: str = '') -> FrozenSet[ElementId]:
    """
    Members of a collection of ids, e.g. ξ(p) or a closed set.

    Raises
    ------
    StructuralError
        If value is a string or not a collection, or a member is not a string
    """
    if isinstance(value, (str, bytes, Mapping)) or not isinstance(value, Iterable):
        raise StructuralError(f'expected a collection of ids, got {value!r}', location)
    members = list(value)
    for token in members:
        if not isinstance(token, str):
            raise StructuralError(f'id must be a string, got {token!r}', location)

    return frozenset(members)


def _check_pairs(elements: FrozenSet[ElementId], pairs: Iterable[Pair], location: str) -> FrozenSet[Pair]:
    checked = set()
    for pair in pairs:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise StructuralError(f'order pair must have two entries, got {pair!r}', location)
        x, y = pair
        for token in (x, y):
            if not isinstance(token, str) or token not in elements:
                raise StructuralError(f'unknown element {token!r} in pair ({x!r}, {y!r})', location)
        checked.add((x, y))

    return frozenset(checked)


class FinitePreorder:
    """
    A finite relation intended to be a preorder.

    Construction only checks structure (known ids); use validate_preorder
    for the order laws.

    Attributes
    ----------
        elements : Tuple[ElementId, ...]
            Sorted carrier
        leq : FrozenSet[Pair]
            Pairs (x, y) meaning x < y
    """
    def __init__(self, elements: Iterable[ElementId], leq: Iterable[Pair], location: str = ''):
        self.elements = check_element_ids(elements, location)
        if not self.elements:
            raise StructuralError('carrier must be nonempty', location)
        self.leq = _check_pairs(frozenset(self.elements), leq, location)


    def le(self, x: ElementId, y: ElementId) -> bool:
        return (x, y) in self.leq


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinitePreorder):
            return NotImplemented
        return self.elements == other.elements and self.leq == other.leq


    def __hash__(self) -> int:
        return hash((self.elements, self.leq))


    def __repr__(self) -> str:
        return f'{type(self).__name__}({list(self.elements)}, {sorted(self.leq)})'


class FinitePoset(FinitePreorder):
    """
    A finite relation intended to be a partial order (see validate_poset).
    """


def validate_preorder(rel: FinitePreorder) -> ValidationReport:
    """
    List every reflexivity and transitivity violation of a relation.

    Parameters
    ----------
    rel : FinitePreorder
        Candidate preorder

    Returns
    -------
    ValidationReport
        Empty iff the relation is reflexive and transitive. Transitivity
        witnesses are the missing pairs (x, z).
    """
    report = ValidationReport('preorder')

    for x in rel.elements:
        if (x, x) not in rel.leq:
            report.add('reflexivity', f'({x}, {x}) missing', (x, x))

    successors: Dict[ElementId, set] = {x: set() for x in rel.elements}
    for x, y in rel.leq:
        successors[x].add(y)

    missing = set()
    for x in rel.elements:
        for y in sorted(successors[x]):
            for z in sorted(successors[y]):
                if z not in successors[x] and (x, z) not in missing:
                    missing.add((x, z))
                    report.add('transitivity', f'({x}, {y}) and ({y}, {z}) present but ({x}, {z}) missing', (x, z))

    return report


def validate_poset(rel: FinitePreorder) -> ValidationReport:
    """
    Preorder report plus antisymmetry violations.
    """
    report = ValidationReport('poset')
    report.extend(validate_preorder(rel))

    for x, y in sorted(rel.leq):
        if x < y and (y, x) in rel.leq:
            report.add('antisymmetry', f'{x} < {y} and {y} < {x} with {x} != {y}', (x, y))

    return report


class _Masks:
    """
    Bitmask view of a finite relation: element i owns bit i.
    """
    def __init__(self, elements: Sequence[ElementId], leq: FrozenSet[Pair]):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.full = (1 << len(self.elements)) - 1
        self.down = [0] * len(self.elements)
        self.up = [0] * len(self.elements)
        for x, y in leq:
            self.down[self.index[y]] |= 1 << self.index[x]
            self.up[self.index[x]] |= 1 << self.index[y]

        # Element whose principal ideal (filter) is exactly the mask
        self.by_down: Dict[int, ElementId] = {}
        self.by_up: Dict[int, ElementId] = {}
        for i, x in enumerate(self.elements):
            self.by_down.setdefault(self.down[i], x)
            self.by_up.setdefault(self.up[i], x)


    def members(self, mask: int) -> Tuple[ElementId, ...]:
        return tuple(x for i, x in enumerate(self.elements) if mask >> i & 1)


    def mask_of(self, subset: Iterable[ElementId]) -> int:
        mask = 0
        for x in subset:
            mask |= 1 << self.index[x]
        return mask


class CompleteLattice:
    """
    A finite lattice (L, <, ∧, ∨, 0, I) given by its full order relation.

    Construction checks structure only; validate_lattice checks the laws.
    Meets and joins assume a valid lattice and raise LawViolationError on a
    corrupted one.

    Attributes
    ----------
        elements : Tuple[ElementId, ...]
            Sorted carrier
        leq : FrozenSet[Pair]
            Full reflexive-transitive relation, (x, y) meaning x < y
        top : Optional[ElementId]
            Unique maximum, None when there is none
        bottom : Optional[ElementId]
            Unique minimum, None when there is none

    Public Methods
    --------------
        le(x, y) -> bool
        meet(subset) -> ElementId
        join(subset) -> ElementId
        upset(x), downset(x) -> FrozenSet[ElementId]
        poset -> FinitePoset
    """
    def __init__(self, elements: Iterable[ElementId], leq: Iterable[Pair], location: str = ''):
        self.elements = check_element_ids(elements, location)
        if not self.elements:
            raise StructuralError('lattice carrier must be nonempty', location)
        self.leq = _check_pairs(frozenset(self.elements), leq, location)
        self._masks = _Masks(self.elements, self.leq)

        full = self._masks.full
        self.top = self._masks.by_down.get(full) if (self.top_candidates() == 1) else None
        self.bottom = self._masks.by_up.get(full) if (self.bottom_candidates() == 1) else None


    def top_candidates(self) -> int:
        return sum(1 for mask in self._masks.down if mask == self._masks.full)


    def bottom_candidates(self) -> int:
        return sum(1 for mask in self._masks.up if mask == self._masks.full)


    @property
    def poset(self) -> FinitePoset:
        return FinitePoset(self.elements, self.leq)


    def le(self, x: ElementId, y: ElementId) -> bool:
        return (x, y) in self.leq


    def _require(self, subset: Iterable[ElementId]) -> List[ElementId]:
        items = list(subset)
        for x in items:
            if x not in self._masks.index:
                raise StructuralError(f'unknown lattice element {x!r}')
        return items


    def downset(self, x: ElementId) -> FrozenSet[ElementId]:
        return frozenset(self._masks.members(self._masks.down[self._masks.index[x]]))


    def upset(self, x: ElementId) -> FrozenSet[ElementId]:
        return frozenset(self._masks.members(self._masks.up[self._masks.index[x]]))


    def _meet_of_mask(self, lower: int, subset: Sequence[ElementId]) -> ElementId:
        result = self._masks.by_down.get(lower)
        if result is None:
            raise LawViolationError(f'no greatest lower bound for {sorted(subset)}: corrupted lattice')
        return result


    def meet(self, subset: Iterable[ElementId]) -> ElementId:
        """
        Greatest x with x < s for every s in subset; meet of the empty set is top.
        """
        items = self._require(subset)
        lower = self._masks.full
        for x in items:
            lower &= self._masks.down[self._masks.index[x]]

        return self._meet_of_mask(lower, items)


    def join(self, subset: Iterable[ElementId]) -> ElementId:
        """
        Meet of the common upper bounds (Birkhoff); join of the empty set is bottom.
        """
        items = self._require(subset)
        upper = self._masks.full
        for x in items:
            upper &= self._masks.up[self._masks.index[x]]

        return self.meet(self._masks.members(upper))


    def join_direct(self, subset: Iterable[ElementId]) -> Optional[ElementId]:
        """
        Least upper bound found by scanning every upper bound. Oracle for join.
        """
        items = self._require(subset)
        uppers = [u for u in self.elements if all(self.le(x, u) for x in items)]
        least = [u for u in uppers if all(self.le(u, v) for v in uppers)]

        return least[0] if len(least) == 1 else None


    def meet_pair(self, x: ElementId, y: ElementId) -> ElementId:
        return self.meet((x, y))


    def join_pair(self, x: ElementId, y: ElementId) -> ElementId:
        return self.join((x, y))


    def __len__(self) -> int:
        return len(self.elements)


    def __iter__(self) -> Iterator[ElementId]:
        return iter(self.elements)


    def __contains__(self, x: object) -> bool:
        return x in self._masks.index


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CompleteLattice):
            return NotImplemented
        return self.elements == other.elements and self.leq == other.leq


    def __hash__(self) -> int:
        return hash((self.elements, self.leq))


    def __repr__(self) -> str:
        return f'CompleteLattice({list(self.elements)}, top={self.top!r}, bottom={self.bottom!r})'


def lattice_from_order(elements: Iterable[ElementId], le: Callable[[ElementId, ElementId], bool]) -> CompleteLattice:
    """
    Build a lattice whose relation is {(x, y) : le(x, y)}.
    """
    items = check_element_ids(elements)
    leq = [(x, y) for x in items for y in items if le(x, y)]

    return CompleteLattice(items, leq)


def is_complete_lattice(rel: FinitePreorder) -> Verdict:
    """
    Decide completeness of a finite poset: a top plus a meet for every pair.

    Parameters
    ----------
    rel : FinitePreorder
        Poset to check; order-law failures are reported as non-lattice

    Returns
    -------
    Verdict
        holds=True iff rel is a complete lattice. On failure the message is
        'not a poset', 'no top' or 'no meet', with the offending pair as witness.
    """
    poset_report = validate_poset(rel)
    if not poset_report.ok:
        first = poset_report.first()
        return Verdict(False, first.witness, f'not a poset: {first.clause}')

    masks = _Masks(rel.elements, rel.leq)

    tops = [x for i, x in enumerate(masks.elements) if masks.down[i] == masks.full]
    if not tops:
        return Verdict(False, None, 'no top')

    for x, y in combinations(masks.elements, 2):
        lower = masks.down[masks.index[x]] & masks.down[masks.index[y]]
        if lower not in masks.by_down:
            return Verdict(False, (x, y), f'no meet for ({x}, {y})')

    return Verdict(True)


def validate_lattice(lattice: CompleteLattice) -> ValidationReport:
    """
    Order laws plus completeness of a lattice.
    """
    report = ValidationReport('lattice')
    report.extend(validate_poset(lattice.poset))

    if report.ok:
        verdict = is_complete_lattice(lattice.poset)
        if not verdict:
            report.add('completeness', verdict.message, verdict.witness)

    return report


def every_subset_has_meet(rel: FinitePreorder, limit: int = ORACLE_LIMIT) -> bool:
    """
    Exponential oracle: every subset (the empty one included) has a greatest
    lower bound.

    Raises
    ------
    RefusalError
        If the carrier has more than `limit` elements
    """
    items = rel.elements
    if len(items) > limit:
        raise RefusalError(f'oracle limited to {limit} elements, got {len(items)}')

    for size in range(len(items) + 1):
        for subset in combinations(items, size):
            lower = [x for x in items if all(rel.le(x, s) for s in subset)]
            greatest = [x for x in lower if all(rel.le(y, x) for y in lower)]
            if len(greatest) != 1:
                return False

    return True


class MonotoneMap:
    """
    A total map between two lattices given by its graph.

    Construction checks totality; monotonicity is checked by is_monotone.

    Attributes
    ----------
        source : CompleteLattice
        target : CompleteLattice
        graph : Dict[ElementId, ElementId]
    """
    def __init__(self, source: CompleteLattice, target: CompleteLattice, graph: Mapping[ElementId, ElementId], location: str = ''):
        missing = [x for x in source.elements if x not in graph]
        if missing:
            raise StructuralError(f'map is not total, missing {missing}', location)
        extra = [x for x in graph if x not in source]
        if extra:
            raise StructuralError(f'map graph references unknown source elements {sorted(extra)}', location)
        outside = sorted({y for y in graph.values() if y not in target})
        if outside:
            raise StructuralError(f'map values outside the target lattice {outside}', location)

        self.source = source
        self.target = target
        self.graph = {x: graph[x] for x in source.elements}


    def __call__(self, x: ElementId) -> ElementId:
        return self.graph[x]


    def image(self, subset: Iterable[ElementId]) -> FrozenSet[ElementId]:
        return frozenset(self.graph[x] for x in subset)


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.graph == other.graph


    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.graph.items()))))


    def __repr__(self) -> str:
        return f'MonotoneMap({self.graph})'


def is_monotone(f: MonotoneMap) -> Verdict:
    """
    x < y implies f(x) < f(y); witness is the first failing pair.
    """
    for x, y in sorted(f.source.leq):
        if not f.target.le(f(x), f(y)):
            return Verdict(False, (x, y), f'{x} < {y} but {f(x)} is not below {f(y)}')

    return Verdict(True)


def identity_map(lattice: CompleteLattice) -> MonotoneMap:
    return MonotoneMap(lattice, lattice, {x: x for x in lattice.elements})


def compose_maps(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """
    g ∘ f (f first).

    Raises
    ------
    StructuralError
        If the target of f is not the source of g
    """
    if f.target != g.source:
        raise StructuralError('cannot compose: target of the first map differs from source of the second')

    return MonotoneMap(f.source, g.target, {x: g(f(x)) for x in f.source.elements})


def _preserves(f: MonotoneMap, dual: bool, limit: int) -> Verdict:
    src = f.source._masks   # pylint: disable=protected-access
    tgt = f.target._masks   # pylint: disable=protected-access
    src_bounds = src.up if dual else src.down
    tgt_bounds = tgt.up if dual else tgt.down
    src_lookup = src.by_up if dual else src.by_down
    tgt_lookup = tgt.by_up if dual else tgt.by_down
    name = 'join' if dual else 'meet'

    def check(subset_mask: int, src_fold: int, tgt_fold: int) -> Optional[Verdict]:
        extreme = src_lookup.get(src_fold)
        image_extreme = tgt_lookup.get(tgt_fold)
        if extreme is None or image_extreme is None:
            raise LawViolationError(f'{name} missing while checking preservation: corrupted lattice')
        if f(extreme) != image_extreme:
            subset = src.members(subset_mask)
            return Verdict(False, subset, f'f({name}{list(subset)}) = {f(extreme)} but {name} of images = {image_extreme}')
        return None

    n = len(src.elements)
    image_bounds = [tgt_bounds[tgt.index[f(x)]] for x in src.elements]

    if n <= limit:
        src_folds = [src.full] * (1 << n)
        tgt_folds = [tgt.full] * (1 << n)
        for mask in range(1 << n):
            if mask:
                low = (mask & -mask).bit_length() - 1
                rest = mask & (mask - 1)
                src_folds[mask] = src_folds[rest] & src_bounds[low]
                tgt_folds[mask] = tgt_folds[rest] & image_bounds[low]
            failure = check(mask, src_folds[mask], tgt_folds[mask])
            if failure is not None:
                return failure
        return Verdict(True)

    failure = check(0, src.full, tgt.full)
    if failure is not None:
        return failure
    for i in range(n):
        for j in range(i, n):
            mask = (1 << i) | (1 << j)
            failure = check(mask, src_bounds[i] & src_bounds[j], image_bounds[i] & image_bounds[j])
            if failure is not None:
                return failure

    return Verdict(True)


def preserves_meets(n: MonotoneMap, limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> Verdict:
    """
    n(∧S) = ∧n(S) for every subset S of the source.

    Parameters
    ----------
    n : MonotoneMap
        Map between valid lattices
    limit : int
        Every subset is checked when the source has at most this many
        elements; otherwise pairs and the empty set, which suffices for
        finite lattices

    Returns
    -------
    Verdict
        Witness is the first failing subset
    """
    return _preserves(n, dual=False, limit=limit)


def preserves_joins(f: MonotoneMap, limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> Verdict:
    """
    f(∨S) = ∨f(S) for every subset S of the source (dual of preserves_meets).
    """
    return _preserves(f, dual=True, limit=limit)


def all_monotone_maps(source: CompleteLattice, target: CompleteLattice) -> Iterator[MonotoneMap]:
    """
    Enumerate every monotone map source -> target.

    Elements are assigned in order of increasing ideal size, so each choice
    only ranges over elements above the images of everything already below.
    """
    order = sorted(source.elements, key=lambda x: (len(source.downset(x)), x))
    below = {x: [y for y in source.downset(x) if y != x] for x in order}
    graph: Dict[ElementId, ElementId] = {}

    def assign(position: int) -> Iterator[MonotoneMap]:
        if position == len(order):
            yield MonotoneMap(source, target, dict(graph))
            return
        x = order[position]
        for candidate in target.elements:
            if all(target.le(graph[y], candidate) for y in below[x]):
                graph[x] = candidate
                yield from assign(position + 1)
        graph.pop(x, None)

    yield from assign(0)


def iter_subset_meets(lattice: CompleteLattice, items: Sequence[ElementId], limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> Iterator[Tuple[Tuple[ElementId, ...], ElementId]]:
    """
    Yield (subset, meet) for the nonempty subsets of items.

    Every nonempty subset is produced when there are at most `limit` items,
    otherwise singletons and pairs only (finite meets are iterated pairwise
    meets).
    """
    masks = lattice._masks   # pylint: disable=protected-access
    items = list(items)
    bounds = [masks.down[masks.index[x]] for x in items]
    n = len(items)

    if n <= limit:
        folds = [masks.full] * (1 << n)
        for mask in range(1, 1 << n):
            low = (mask & -mask).bit_length() - 1
            folds[mask] = folds[mask & (mask - 1)] & bounds[low]
            subset = tuple(items[i] for i in range(n) if mask >> i & 1)
            yield subset, lattice._meet_of_mask(folds[mask], subset)   # pylint: disable=protected-access
        return

    for i in range(n):
        for j in range(i, n):
            subset = (items[i],) if i == j else (items[i], items[j])
            yield subset, lattice._meet_of_mask(bounds[i] & bounds[j], subset)   # pylint: disable=protected-access
