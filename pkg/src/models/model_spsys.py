"""
State Property Systems

State property systems (Σ, L, ξ), the Cartan map κ, morphisms (m, n) with
their covariance law, state determination and the strongest-property map
s_ξ.

The state preorder is never stored: p < q holds iff ξ(q) ⊆ ξ(p).

Morphisms keep the orientation (m, n): (Σ′, L′, ξ′) -> (Σ, L, ξ) with
m: Σ′ -> Σ forward on states and n: L -> L′ backward on properties.

Functions:
    Public:
        validate_sps: Report on the four defining clauses
        cartan_map, kappa_map: κ(a) = {p : a ∈ ξ(p)}
        cartan_space: The closure space (Σ, κ(L))
        state_preorder: Derived preorder
        is_state_determined: ξ injective, cross-checked two other ways
        state_determination_checks: The three equivalent checks
        strongest_property: s_ξ(p) = ∧ξ(p)
        dedupe_states: Keep one state per actual-property set
        check_morphism: Covariance report plus derived facts
        identity_morphism, compose_morphisms, inverse_morphism
        is_isomorphism: Bijectivity of m and n with a validated inverse
        relabel_system: Renamed copy with the isomorphism back
        duplicate_state: Copy of a state with its collapsing morphism
"""

# Python Standard Library
import logging
from typing import Dict, FrozenSet, Iterable, Mapping, Tuple

# Local
from src.config import SUBSET_EXHAUSTIVE_LIMIT
from src.models.model_closure import ClosureSpace
from src.models.model_closure import is_T0
from src.models.model_order import CompleteLattice
from src.models.model_order import ElementId
from src.models.model_order import FinitePreorder
from src.models.model_order import MonotoneMap
from src.models.model_order import check_element_ids
from src.models.model_order import check_id_collection
from src.models.model_order import iter_subset_meets
from src.models.model_order import preserves_meets
from src.models.model_order import validate_lattice
from src.models.model_order import validate_poset
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import ValidationReport
from src.utils.utils_report import Verdict










logger = logging.getLogger(__name__)


class StatePropertySystem:
    """
    A triple (Σ, L, ξ).

    Construction checks structure (ξ total, properties known); validate_sps
    checks the defining clauses.

    Attributes
    ----------
        states : Tuple[ElementId, ...]
            Sorted states Σ
        lattice : CompleteLattice
            Property lattice L
        xi : Dict[ElementId, FrozenSet[ElementId]]
            Actual properties of each state
    """
    def __init__(self, states: Iterable[ElementId], lattice: CompleteLattice, xi: Mapping[ElementId, Iterable[ElementId]], location: str = ''):
        self.states = check_element_ids(states, f'{location}.states' if location else 'states')
        if not self.states:
            raise StructuralError('state set must be nonempty', location)

        missing = [p for p in self.states if p not in xi]
        if missing:
            raise StructuralError(f'ξ is not total, missing states {missing}', location)
        extra = sorted(p for p in xi if p not in self.states)
        if extra:
            raise StructuralError(f'ξ references unknown states {extra}', location)

        self.lattice = lattice
        self.xi: Dict[ElementId, FrozenSet[ElementId]] = {}
        for p in self.states:
            actual = check_id_collection(xi[p], f'{location}.xi.{p}' if location else f'xi.{p}')
            unknown = sorted(a for a in actual if a not in lattice)
            if unknown:
                raise StructuralError(f'ξ({p}) references unknown properties {unknown}', location)
            self.xi[p] = actual


    def actual(self, p: ElementId) -> FrozenSet[ElementId]:
        if p not in self.xi:
            raise StructuralError(f'unknown state {p!r}')
        return self.xi[p]


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StatePropertySystem):
            return NotImplemented
        return self.states == other.states and self.lattice == other.lattice and self.xi == other.xi


    def __hash__(self) -> int:
        return hash((self.states, self.lattice, tuple(sorted(self.xi.items()))))


    def __repr__(self) -> str:
        return f'StatePropertySystem({list(self.states)}, |L|={len(self.lattice)})'


def kappa_map(system: StatePropertySystem) -> Dict[ElementId, FrozenSet[ElementId]]:
    """
    κ for every property at once.
    """
    kappa: Dict[ElementId, set] = {a: set() for a in system.lattice.elements}
    for p in system.states:
        for a in system.xi[p]:
            kappa[a].add(p)

    return {a: frozenset(states) for a, states in kappa.items()}


def cartan_map(system: StatePropertySystem, a: ElementId) -> FrozenSet[ElementId]:
    """
    κ(a) = {p ∈ Σ : a ∈ ξ(p)}.

    Raises
    ------
    StructuralError
        If a is not a property of the system
    """
    if a not in system.lattice:
        raise StructuralError(f'unknown property {a!r}')

    return frozenset(p for p in system.states if a in system.xi[p])


def cartan_space(system: StatePropertySystem) -> ClosureSpace:
    """
    (Σ, {κ(a) : a ∈ L}).
    """
    return ClosureSpace(system.states, kappa_map(system).values())


def validate_sps(system: StatePropertySystem, limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> ValidationReport:
    """
    Check the defining clauses of a state property system.

    Parameters
    ----------
    system : StatePropertySystem
        Candidate system
    limit : int
        Meet-closure of ξ(p) is checked over every subset when |ξ(p)| is at
        most this, otherwise over pairs

    Returns
    -------
    ValidationReport
        Clauses: lattice.*, top, bottom, meet_closure, strongest_property,
        property_order. strongest_property witnesses are (p, ∧ξ(p)).
        property_order witnesses are (a, b, r) when a < b but r has a
        without b, and (a, b) when the order misses an implication.
    """
    report = ValidationReport('sps')
    lattice = system.lattice

    lattice_report = validate_lattice(lattice)
    report.extend(lattice_report, prefix='lattice.')
    if not lattice_report.ok:
        return report

    top, bottom = lattice.top, lattice.bottom

    for p in system.states:
        actual = system.xi[p]

        if top not in actual:
            report.add('top', f'{top} ∉ ξ({p})', p)

        if bottom in actual:
            report.add('bottom', f'{bottom} ∈ ξ({p})', p)

        for subset, meet in iter_subset_meets(lattice, sorted(actual), limit):
            if meet not in actual:
                report.add('meet_closure', f'∧{list(subset)} = {meet} ∉ ξ({p})', (p, list(subset)))
                break

        strongest = lattice.meet(actual)
        if strongest == bottom or strongest not in actual:
            report.add('strongest_property', f's_ξ({p}) = ∧ξ({p}) = {strongest} is not a nonzero member of ξ({p})', (p, strongest))

    kappa = kappa_map(system)
    for a in lattice.elements:
        for b in lattice.elements:
            implied = kappa[a] <= kappa[b]
            ordered = lattice.le(a, b)
            if ordered and not implied:
                r = sorted(kappa[a] - kappa[b])[0]
                report.add('property_order', f'{a} < {b} but {b} ∉ ξ({r}) while {a} ∈ ξ({r})', (a, b, r))
            elif implied and not ordered:
                report.add('property_order', f'every state with {a} has {b} but {a} is not below {b}', (a, b))

    return report


def state_preorder(system: StatePropertySystem) -> FinitePreorder:
    """
    {(p, q) : ξ(q) ⊆ ξ(p)}.
    """
    xi = system.xi
    leq = [(p, q) for p in system.states for q in system.states if xi[q] <= xi[p]]

    return FinitePreorder(system.states, leq)


def state_determination_checks(system: StatePropertySystem) -> Dict[str, Verdict]:
    """
    The three equivalent formulations of state determination.

    Returns
    -------
    Dict[str, Verdict]
        'xi_injective', 'preorder_antisymmetric' and 'closure_T0'
    """
    seen: Dict[FrozenSet[ElementId], ElementId] = {}
    injective = Verdict(True)
    for p in system.states:
        if system.xi[p] in seen:
            injective = Verdict(False, (seen[system.xi[p]], p), f'ξ({seen[system.xi[p]]}) = ξ({p})')
            break
        seen[system.xi[p]] = p

    poset_report = validate_poset(state_preorder(system))
    antisymmetry = [v for v in poset_report if v.clause == 'antisymmetry']
    if antisymmetry:
        antisymmetric = Verdict(False, antisymmetry[0].witness, antisymmetry[0].message)
    else:
        antisymmetric = Verdict(True)

    return {
        'xi_injective': injective,
        'preorder_antisymmetric': antisymmetric,
        'closure_T0': is_T0(cartan_space(system)),
    }


def is_state_determined(system: StatePropertySystem) -> Verdict:
    """
    ξ injective; the witness is a pair of states with equal ξ.

    Raises
    ------
    LawViolationError
        If ξ-injectivity, antisymmetry of the state preorder and T0 of the
        Cartan closure space disagree
    """
    checks = state_determination_checks(system)
    outcomes = {name: verdict.holds for name, verdict in checks.items()}
    if len(set(outcomes.values())) != 1:
        raise LawViolationError(f'state-determination checks disagree: {outcomes}', checks)

    return checks['xi_injective']


def strongest_property(system: StatePropertySystem, p: ElementId) -> ElementId:
    """
    s_ξ(p) = ∧ξ(p).
    """
    return system.lattice.meet(system.actual(p))


def dedupe_states(system: StatePropertySystem) -> StatePropertySystem:
    """
    Keep the least state of each class of states with equal ξ.
    """
    kept: Dict[FrozenSet[ElementId], ElementId] = {}
    for p in system.states:
        kept.setdefault(system.xi[p], p)

    states = sorted(kept.values())
    return StatePropertySystem(states, system.lattice, {p: system.xi[p] for p in states})


class SPMorphism:
    """
    A morphism (m, n): (Σ′, L′, ξ′) -> (Σ, L, ξ).

    Attributes
    ----------
        source : StatePropertySystem
            (Σ′, L′, ξ′)
        target : StatePropertySystem
            (Σ, L, ξ)
        m : Dict[ElementId, ElementId]
            States of the source to states of the target
        n : Dict[ElementId, ElementId]
            Properties of the target to properties of the source
    """
    def __init__(self, source: StatePropertySystem, target: StatePropertySystem, m: Mapping[ElementId, ElementId], n: Mapping[ElementId, ElementId], location: str = ''):
        missing = [p for p in source.states if p not in m]
        if missing:
            raise StructuralError(f'm is not total on the source states, missing {missing}', location)
        extra = sorted(p for p in m if p not in source.states)
        if extra:
            raise StructuralError(f'm references unknown source states {extra}', location)
        outside = sorted({q for q in m.values() if q not in target.states})
        if outside:
            raise StructuralError(f'm values are not target states: {outside}', location)

        target_props = set(target.lattice.elements)
        source_props = set(source.lattice.elements)
        n_keys = set(n)
        if n_keys != target_props and n_keys == source_props:
            raise StructuralError(
                'n runs the wrong way: it must map the target properties L to the source properties L′ '
                '(contravariant), but its keys are the source properties',
                location
            )
        self.n_map = MonotoneMap(target.lattice, source.lattice, n, location)

        self.source = source
        self.target = target
        self.m = {p: m[p] for p in source.states}
        self.n = dict(self.n_map.graph)


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SPMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.m == other.m and self.n == other.n)


    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(sorted(self.m.items())), tuple(sorted(self.n.items()))))


    def __repr__(self) -> str:
        return f'SPMorphism(m={self.m}, n={self.n})'


def check_morphism(f: SPMorphism) -> ValidationReport:
    """
    Covariance a ∈ ξ(m(p′)) ⇔ n(a) ∈ ξ′(p′) for every a ∈ L and p′ ∈ Σ′,
    plus the facts every morphism satisfies.

    Returns
    -------
    ValidationReport
        Clauses: covariance (witness (a, p′)), meet_preservation,
        top, bottom, state_monotonicity
    """
    report = ValidationReport('sp_morphism')
    source, target = f.source, f.target

    for a in target.lattice.elements:
        for p in source.states:
            forward = a in target.xi[f.m[p]]
            backward = f.n[a] in source.xi[p]
            if forward != backward:
                report.add(
                    'covariance',
                    f'{a} {"∈" if forward else "∉"} ξ(m({p})) but n({a}) = {f.n[a]} {"∈" if backward else "∉"} ξ′({p})',
                    (a, p)
                )

    meets = preserves_meets(f.n_map)
    if not meets:
        report.add('meet_preservation', meets.message, meets.witness)

    if f.n[target.lattice.top] != source.lattice.top:
        report.add('top', f'n({target.lattice.top}) = {f.n[target.lattice.top]} is not the top of L′', target.lattice.top)

    if f.n[target.lattice.bottom] != source.lattice.bottom:
        report.add('bottom', f'n({target.lattice.bottom}) = {f.n[target.lattice.bottom]} is not the bottom of L′', target.lattice.bottom)

    for p in source.states:
        for q in source.states:
            if source.xi[q] <= source.xi[p] and not target.xi[f.m[q]] <= target.xi[f.m[p]]:
                report.add('state_monotonicity', f'{p} < {q} but m({p}) is not below m({q})', (p, q))

    return report


def identity_morphism(system: StatePropertySystem) -> SPMorphism:
    return SPMorphism(
        system,
        system,
        {p: p for p in system.states},
        {a: a for a in system.lattice.elements}
    )


def compose_morphisms(f: SPMorphism, g: SPMorphism) -> SPMorphism:
    """
    g ∘ f = (m_g ∘ m_f, n_f ∘ n_g) for f: A -> B and g: B -> C.

    Raises
    ------
    StructuralError
        If the target of f is not the source of g
    """
    if f.target != g.source:
        raise StructuralError('cannot compose: target of the first morphism differs from source of the second')

    return SPMorphism(
        f.source,
        g.target,
        {p: g.m[f.m[p]] for p in f.source.states},
        {a: f.n[g.n[a]] for a in g.target.lattice.elements}
    )


def _invert(graph: Mapping[ElementId, ElementId]) -> Dict[ElementId, ElementId]:
    return {value: key for key, value in graph.items()}


def inverse_morphism(f: SPMorphism) -> SPMorphism:
    """
    (m⁻¹, n⁻¹) for bijective m and n.
    """
    if len(set(f.m.values())) != len(f.target.states) or len(f.m) != len(f.target.states):
        raise StructuralError('m is not a bijection')
    if len(set(f.n.values())) != len(f.source.lattice) or len(f.n) != len(f.source.lattice):
        raise StructuralError('n is not a bijection')

    return SPMorphism(f.target, f.source, _invert(f.m), _invert(f.n))


def is_isomorphism(f: SPMorphism) -> Verdict:
    """
    m and n bijective. When they are, the inverse is built and validated and
    returned as the witness.

    Raises
    ------
    LawViolationError
        If the inverse of a bijective pair fails check_morphism
    """
    images = set(f.m.values())
    if len(images) != len(f.m):
        return Verdict(False, 'm', 'm is not injective')
    if len(images) != len(f.target.states):
        return Verdict(False, 'm', 'm is not surjective')

    values = set(f.n.values())
    if len(values) != len(f.n):
        return Verdict(False, 'n', 'n is not injective')
    if len(values) != len(f.source.lattice):
        return Verdict(False, 'n', 'n is not surjective')

    inverse = inverse_morphism(f)
    report = check_morphism(inverse)
    if not report.ok:
        raise LawViolationError('inverse of a bijective morphism fails validation', report)

    return Verdict(True, inverse)


def relabel_system(system: StatePropertySystem, states: Mapping[ElementId, ElementId], properties: Mapping[ElementId, ElementId]) -> Tuple[StatePropertySystem, SPMorphism]:
    """
    Copy of a system with renamed states and properties.

    Parameters
    ----------
    system : StatePropertySystem
        Original system S
    states, properties : Mapping[ElementId, ElementId]
        Injective renamings of the states and of the properties of S

    Returns
    -------
    Tuple[StatePropertySystem, SPMorphism]
        The renamed system T and the isomorphism T -> S
    """
    if len(set(states.values())) != len(system.states) or len(set(properties.values())) != len(system.lattice):
        raise StructuralError('renamings must be injective and total')

    lattice = system.lattice
    renamed_lattice = CompleteLattice(
        [properties[a] for a in lattice.elements],
        [(properties[a], properties[b]) for a, b in lattice.leq]
    )
    renamed = StatePropertySystem(
        [states[p] for p in system.states],
        renamed_lattice,
        {states[p]: {properties[a] for a in system.xi[p]} for p in system.states}
    )
    iso = SPMorphism(renamed, system, _invert(states), dict(properties))

    return renamed, iso


def duplicate_state(system: StatePropertySystem, p: ElementId, copy: ElementId) -> Tuple[StatePropertySystem, SPMorphism]:
    """
    Add a state `copy` with ξ(copy) = ξ(p).

    Returns
    -------
    Tuple[StatePropertySystem, SPMorphism]
        The enlarged system and the morphism collapsing the copy onto p
    """
    if copy in system.xi:
        raise StructuralError(f'state {copy!r} already exists')

    xi = dict(system.xi)
    xi[copy] = system.actual(p)
    enlarged = StatePropertySystem(list(system.states) + [copy], system.lattice, xi)
    collapse = SPMorphism(
        enlarged,
        system,
        {q: (p if q == copy else q) for q in enlarged.states},
        {a: a for a in system.lattice.elements}
    )

    return enlarged, collapse
