"""
Functors Between Systems, Closure Spaces and Based Complete Lattices

    F: SP -> Cls     (Σ, L, ξ) ↦ (Σ, κ(L)),           (m, n) ↦ m
    G: Cls -> SP     (Z, 𝒢) ↦ ((Z, 𝒢 under ⊆), ∈),     m ↦ (m, m⁻¹)
    H: SP -> L0      (Σ, L, ξ) ↦ (s_ξ(Σ), L),          (m, n) ↦ n⋆
    K: L0 -> SP      (Σ, L) ↦ (Σ, L, [p, I]),          f ↦ (f|Σ, f∗)

F∘G and H∘K are identities on the nose; ε = (id, κ): GF -> Id and
η = (s_ξ, id): Id -> KH are natural isomorphisms (η on state-determined
systems only).

G names each closed set by its set token, so points used with G may not
contain the set-token characters.

Functions:
    Public:
        validate_bcl, check_bcl_morphism: Based complete lattice checks
        identity_bcl_morphism, compose_bcl_morphisms
        functor_F, functor_F_morphism
        functor_G, functor_G_morphism
        functor_H, functor_H_morphism
        functor_K, functor_K_morphism
        counit_epsilon, unit_eta
"""

# Python Standard Library
import logging
from typing import Dict, FrozenSet, Iterable

# Local
from src.models.model_closure import ClosureSpace
from src.models.model_closure import PointMap
from src.models.model_closure import is_continuous
from src.models.model_closure import preimage
from src.models.model_closure import set_token
from src.models.model_galois import lower_adjoint
from src.models.model_galois import upper_adjoint
from src.models.model_order import CompleteLattice
from src.models.model_order import ElementId
from src.models.model_order import MonotoneMap
from src.models.model_order import compose_maps
from src.models.model_order import identity_map
from src.models.model_order import lattice_from_order
from src.models.model_order import preserves_joins
from src.models.model_order import validate_lattice
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import is_isomorphism
from src.models.model_spsys import is_state_determined
from src.models.model_spsys import kappa_map
from src.models.model_spsys import strongest_property
from src.utils.utils_constants import SET_CLOSE
from src.utils.utils_constants import SET_DELIMITER
from src.utils.utils_constants import SET_OPEN
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import ValidationReport










logger = logging.getLogger(__name__)


class BasedCompleteLattice:
    """
    A complete lattice with a distinguished subset of base elements.

    Attributes
    ----------
        lattice : CompleteLattice
        base : Tuple[ElementId, ...]
            Sorted base Σ ⊆ L
    """
    def __init__(self, lattice: CompleteLattice, base: Iterable[ElementId], location: str = ''):
        members = sorted(set(base))
        unknown = [x for x in members if x not in lattice]
        if unknown:
            raise StructuralError(f'base references unknown lattice elements {unknown}', location)

        self.lattice = lattice
        self.base = tuple(members)


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BasedCompleteLattice):
            return NotImplemented
        return self.lattice == other.lattice and self.base == other.base


    def __hash__(self) -> int:
        return hash((self.lattice, self.base))


    def __repr__(self) -> str:
        return f'BasedCompleteLattice(base={list(self.base)}, |L|={len(self.lattice)})'


def validate_bcl(bcl: BasedCompleteLattice) -> ValidationReport:
    """
    Lattice laws, 0 ∉ Σ and a = ∨{x ∈ Σ : x < a} for every a.
    """
    report = ValidationReport('bcl')
    lattice_report = validate_lattice(bcl.lattice)
    report.extend(lattice_report, prefix='lattice.')
    if not lattice_report.ok:
        return report

    lattice = bcl.lattice
    if lattice.bottom in bcl.base:
        report.add('zero_in_base', f'{lattice.bottom} is the bottom and lies in the base', lattice.bottom)

    for a in lattice.elements:
        below = [x for x in bcl.base if lattice.le(x, a)]
        generated = lattice.join(below)
        if generated != a:
            report.add('order_generating', f'join of base elements below {a} is {generated}', a)

    return report


class BCLMorphism:
    """
    A morphism f: (Σ′, L′) -> (Σ, L) of based complete lattices, carried by
    a map f: L′ -> L.

    Attributes
    ----------
        source : BasedCompleteLattice
            (Σ′, L′)
        target : BasedCompleteLattice
            (Σ, L)
        f : MonotoneMap
            L′ -> L
    """
    def __init__(self, source: BasedCompleteLattice, target: BasedCompleteLattice, f: MonotoneMap, location: str = ''):
        if f.source != source.lattice or f.target != target.lattice:
            raise StructuralError('map carriers must be the source lattice L′ and the target lattice L', location)

        self.source = source
        self.target = target
        self.f = f


    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BCLMorphism):
            return NotImplemented
        return self.source == other.source and self.target == other.target and self.f == other.f


    def __hash__(self) -> int:
        return hash((self.source, self.target, self.f))


    def __repr__(self) -> str:
        return f'BCLMorphism({self.f.graph})'


def check_bcl_morphism(candidate: BCLMorphism) -> ValidationReport:
    """
    f(Σ′) ⊆ Σ and f preserves every join.
    """
    report = ValidationReport('bcl_morphism')
    target_base = set(candidate.target.base)

    for x in candidate.source.base:
        if candidate.f(x) not in target_base:
            report.add('base_preservation', f'f({x}) = {candidate.f(x)} is not a base element of the target', x)

    joins = preserves_joins(candidate.f)
    if not joins:
        report.add('join_preservation', joins.message, joins.witness)

    return report


def identity_bcl_morphism(bcl: BasedCompleteLattice) -> BCLMorphism:
    return BCLMorphism(bcl, bcl, identity_map(bcl.lattice))


def compose_bcl_morphisms(first: BCLMorphism, second: BCLMorphism) -> BCLMorphism:
    """
    second ∘ first.
    """
    if first.target != second.source:
        raise StructuralError('cannot compose: target of the first morphism differs from source of the second')

    return BCLMorphism(first.source, second.target, compose_maps(first.f, second.f))


def functor_F(system: StatePropertySystem) -> ClosureSpace: # pylint: disable=invalid-name
    """
    (Σ, {κ(a) : a ∈ L}).

    Raises
    ------
    LawViolationError
        If κ is not injective, which a validated system rules out
    """
    kappa = kappa_map(system)
    images = set(kappa.values())
    if len(images) != len(kappa):
        raise LawViolationError('Cartan map is not injective: system is not a valid state property system')

    return ClosureSpace(system.states, images)


def functor_F_morphism(f: SPMorphism) -> PointMap: # pylint: disable=invalid-name
    """
    F(m, n) = m: F(Σ′, L′, ξ′) -> F(Σ, L, ξ).
    """
    return PointMap(functor_F(f.source), functor_F(f.target), f.m)


def _check_token_safe(space: ClosureSpace) -> None:
    reserved = (SET_OPEN, SET_CLOSE, SET_DELIMITER)
    for x in space.points:
        if any(ch in x for ch in reserved):
            raise StructuralError(f'point id {x!r} contains a reserved set-token character')


def functor_G(space: ClosureSpace) -> StatePropertySystem: # pylint: disable=invalid-name
    """
    Closed sets under inclusion as properties; ξ(p) = {F ∈ 𝒢 : p ∈ F}.
    """
    _check_token_safe(space)
    closed: Dict[ElementId, FrozenSet[ElementId]] = {set_token(s): frozenset(s) for s in space.closed_sets}
    lattice = lattice_from_order(closed, lambda a, b: closed[a] <= closed[b])
    xi = {p: {token for token, members in closed.items() if p in members} for p in space.points}

    return StatePropertySystem(space.points, lattice, xi)


def functor_G_morphism(m: PointMap) -> SPMorphism: # pylint: disable=invalid-name
    """
    G(m) = (m, m⁻¹): G(source) -> G(target).

    Raises
    ------
    RefusalError
        If m is not continuous
    """
    verdict = is_continuous(m)
    if not verdict:
        raise RefusalError(f'map is not continuous: {verdict.message}', verdict)

    n = {set_token(closed): set_token(preimage(m, closed)) for closed in m.target.closed_sets}

    return SPMorphism(functor_G(m.source), functor_G(m.target), m.graph, n)


def counit_epsilon(system: StatePropertySystem) -> SPMorphism:
    """
    ε = (id, κ): GF(S) -> S.

    Raises
    ------
    LawViolationError
        If ε is not an isomorphism
    """
    kappa = kappa_map(system)
    epsilon = SPMorphism(
        functor_G(functor_F(system)),
        system,
        {p: p for p in system.states},
        {a: set_token(states) for a, states in kappa.items()}
    )

    verdict = is_isomorphism(epsilon)
    if not verdict:
        raise LawViolationError(f'counit is not an isomorphism: {verdict.message}', verdict)

    return epsilon


def functor_H(system: StatePropertySystem) -> BasedCompleteLattice: # pylint: disable=invalid-name
    """
    (s_ξ(Σ), L).
    """
    return BasedCompleteLattice(system.lattice, {strongest_property(system, p) for p in system.states})


def functor_H_morphism(f: SPMorphism) -> BCLMorphism: # pylint: disable=invalid-name
    """
    H(m, n) = n⋆: H(source) -> H(target).

    Raises
    ------
    LawViolationError
        If n has no lower adjoint, which a valid morphism rules out
    """
    lower = lower_adjoint(f.n_map)
    if lower is None:
        raise LawViolationError('n does not preserve meets: morphism is not valid')

    return BCLMorphism(functor_H(f.source), functor_H(f.target), lower)


def functor_K(bcl: BasedCompleteLattice) -> StatePropertySystem: # pylint: disable=invalid-name
    """
    States are the base elements; ξ(p) = [p, I].
    """
    lattice = bcl.lattice
    return StatePropertySystem(bcl.base, lattice, {p: lattice.upset(p) for p in bcl.base})


def functor_K_morphism(f: BCLMorphism) -> SPMorphism: # pylint: disable=invalid-name
    """
    K(f) = (f restricted to the bases, f∗): K(source) -> K(target).

    Raises
    ------
    RefusalError
        If f has no upper adjoint (f does not preserve joins)
    """
    upper = upper_adjoint(f.f)
    if upper is None:
        raise RefusalError('map does not preserve joins: not a morphism of based complete lattices', preserves_joins(f.f))

    return SPMorphism(functor_K(f.source), functor_K(f.target), {p: f.f(p) for p in f.source.base}, upper.graph)


def unit_eta(system: StatePropertySystem) -> SPMorphism:
    """
    η = (s_ξ, id): S -> KH(S).

    Raises
    ------
    RefusalError
        If the system is not state-determined (s_ξ is not injective)
    LawViolationError
        If η is not an isomorphism
    """
    determined = is_state_determined(system)
    if not determined:
        raise RefusalError(f'system is not state-determined: {determined.message}', determined)

    eta = SPMorphism(
        system,
        functor_K(functor_H(system)),
        {p: strongest_property(system, p) for p in system.states},
        {a: a for a in system.lattice.elements}
    )

    verdict = is_isomorphism(eta)
    if not verdict:
        raise LawViolationError(f'unit is not an isomorphism: {verdict.message}', verdict)

    return eta
