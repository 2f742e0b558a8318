"""
Products of State Property Systems

The product P of S1 and S2 has states Σ1 × Σ2 and properties the pairs of
nonzero properties plus one fresh bottom '0'. Pairs are ordered
componentwise; ξ(p1, p2) = ξ1(p1) × ξ2(p2). Projections are
s_i = (π_i, ι_i) with ι_1(a) = (a, I2) and ι_1(0) = 0, symmetrically ι_2.

Read with arrows reversed (n as the forward map) the same construction is a
coproduct: the ι_i act as injections into the lattice of P.

Pair ids join the component ids with PAIR_SEPARATOR, which component ids
may therefore not contain.

Functions:
    Public:
        product_of: Product of a list of exactly two factors
        sp_product: Product of two systems with its projections
        product_meet: Meet by the component case split
        mediating_morphism: The factorization (m, n) through P
        is_factorization: One candidate against the projection equations
        verify_universal_property: Exhaustive uniqueness check
"""

# Python Standard Library
import logging
from dataclasses import dataclass
from itertools import product as cartesian
from typing import Any, Dict, List, Sequence, Tuple

# Local
from src.config import UNIVERSAL_MAX_CANDIDATES
from src.config import UNIVERSAL_MAX_SOURCE_PROPERTIES
from src.config import UNIVERSAL_MAX_SOURCE_STATES
from src.models.model_order import ElementId
from src.models.model_order import lattice_from_order
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import check_morphism
from src.models.model_spsys import compose_morphisms
from src.utils.utils_constants import PAIR_SEPARATOR
from src.utils.utils_constants import ZERO_ID
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import Verdict










logger = logging.getLogger(__name__)


def pair_id(left: ElementId, right: ElementId) -> ElementId:
    return f'{left}{PAIR_SEPARATOR}{right}'


def split_pair(token: ElementId) -> Tuple[ElementId, ElementId]:
    left, right = token.split(PAIR_SEPARATOR)
    return left, right


@dataclass(frozen=True)
class ProductWitness:
    """
    A product with its projections.

    Attributes
    ----------
    product : StatePropertySystem
        P
    projections : Tuple[SPMorphism, SPMorphism]
        s1: P -> S1 and s2: P -> S2
    factors : Tuple[StatePropertySystem, StatePropertySystem]
        S1 and S2
    """
    product: StatePropertySystem
    projections: Tuple[SPMorphism, SPMorphism]
    factors: Tuple[StatePropertySystem, StatePropertySystem]


def _check_separator(system: StatePropertySystem, position: int) -> None:
    for token in list(system.states) + list(system.lattice.elements):
        if PAIR_SEPARATOR in token:
            raise StructuralError(f'id {token!r} contains the reserved separator {PAIR_SEPARATOR!r}', f'factors[{position}]')


def product_of(factors: Sequence[StatePropertySystem]) -> ProductWitness:
    """
    Product of exactly two factors.

    Raises
    ------
    StructuralError
        On a factor count other than two or a factor id containing the
        pair separator
    """
    if len(factors) != 2:
        raise StructuralError(f'product needs exactly two factors, got {len(factors)}')

    first, second = factors
    for position, system in enumerate(factors):
        _check_separator(system, position)

    l1, l2 = first.lattice, second.lattice
    pairs = {
        pair_id(a1, a2): (a1, a2)
        for a1 in l1.elements if a1 != l1.bottom
        for a2 in l2.elements if a2 != l2.bottom
    }

    def le(x: ElementId, y: ElementId) -> bool:
        if x == ZERO_ID:
            return True
        if y == ZERO_ID:
            return False
        (x1, x2), (y1, y2) = pairs[x], pairs[y]
        return l1.le(x1, y1) and l2.le(x2, y2)

    lattice = lattice_from_order(list(pairs) + [ZERO_ID], le)

    states = [pair_id(p1, p2) for p1 in first.states for p2 in second.states]
    xi = {
        pair_id(p1, p2): {pair_id(a1, a2) for a1 in first.xi[p1] for a2 in second.xi[p2]}
        for p1 in first.states for p2 in second.states
    }
    result = StatePropertySystem(states, lattice, xi)

    def injection(own_bottom: ElementId, other_top: ElementId, left: bool) -> Dict[ElementId, ElementId]:
        own = l1 if left else l2
        return {
            a: ZERO_ID if a == own_bottom else (pair_id(a, other_top) if left else pair_id(other_top, a))
            for a in own.elements
        }

    s1 = SPMorphism(result, first, {pair_id(p1, p2): p1 for p1 in first.states for p2 in second.states}, injection(l1.bottom, l2.top, True))
    s2 = SPMorphism(result, second, {pair_id(p1, p2): p2 for p1 in first.states for p2 in second.states}, injection(l2.bottom, l1.top, False))
    logger.debug('built product with %d states and %d properties', len(states), len(lattice))

    return ProductWitness(result, (s1, s2), (first, second))


def sp_product(first: StatePropertySystem, second: StatePropertySystem) -> ProductWitness:
    return product_of([first, second])


def product_meet(witness: ProductWitness, x: ElementId, y: ElementId) -> ElementId:
    """
    (a1, a2) ∧ (b1, b2) = (a1 ∧ b1, a2 ∧ b2) when both components are
    nonzero, 0 otherwise.
    """
    if ZERO_ID in (x, y):
        return ZERO_ID

    l1, l2 = witness.factors[0].lattice, witness.factors[1].lattice
    (x1, x2), (y1, y2) = split_pair(x), split_pair(y)
    m1, m2 = l1.meet_pair(x1, y1), l2.meet_pair(x2, y2)
    if m1 == l1.bottom or m2 == l2.bottom:
        return ZERO_ID

    return pair_id(m1, m2)


def _check_legs(witness: ProductWitness, f1: SPMorphism, f2: SPMorphism) -> None:
    if f1.source != f2.source:
        raise StructuralError('the two morphisms must share their source')
    if f1.target != witness.factors[0] or f2.target != witness.factors[1]:
        raise StructuralError('morphism targets must be the factors of the product, in order')


def mediating_morphism(witness: ProductWitness, f1: SPMorphism, f2: SPMorphism) -> SPMorphism:
    """
    The morphism (m, n): Q -> P with m(p′) = (m1(p′), m2(p′)),
    n(a1, a2) = n1(a1) ∧ n2(a2) and n(0) = 0′.

    Raises
    ------
    StructuralError
        If f1 and f2 have different sources or do not land in the factors
    """
    _check_legs(witness, f1, f2)
    source = f1.source

    m = {p: pair_id(f1.m[p], f2.m[p]) for p in source.states}
    n = {}
    for token in witness.product.lattice.elements:
        if token == ZERO_ID:
            n[token] = source.lattice.bottom
        else:
            a1, a2 = split_pair(token)
            n[token] = source.lattice.meet_pair(f1.n[a1], f2.n[a2])

    return SPMorphism(source, witness.product, m, n)


def is_factorization(witness: ProductWitness, f1: SPMorphism, f2: SPMorphism, candidate: SPMorphism) -> Verdict:
    """
    candidate is a morphism Q -> P with s_i ∘ candidate = f_i.
    """
    _check_legs(witness, f1, f2)
    if candidate.source != f1.source or candidate.target != witness.product:
        raise StructuralError('candidate must map the common source into the product')

    report = check_morphism(candidate)
    if not report.ok:
        return Verdict(False, report.first().witness, f'not a morphism: {report.first().clause}')

    for index, (projection, leg) in enumerate(zip(witness.projections, (f1, f2)), start=1):
        if compose_morphisms(candidate, projection) != leg:
            return Verdict(False, index, f's{index} ∘ candidate differs from f{index}')

    return Verdict(True)


def universal_search_size(witness: ProductWitness, source: StatePropertySystem) -> Dict[str, int]:
    states_q, props_q = len(source.states), len(source.lattice)
    states_p, props_p = len(witness.product.states), len(witness.product.lattice)

    return {
        'source_states': states_q,
        'source_properties': props_q,
        'product_states': states_p,
        'product_properties': props_p,
        'candidates': states_p ** states_q * props_q ** props_p,
    }


def verify_universal_property(
    witness: ProductWitness,
    f1: SPMorphism,
    f2: SPMorphism,
    max_states: int = UNIVERSAL_MAX_SOURCE_STATES,
    max_properties: int = UNIVERSAL_MAX_SOURCE_PROPERTIES,
    max_candidates: int = UNIVERSAL_MAX_CANDIDATES
) -> Verdict:
    """
    Enumerate every pair of functions (m, n) with m: Σ_Q -> Σ_P and
    n: L_P -> L_Q, keep the valid morphisms satisfying both projection
    equations and check that exactly one survives and that it equals the
    mediating morphism.

    Projection equations are applied to m before n is enumerated, which
    only prunes candidates that would be rejected anyway.

    Returns
    -------
    Verdict
        Witness is a report dict with the search size, the survivor count
        and whether the survivor is the mediating morphism

    Raises
    ------
    RefusalError
        If the instance exceeds the exhaustive bounds
    """
    _check_legs(witness, f1, f2)
    source, target = f1.source, witness.product
    size = universal_search_size(witness, source)
    if (size['source_states'] > max_states or size['source_properties'] > max_properties
            or size['candidates'] > max_candidates):
        raise RefusalError('instance too large for the exhaustive universal-property check', size)

    s1, s2 = witness.projections
    expected = mediating_morphism(witness, f1, f2)

    states_q = list(source.states)
    props_p = list(target.lattice.elements)
    survivors: List[SPMorphism] = []
    examined = 0

    for images in cartesian(target.states, repeat=len(states_q)):
        m = dict(zip(states_q, images))
        if any(s1.m[m[p]] != f1.m[p] or s2.m[m[p]] != f2.m[p] for p in states_q):
            examined += len(source.lattice) ** len(props_p)
            continue
        for values in cartesian(source.lattice.elements, repeat=len(props_p)):
            examined += 1
            n = dict(zip(props_p, values))
            if any(n[s1.n[a]] != f1.n[a] for a in witness.factors[0].lattice.elements):
                continue
            if any(n[s2.n[a]] != f2.n[a] for a in witness.factors[1].lattice.elements):
                continue
            candidate = SPMorphism(source, target, m, n)
            if check_morphism(candidate).ok:
                survivors.append(candidate)

    matches = len(survivors) == 1 and survivors[0] == expected
    details: Dict[str, Any] = dict(size, examined=examined, survivors=len(survivors), equals_mediating=matches)
    logger.debug('universal check: %s', details)

    if not matches:
        return Verdict(False, details, f'{len(survivors)} factorizations found, expected exactly the mediating morphism')

    return Verdict(True, details)
