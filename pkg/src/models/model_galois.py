"""
Galois Connections

Adjunctions between finite complete lattices. A pair (g, d) with
g: L -> L′ and d: L′ -> L is a Galois connection when
a′ < g(a) ⇔ d(a′) < a for all a ∈ L, a′ ∈ L′. The upper adjoint g preserves
meets, the lower adjoint d preserves joins, and each determines the other.

Adjoints are built by evaluating the defining meet and join formulas
directly.

Functions:
    Public:
        check_adjunction: Exhaustive check over L × L′
        GaloisConnection: An adjoint pair, checked on construction
        lower_adjoint: n⋆(a′) = ∧{a : a′ < n(a)}, gated on meet preservation
        upper_adjoint: f∗(a) = ∨{a′ : f(a′) < a}, gated on join preservation
        adjoint_failure: Which subset blocks an adjoint
"""

# Python Standard Library
import logging
from dataclasses import dataclass
from typing import Optional

# Local
from src.config import SUBSET_EXHAUSTIVE_LIMIT
from src.models.model_order import MonotoneMap
from src.models.model_order import preserves_joins
from src.models.model_order import preserves_meets
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import StructuralError
from src.utils.utils_report import Verdict










logger = logging.getLogger(__name__)


def check_adjunction(g: MonotoneMap, d: MonotoneMap) -> Verdict:
    """
    a′ < g(a) ⇔ d(a′) < a for every a ∈ L and a′ ∈ L′.

    Parameters
    ----------
    g : MonotoneMap
        Candidate upper adjoint L -> L′
    d : MonotoneMap
        Candidate lower adjoint L′ -> L

    Returns
    -------
    Verdict
        Witness is the first pair (a, a′) on which the two sides differ

    Raises
    ------
    StructuralError
        If the carriers of g and d do not match up
    """
    if g.source != d.target or g.target != d.source:
        raise StructuralError('carrier mismatch: g must map L -> L′ and d must map L′ -> L')

    lattice, other = g.source, g.target
    for a in lattice.elements:
        for a_prime in other.elements:
            left = other.le(a_prime, g(a))
            right = lattice.le(d(a_prime), a)
            if left != right:
                return Verdict(
                    False,
                    (a, a_prime),
                    f"{a_prime} {'<' if left else '≮'} g({a}) but d({a_prime}) {'<' if right else '≮'} {a}"
                )

    return Verdict(True)


@dataclass(frozen=True)
class GaloisConnection:
    """
    An adjunction d ⊣ g, checked on construction.

    Attributes
    ----------
    upper : MonotoneMap
        g: L -> L′
    lower : MonotoneMap
        d: L′ -> L

    Raises
    ------
    LawViolationError
        If a′ < g(a) ⇔ d(a′) < a fails for some pair
    """
    upper: MonotoneMap
    lower: MonotoneMap

    def __post_init__(self):
        verdict = check_adjunction(self.upper, self.lower)
        if not verdict:
            raise LawViolationError(f'not a Galois connection: {verdict.message}', verdict)


def lower_adjoint(n: MonotoneMap, limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> Optional[MonotoneMap]:
    """
    The lower adjoint n⋆: L′ -> L of n: L -> L′, or None when n does not
    preserve meets.

    Raises
    ------
    LawViolationError
        If the constructed map is not adjoint to n
    """
    if not preserves_meets(n, limit):
        return None

    lattice, other = n.source, n.target
    graph = {
        a_prime: lattice.meet([a for a in lattice.elements if other.le(a_prime, n(a))])
        for a_prime in other.elements
    }
    return GaloisConnection(upper=n, lower=MonotoneMap(other, lattice, graph)).lower


def upper_adjoint(f: MonotoneMap, limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> Optional[MonotoneMap]:
    """
    The upper adjoint f∗: L -> L′ of f: L′ -> L, or None when f does not
    preserve joins.

    Raises
    ------
    LawViolationError
        If the constructed map is not adjoint to f
    """
    if not preserves_joins(f, limit):
        return None

    other, lattice = f.source, f.target
    graph = {
        a: other.join([a_prime for a_prime in other.elements if lattice.le(f(a_prime), a)])
        for a in lattice.elements
    }
    return GaloisConnection(upper=MonotoneMap(lattice, other, graph), lower=f).upper


def adjoint_failure(f: MonotoneMap, lower: bool, limit: int = SUBSET_EXHAUSTIVE_LIMIT) -> Verdict:
    """
    Preservation verdict that decides whether the requested adjoint exists.
    """
    return preserves_meets(f, limit) if lower else preserves_joins(f, limit)
