"""
Category Law Harness

Runs seeded trials over generated instances and tallies, per law, how many
trials passed and which trial seeds failed. A law that does not apply to a
trial (η laws on a system that is not state-determined) is not counted.

Trial i draws from `random.Random(f'{seed}:{i}')`, so every failing seed
can be replayed alone. Results are reported in trial order.

Laws:
    FG_identity_objects, FG_identity_morphisms: F(G(C)) = C, F(G(m)) = m
    G_functor_identity, G_functor_composition
    F_functor_identity, F_functor_composition
    epsilon_isomorphism, epsilon_naturality
    sp0_equivalence: ξ injective, preorder antisymmetric and F(S) T0 agree
    G_lands_in_sp0_iff_T0
    sp0_isomorphism_closed
    HK_identity_objects, HK_identity_morphisms
    H_functor_identity, H_functor_composition, H_morphism_valid
    K_functor_identity, K_functor_composition, K_morphism_valid
    eta_isomorphism, eta_naturality, strongest_property_naturality
    T0_composite: F(K(H(G(C)))) is C with points renamed to their closures
    product_preorder_componentwise
    generated_sps_valid, generated_morphism_valid, H_object_valid: Generator
        and functor outputs pass their validators
"""

# Python Standard Library
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

# Local
from src.config import DEFAULT_SEED
from src.config import MAX_PROPERTIES
from src.config import MAX_STATES
from src.models.model_closure import ClosureSpace
from src.models.model_closure import compose_point_maps
from src.models.model_closure import identity_point_map
from src.models.model_closure import is_T0
from src.models.model_closure import point_closure
from src.models.model_closure import set_token
from src.models.model_functors import check_bcl_morphism
from src.models.model_functors import compose_bcl_morphisms
from src.models.model_functors import counit_epsilon
from src.models.model_functors import functor_F
from src.models.model_functors import functor_F_morphism
from src.models.model_functors import functor_G
from src.models.model_functors import functor_G_morphism
from src.models.model_functors import functor_H
from src.models.model_functors import functor_H_morphism
from src.models.model_functors import functor_K
from src.models.model_functors import functor_K_morphism
from src.models.model_functors import identity_bcl_morphism
from src.models.model_functors import unit_eta
from src.models.model_functors import validate_bcl
from src.models.model_product import sp_product
from src.models.model_spsys import SPMorphism
from src.models.model_spsys import StatePropertySystem
from src.models.model_spsys import check_morphism
from src.models.model_spsys import compose_morphisms
from src.models.model_spsys import identity_morphism
from src.models.model_spsys import is_isomorphism
from src.models.model_spsys import is_state_determined
from src.models.model_spsys import relabel_system
from src.models.model_spsys import state_preorder
from src.models.model_spsys import strongest_property
from src.models.model_spsys import validate_sps
from src.utils.utils_errors import LawViolationError
from src.utils.utils_errors import RefusalError
from src.utils.utils_errors import StructuralError
from src.utils.utils_generate import gen_composable_morphisms
from src.utils.utils_generate import gen_sp_morphism
from src.utils.utils_generate import gen_sps
from src.utils.utils_generate import trial_rng
from src.utils.utils_serialize import to_bytes










logger = logging.getLogger(__name__)

CounitHook = Callable[[StatePropertySystem], SPMorphism]


@dataclass
class LawTally:
    passed: int = 0
    failed: int = 0
    failing_seeds: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {'passed': self.passed, 'failed': self.failed, 'failing_seeds': list(self.failing_seeds)}


@dataclass
class LawReport:
    """
    Outcome of a harness run.

    Attributes
    ----------
    trials : int
    seed : int
    max_states, max_properties : int
        Size bounds of the generated instances
    laws : Dict[str, LawTally]
        Tally per law name, in first-seen order
    """
    trials: int
    seed: int
    max_states: int
    max_properties: int
    laws: Dict[str, LawTally] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(tally.failed == 0 for tally in self.laws.values())

    def record(self, law: str, holds: bool, trial_seed: str) -> None:
        tally = self.laws.setdefault(law, LawTally())
        if holds:
            tally.passed += 1
        else:
            tally.failed += 1
            tally.failing_seeds.append(trial_seed)

    def failed_laws(self) -> List[str]:
        return [law for law, tally in self.laws.items() if tally.failed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'trials': self.trials,
            'seed': self.seed,
            'max_states': self.max_states,
            'max_properties': self.max_properties,
            'ok': self.ok,
            'laws': {law: tally.to_dict() for law, tally in sorted(self.laws.items())},
        }


class _Trial:
    """
    Collects law outcomes of one trial; an exception inside a check counts
    as a failure of that law.
    """
    def __init__(self, report: LawReport, trial_seed: str):
        self.report = report
        self.trial_seed = trial_seed


    def check(self, law: str, predicate: Callable[[], Optional[bool]]) -> None:
        try:
            outcome = predicate()
        except (LawViolationError, RefusalError, StructuralError) as e:
            logger.debug('trial %s: law %s raised %s', self.trial_seed, law, e)
            outcome = False
        if outcome is None:
            return
        if not outcome:
            logger.info('trial %s: law %s failed', self.trial_seed, law)
        self.report.record(law, bool(outcome), self.trial_seed)


def _counit_is_iso(counit: CounitHook, system: StatePropertySystem) -> bool:
    epsilon = counit(system)
    return check_morphism(epsilon).ok and bool(is_isomorphism(epsilon))


def _epsilon_natural(counit: CounitHook, f: SPMorphism) -> bool:
    gf = functor_G_morphism(functor_F_morphism(f))
    left = compose_morphisms(gf, counit(f.target))
    right = compose_morphisms(counit(f.source), f)
    return left == right


def _sp0_checks_agree(system: StatePropertySystem) -> bool:
    is_state_determined(system)
    return True


def _in_sp0(system: StatePropertySystem) -> bool:
    try:
        return bool(is_state_determined(system))
    except LawViolationError:
        return False


def _iso_closed(rng: random.Random, system: StatePropertySystem) -> bool:
    states = list(system.states)
    shuffled = rng.sample(states, len(states))
    renamed, iso = relabel_system(
        system,
        {p: f'x{shuffled.index(p)}' for p in states},
        {a: f'b{i}' for i, a in enumerate(system.lattice.elements)}
    )
    if not is_isomorphism(iso) or not check_morphism(iso).ok:
        return False
    return bool(is_state_determined(renamed)) == bool(is_state_determined(system))


def _t0_composite(space: ClosureSpace) -> Optional[bool]:
    if not is_T0(space):
        return None
    names = {x: set_token(point_closure(space, x)) for x in space.points}
    renamed = ClosureSpace(names.values(), [[names[x] for x in closed] for closed in space.closed_sets])
    return functor_F(functor_K(functor_H(functor_G(space)))) == renamed


def _product_componentwise(first: StatePropertySystem, second: StatePropertySystem) -> bool:
    witness = sp_product(first, second)
    if not validate_sps(witness.product).ok:
        return False
    order = state_preorder(witness.product)
    left, right = state_preorder(first), state_preorder(second)
    s1, s2 = witness.projections
    for p in witness.product.states:
        for q in witness.product.states:
            componentwise = left.le(s1.m[p], s1.m[q]) and right.le(s2.m[p], s2.m[q])
            if order.le(p, q) != componentwise:
                return False
    return all(check_morphism(s).ok for s in witness.projections)


def _run_trial(report: LawReport, seed: int, index: int, counit: CounitHook) -> None:
    trial_seed = f'{seed}:{index}'
    rng = trial_rng(seed, index)
    trial = _Trial(report, trial_seed)
    max_states, max_props = report.max_states, report.max_properties

    # Closure spaces and continuous maps
    m1, m2 = gen_composable_morphisms(rng, max_states, max_props)
    space = m1.source
    trial.check('FG_identity_objects', lambda: to_bytes(functor_F(functor_G(space))) == to_bytes(space))
    trial.check('FG_identity_morphisms', lambda: to_bytes(functor_F_morphism(functor_G_morphism(m1))) == to_bytes(m1))
    trial.check('G_functor_identity', lambda: functor_G_morphism(identity_point_map(space)) == identity_morphism(functor_G(space)))
    trial.check('G_functor_composition', lambda: functor_G_morphism(compose_point_maps(m1, m2))
                == compose_morphisms(functor_G_morphism(m1), functor_G_morphism(m2)))
    trial.check('G_lands_in_sp0_iff_T0', lambda: bool(is_state_determined(functor_G(space))) == bool(is_T0(space)))
    trial.check('T0_composite', lambda: _t0_composite(space))

    # State property systems
    system = gen_sps(rng, max_states, max_props)
    trial.check('generated_sps_valid', lambda: validate_sps(system).ok)
    trial.check('sp0_equivalence', lambda: _sp0_checks_agree(system))
    trial.check('epsilon_isomorphism', lambda: _counit_is_iso(counit, system))
    trial.check('F_functor_identity', lambda: functor_F_morphism(identity_morphism(system)) == identity_point_map(functor_F(system)))
    trial.check('sp0_isomorphism_closed', lambda: _iso_closed(rng, system))

    bcl = functor_H(system)
    trial.check('H_object_valid', lambda: validate_bcl(bcl).ok)
    trial.check('HK_identity_objects', lambda: to_bytes(functor_H(functor_K(bcl))) == to_bytes(bcl))
    trial.check('H_functor_identity', lambda: functor_H_morphism(identity_morphism(system)) == identity_bcl_morphism(bcl))
    trial.check('K_functor_identity', lambda: functor_K_morphism(identity_bcl_morphism(bcl)) == identity_morphism(functor_K(bcl)))
    if _in_sp0(system):
        trial.check('eta_isomorphism', lambda: check_morphism(unit_eta(system)).ok)

    # Morphisms
    f = gen_sp_morphism(rng, max_states, max_props)
    trial.check('generated_morphism_valid', lambda: check_morphism(f).ok)
    trial.check('epsilon_naturality', lambda: _epsilon_natural(counit, f))
    trial.check('strongest_property_naturality', lambda: all(
        functor_H_morphism(f).f(strongest_property(f.source, p)) == strongest_property(f.target, f.m[p])
        for p in f.source.states
    ))
    h = functor_H_morphism(f)
    trial.check('H_morphism_valid', lambda: check_bcl_morphism(h).ok)
    trial.check('K_morphism_valid', lambda: check_morphism(functor_K_morphism(h)).ok)
    trial.check('HK_identity_morphisms', lambda: functor_H_morphism(functor_K_morphism(h)) == h)
    if _in_sp0(f.source) and _in_sp0(f.target):
        trial.check('eta_naturality', lambda: compose_morphisms(f, unit_eta(f.target))
                    == compose_morphisms(unit_eta(f.source), functor_K_morphism(h)))

    g1, g2 = functor_G_morphism(m1), functor_G_morphism(m2)
    trial.check('F_functor_composition', lambda: functor_F_morphism(compose_morphisms(g1, g2))
                == compose_point_maps(functor_F_morphism(g1), functor_F_morphism(g2)))
    trial.check('H_functor_composition', lambda: functor_H_morphism(compose_morphisms(g1, g2))
                == compose_bcl_morphisms(functor_H_morphism(g1), functor_H_morphism(g2)))
    trial.check('K_functor_composition', lambda: functor_K_morphism(compose_bcl_morphisms(functor_H_morphism(g1), functor_H_morphism(g2)))
                == compose_morphisms(functor_K_morphism(functor_H_morphism(g1)), functor_K_morphism(functor_H_morphism(g2))))

    # Products of two small systems
    first = gen_sps(rng, min(max_states, 2), min(max_props, 4))
    second = gen_sps(rng, min(max_states, 2), min(max_props, 4))
    trial.check('product_preorder_componentwise', lambda: _product_componentwise(first, second))


def law_harness(
    trials: int,
    seed: int = DEFAULT_SEED,
    max_states: int = MAX_STATES,
    max_properties: int = MAX_PROPERTIES,
    counit: CounitHook = counit_epsilon
) -> LawReport:
    """
    Check the category laws on `trials` seeded instances.

    Parameters
    ----------
    trials : int
        Number of trials; 0 gives an empty passing report
    seed : int
        Base seed; trial i uses the seed string f'{seed}:{i}'
    max_states, max_properties : int
        Size bounds of generated instances
    counit : CounitHook
        Builder of ε; tests inject corrupted builders here

    Returns
    -------
    LawReport
        Pass/fail counts per law with the failing trial seeds
    """
    if trials < 0:
        raise StructuralError('trial count must be nonnegative')
    if max_states < 1 or max_properties < 2:
        raise StructuralError('size bounds too small: need at least one state and two properties')

    report = LawReport(trials, seed, max_states, max_properties)
    for index in range(trials):
        _run_trial(report, seed, index, counit)

    logger.info('law harness: %d trials, failed laws %s', trials, report.failed_laws())
    return report
