"""Invariant suite: every checkable relation, collected into one report."""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from app.bloch.domain.relations import check_flattening_condition, check_transfer, lhat_sum
from app.config import settings
from app.cvol.domain.models import CheckResult, CheckStatus, InvariantReport
from app.cvol.domain.pipeline import Shapes, as_assignment, complex_volume
from app.develop.domain.cocycle import corner_relation_residual, edge_log_c, psi_flatten
from app.develop.domain.cosets import face_flattenings, random_configuration
from app.develop.domain.cusp import develop
from app.develop.domain.models import Base
from app.numerics.domain.functions import bloch_wigner, lhat
from app.numerics.domain.logarithm import distance_mod_pi2
from app.numerics.domain.models import sign_pattern_residual
from app.shared.errors import CvolError
from app.solver.domain.newton import solve
from app.triangulation.domain.combinatorics import check_ordering, cusp_link, orientation_violations
from app.triangulation.domain.models import Triangulation

SUITE_FIVE_TERM_SAMPLES = 50
TRANSFER_INSTANCES = 1000
DECORATION_BASES = 5

CheckOutcome = Tuple[float, Optional[str]]


@dataclass
class FiveTermReport:
    """Lifted five-term property test over random decorated configurations."""
    samples: int
    rng_seed: int
    max_condition_residual: float
    max_lhat_residual: float
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict:
        return {
            "samples": self.samples,
            "rng_seed": self.rng_seed,
            "max_condition_residual": self.max_condition_residual,
            "max_lhat_residual": self.max_lhat_residual,
            "failures": self.failures,
            "passed": self.passed,
        }


def five_term_suite(samples: int = 500, rng_seed: int = 0) -> FiveTermReport:
    """
    Check the flattening condition and the lifted five-term relation on random 4-simplices.

    For each sample the alternating L-hat sum of the five face flattenings must
    lie in pi^2 Z and the ten edge equations must hold.
    """
    rng = np.random.default_rng(rng_seed)
    tolerance = settings.invariant_tolerance
    worst_condition = 0.0
    worst_lhat = 0.0
    failures = 0
    for _ in range(samples):
        points, matrices = random_configuration(rng, 5)
        faces = face_flattenings(points, matrices)
        condition = check_flattening_condition(faces, points)
        total = sum(((-1) ** index) * lhat(face) for index, face in enumerate(faces))
        lhat_residual = distance_mod_pi2(total, 0)
        worst_condition = max(worst_condition, condition.max_residual)
        worst_lhat = max(worst_lhat, lhat_residual)
        if not condition.holds or lhat_residual > tolerance:
            failures += 1
    logger.info(
        "Five-term suite finished",
        samples=samples,
        failures=failures,
        max_condition_residual=worst_condition,
        max_lhat_residual=worst_lhat
    )
    return FiveTermReport(
        samples=samples,
        rng_seed=rng_seed,
        max_condition_residual=worst_condition,
        max_lhat_residual=worst_lhat,
        failures=failures,
    )


def candidate_bases(triangulation: Triangulation, count: int = DECORATION_BASES) -> List[Dict[int, Base]]:
    """The first ``count`` base sides in (tet, vertex, side) order, each for its own cusp."""
    bases = []
    for cusp in cusp_link(triangulation):
        for triangle in sorted(cusp.triangles, key=lambda t: t.key):
            for side in triangle.sides:
                bases.append({cusp.index: (triangle.tet, triangle.vertex, side)})
    return bases[:count]


def decoration_independence(
    triangulation: Triangulation,
    shapes: Shapes,
    count: int = DECORATION_BASES
) -> Tuple[float, bool]:
    """
    Recompute the L-hat sum from several development bases.

    No edge normalisation is applied, so each base gives a different decoration.

    Returns:
        Largest distance mod pi^2 from the first value, and whether any
        individual flattening differed between bases
    """
    assignment = as_assignment(triangulation, shapes)
    values = []
    flattening_sets = []
    for bases in candidate_bases(triangulation, count):
        decoration = develop(triangulation, assignment, bases=bases)
        psi = psi_flatten(triangulation, assignment, edge_log_c(triangulation, decoration))
        values.append(lhat_sum(psi.element))
        flattening_sets.append([(f.p, f.q) for f in psi.flattenings])
    spread = max((distance_mod_pi2(value, values[0]) for value in values), default=0.0)
    differs = any(pattern != flattening_sets[0] for pattern in flattening_sets)
    return spread, differs


def transfer_identity(instances: int = TRANSFER_INSTANCES, rng_seed: int = 0) -> CheckOutcome:
    rng = np.random.default_rng(rng_seed)
    broken = 0
    for _ in range(instances):
        z = complex(rng.normal(), rng.normal())
        p, q, p_other, q_other = (int(k) for k in rng.integers(-4, 5, size=4))
        if not check_transfer(z, p, q, p_other, q_other):
            broken += 1
    return float(broken), f"{instances} instances"


class _SuiteRunner:
    """Runs checks in order, skipping those whose prerequisites did not pass."""

    def __init__(self) -> None:
        self.report = InvariantReport()
        self._not_passed: Set[str] = set()

    def run(
        self,
        name: str,
        check: Callable[[], CheckOutcome],
        tolerance: float,
        requires: Sequence[str] = ()
    ) -> None:
        blocked = [requirement for requirement in requires if requirement in self._not_passed]
        if blocked:
            self._record(CheckResult(name, CheckStatus.SKIPPED, detail=f"requires {', '.join(blocked)}"))
            return
        try:
            residual, detail = check()
        except CvolError as exc:
            self._record(CheckResult(name, CheckStatus.FAILED, residual=exc.residual, detail=str(exc)))
            return
        status = CheckStatus.PASSED if residual <= tolerance else CheckStatus.FAILED
        self._record(CheckResult(name, status, residual=residual, detail=detail))

    def _record(self, result: CheckResult) -> None:
        if not result.passed:
            self._not_passed.add(result.name)
            logger.warning(f"Invariant check {result.name} {result.status.value}", detail=result.detail)
        self.report.checks.append(result)


def run_invariant_suite(
    triangulation: Triangulation,
    shapes: Optional[Shapes] = None,
    five_term_samples: int = SUITE_FIVE_TERM_SAMPLES,
    transfer_instances: int = TRANSFER_INSTANCES,
    rng_seed: int = 0
) -> InvariantReport:
    """
    Run every invariant check and report residuals; never raises for a failed check.

    Args:
        triangulation: Parsed triangulation
        shapes: Shapes to check; solved from the default seed when omitted
        five_term_samples: Random configurations for the five-term check
        transfer_instances: Random instances of the transfer identity
        rng_seed: Seed for the random checks

    Returns:
        InvariantReport with one entry per check, in evaluation order
    """
    suite = _SuiteRunner()
    tolerance = settings.invariant_tolerance
    state: Dict = {}

    suite.run(
        "ordering",
        lambda: (float(len(check_ordering(triangulation).offending_faces)), None),
        0.0,
    )
    suite.run("orientation", lambda: (float(len(orientation_violations(triangulation))), None), 0.0)
    suite.run(
        "ideal_ends",
        lambda: (float(sum(1 for cusp in cusp_link(triangulation) if cusp.euler_characteristic == 2)), None),
        0.0,
    )
    structure = ("ordering", "orientation", "ideal_ends")

    def gluing() -> CheckOutcome:
        assignment = solve(triangulation) if shapes is None else as_assignment(triangulation, shapes)
        state["shapes"] = assignment
        return assignment.max_residual, assignment.source

    suite.run("gluing_equations", gluing, settings.assertion_tolerance, requires=structure)

    def corners() -> CheckOutcome:
        state["decoration"] = develop(
            triangulation, state["shapes"], unit_edge=triangulation.decoration.unit_edge
        )
        return corner_relation_residual(triangulation, state["shapes"], state["decoration"]), None

    suite.run("corner_relations", corners, settings.assertion_tolerance, requires=("gluing_equations",))

    def consistency() -> CheckOutcome:
        state["log_cs"] = edge_log_c(triangulation, state["decoration"])
        return max((entry.spread for entry in state["log_cs"]), default=0.0), None

    suite.run("edge_c_consistency", consistency, settings.assertion_tolerance, requires=("corner_relations",))

    def integrality() -> CheckOutcome:
        state["psi"] = psi_flatten(triangulation, state["shapes"], state["log_cs"])
        return 0.0, " ".join(str(f) for f in state["psi"].flattenings)

    suite.run("flattening_integrality", integrality, 0.0, requires=("edge_c_consistency",))

    suite.run(
        "sign_relations",
        lambda: (max(sign_pattern_residual(f) for f in state["psi"].flattenings), None),
        tolerance,
        requires=("flattening_integrality",),
    )

    def volume() -> CheckOutcome:
        computation = complex_volume(triangulation, state["shapes"])
        state["computation"] = computation
        return computation.residuals["semi_strong_edges"], f"vol={computation.volume.vol:.15g} cs={computation.volume.cs:.15g}"

    suite.run("semi_strong_edges", volume, tolerance, requires=("sign_relations",))

    def volume_check() -> CheckOutcome:
        computation = state["computation"]
        direct = sum(
            sign * bloch_wigner(z)
            for sign, z in zip(triangulation.orientation_signs, computation.shapes.shapes)
        )
        return abs(computation.volume.vol - direct), f"sum of Bloch-Wigner terms {direct:.15g}"

    suite.run("volume_check", volume_check, tolerance, requires=("semi_strong_edges",))

    def independence() -> CheckOutcome:
        spread, differs = decoration_independence(triangulation, state["shapes"])
        return spread, "flattenings differ between bases" if differs else "flattenings agree between bases"

    suite.run("decoration_independence", independence, tolerance, requires=("semi_strong_edges",))

    suite.run("transfer_relation", lambda: transfer_identity(transfer_instances, rng_seed), 0.0)

    def five_term() -> CheckOutcome:
        result = five_term_suite(five_term_samples, rng_seed)
        residual = max(result.max_condition_residual, result.max_lhat_residual)
        return (residual if result.passed else max(residual, 2 * tolerance)), f"{result.failures} failures"

    suite.run("five_term", five_term, tolerance)

    report = suite.report
    logger.info(
        "Invariant suite finished",
        triangulation=triangulation.name,
        passed=report.passed,
        failures=[check.name for check in report.failures]
    )
    return report
