"""Unit tests for the complex volume pipeline and the invariant suite."""
import pytest

from app.cvol.domain.invariants import (
    candidate_bases,
    decoration_independence,
    five_term_suite,
    run_invariant_suite,
    transfer_identity,
)
from app.cvol.domain.models import CheckResult, CheckStatus, ComplexVolume, InvariantReport
from app.cvol.domain.pipeline import (
    bases_for,
    complex_volume,
    conjugate_representation,
    reverse_orientation,
)
from app.numerics.domain.logarithm import PI_SQUARED
from app.shared.errors import GluingResidualError, InconsistentInputError
from app.solver.domain.field import shapes_from_field
from app.triangulation.domain.combinatorics import compose_face_permutation
from tests.conftest import (
    FIGURE_EIGHT_VOL,
    FIVE_TWO_CS,
    FIVE_TWO_REAL_CS,
    FIVE_TWO_REAL_ROOT,
    FIVE_TWO_VOL,
)

CHECK_ORDER = [
    "ordering",
    "orientation",
    "ideal_ends",
    "gluing_equations",
    "corner_relations",
    "edge_c_consistency",
    "flattening_integrality",
    "sign_relations",
    "semi_strong_edges",
    "volume_check",
    "decoration_independence",
    "transfer_relation",
    "five_term",
]


@pytest.fixture
def five_two_volume(five_two, five_two_shapes):
    return complex_volume(five_two, five_two_shapes)


class TestComplexVolumeModel:

    def test_from_raw(self):
        volume = ComplexVolume.from_raw(complex(-1.0, 2.0))
        assert volume.vol == 2.0
        assert volume.cs == pytest.approx(1.0)
        assert volume.cs_normalized == pytest.approx(1 / (2 * PI_SQUARED))

    def test_cs_is_centered(self):
        volume = ComplexVolume.from_raw(complex(-(PI_SQUARED - 0.5), 0.0))
        assert volume.cs == pytest.approx(-0.5)
        assert volume.cs_normalized == pytest.approx(0.5 - 0.5 / (2 * PI_SQUARED))

    def test_to_dict(self):
        payload = ComplexVolume.from_raw(complex(-1.0, 2.0), volume_check=2.0).to_dict()
        assert payload["vol"] == 2.0
        assert payload["raw"] == [-1.0, 2.0]
        assert payload["volume_check"] == 2.0


class TestPipeline:

    def test_five_two_geometric(self, five_two_volume):
        """Geometric 5_2 solution: volume and Chern-Simons invariant."""
        assert five_two_volume.volume.vol == pytest.approx(FIVE_TWO_VOL, abs=1e-10)
        assert five_two_volume.volume.cs == pytest.approx(FIVE_TWO_CS, abs=1e-9)
        assert [(f.p, f.q) for f in five_two_volume.flattenings] == [(0, -1), (-1, 0), (-1, 0)]

    def test_five_two_residuals(self, five_two_volume):
        residuals = five_two_volume.residuals
        assert set(residuals) == {
            "gluing_equations",
            "corner_relations",
            "edge_c_consistency",
            "sign_relations",
            "semi_strong_edges",
            "volume_check",
        }
        assert max(residuals.values()) < 1e-9
        assert five_two_volume.volume.volume_check == pytest.approx(FIVE_TWO_VOL, abs=1e-10)

    def test_five_two_real_root(self, five_two):
        shapes = shapes_from_field(five_two, root=FIVE_TWO_REAL_ROOT)
        computation = complex_volume(five_two, shapes)
        assert computation.volume.vol == pytest.approx(0.0, abs=1e-12)
        assert computation.volume.cs == pytest.approx(FIVE_TWO_REAL_CS, abs=1e-9)
        assert [(f.p, f.q) for f in computation.flattenings] == [(0, 0), (0, 1), (0, 1)]

    def test_conjugate_representation(self, five_two_volume):
        conjugate = conjugate_representation(five_two_volume)
        assert conjugate.volume.vol == pytest.approx(-FIVE_TWO_VOL, abs=1e-10)
        assert conjugate.volume.cs == pytest.approx(FIVE_TWO_CS, abs=1e-9)
        assert conjugate.unit_edge == five_two_volume.unit_edge

    def test_reverse_orientation(self, five_two_volume):
        reversed_ = reverse_orientation(five_two_volume)
        assert reversed_.triangulation.orientation_signs == (-1, -1, -1)
        assert reversed_.volume.vol == pytest.approx(-FIVE_TWO_VOL, abs=1e-10)
        assert reversed_.volume.cs == pytest.approx(-FIVE_TWO_CS, abs=1e-9)

    def test_figure_eight(self, figure_eight, figure_eight_shapes):
        """Amphichiral: the Chern-Simons invariant vanishes."""
        computation = complex_volume(figure_eight, figure_eight_shapes)
        assert computation.volume.vol == pytest.approx(FIGURE_EIGHT_VOL, abs=1e-10)
        assert computation.volume.cs == pytest.approx(0.0, abs=1e-9)
        assert computation.unit_edge is None

    def test_figure_eight_conjugate(self, figure_eight, figure_eight_shapes):
        conjugate = conjugate_representation(complex_volume(figure_eight, figure_eight_shapes))
        assert conjugate.volume.vol == pytest.approx(-FIGURE_EIGHT_VOL, abs=1e-10)
        assert conjugate.volume.cs == pytest.approx(0.0, abs=1e-9)

    def test_figure_eight_reversed(self, figure_eight, figure_eight_shapes):
        reversed_ = reverse_orientation(complex_volume(figure_eight, figure_eight_shapes))
        assert reversed_.volume.vol == pytest.approx(-FIGURE_EIGHT_VOL, abs=1e-10)
        assert reversed_.volume.cs == pytest.approx(0.0, abs=1e-9)

    def test_reversing_twice_is_the_identity(self, five_two_volume):
        twice = reverse_orientation(reverse_orientation(five_two_volume))
        assert twice.triangulation.orientation_signs == five_two_volume.triangulation.orientation_signs
        assert twice.volume.vol == pytest.approx(five_two_volume.volume.vol, abs=1e-12)
        assert twice.volume.cs == pytest.approx(five_two_volume.volume.cs, abs=1e-12)
        assert [(f.p, f.q) for f in twice.flattenings] == [(f.p, f.q) for f in five_two_volume.flattenings]

    def test_does_not_depend_on_the_unit_edge(self, five_two, five_two_shapes):
        for unit_edge in (1, 2):
            computation = complex_volume(five_two, five_two_shapes, unit_edge=unit_edge)
            assert computation.volume.vol == pytest.approx(FIVE_TWO_VOL, abs=1e-10)
            assert computation.volume.cs == pytest.approx(FIVE_TWO_CS, abs=1e-9)

    def test_other_base(self, five_two, five_two_shapes):
        computation = complex_volume(five_two, five_two_shapes, bases=bases_for(five_two, (1, 2, 0)))
        assert computation.decoration.bases == {0: (1, 2, 0)}
        assert computation.volume.cs == pytest.approx(FIVE_TWO_CS, abs=1e-9)

    def test_base_outside_every_cusp(self, five_two):
        with pytest.raises(InconsistentInputError):
            bases_for(five_two, (9, 0, 1))

    def test_aborts_on_perturbed_shapes(self, five_two, five_two_shapes):
        shapes = list(five_two_shapes.shapes)
        shapes[1] += 1e-4
        with pytest.raises(GluingResidualError):
            complex_volume(five_two, shapes)

    def test_to_dict(self, five_two_volume):
        payload = five_two_volume.to_dict()
        assert payload["vol"] == five_two_volume.volume.vol
        assert payload["cs_normalized"] == pytest.approx(FIVE_TWO_CS / (2 * PI_SQUARED))
        assert payload["flattenings"][0]["q"] == -1
        assert len(payload["flattenings"][0]["z"]) == 2


class TestInvariantReport:

    def test_empty_or_skipped_reports_do_not_pass(self):
        assert not InvariantReport().passed
        assert not InvariantReport([CheckResult("a", CheckStatus.SKIPPED)]).passed

    def test_failure_is_reported(self):
        report = InvariantReport([
            CheckResult("a", CheckStatus.PASSED, residual=0.0),
            CheckResult("b", CheckStatus.FAILED, residual=1.0),
        ])
        assert not report.passed
        assert [check.name for check in report.failures] == ["b"]
        assert report.get("a").passed
        assert report.get("c") is None
        assert report.to_dict()["checks"][1]["status"] == "failed"


class TestInvariantSuite:

    def test_five_two_passes(self, five_two, five_two_shapes):
        report = run_invariant_suite(five_two, five_two_shapes, five_term_samples=5, transfer_instances=50)
        assert [check.name for check in report.checks] == CHECK_ORDER
        assert report.passed, report.to_dict()
        assert all(check.status is CheckStatus.PASSED for check in report.checks)

    def test_solves_when_shapes_are_omitted(self, figure_eight):
        report = run_invariant_suite(figure_eight, five_term_samples=3, transfer_instances=20)
        assert report.passed
        assert report.get("gluing_equations").detail == "newton"
        assert "vol=2.0298832128" in report.get("semi_strong_edges").detail

    def test_structural_failure_skips_dependent_checks(self, figure_eight):
        broken = compose_face_permutation(figure_eight, 0, 0, (1, 2))
        report = run_invariant_suite(broken, five_term_samples=2, transfer_instances=10)
        assert not report.passed
        assert report.get("ordering").status is CheckStatus.FAILED
        assert report.get("gluing_equations").status is CheckStatus.SKIPPED
        assert "ordering" in report.get("gluing_equations").detail
        assert report.get("volume_check").status is CheckStatus.SKIPPED
        assert report.get("transfer_relation").passed
        assert report.get("five_term").passed

    def test_bad_shapes_fail_without_raising(self, five_two, five_two_shapes):
        shapes = list(five_two_shapes.shapes)
        shapes[0] *= 1.01
        report = run_invariant_suite(five_two, shapes, five_term_samples=2, transfer_instances=10)
        gluing = report.get("gluing_equations")
        assert gluing.status is CheckStatus.FAILED
        assert gluing.residual > 1e-4
        assert report.get("corner_relations").status is CheckStatus.SKIPPED


class TestRandomisedChecks:

    @pytest.mark.parametrize("fixture", ["five_two", "figure_eight"])
    def test_decoration_independence(self, request, fixture):
        """Five base sides move individual flattenings but not the L-hat sum mod pi^2."""
        triangulation = request.getfixturevalue(fixture)
        shapes = request.getfixturevalue(f"{fixture}_shapes")
        spread, differs = decoration_independence(triangulation, shapes, count=5)
        assert spread < 1e-8
        assert differs

    def test_candidate_bases(self, five_two):
        bases = candidate_bases(five_two, count=4)
        assert bases[0] == {0: (0, 0, 1)}
        assert bases[3] == {0: (0, 1, 0)}

    def test_transfer_identity(self):
        broken, detail = transfer_identity(200, rng_seed=3)
        assert broken == 0.0
        assert detail == "200 instances"

    @pytest.mark.slow
    def test_five_term_suite(self):
        report = five_term_suite(samples=500, rng_seed=7)
        assert report.passed, report.to_dict()
        assert report.max_lhat_residual < 1e-8
        assert report.to_dict()["samples"] == 500

