"""Unit tests for cusp development, long-edge labels and decorated configurations."""
import numpy as np
import pytest

from app.develop.domain.cocycle import (
    corner_relation_residual,
    edge_log_c,
    psi_flatten,
    semi_strong_edge_sums,
)
from app.develop.domain.cosets import (
    face_flattenings,
    image_of_infinity,
    normalize_cosets,
    psi_of_configuration,
    random_configuration,
    standard_matrix,
    unipotent,
)
from app.develop.domain.cusp import (
    CUSP_CYCLE,
    default_base,
    develop,
    develop_cusp,
    next_corner,
    normalize_unit_edge,
)
from app.numerics.domain.functions import cross_ratio
from app.numerics.domain.models import INFINITY
from app.shared.errors import (
    DegenerateSimplexError,
    InconsistentInputError,
    NonParabolicHolonomyError,
    SameCosetError,
)
from app.solver.domain.equations import edge_equations
from app.solver.domain.field import select_root, shapes_from_field
from app.solver.domain.newton import solve
from app.triangulation.domain.combinatorics import cusp_link
from tests.conftest import FIVE_TWO_REAL_ROOT


@pytest.fixture
def five_two_decoration(five_two, five_two_shapes):
    return develop(five_two, five_two_shapes, unit_edge=0)


class TestCuspDevelopment:

    def test_cycles_are_permutations_of_the_other_corners(self):
        for vertex, cycle in CUSP_CYCLE.items():
            assert sorted(cycle) == sorted(set(range(4)) - {vertex})
            for corner in cycle:
                assert next_corner(vertex, next_corner(vertex, next_corner(vertex, corner))) == corner

    def test_places_every_triangle_once(self, five_two, five_two_shapes):
        decoration = develop(five_two, five_two_shapes)
        assert len(decoration.positions) == 12
        assert len(set(decoration.placement_order)) == 12
        assert decoration.bases == {0: (0, 0, 1)}

    def test_base_side_is_the_unit_interval(self, five_two, five_two_shapes):
        decoration = develop_cusp(five_two, five_two_shapes, 0)
        corners = decoration.positions[(0, 0)]
        assert corners[2] == 0j
        assert corners[3] == 1 + 0j

    def test_default_base(self, five_two):
        assert default_base(cusp_link(five_two)[0]) == (0, 0, 1)

    def test_corner_relations_hold(self, five_two, five_two_shapes, five_two_decoration):
        assert corner_relation_residual(five_two, five_two_shapes, five_two_decoration) < 1e-10

    def test_corner_relations_hold_from_another_base(self, five_two, five_two_shapes):
        decoration = develop(five_two, five_two_shapes, bases={0: (2, 3, 1)})
        assert decoration.bases == {0: (2, 3, 1)}
        assert decoration.positions[(2, 3)][0] == 0j
        assert decoration.positions[(2, 3)][2] == 1 + 0j
        assert corner_relation_residual(five_two, five_two_shapes, decoration) < 1e-10

    def test_figure_eight(self, figure_eight, figure_eight_shapes):
        decoration = develop(figure_eight, figure_eight_shapes)
        assert len(decoration.positions) == 8
        assert corner_relation_residual(figure_eight, figure_eight_shapes, decoration) < 1e-10

    def test_edge_vectors_close_up(self, five_two_decoration):
        for key in five_two_decoration.positions:
            assert abs(sum(five_two_decoration.edge_vectors(*key))) < 1e-12

    def test_dump(self, five_two_decoration):
        dumped = five_two_decoration.dump()
        assert len(dumped) == 12
        first = dumped[0]
        assert (first["cusp"], first["tet"], first["vertex"]) == (0, 0, 0)
        assert sorted(first["corners"]) == ["1", "2", "3"]
        assert all(len(pair) == 2 for pair in first["corners"].values())

    def test_invalid_base(self, five_two, five_two_shapes):
        with pytest.raises(InconsistentInputError):
            develop_cusp(five_two, five_two_shapes, 0, base=(0, 0, 0))
        with pytest.raises(InconsistentInputError):
            develop_cusp(five_two, five_two_shapes, 0, base=(5, 0, 1))

    def test_incomplete_structure_has_non_parabolic_holonomy(self, figure_eight):
        """Shapes solving only the edge equations leave the cusp holonomy non-translational."""
        seed = [complex(0.6, 0.9), complex(0.45, -0.8)]
        incomplete = solve(figure_eight, equations=edge_equations(figure_eight), seed=seed)
        with pytest.raises(NonParabolicHolonomyError) as exc_info:
            develop(figure_eight, incomplete)
        assert exc_info.value.location.startswith("cusp 0")
        assert exc_info.value.residual > 1e-7


class TestUnitEdge:

    def test_five_two_edge_labels(self, five_two, five_two_decoration):
        """With edge class 0 as unit, the other classes carry x^2 and x - x^2."""
        x = select_root(np.array(five_two.shape_field.poly, dtype=float), five_two.shape_field.root)
        log_cs = edge_log_c(five_two, five_two_decoration)
        assert [entry.edge_class for entry in log_cs] == [0, 1, 2]
        assert log_cs[0].c == pytest.approx(1, abs=1e-12)
        assert log_cs[1].c == pytest.approx(x * x, abs=1e-10)
        assert log_cs[2].c == pytest.approx(x - x * x, abs=1e-10)
        assert max(entry.spread for entry in log_cs) < 1e-10

    def test_normalisation_is_a_rescaling(self, five_two, five_two_shapes):
        plain = develop(five_two, five_two_shapes)
        normalised = normalize_unit_edge(five_two, plain, 0)
        factor = normalised.positions[(0, 0)][3]
        for key, corners in plain.positions.items():
            for corner, position in corners.items():
                assert normalised.positions[key][corner] == pytest.approx(factor * position, abs=1e-12)

    def test_unknown_edge_class(self, five_two, five_two_shapes):
        with pytest.raises(InconsistentInputError):
            develop(five_two, five_two_shapes, unit_edge=3)


class TestFlattenedClass:

    def test_geometric_flattenings(self, five_two, five_two_shapes, five_two_decoration):
        psi = psi_flatten(five_two, five_two_shapes, edge_log_c(five_two, five_two_decoration))
        assert [(f.p, f.q) for f in psi.flattenings] == [(0, -1), (-1, 0), (-1, 0)]
        assert [f.z for f in psi.flattenings] == list(five_two_shapes.shapes)

    def test_duplicate_generators_merge(self, five_two, five_two_shapes, five_two_decoration):
        """Tetrahedra 1 and 2 carry the same flattening, so the element has two terms."""
        psi = psi_flatten(five_two, five_two_shapes, edge_log_c(five_two, five_two_decoration))
        assert sorted(coefficient for coefficient, _ in psi.element) == [1, 2]

    def test_real_root_flattenings(self, five_two):
        shapes = shapes_from_field(five_two, root=FIVE_TWO_REAL_ROOT)
        decoration = develop(five_two, shapes, unit_edge=0)
        psi = psi_flatten(five_two, shapes, edge_log_c(five_two, decoration))
        assert [(f.p, f.q) for f in psi.flattenings] == [(0, 0), (0, 1), (0, 1)]

    def test_semi_strong_edge_sums_vanish(self, five_two, five_two_shapes, five_two_decoration):
        psi = psi_flatten(five_two, five_two_shapes, edge_log_c(five_two, five_two_decoration))
        sums = semi_strong_edge_sums(five_two, psi.flattenings)
        assert len(sums) == 3
        assert max(abs(total) for total in sums) < 1e-10

    def test_figure_eight_semi_strong_edge_sums(self, figure_eight, figure_eight_shapes):
        decoration = develop(figure_eight, figure_eight_shapes)
        psi = psi_flatten(figure_eight, figure_eight_shapes, edge_log_c(figure_eight, decoration))
        assert max(abs(total) for total in semi_strong_edge_sums(figure_eight, psi.flattenings)) < 1e-10


class TestCosets:

    def test_normalize_cosets(self):
        normalization = normalize_cosets(np.eye(2), standard_matrix(2))
        assert normalization.p == pytest.approx(2)
        assert normalization.q == pytest.approx(0)
        assert normalization.c == pytest.approx(1)
        adjusted = np.linalg.inv(unipotent(normalization.p)) @ standard_matrix(2) @ unipotent(normalization.q)
        assert abs(adjusted[0, 0]) < 1e-12 and abs(adjusted[1, 1]) < 1e-12

    def test_same_coset(self):
        with pytest.raises(SameCosetError):
            normalize_cosets(np.eye(2), unipotent(3))

    def test_rejects_non_unimodular_matrices(self):
        with pytest.raises(InconsistentInputError):
            normalize_cosets(2 * np.eye(2), standard_matrix(1))

    def test_standard_matrix_sends_infinity_to_the_point(self):
        assert image_of_infinity(standard_matrix(complex(1, 2))).value == complex(1, 2)
        assert image_of_infinity(standard_matrix(None)).is_infinite

    def test_four_point_configuration(self):
        points = [INFINITY, 0, 1, complex(0.3, 0.7)]
        simplex = psi_of_configuration(points)
        assert len(simplex.long_edges) == 6
        assert len(simplex.short_edges) == 24
        assert simplex.flattening.z == pytest.approx(cross_ratio(*points))

    def test_short_edges_close_around_each_vertex(self):
        """alpha^i_jk + alpha^i_kl + alpha^i_lj = 0 for every vertex of the simplex."""
        rng = np.random.default_rng(41)
        points, matrices = random_configuration(rng, n_points=4)
        simplex = psi_of_configuration(points, matrices)
        for i in range(4):
            j, k, l = (v for v in range(4) if v != i)
            total = simplex.short_edges[(i, j, k)] + simplex.short_edges[(i, k, l)] + simplex.short_edges[(i, l, j)]
            assert abs(total) < 1e-9

    def test_congruence_invariance(self):
        """Moving the whole configuration by an element of SL(2, C) keeps every label."""
        rng = np.random.default_rng(43)
        points, matrices = random_configuration(rng, n_points=4)
        a = np.array([[2, 1 + 1j], [0.5, 0.75 + 0.25j]], dtype=complex)
        moved_matrices = [a @ g for g in matrices]
        moved_points = [image_of_infinity(g) for g in moved_matrices]
        before = psi_of_configuration(points, matrices)
        after = psi_of_configuration(moved_points, moved_matrices)
        for edge, c in before.long_edges.items():
            assert after.long_edges[edge] == pytest.approx(c, rel=1e-9)
        for edge, alpha in before.short_edges.items():
            assert after.short_edges[edge] == pytest.approx(alpha, rel=1e-8, abs=1e-10)
        assert after.flattening.same_class(before.flattening, tolerance=1e-8)

    def test_coincident_points(self):
        with pytest.raises(DegenerateSimplexError):
            psi_of_configuration([0, 1, 1, 2])

    def test_matrix_must_match_its_point(self):
        with pytest.raises(InconsistentInputError):
            psi_of_configuration([0, 1, 2, 3], [standard_matrix(v) for v in (0, 1, 2, 5)])

    def test_face_flattenings_need_five_points(self):
        with pytest.raises(InconsistentInputError):
            face_flattenings([0, 1, 2, 3])

    def test_random_configurations_sometimes_use_infinity(self):
        rng = np.random.default_rng(47)
        draws = [random_configuration(rng)[0] for _ in range(100)]
        assert any(point.is_infinite for points in draws for point in points)
        assert all(len(points) == 5 for points in draws)
