"""Decorations and long-edge labels."""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from app.bloch.domain.models import PreBlochElement
from app.numerics.domain.models import ExtComplex, Flattening

TriangleKey = Tuple[int, int]
Base = Tuple[int, int, int]


@dataclass(frozen=True)
class Decoration:
    """
    Developed cusp triangles.

    ``positions[(t, i)][j]`` is the developed position of corner j of the link
    triangle of vertex i of tetrahedron t. The short-edge label alpha^i_jk of
    tetrahedron t is positions[(t, i)][k] - positions[(t, i)][j].
    """
    positions: Dict[TriangleKey, Dict[int, complex]]
    cusp_of: Dict[TriangleKey, int]
    bases: Dict[int, Base]
    placement_order: Tuple[TriangleKey, ...] = ()

    def alpha(self, tet: int, vertex: int, j: int, k: int) -> complex:
        corners = self.positions[(tet, vertex)]
        return corners[k] - corners[j]

    def corner_product(self, tet: int, i: int, j: int, k: int) -> complex:
        """alpha^i_kj * alpha^j_ik for the edge ij of tetrahedron ``tet``."""
        return self.alpha(tet, i, k, j) * self.alpha(tet, j, i, k)

    def edge_vectors(self, tet: int, vertex: int) -> Tuple[complex, complex, complex]:
        """Sides j->k, k->l, l->j for the corners j < k < l; they sum to zero."""
        j, k, l = sorted(self.positions[(tet, vertex)])
        corners = self.positions[(tet, vertex)]
        return corners[k] - corners[j], corners[l] - corners[k], corners[j] - corners[l]

    def rescaled(self, cusp: int, factor: complex) -> "Decoration":
        """Change the horosphere of one cusp by scaling its development."""
        positions = {
            key: ({j: factor * p for j, p in corners.items()} if self.cusp_of[key] == cusp else dict(corners))
            for key, corners in self.positions.items()
        }
        return Decoration(
            positions=positions,
            cusp_of=dict(self.cusp_of),
            bases=dict(self.bases),
            placement_order=self.placement_order,
        )

    def dump(self) -> List[dict]:
        """Placed triangles in placement order, for external plotting."""
        return [
            {
                "cusp": self.cusp_of[key],
                "tet": key[0],
                "vertex": key[1],
                "corners": {
                    str(j): [p.real, p.imag] for j, p in sorted(self.positions[key].items())
                },
            }
            for key in self.placement_order
        ]


@dataclass(frozen=True)
class EdgeLogC:
    """Counter-diagonal entry c of the long edges of one edge class."""
    edge_class: int
    c: complex
    log_c: complex
    corner_product: complex
    spread: float = 0.0


@dataclass
class PsiResult:
    """Image of the fundamental class and the per-tetrahedron flattenings."""
    element: PreBlochElement
    flattenings: List[Flattening] = field(default_factory=list)


@dataclass(frozen=True)
class CosetNormalization:
    """Unipotent adjustments making (g u(p))^-1 h u(q) counter-diagonal."""
    p: complex
    q: complex
    c: complex


@dataclass
class TruncatedSimplex:
    """Labels of a decorated configuration of n + 1 ideal points."""
    points: Tuple[ExtComplex, ...]
    long_edges: Dict[Tuple[int, int], complex]
    short_edges: Dict[Tuple[int, int, int], complex]
    flattening: Optional[Flattening] = None
