"""Triangulation file schemas (Pydantic models)."""
from typing import List, Literal, Optional, Tuple
from pydantic import BaseModel, Field, field_validator, model_validator


class CuspTermSchema(BaseModel):
    """One factor z^a z'^b z''^c of a cusp equation."""
    tet: int = Field(..., ge=0)
    a: int = 0
    b: int = 0
    c: int = 0


class ShapeFieldSchema(BaseModel):
    """Number-field description of the shapes."""
    poly: List[int] = Field(..., min_length=2)
    root: Tuple[float, float]
    shape_exprs: List[List[int]]

    @field_validator("poly")
    @classmethod
    def leading_coefficient_nonzero(cls, v: List[int]) -> List[int]:
        """Polynomial coefficients are ascending; the last one must not vanish."""
        if v[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")
        return v


class DecorationSchema(BaseModel):
    """Optional decoration choices."""
    unit_edge: Optional[int] = Field(None, ge=0)
    base: Optional[Tuple[int, int, int]] = None


class TriangulationFile(BaseModel):
    """Triangulation JSON document."""
    name: Optional[str] = None
    tetrahedra: int = Field(..., gt=0)
    orientation_signs: List[Literal[1, -1]]
    gluings: List[List[Tuple[int, Tuple[int, int, int, int]]]]
    cusp_equations: Optional[List[List[CuspTermSchema]]] = None
    shapes: Optional[List[Tuple[float, float]]] = None
    shape_field: Optional[ShapeFieldSchema] = None
    decoration: Optional[DecorationSchema] = None

    @model_validator(mode="after")
    def check_lengths(self) -> "TriangulationFile":
        """Per-tetrahedron arrays must have one entry per tetrahedron."""
        n = self.tetrahedra
        if len(self.orientation_signs) != n:
            raise ValueError(f"orientation_signs has {len(self.orientation_signs)} entries, expected {n}")
        if len(self.gluings) != n:
            raise ValueError(f"gluings has {len(self.gluings)} entries, expected {n}")
        for tet, faces in enumerate(self.gluings):
            if len(faces) != 4:
                raise ValueError(f"gluings[{tet}] must list four faces")
        if self.shapes is not None and len(self.shapes) != n:
            raise ValueError(f"shapes has {len(self.shapes)} entries, expected {n}")
        if self.shape_field is not None and len(self.shape_field.shape_exprs) != n:
            raise ValueError("shape_field.shape_exprs needs one polynomial per tetrahedron")
        return self
