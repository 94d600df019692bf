"""
Measure Pydantic Schemas

Discrete measures, the matrix of multiplication by x and the three-term
recurrence coefficients.
"""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from moments.models.measure import DiscreteMeasure, OperatorMatrix, RecurrenceCoefficients
from moments.models.scalar import format_exact
from moments.schemas.common import RealValue, ScalarValue, dump_scalar, load_scalar


class MeasureDocument(BaseModel):
    """mu = sum_i w_i δ_{x_i}; atoms strictly increasing, weights positive."""

    atoms: list[RealValue] = Field(min_length=1, examples=[[-1, 1]])
    weights: list[RealValue] = Field(min_length=1, examples=[[0.5, 0.5]])

    @model_validator(mode="after")
    def validate_lengths(self) -> "MeasureDocument":
        if len(self.atoms) != len(self.weights):
            raise ValueError(f"{len(self.atoms)} atoms but {len(self.weights)} weights")
        return self

    def to_measure(self) -> DiscreteMeasure:
        return DiscreteMeasure(
            [load_scalar(x) for x in self.atoms],
            [load_scalar(w) for w in self.weights],
        )

    @classmethod
    def from_measure(cls, mu: DiscreteMeasure) -> "MeasureDocument":
        return cls(atoms=[dump_scalar(x) for x in mu.atoms], weights=[dump_scalar(w) for w in mu.weights])


class JacobiDocument(BaseModel):
    """Column n holds x·P_n in the basis P_0..P_N; shift/scale record P_1 = scale·x + shift."""

    entries: list[list[str]]
    shift: str
    scale: str
    renormalized: bool

    @classmethod
    def from_matrix(cls, matrix: OperatorMatrix) -> "JacobiDocument":
        return cls(
            entries=[[format_exact(v) for v in row] for row in matrix.entries],
            shift=format_exact(matrix.shift),
            scale=format_exact(matrix.scale),
            renormalized=matrix.renormalized,
        )


class RecurrenceDocument(BaseModel):
    diagonal: list[ScalarValue]
    offdiagonal_squared: list[ScalarValue]
    mass: ScalarValue
    rank: int
    exact: bool
    collapsed: Optional[int] = None

    @classmethod
    def from_coefficients(cls, coefficients: RecurrenceCoefficients) -> "RecurrenceDocument":
        return cls(
            diagonal=[dump_scalar(a) for a in coefficients.diagonal],
            offdiagonal_squared=[dump_scalar(b) for b in coefficients.offdiagonal_squared],
            mass=dump_scalar(coefficients.mass),
            rank=coefficients.rank,
            exact=coefficients.exact,
            collapsed=coefficients.collapsed,
        )
