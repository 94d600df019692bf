"""
Sequence Pydantic Schemas
"""

from pydantic import BaseModel, Field

from moments.models.sequence import FiniteSequence
from moments.schemas.common import ScalarValue, dump_scalar, load_scalar


class SequenceDocument(BaseModel):
    """A finitely supported sequence f_0..f_d."""

    coeffs: list[ScalarValue] = Field(
        default_factory=list,
        description="Coefficients as rational strings, numbers or [re, im] pairs",
        examples=[["1", "1/2", 0.25]],
    )

    def to_sequence(self) -> FiniteSequence:
        return FiniteSequence(load_scalar(c) for c in self.coeffs)

    @classmethod
    def from_sequence(cls, sequence: FiniteSequence) -> "SequenceDocument":
        return cls(coeffs=[dump_scalar(c) for c in sequence])
