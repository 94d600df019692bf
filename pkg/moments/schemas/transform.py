"""
Transform Pydantic Schemas
"""

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from moments.models.transform import TransformSample
from moments.schemas.common import dump_complex
from moments.schemas.functional import FunctionalDocument
from moments.schemas.measure import MeasureDocument

TransformKind = Literal["s", "laplace", "bogoliubov"]


class TransformSampleDocument(BaseModel):
    """{"lambda": [re, im], "value": [re, im], "terms_used": n, "tail_bound": t}"""

    model_config = ConfigDict(populate_by_name=True)

    argument: tuple[float, float] = Field(alias="lambda")
    value: tuple[float, float]
    terms_used: int = Field(ge=0)
    tail_bound: float = Field(ge=0)

    @classmethod
    def from_sample(cls, sample: TransformSample) -> "TransformSampleDocument":
        return cls(
            argument=dump_complex(sample.argument),
            value=dump_complex(sample.value),
            terms_used=sample.terms_used,
            tail_bound=sample.tail_bound,
        )


class TransformRequest(BaseModel):
    """
    Evaluate a transform on a grid of λ values.

    ``s`` reads a functional, ``laplace`` a measure, ``bogoliubov`` either.
    Grid points are real numbers or [re, im] pairs.
    """

    kind: TransformKind
    source: Union[MeasureDocument, FunctionalDocument]
    grid: list[Union[float, tuple[float, float]]] = Field(min_length=1, examples=[[0.3, [0.1, 0.2]]])
    terms: Optional[int] = Field(default=None, ge=1)

    def points(self) -> list[complex]:
        return [complex(*p) if isinstance(p, (tuple, list)) else complex(p) for p in self.grid]
