"""
Command Request Schemas

One request body per command. The CLI assembles them from its flags and
input files, the HTTP API receives them as JSON; both hand them to
MomentService.
"""

from typing import Optional

from pydantic import BaseModel, Field

from moments.schemas.family import FamilyDocument
from moments.schemas.functional import FunctionalDocument
from moments.schemas.measure import MeasureDocument
from moments.schemas.sequence import SequenceDocument


class ConvRequest(BaseModel):
    f: SequenceDocument
    g: SequenceDocument
    family: FamilyDocument


class CheckRequest(BaseModel):
    """
    Positivity at truncation ``n``. Without ``family`` the functional's own
    family label is used as a preset, of order len(values) - 1.
    """

    functional: FunctionalDocument
    family: Optional[FamilyDocument] = None
    n: int = Field(ge=0)
    tol: Optional[float] = Field(default=None, gt=0)


class ReconstructRequest(CheckRequest):
    n: int = Field(ge=1)


class ForwardRequest(BaseModel):
    measure: MeasureDocument
    family: FamilyDocument
    m: int = Field(ge=0)


class GrowthRequest(BaseModel):
    functional: FunctionalDocument
    tail: Optional[int] = Field(default=None, ge=2)


class CarlemanRequest(BaseModel):
    functional: FunctionalDocument
    k: int = Field(default=0, ge=0)
    terms: int = Field(ge=1)


class EnergyRequest(BaseModel):
    functional: FunctionalDocument
    family: Optional[FamilyDocument] = None
    n: int = Field(ge=0)
    tail: Optional[int] = Field(default=None, ge=2)


class JacobiRequest(BaseModel):
    family: FamilyDocument
    n: int = Field(ge=0)


class RecurrenceRequest(BaseModel):
    functional: FunctionalDocument
    family: Optional[FamilyDocument] = None
    n: int = Field(ge=1)
