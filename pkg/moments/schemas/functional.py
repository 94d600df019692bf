"""
Functional Pydantic Schemas

The moment functional document and the reports of the positivity and
growth diagnostics.
"""

from typing import Optional

from pydantic import BaseModel, Field

from moments.models.functional import (
    AnalyticReport,
    CarlemanReport,
    EnergyReport,
    GrowthReport,
    MomentFunctional,
    PositivityVerdict,
    Verdict,
)
from moments.schemas.common import RealValue, ScalarValue, dump_scalar, load_scalar


class FunctionalDocument(BaseModel):
    """
    Truncated moment functional τ_0..τ_M.

    ``family`` names the family the values refer to; commands use it when
    no family is given explicitly.
    """

    family: str = Field(default="monomial", examples=["newton"])
    values: list[RealValue] = Field(min_length=1, examples=[["1", "0", "1", "0", "1"]])

    def to_functional(self) -> MomentFunctional:
        return MomentFunctional((load_scalar(v) for v in self.values), family_kind=self.family)

    @classmethod
    def from_functional(cls, tau: MomentFunctional) -> "FunctionalDocument":
        return cls(family=tau.family_kind, values=[dump_scalar(v) for v in tau])


class VerdictDocument(BaseModel):
    verdict: Verdict
    witness: Optional[list[ScalarValue]] = None
    lambda_min: Optional[float] = None
    exact: bool = False

    @classmethod
    def from_verdict(cls, verdict: PositivityVerdict) -> "VerdictDocument":
        witness = None
        if verdict.witness is not None:
            witness = [dump_scalar(c) for c in verdict.witness]
        return cls(
            verdict=verdict.verdict,
            witness=witness,
            lambda_min=verdict.lambda_min,
            exact=verdict.exact,
        )


class GrowthDocument(BaseModel):
    constant: float
    ratios: list[float]
    unbounded_trend: bool

    @classmethod
    def from_report(cls, report: GrowthReport) -> "GrowthDocument":
        return cls(constant=report.constant, ratios=list(report.ratios), unbounded_trend=report.unbounded_trend)


class EnergyDocument(BaseModel):
    energies: list[ScalarValue]
    normalized: list[float]
    constant: float
    unbounded_trend: bool

    @classmethod
    def from_report(cls, report: EnergyReport) -> "EnergyDocument":
        return cls(
            energies=[dump_scalar(e) for e in report.energies],
            normalized=list(report.normalized),
            constant=report.constant,
            unbounded_trend=report.unbounded_trend,
        )


class CarlemanDocument(BaseModel):
    shift: int
    terms: list[float]
    partial_sums: list[float]

    @classmethod
    def from_report(cls, report: CarlemanReport) -> "CarlemanDocument":
        return cls(shift=report.shift, terms=list(report.terms), partial_sums=list(report.partial_sums))


class AnalyticDocument(BaseModel):
    satisfied: bool
    positivity: VerdictDocument
    energy: EnergyDocument

    @classmethod
    def from_report(cls, report: AnalyticReport) -> "AnalyticDocument":
        return cls(
            satisfied=report.satisfied,
            positivity=VerdictDocument.from_verdict(report.positivity),
            energy=EnergyDocument.from_report(report.energy),
        )
