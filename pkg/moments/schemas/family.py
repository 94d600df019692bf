"""
Family Pydantic Schemas

The family document names a preset or gives the Sheffer generating
function explicitly; responses add the rows of P_0..P_N in monomial
coordinates.
"""

from typing import Literal, Optional, get_args

from pydantic import BaseModel, Field, model_validator

from moments.models.family import PolynomialFamily, ShefferSpec
from moments.models.scalar import format_exact, to_exact
from moments.schemas.common import ExactValue
from moments.services.family_service import family_preset, family_sheffer

FamilyKindName = Literal["monomial", "newton", "sheffer", "hermite", "charlier", "bernoulli"]


class FamilyDocument(BaseModel):
    """
    A polynomial family with deg P_n = n.

    ``gamma`` and ``alpha`` are the leading series coefficients of the
    generating function γ(λ) exp(α(λ) x) and are required for ``sheffer``.
    ``rate`` parametrizes ``charlier``.
    """

    kind: FamilyKindName = Field(
        default="monomial",
        description="Preset name, or 'sheffer' for an explicit generating function",
        examples=["newton"],
    )
    order: int = Field(ge=0, le=256, description="Truncation order N", examples=[8])
    gamma: Optional[list[ExactValue]] = Field(default=None, examples=[["1"]])
    alpha: Optional[list[ExactValue]] = Field(default=None, examples=[["0", "1"]])
    rate: ExactValue = Field(default="1", description="Charlier parameter a > 0")
    rows: Optional[list[list[str]]] = Field(
        default=None, description="Monomial coefficients of P_0..P_N (output only)"
    )

    @model_validator(mode="after")
    def validate_generating_function(self) -> "FamilyDocument":
        if self.kind == "sheffer" and (self.gamma is None or self.alpha is None):
            raise ValueError("a sheffer family needs both gamma and alpha")
        if self.kind != "sheffer" and (self.gamma is not None or self.alpha is not None):
            raise ValueError(f"gamma and alpha only apply to sheffer families, not {self.kind}")
        return self

    def to_family(self) -> PolynomialFamily:
        if self.kind == "sheffer":
            spec = ShefferSpec.from_coeffs(self.gamma, self.alpha, self.order)
            return family_sheffer(spec)
        return family_preset(self.kind, self.order, to_exact(self.rate))

    @classmethod
    def from_family(cls, family: PolynomialFamily, rate: str = "1") -> "FamilyDocument":
        kind = family.label if family.label in get_args(FamilyKindName) else "sheffer"
        document = {
            "kind": kind,
            "order": family.order,
            "rows": [[format_exact(c) for c in row] for row in family.monomial_coeffs],
        }
        if kind == "sheffer" and family.spec is not None:
            document["gamma"] = family.spec.gamma.as_strings()
            document["alpha"] = family.spec.alpha.as_strings()
        if kind == "charlier":
            document["rate"] = rate
        return cls(**document)
