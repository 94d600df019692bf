"""
Moment Functional Model

The MomentFunctional model demonstrates:
- a truncated real sequence τ_0..τ_M tied to a family by name
- exact or floating storage, decided by the entries
- the result records produced by the positivity and growth diagnostics
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from moments.exceptions import InputError
from moments.models.scalar import Scalar, all_exact
from moments.models.sequence import FiniteSequence


@dataclass(frozen=True)
class MomentFunctional:
    """
    Truncated moment functional τ = (τ_0, ..., τ_M).

    Attributes:
        values: real scalars, exact (Fraction) or floating
        family_kind: label of the family the values refer to
    """

    values: tuple[Scalar, ...]
    family_kind: str = "monomial"

    def __init__(self, values: Iterable[Scalar], family_kind: str = "monomial"):
        values = tuple(values)
        for v in values:
            if isinstance(v, complex):
                raise InputError("moment functionals are real; complex values are rejected")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "family_kind", family_kind)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Scalar:
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    @property
    def is_exact(self) -> bool:
        return all_exact(self.values)


@dataclass(frozen=True)
class GramMatrix:
    """K_jk = sum_n τ_n (P_j P_k, P_n)_P for j, k = 0..N; symmetric and real."""

    entries: tuple[tuple[Scalar, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        j, k = index
        return self.entries[j][k]

    def rows(self) -> list[list[Scalar]]:
        return [list(row) for row in self.entries]


class Verdict(str, Enum):
    POSITIVE = "positive"
    INDEFINITE = "indefinite"
    BORDERLINE = "borderline"


@dataclass(frozen=True)
class PositivityVerdict:
    """
    Outcome of a PSD test.

    Attributes:
        verdict: positive, indefinite or borderline
        witness: f with τ(f ∗_P f̄) < 0 for indefinite verdicts
        lambda_min: smallest eigenvalue (floating test only)
        exact: whether the decision was made in exact arithmetic
    """

    verdict: Verdict
    witness: Optional[FiniteSequence] = None
    lambda_min: Optional[float] = None
    exact: bool = False

    @property
    def is_indefinite(self) -> bool:
        return self.verdict is Verdict.INDEFINITE


@dataclass(frozen=True)
class GrowthReport:
    """
    Smallest C with |τ_n| <= n! C^{n+1} over the stored range.

    Attributes:
        constant: C
        ratios: (|τ_n|/n!)^{1/(n+1)} per index
        unbounded_trend: the maximum sits at the last index and the tail increases strictly
    """

    constant: float
    ratios: tuple[float, ...]
    unbounded_trend: bool


@dataclass(frozen=True)
class EnergyReport:
    """τ(δ_n ∗_P δ_n) for n = 0..N with the fitted constant of (n!)² C^{n+1}."""

    energies: tuple[Scalar, ...]
    normalized: tuple[float, ...]
    constant: float
    unbounded_trend: bool


@dataclass(frozen=True)
class CarlemanReport:
    """Partial sums of sum_{n=1..N} τ_{2k+2n}^{-1/(2n)}; reported, never judged."""

    shift: int
    terms: tuple[float, ...]
    partial_sums: tuple[float, ...]


@dataclass(frozen=True)
class AnalyticReport:
    """∗_P-positivity together with the diagonal growth fit."""

    positivity: PositivityVerdict
    energy: EnergyReport

    @property
    def satisfied(self) -> bool:
        return self.positivity.verdict is not Verdict.INDEFINITE and not self.energy.unbounded_trend
