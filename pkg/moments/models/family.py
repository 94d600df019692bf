"""
Polynomial Family Model

The PolynomialFamily model holds P_0..P_N with deg P_n = n as exact
monomial-coordinate rows, together with:
- the mutually inverse basis-change matrices (to_monomial / from_monomial)
- the bijection I_P between finite sequences and polynomials
- a lazily filled, lock-protected table of structure constants
"""

import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from moments.exceptions import ShefferSpecError, TruncationError
from moments.models.polynomial import horner, poly_mul
from moments.models.scalar import Scalar
from moments.models.series import TruncatedSeries


class FamilyKind(str, Enum):
    MONOMIAL = "monomial"
    NEWTON = "newton"
    SHEFFER = "sheffer"


@dataclass(frozen=True)
class ShefferSpec:
    """
    Exponential generating function γ(λ)·exp(α(λ)x) truncated at ``order``.

    Attributes:
        gamma: γ as a TruncatedSeries, γ(0) = 1
        alpha: α as a TruncatedSeries, α(0) = 0 and α'(0) != 0
        order: N, the common truncation order
    """

    gamma: TruncatedSeries
    alpha: TruncatedSeries
    order: int

    def __post_init__(self) -> None:
        if self.gamma.order != self.order or self.alpha.order != self.order:
            raise ShefferSpecError(
                f"gamma/alpha orders ({self.gamma.order}, {self.alpha.order}) differ from {self.order}"
            )
        if self.gamma[0] != 1:
            raise ShefferSpecError(f"gamma(0) must be 1, got {self.gamma[0]}")
        if self.alpha[0] != 0:
            raise ShefferSpecError(f"alpha(0) must be 0, got {self.alpha[0]}")
        if self.order >= 1 and self.alpha[1] == 0:
            raise ShefferSpecError("alpha'(0) must be nonzero")

    @classmethod
    def from_coeffs(cls, gamma: Sequence, alpha: Sequence, order: int) -> "ShefferSpec":
        return cls(
            gamma=TruncatedSeries.from_coeffs(gamma, order),
            alpha=TruncatedSeries.from_coeffs(alpha, order),
            order=order,
        )


class StructureTable:
    """
    Structure constants c_jk[n] = (P_j P_k, P_n)_P for j + k <= N.

    Entries are computed on first access and cached; a lock makes the
    cache safe to fill from several threads. c_jk and c_kj share one entry.
    """

    def __init__(self, family: "PolynomialFamily"):
        self._family = family
        self._entries: dict[tuple[int, int], tuple[Fraction, ...]] = {}
        self._lock = threading.Lock()

    @property
    def order(self) -> int:
        return self._family.order

    def get(self, j: int, k: int) -> tuple[Fraction, ...]:
        if j < 0 or k < 0 or j + k > self.order:
            raise TruncationError(f"structure constant ({j}, {k}) exceeds order {self.order}")
        key = (min(j, k), max(j, k))
        with self._lock:
            cached = self._entries.get(key)
            if cached is None:
                product = poly_mul(self._family.row(j), self._family.row(k))
                cached = tuple(self._family.from_polynomial(product))
                self._entries[key] = cached
        return cached

    def entries(self) -> dict[tuple[int, int], tuple[Fraction, ...]]:
        """Every (j, k) with j + k <= N, computed eagerly."""
        return {
            (j, k): self.get(j, k)
            for j in range(self.order + 1)
            for k in range(self.order + 1 - j)
        }


@dataclass(frozen=True)
class PolynomialFamily:
    """
    A family (P_n) in monomial coordinates.

    Attributes:
        order: N, the index of the last stored polynomial
        kind: monomial, newton or sheffer
        monomial_coeffs: row n holds the n+1 coefficients of P_n
        from_monomial_coeffs: row n holds x^n expanded in P_0..P_n
        spec: generating function of a Sheffer family
        name: label of a named preset (hermite, charlier, ...)
    """

    order: int
    kind: FamilyKind
    monomial_coeffs: tuple[tuple[Fraction, ...], ...]
    from_monomial_coeffs: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    spec: Optional[ShefferSpec] = None
    name: Optional[str] = None
    structure: StructureTable = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.monomial_coeffs) != self.order + 1:
            raise TruncationError(f"family of order {self.order} needs {self.order + 1} rows")
        for n, row in enumerate(self.monomial_coeffs):
            if len(row) != n + 1 or row[n] == 0:
                raise ShefferSpecError(f"P_{n} must have exact degree {n}")
        object.__setattr__(self, "structure", StructureTable(self))

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Fraction]],
        kind: FamilyKind,
        spec: Optional[ShefferSpec] = None,
        name: Optional[str] = None,
    ) -> "PolynomialFamily":
        """Build a family from its monomial rows, inverting the triangular matrix exactly."""
        rows = tuple(tuple(Fraction(c) for c in row) for row in rows)
        return cls(
            order=len(rows) - 1,
            kind=kind,
            monomial_coeffs=rows,
            from_monomial_coeffs=_invert_lower_triangular(rows),
            spec=spec,
            name=name,
        )

    @property
    def label(self) -> str:
        return self.name or self.kind.value

    def row(self, n: int) -> tuple[Fraction, ...]:
        self._check_index(n)
        return self.monomial_coeffs[n]

    def to_monomial(self) -> list[list[Fraction]]:
        """Lower-triangular matrix A with P_n = sum_k A[n][k] x^k."""
        return _square(self.monomial_coeffs)

    def from_monomial(self) -> list[list[Fraction]]:
        """Lower-triangular matrix B with x^n = sum_k B[n][k] P_k."""
        return _square(self.from_monomial_coeffs)

    def to_polynomial(self, f: Sequence[Scalar]) -> list[Scalar]:
        """I_P f = sum_n f_n P_n in monomial coordinates."""
        self._check_index(len(f) - 1)
        out: list[Scalar] = [0] * len(f)
        for n, fn in enumerate(f):
            if fn == 0:
                continue
            for k, a in enumerate(self.monomial_coeffs[n]):
                out[k] += fn * a
        return out

    def from_polynomial(self, p: Sequence[Scalar]) -> list[Scalar]:
        """The sequence f with I_P f = p."""
        self._check_index(len(p) - 1)
        out: list[Scalar] = [0] * len(p)
        for n, pn in enumerate(p):
            if pn == 0:
                continue
            for k, b in enumerate(self.from_monomial_coeffs[n]):
                out[k] += pn * b
        return out

    def value(self, n: int, x: Scalar) -> Scalar:
        """P_n(x) by Horner; exact for exact x."""
        return horner(self.row(n), x)

    def _check_index(self, n: int) -> None:
        if n > self.order:
            raise TruncationError(f"index {n} exceeds family order {self.order}")


def _invert_lower_triangular(rows: Sequence[Sequence[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    size = len(rows)
    inverse: list[list[Fraction]] = []
    for n in range(size):
        # x^n = (x^n - sum_{k<n} A[n][k] x^k) / A[n][n], then recurse on the x^k
        current = [Fraction(0)] * (n + 1)
        current[n] = 1 / rows[n][n]
        for k in range(n):
            coeff = rows[n][k]
            if coeff == 0:
                continue
            for m, b in enumerate(inverse[k]):
                current[m] -= coeff * b / rows[n][n]
        inverse.append(current)
    return tuple(tuple(r) for r in inverse)


def _square(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    size = len(rows)
    return [list(row) + [Fraction(0)] * (size - len(row)) for row in rows]
