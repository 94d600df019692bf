"""
Truncated Series Model

A TruncatedSeries of order N holds the coefficients of 1, λ, ..., λ^N as
exact rationals. Every operation is correct modulo λ^{N+1}.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from moments.exceptions import TruncationError
from moments.models.scalar import format_exact, to_exact


@dataclass(frozen=True)
class TruncatedSeries:
    """
    Formal power series truncated after λ^order.

    Attributes:
        order: truncation order N
        coeffs: N+1 Fractions, coefficient of λ^k at index k
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise TruncationError(f"series order must be non-negative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise TruncationError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(
        cls, coeffs: Iterable[Union[int, str, Fraction]], order: int | None = None
    ) -> "TruncatedSeries":
        """
        Build a series from leading coefficients, zero-padded up to ``order``.

        Coefficients past ``order`` must vanish; they would otherwise be
        silently dropped.
        """
        values = [to_exact(c) for c in coeffs]
        if order is None:
            order = max(len(values) - 1, 0)
        if any(v != 0 for v in values[order + 1:]):
            raise TruncationError(f"nonzero coefficients beyond order {order}")
        values = values[: order + 1]
        values += [Fraction(0)] * (order + 1 - len(values))
        return cls(order=order, coeffs=tuple(values))

    @classmethod
    def constant(cls, value: Union[int, Fraction], order: int) -> "TruncatedSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def variable(cls, order: int, scale: Union[int, Fraction] = 1) -> "TruncatedSeries":
        """The series ``scale * λ``."""
        return cls.from_coeffs([0, scale] if order >= 1 else [0], order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_order(other)
        return TruncatedSeries(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-a for a in self.coeffs))

    def scale(self, factor: Union[int, Fraction]) -> "TruncatedSeries":
        factor = to_exact(factor)
        return TruncatedSeries(self.order, tuple(factor * a for a in self.coeffs))

    def derivative(self) -> list[Fraction]:
        """Coefficients of d/dλ, of length N (the top one is lost to truncation)."""
        return [k * self.coeffs[k] for k in range(1, self.order + 1)]

    def antiderivative(self) -> "TruncatedSeries":
        """Integral from 0, of order N+1; no coefficient is lost."""
        integral = [Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)]
        return TruncatedSeries(self.order + 1, tuple(integral))

    def shift(self) -> "TruncatedSeries":
        """λ·a modulo λ^{N+1}; the top coefficient drops out."""
        return TruncatedSeries(self.order, (Fraction(0),) + self.coeffs[: self.order])

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise TruncationError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def evaluate(self, point: complex) -> complex:
        """Numeric value of the truncated polynomial at ``point`` (Horner)."""
        value = 0j
        for c in reversed(self.coeffs):
            value = value * point + float(c)
        return value

    def as_strings(self) -> list[str]:
        return [format_exact(c) for c in self.coeffs]

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise TruncationError(f"series order mismatch: {self.order} vs {other.order}")

