"""
Finite Sequence Model

An element f = (f_0, ..., f_N, 0, 0, ...) of l_fin. Trailing zeros are
trimmed on construction, so equality ignores them.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from moments.models.scalar import Scalar, all_exact, conj


@dataclass(frozen=True)
class FiniteSequence:
    """
    Finitely supported sequence of exact, floating or complex scalars.

    Attributes:
        coeffs: f_0..f_d with f_d != 0 (empty for the zero sequence)
    """

    coeffs: tuple[Scalar, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = list(coeffs)
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def delta(cls, n: int) -> "FiniteSequence":
        return cls([Fraction(0)] * n + [Fraction(1)])

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Scalar:
        return self.coeffs[n] if n < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def degree(self) -> int:
        """Highest nonzero index, -1 for the zero sequence."""
        return len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        return all_exact(self.coeffs)

    def conjugate(self) -> "FiniteSequence":
        return FiniteSequence(conj(c) for c in self.coeffs)

    def __add__(self, other: "FiniteSequence") -> "FiniteSequence":
        size = max(len(self), len(other))
        return FiniteSequence(self[n] + other[n] for n in range(size))

    def scale(self, factor: Union[Scalar, int]) -> "FiniteSequence":
        return FiniteSequence(factor * c for c in self.coeffs)

    def padded(self, length: int) -> list[Scalar]:
        """Coefficients extended with zeros to ``length`` entries."""
        return list(self.coeffs) + [0] * (length - len(self.coeffs))
