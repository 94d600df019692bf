"""
Measure and Operator Models

DiscreteMeasure is both the output of reconstruction and the input of the
forward maps; OperatorMatrix is multiplication by x in a family's basis;
RecurrenceCoefficients are the three-term recurrence of the monic
orthogonal polynomials of a functional.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from moments.exceptions import InputError
from moments.models.scalar import Scalar, all_exact


@dataclass(frozen=True)
class DiscreteMeasure:
    """
    mu = sum_i w_i δ_{x_i}.

    Attributes:
        atoms: strictly increasing real points
        weights: strictly positive masses, one per atom
    """

    atoms: tuple[Scalar, ...]
    weights: tuple[Scalar, ...]

    def __init__(self, atoms: Iterable[Scalar], weights: Iterable[Scalar]):
        atoms, weights = tuple(atoms), tuple(weights)
        if len(atoms) != len(weights):
            raise InputError(f"{len(atoms)} atoms but {len(weights)} weights")
        if not atoms:
            raise InputError("a measure needs at least one atom")
        if any(isinstance(v, complex) for v in atoms + weights):
            raise InputError("atoms and weights must be real")
        if any(w <= 0 for w in weights):
            raise InputError("weights must be positive")
        if any(b <= a for a, b in zip(atoms, atoms[1:])):
            raise InputError("atoms must be strictly increasing")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Scalar, Scalar]]) -> "DiscreteMeasure":
        """Sort (atom, weight) pairs; atoms must still be distinct."""
        ordered = sorted(pairs, key=lambda pair: pair[0])
        return cls([a for a, _ in ordered], [w for _, w in ordered])

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def total_mass(self) -> Scalar:
        return sum(self.weights, 0)

    @property
    def is_exact(self) -> bool:
        return all_exact(self.atoms + self.weights)


@dataclass(frozen=True)
class OperatorMatrix:
    """
    Matrix of multiplication by x in the basis δ_0..δ_N (column n = x·P_n).

    For a family with P_1 = c1·x + c0 and c1 != 1 or c0 != 0, the matrix is
    (J_P - c0·I)/c1 with J_P f = δ_1 ∗_P f; ``shift`` and ``scale`` record c0, c1.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    shift: Fraction = Fraction(0)
    scale: Fraction = Fraction(1)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def renormalized(self) -> bool:
        return self.shift != 0 or self.scale != 1

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        row, column = index
        return self.entries[row][column]

    def column(self, n: int) -> list[Fraction]:
        return [row[n] for row in self.entries]

    def diagonal(self, offset: int = 0) -> list[Fraction]:
        """Main (0), sub (-1) or super (+1) diagonal."""
        size = self.size
        if offset >= 0:
            return [self.entries[i][i + offset] for i in range(size - offset)]
        return [self.entries[i - offset][i] for i in range(size + offset)]


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """
    x π_n = π_{n+1} + a_n π_n + b_n² π_{n-1} for the monic orthogonal π_n.

    Attributes:
        diagonal: a_0..a_{r-1}
        offdiagonal_squared: b_1²..b_{r-1}²
        mass: m_0 = τ_0
        rank: r, the number of atoms of the Gauss-type quadrature
        exact: whether the coefficients are exact rationals
        collapsed: index of the first sub-threshold Hankel pivot, None at full rank
    """

    diagonal: tuple[Scalar, ...]
    offdiagonal_squared: tuple[Scalar, ...]
    mass: Scalar
    rank: int
    exact: bool = False
    collapsed: Optional[int] = None
