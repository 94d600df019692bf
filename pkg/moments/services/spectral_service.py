"""
Spectral Service

The operator side of the moment problem: the matrix of J_P f = δ_1 ∗_P f,
the forward map τ_n = ∫ P_n dμ, and measure reconstruction by
orthonormalization and a symmetric tridiagonal eigendecomposition.
"""

import logging
import math
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.linalg import eigh_tridiagonal

from moments.config import get_settings
from moments.exceptions import (
    ComputationError,
    FunctionalLengthError,
    IndefiniteFunctionalError,
    InputError,
    TruncationError,
)
from moments.models.family import PolynomialFamily
from moments.models.functional import MomentFunctional, Verdict
from moments.models.measure import DiscreteMeasure, OperatorMatrix, RecurrenceCoefficients
from moments.models.scalar import Scalar
from moments.services.family_service import evaluate
from moments.services.functional_service import is_positive

logger = logging.getLogger(__name__)


def jacobi_matrix(family: PolynomialFamily, n: int) -> OperatorMatrix:
    """
    Multiplication by x in the basis P_0..P_n, truncated to n+1 rows.

    Column m holds the coefficients of x·P_m. When P_1 = x this is exactly
    δ_1 ∗_P δ_m; otherwise P_1 = c1·x + c0 and the column is
    (δ_1 ∗_P δ_m - c0·δ_m)/c1, with c0 and c1 recorded in the result.

    Raises:
        TruncationError: if n + 1 exceeds the family order
    """
    if n < 0 or n + 1 > family.order:
        raise TruncationError(f"jacobi_matrix({n}) needs family order >= {n + 1}, got {family.order}")
    shift, scale = family.row(1)
    size = n + 1
    entries = [[Fraction(0)] * size for _ in range(size)]
    for m in range(size):
        column = family.structure.get(1, m)
        for row in range(min(len(column), size)):
            value = column[row] - (shift if row == m else 0)
            entries[row][m] = value / scale
    if shift != 0 or scale != 1:
        logger.debug(f"Renormalized P_1 = {scale}x + {shift} for {family.label}")
    return OperatorMatrix(tuple(tuple(r) for r in entries), shift=shift, scale=scale)


def forward_moments(mu: DiscreteMeasure, family: PolynomialFamily, m: int) -> MomentFunctional:
    """
    τ_n = sum_i w_i P_n(x_i) for n = 0..m; exact when the measure is exact.

    Raises:
        TruncationError: if m exceeds the family order
    """
    if m > family.order:
        raise TruncationError(f"M = {m} exceeds family order {family.order}")
    if mu.is_exact:
        values = [
            sum((w * family.value(n, x) for x, w in zip(mu.atoms, mu.weights)), Fraction(0))
            for n in range(m + 1)
        ]
    else:
        values = [
            math.fsum(float(w) * evaluate(family, n, x) for x, w in zip(mu.atoms, mu.weights))
            for n in range(m + 1)
        ]
    return MomentFunctional(values, family_kind=family.label)


def power_moments(tau: MomentFunctional, family: PolynomialFamily) -> list[Scalar]:
    """
    m_k = ∫ x^k dμ from τ_n = ∫ P_n dμ.

    Since x^n = sum_k B[n][k] P_k with B = from_monomial, m_n = sum_k B[n][k] τ_k.
    """
    if len(tau) - 1 > family.order:
        raise TruncationError(f"functional of length {len(tau)} exceeds family order {family.order}")
    return [
        sum((b * tau[k] for k, b in enumerate(family.from_monomial_coeffs[n]) if b != 0), Fraction(0))
        for n in range(len(tau))
    ]


def recurrence_coefficients(
    tau: MomentFunctional,
    family: PolynomialFamily,
    n: int,
    pivot_rtol: Optional[float] = None,
) -> RecurrenceCoefficients:
    """
    Three-term recurrence coefficients from the Hankel matrix of power moments.

    H = L D L^T without pivoting; with monic orthogonal π_j,
    a_j = L[j+1][j] - L[j][j-1] and b_j² = d_j / d_{j-1}. Exact input gives
    exact coefficients. Elimination stops at the first pivot at or below
    pivot_rtol × (largest pivot so far), exactly zero in exact arithmetic.

    Raises:
        FunctionalLengthError: if τ is not defined through index 2n
        IndefiniteFunctionalError: on a negative pivot
        ComputationError: when τ_0 = 0 (no positive mass)
    """
    if n < 1:
        raise InputError("reconstruction needs N >= 1")
    if 2 * n >= len(tau):
        raise FunctionalLengthError(f"functional has {len(tau)} values, index {2 * n} is needed")
    rtol = get_settings().pivot_rtol if pivot_rtol is None else pivot_rtol
    head = MomentFunctional(tau.values[: 2 * n + 1], tau.family_kind)
    moments = power_moments(head, family)
    exact = head.is_exact
    if not exact:
        moments = [float(v) for v in moments]

    size = n + 1
    hankel = [[moments[j + k] for k in range(size)] for j in range(size)]
    lower = [[0] * size for _ in range(size)]
    pivots: list[Scalar] = []
    collapsed: Optional[int] = None
    largest = 0.0

    for j in range(size):
        d = hankel[j][j] - sum((lower[j][k] ** 2 * pivots[k] for k in range(j)), 0)
        threshold = 0 if exact else rtol * largest
        if d < -threshold:
            raise IndefiniteFunctionalError(f"negative Hankel pivot {float(d):.3e} at index {j}")
        if d <= threshold:
            collapsed = j
            break
        pivots.append(d)
        largest = max(largest, float(d))
        for i in range(j + 1, size):
            acc = hankel[i][j] - sum((lower[i][k] * lower[j][k] * pivots[k] for k in range(j)), 0)
            lower[i][j] = acc / d

    rank = len(pivots)
    if rank == 0:
        raise ComputationError("the functional has zero mass; no representing measure exists")
    count = min(rank, n)
    diagonal = [lower[j + 1][j] - (lower[j][j - 1] if j > 0 else 0) for j in range(count)]
    offdiagonal = [pivots[j] / pivots[j - 1] for j in range(1, count)]
    logger.debug(f"Hankel rank {rank} of {size}, {count} quadrature nodes")
    return RecurrenceCoefficients(
        diagonal=tuple(diagonal),
        offdiagonal_squared=tuple(offdiagonal),
        mass=moments[0],
        rank=count,
        exact=exact,
        collapsed=collapsed,
    )


def reconstruct_measure(
    tau: MomentFunctional,
    family: PolynomialFamily,
    n: int,
    tol: Optional[float] = None,
    pivot_rtol: Optional[float] = None,
) -> DiscreteMeasure:
    """
    Discrete measure μ with ∫ P_k dμ = τ_k at truncation n.

    Steps: power moments, Hankel LDL^T, recurrence coefficients, then the
    eigendecomposition of the symmetric tridiagonal Jacobi matrix. Atoms are
    its eigenvalues and weights are m_0 times the squared first eigenvector
    components. The result reproduces m_0..m_{2r-1}, r = number of atoms.
    A rank-deficient functional yields fewer atoms.

    Raises:
        IndefiniteFunctionalError: if τ is not ∗_P-positive at truncation n
    """
    verdict = is_positive(tau, family, n, tol)
    if verdict.verdict is Verdict.INDEFINITE:
        raise IndefiniteFunctionalError("the functional is not positive", witness=verdict.witness)

    coefficients = recurrence_coefficients(tau, family, n, pivot_rtol)
    if coefficients.collapsed is not None:
        logger.warning(f"Hankel rank collapsed at index {coefficients.collapsed}; returning {coefficients.rank} atoms")

    diagonal = np.array([float(a) for a in coefficients.diagonal])
    mass = float(coefficients.mass)
    if coefficients.rank == 1:
        return DiscreteMeasure([float(diagonal[0])], [mass])
    offdiagonal = np.sqrt([float(b2) for b2 in coefficients.offdiagonal_squared])
    atoms, vectors = eigh_tridiagonal(diagonal, offdiagonal)
    weights = mass * vectors[0, :] ** 2
    kept = weights > 0
    if not kept.all():
        logger.warning(f"Dropping {int((~kept).sum())} atoms whose weight underflowed to zero")
    return DiscreteMeasure(atoms[kept].tolist(), weights[kept].tolist())


def poisson_measure(
    rate: float, tail_mass: Optional[float] = None, moment_order: int = 0
) -> DiscreteMeasure:
    """
    Poisson(rate) truncated to atoms 0..K.

    K is the first index past the mode where the neglected part of
    sum_j j^moment_order p_j, bounded by its next term times a geometric
    factor, is below ``tail_mass``. With moment_order = m the factorial
    moments of order <= m carry the same absolute truncation error.
    """
    if rate <= 0:
        raise InputError(f"Poisson rate must be positive, got {rate}")
    if moment_order < 0:
        raise InputError(f"moment_order must be non-negative, got {moment_order}")
    tail_mass = get_settings().tail_mass if tail_mass is None else tail_mass
    weights = [math.exp(-rate)]
    while True:
        j = len(weights)
        following = weights[-1] * rate / j
        ratio = rate / (j + 1) * ((j + 1) / j) ** moment_order
        if j > rate + 1 and ratio < 1 and following * j**moment_order / (1 - ratio) < tail_mass:
            break
        weights.append(following)
    return DiscreteMeasure(range(len(weights)), weights)
