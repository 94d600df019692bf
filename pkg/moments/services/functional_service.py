"""
Functional Service

Moment functionals against a family: the Gram kernel K, ∗_P-positivity
testing (exact pivoted LDL^T or a floating eigenvalue check), the
quasiscalar product, and the growth diagnostics for analytic functionals.
"""

import logging
import math
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from moments.config import get_settings
from moments.exceptions import FunctionalLengthError, InputError, TruncationError
from moments.models.family import PolynomialFamily
from moments.models.functional import (
    AnalyticReport,
    CarlemanReport,
    EnergyReport,
    GramMatrix,
    GrowthReport,
    MomentFunctional,
    PositivityVerdict,
    Verdict,
)
from moments.models.scalar import Scalar, is_exact, log_abs
from moments.models.sequence import FiniteSequence
from moments.services.convolution_service import apply_functional, conv_general, delta

logger = logging.getLogger(__name__)


def gram(tau: MomentFunctional, family: PolynomialFamily, n: int) -> GramMatrix:
    """
    K_jk = sum_m τ_m (P_j P_k, P_m)_P for j, k = 0..n.

    For the monomial family this is the Hankel matrix τ_{j+k}.

    Raises:
        FunctionalLengthError: if τ is not defined through index 2n
        TruncationError: if 2n exceeds the family order
    """
    _require_length(tau, 2 * n)
    if 2 * n > family.order:
        raise TruncationError(f"2N = {2 * n} exceeds family order {family.order}")
    size = n + 1
    entries: list[list[Scalar]] = [[0] * size for _ in range(size)]
    for j in range(size):
        for k in range(j, size):
            constants = family.structure.get(j, k)
            value = sum((tau[m] * c for m, c in enumerate(constants) if c != 0), 0)
            entries[j][k] = entries[k][j] = value
    return GramMatrix(tuple(tuple(row) for row in entries))


def is_positive(
    tau: MomentFunctional,
    family: PolynomialFamily,
    n: int,
    tol: Optional[float] = None,
) -> PositivityVerdict:
    """
    Decide whether τ(f ∗_P f̄) >= 0 for every f of degree <= n.

    Exact input is decided with certainty by a pivoted symmetric LDL^T.
    Floating input uses the eigenvalues of K: indefinite when
    λ_min <= -tol·max|λ|, borderline when |λ_min| < tol·max|λ|, positive
    otherwise. Indefinite verdicts carry a witness f with τ(f ∗_P f̄) < 0.
    """
    kernel = gram(tau, family, n)
    if tau.is_exact:
        return exact_psd_verdict(kernel.rows())
    return psd_verdict(kernel.rows(), tol)


def psd_verdict(matrix: Sequence[Sequence[Scalar]], tol: Optional[float] = None) -> PositivityVerdict:
    """Floating PSD test of a symmetric (or Hermitian) matrix."""
    tol = get_settings().positivity_tol if tol is None else tol
    values = np.array(matrix, dtype=complex if _has_complex(matrix) else float)
    if values.size == 0:
        return PositivityVerdict(Verdict.POSITIVE)
    eigenvalues, eigenvectors = np.linalg.eigh(values)
    scale = float(np.max(np.abs(eigenvalues)))
    lambda_min = float(eigenvalues[0])
    if scale == 0.0:
        return PositivityVerdict(Verdict.POSITIVE, lambda_min=lambda_min)
    if lambda_min <= -tol * scale:
        witness = FiniteSequence(eigenvectors[:, 0].tolist())
        return PositivityVerdict(Verdict.INDEFINITE, witness=witness, lambda_min=lambda_min)
    if abs(lambda_min) < tol * scale:
        logger.warning(f"Borderline positivity: lambda_min={lambda_min:.3e}, scale={scale:.3e}")
        return PositivityVerdict(Verdict.BORDERLINE, lambda_min=lambda_min)
    return PositivityVerdict(Verdict.POSITIVE, lambda_min=lambda_min)


def exact_psd_verdict(matrix: Sequence[Sequence[Fraction]]) -> PositivityVerdict:
    """Exact PSD test of a symmetric rational matrix."""
    witness = _exact_negative_direction([list(row) for row in matrix])
    if witness is None:
        return PositivityVerdict(Verdict.POSITIVE, exact=True)
    return PositivityVerdict(Verdict.INDEFINITE, witness=FiniteSequence(witness), exact=True)


def quasiscalar(
    tau: MomentFunctional, family: PolynomialFamily, f: FiniteSequence, g: FiniteSequence
) -> Scalar:
    """(f, g)_{H_τ} = τ(f ∗_P ḡ)."""
    return apply_functional(tau, conv_general(f, g.conjugate(), family))


def growth_constant(tau: MomentFunctional, tail: Optional[int] = None) -> GrowthReport:
    """
    C = max_n (|τ_n|/n!)^{1/(n+1)} over the stored range.

    The trend flag is raised when the maximum is attained at the last index
    and the last ``tail`` ratios increase strictly. It is a reporting
    convention: boundedness cannot be decided from a finite prefix.

    Raises:
        FunctionalLengthError: with fewer than two values
    """
    if len(tau) < 2:
        raise FunctionalLengthError("growth_constant needs at least two values")
    logs = [_log_quotient(t, math.factorial(n)) for n, t in enumerate(tau)]
    ratios = _root_ratios(logs)
    constant, flagged = _fit(ratios, tail)
    return GrowthReport(constant=constant, ratios=tuple(ratios), unbounded_trend=flagged)


def diag_energy_check(
    tau: MomentFunctional, family: PolynomialFamily, n: int, tail: Optional[int] = None
) -> EnergyReport:
    """
    τ(δ_m ∗_P δ_m) for m = 0..n, normalized by (m!)², with the smallest C
    such that τ(δ_m ∗_P δ_m) <= (m!)² C^{m+1} over the range.

    Raises:
        FunctionalLengthError: if τ is not defined through index 2n
    """
    _require_length(tau, 2 * n)
    energies = []
    for m in range(n + 1):
        d = delta(m)
        energies.append(apply_functional(tau, conv_general(d, d, family)))
    logs = [_log_quotient(e, math.factorial(m) ** 2) for m, e in enumerate(energies)]
    normalized = [math.exp(v) if v > -math.inf else 0.0 for v in logs]
    constant, flagged = _fit(_root_ratios(logs), tail)
    return EnergyReport(
        energies=tuple(energies),
        normalized=tuple(normalized),
        constant=constant,
        unbounded_trend=flagged,
    )


def carleman_report(tau: MomentFunctional, k: int, n_terms: int) -> CarlemanReport:
    """
    Partial sums of sum_{n=1..N} τ_{2k+2n}^{-1/(2n)}.

    Divergence cannot be decided from finite data, so only the trajectory
    is returned.

    Raises:
        FunctionalLengthError: if τ_{2k+2N} is not stored
        InputError: if a used diagonal entry is not positive
    """
    if k < 0 or n_terms < 1:
        raise InputError("carleman_report needs k >= 0 and at least one term")
    _require_length(tau, 2 * k + 2 * n_terms)
    terms = []
    for n in range(1, n_terms + 1):
        value = tau[2 * k + 2 * n]
        if not value > 0:
            raise InputError(f"tau_{2 * k + 2 * n} = {value} is not positive")
        terms.append(math.exp(-log_abs(value) / (2 * n)))
    return CarlemanReport(shift=k, terms=tuple(terms), partial_sums=tuple(np.cumsum(terms).tolist()))


def analytic_criterion(
    tau: MomentFunctional, family: PolynomialFamily, n: int, tol: Optional[float] = None
) -> AnalyticReport:
    """∗_P-positivity plus the (n!)² C^{n+1} bound on τ(δ_n ∗_P δ_n), both at truncation n."""
    return AnalyticReport(
        positivity=is_positive(tau, family, n, tol),
        energy=diag_energy_check(tau, family, n),
    )


def _exact_negative_direction(matrix: list[list[Fraction]]) -> Optional[list[Fraction]]:
    """
    Pivoted symmetric elimination in exact arithmetic.

    Maintains vectors w_i with S_ij = w_i^T K w_j for the current Schur
    complement S. Returns a vector v with v^T K v < 0, or None when K is
    positive semidefinite.
    """
    size = len(matrix)
    schur = [[Fraction(v) for v in row] for row in matrix]
    basis = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    active = list(range(size))

    while active:
        for i in active:
            if schur[i][i] < 0:
                return basis[i]
        pivot = max(active, key=lambda i: schur[i][i])
        if schur[pivot][pivot] == 0:
            # zero diagonal block: any nonzero off-diagonal entry gives a negative direction
            for i in active:
                for j in active:
                    if i < j and schur[i][j] != 0:
                        sign = 1 if schur[i][j] > 0 else -1
                        return [a - sign * b for a, b in zip(basis[i], basis[j])]
            return None
        active.remove(pivot)
        head = schur[pivot][pivot]
        for i in active:
            factor = schur[i][pivot] / head
            if factor == 0:
                continue
            for j in active:
                schur[i][j] -= factor * schur[pivot][j]
            basis[i] = [a - factor * b for a, b in zip(basis[i], basis[pivot])]
    return None


def _log_quotient(value: Scalar, divisor: int) -> float:
    """log(|value| / divisor), exact before the logarithm when value is exact."""
    if is_exact(value):
        return log_abs(Fraction(value) / divisor)
    return log_abs(value) - math.log(divisor)


def _root_ratios(logs: Sequence[float]) -> list[float]:
    return [math.exp(v / (n + 1)) if v > -math.inf else 0.0 for n, v in enumerate(logs)]


def _fit(ratios: Sequence[float], tail: Optional[int]) -> tuple[float, bool]:
    tail = get_settings().growth_tail if tail is None else tail
    values = np.asarray(ratios, dtype=float)
    last = len(values) - 1
    constant = float(values.max())
    flagged = False
    if len(values) >= tail and int(np.argmax(values)) == last:
        window = values[-tail:]
        # strict increase up to a relative margin of 1e-12
        flagged = bool(np.all(window[1:] > window[:-1] * (1 + 1e-12)))
    return constant, flagged


def _require_length(tau: MomentFunctional, index: int) -> None:
    if index >= len(tau):
        raise FunctionalLengthError(f"functional has {len(tau)} values, index {index} is needed")


def _has_complex(matrix: Sequence[Sequence[Scalar]]) -> bool:
    return any(isinstance(v, complex) for row in matrix for v in row)
