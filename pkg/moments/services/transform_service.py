"""
Transform Service

Analytic side of the moment problem:
- the S-transform (Sξ)(λ) = sum_n λ^n/n! ξ_n of a sequence
- the Laplace transform and the Bogoliubov functional of a discrete measure
- exponential convexity of a sampled kernel, and the inverse direction
  τ_n = n! × (coefficient n) from a Taylor series

Radius-of-convergence checks are empirical: they compare |λ| with the
reciprocal of the fitted growth constant and only ever log a warning.
"""

import cmath
import logging
import math
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence, Union

from moments.config import get_settings
from moments.exceptions import BranchError, InputError, MissingSampleError, TruncationError
from moments.models.functional import MomentFunctional, PositivityVerdict
from moments.models.measure import DiscreteMeasure
from moments.models.scalar import Scalar, all_exact, is_exact
from moments.models.series import TruncatedSeries
from moments.models.transform import TransformSample
from moments.services.functional_service import exact_psd_verdict, growth_constant, psd_verdict
from moments.services.series_service import series_exp, series_log

logger = logging.getLogger(__name__)

Kernel = Union[Callable[[Scalar], Scalar], Mapping[Scalar, Scalar]]


def s_transform(
    xi: Sequence[Scalar], lam: complex, n_terms: Optional[int] = None
) -> TransformSample:
    """
    Partial sum of sum_n λ^n/n! ξ_n.

    Summation stops after ``n_terms`` terms, at the end of ξ, or as soon as
    a nonzero term drops below series_rtol × |partial sum|, whichever comes
    first. Vanishing terms never stop the summation, and the tail estimate is
    the magnitude of the last nonzero term.

    Args:
        xi: the sequence ξ_0, ξ_1, ... (exact or floating)
        lam: evaluation point
        n_terms: maximal number of terms (default from settings)

    Returns:
        TransformSample: value, terms used and the last-term tail estimate
    """
    settings = get_settings()
    n_terms = settings.series_terms if n_terms is None else n_terms
    values = list(xi)
    if n_terms < 1:
        raise InputError(f"n_terms must be positive, got {n_terms}")
    _warn_outside_radius(values, lam)

    total = 0j
    last = 0.0
    used = 0
    power = complex(1)
    for n, value in enumerate(values[:n_terms]):
        if n > 0:
            power *= lam
        coefficient = Fraction(value) / math.factorial(n) if is_exact(value) else value / math.factorial(n)
        term = complex(coefficient) * power
        total += term
        used = n + 1
        if term == 0:
            continue
        last = abs(term)
        if n > 0 and last < settings.series_rtol * abs(total):
            logger.debug(f"S-transform converged after {used} terms")
            break
    return TransformSample(argument=complex(lam), value=total, terms_used=used, tail_bound=last)


def laplace(mu: DiscreteMeasure, lam: Union[float, complex]) -> Union[float, complex]:
    """l_μ(λ) = sum_i w_i e^{x_i λ}; entire, so no radius applies."""
    if isinstance(lam, complex):
        return sum(complex(w) * cmath.exp(complex(x) * lam) for x, w in zip(mu.atoms, mu.weights))
    return math.fsum(float(w) * math.exp(float(x) * lam) for x, w in zip(mu.atoms, mu.weights))


def bogoliubov(
    source: Union[DiscreteMeasure, Sequence[Scalar]],
    lam: complex,
    n_terms: Optional[int] = None,
) -> TransformSample:
    """
    B(λ) = ∫ (1+λ)^x dμ(x) for a measure, or sum_n λ^n/n! τ_n for the
    Newton moments τ of a functional.

    Integer atoms use integer powers of 1+λ. Other atoms use the principal
    branch, which is undefined when 1+λ lies on the closed negative real axis.

    Raises:
        BranchError: non-integer atom with 1+λ real and <= 0
    """
    if not isinstance(source, DiscreteMeasure):
        return s_transform(source, lam, n_terms)

    base = 1 + complex(lam)
    total = 0j
    for x, w in zip(source.atoms, source.weights):
        exponent = _integer_exponent(x)
        if exponent is not None:
            if base == 0 and exponent < 0:
                raise BranchError(f"(1+λ)^{exponent} is undefined at λ = -1")
            total += complex(w) * base**exponent
            continue
        if base.imag == 0 and base.real <= 0:
            raise BranchError(f"(1+λ)^{x} has no principal value for 1+λ = {base.real}")
        total += complex(w) * cmath.exp(complex(x) * cmath.log(base))
    return TransformSample(argument=complex(lam), value=total, terms_used=len(source), tail_bound=0.0)


def exp_convexity_check(
    k: Kernel, grid: Sequence[Scalar], tol: Optional[float] = None
) -> PositivityVerdict:
    """
    PSD test of [k(x_i + x_j)] on a finite grid.

    ``k`` is either a callable or a mapping from points to samples. Exact
    samples are tested exactly, floating ones with the eigenvalue test of
    ``psd_verdict``.

    Raises:
        MissingSampleError: a needed sum x_i + x_j is not in the mapping
    """
    if not grid:
        raise InputError("exp_convexity_check needs a non-empty grid")
    matrix = [[_sample(k, a + b) for b in grid] for a in grid]
    if all_exact(v for row in matrix for v in row):
        return exact_psd_verdict(matrix)
    return psd_verdict(matrix, tol)


def taylor_functional(
    source: Union[TruncatedSeries, Sequence[Scalar]], length: Optional[int] = None
) -> MomentFunctional:
    """
    τ_n = k^{(n)}(0), read off a Taylor series as n! × coefficient n, or
    taken from an explicit list of derivatives.

    Raises:
        TruncationError: if ``length`` exceeds what the source provides
    """
    if isinstance(source, TruncatedSeries):
        available = source.order + 1
        length = available if length is None else length
        if length > available:
            raise TruncationError(f"series of order {source.order} gives {available} derivatives, {length} requested")
        return MomentFunctional(math.factorial(n) * source[n] for n in range(length))

    derivatives = list(source)
    length = len(derivatives) if length is None else length
    if length > len(derivatives):
        raise TruncationError(f"{len(derivatives)} derivatives given, {length} requested")
    return MomentFunctional(derivatives[:length])


def laplace_series(mu: DiscreteMeasure, order: int) -> TruncatedSeries:
    """Exact Taylor series of l_μ: coefficient n is sum_i w_i x_i^n / n!."""
    _require_exact(mu)
    coeffs = [
        sum((w * x**n for x, w in zip(mu.atoms, mu.weights)), Fraction(0)) / math.factorial(n)
        for n in range(order + 1)
    ]
    return TruncatedSeries(order, tuple(coeffs))


def bogoliubov_series(mu: DiscreteMeasure, order: int) -> TruncatedSeries:
    """Exact Taylor series of B(λ) = sum_i w_i exp(x_i log(1+λ))."""
    _require_exact(mu)
    log_base = series_log(TruncatedSeries.from_coeffs([1, 1], order))
    total = TruncatedSeries.constant(0, order)
    for x, w in zip(mu.atoms, mu.weights):
        total = total + series_exp(log_base.scale(x)).scale(w)
    return total


def _sample(k: Kernel, point: Scalar) -> Scalar:
    if callable(k):
        return k(point)
    if point in k:
        return k[point]
    for key, value in k.items():
        if abs(key - point) <= 1e-12 * max(1.0, abs(point)):
            return value
    raise MissingSampleError(f"no sample of k at {point}")


def _integer_exponent(x: Scalar) -> Optional[int]:
    if is_exact(x) and Fraction(x).denominator == 1:
        return int(x)
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return None


def _require_exact(mu: DiscreteMeasure) -> None:
    if not mu.is_exact:
        raise InputError("exact series need a measure with rational atoms and weights")


def _warn_outside_radius(values: Sequence[Scalar], lam: complex) -> None:
    if len(values) < 2:
        return
    constant = growth_constant(MomentFunctional(values)).constant
    if constant > 0 and abs(lam) >= 1 / constant:
        logger.warning(f"|λ| = {abs(lam):.3g} is outside the empirical radius 1/C = {1 / constant:.3g}")
