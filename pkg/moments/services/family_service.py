"""
Family Service

Constructs polynomial families with deg P_n = n (monomial, Newton, general
Sheffer and the named Sheffer presets) and exposes their structure constants
(P_j P_k, P_n)_P, numeric evaluation, and the Cauchy growth estimate of
Sheffer polynomials.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from moments.config import get_settings
from moments.exceptions import InputError, TruncationError
from moments.models.family import FamilyKind, PolynomialFamily, ShefferSpec
from moments.models.polynomial import horner, poly_add, poly_shift
from moments.models.scalar import Scalar
from moments.models.series import TruncatedSeries
from moments.services.series_service import series_exp, series_inverse, series_log

logger = logging.getLogger(__name__)

PRESETS = ("monomial", "newton", "hermite", "charlier", "bernoulli")


def family_monomial(order: Optional[int] = None) -> PolynomialFamily:
    """P_n(x) = x^n; both basis-change matrices are the identity."""
    order = _checked_order(order)
    rows = [[Fraction(int(k == n)) for k in range(n + 1)] for n in range(order + 1)]
    return PolynomialFamily.from_rows(rows, FamilyKind.MONOMIAL)


def family_newton(order: Optional[int] = None) -> PolynomialFamily:
    """Falling factorials (x)_n = x(x-1)...(x-n+1), with (x)_0 = 1."""
    order = _checked_order(order)
    rows = [[Fraction(1)]]
    for n in range(order):
        # (x)_{n+1} = x (x)_n - n (x)_n
        previous = rows[-1]
        rows.append(poly_add(poly_shift(previous), [-n * c for c in previous]))
    return PolynomialFamily.from_rows(rows, FamilyKind.NEWTON)


def family_sheffer(spec: ShefferSpec, name: Optional[str] = None) -> PolynomialFamily:
    """
    P_n = n! [λ^n] γ(λ) exp(α(λ) x).

    exp(α(λ)x) is expanded as a series E whose coefficients E_n are
    polynomials in x, through the same recurrence as series_exp:
    n E_n = sum_{j=1..n} j α_j · x · E_{n-j}. The product with γ and the
    factor n! then give the rows.
    """
    order = _checked_order(spec.order)
    alpha, gamma = spec.alpha, spec.gamma

    expansion: list[list[Fraction]] = [[Fraction(1)]]
    for n in range(1, order + 1):
        acc: list[Fraction] = []
        for j in range(1, n + 1):
            if alpha[j] == 0:
                continue
            term = poly_shift(expansion[n - j])
            acc = poly_add(acc, [j * alpha[j] * c for c in term])
        expansion.append([c / n for c in acc])

    rows = []
    for n in range(order + 1):
        row: list[Fraction] = []
        for i in range(n + 1):
            if gamma[i] != 0:
                row = poly_add(row, [gamma[i] * c for c in expansion[n - i]])
        factorial = math.factorial(n)
        rows.append([factorial * c for c in row])

    logger.debug(f"Built Sheffer family of order {order}")
    return PolynomialFamily.from_rows(rows, FamilyKind.SHEFFER, spec=spec, name=name)


def monomial_spec(order: int) -> ShefferSpec:
    """γ = 1, α = λ: the generating function e^{xλ}."""
    return ShefferSpec(TruncatedSeries.constant(1, order), TruncatedSeries.variable(order), order)


def newton_spec(order: int) -> ShefferSpec:
    """γ = 1, α = log(1+λ): the generating function (1+λ)^x."""
    return ShefferSpec(
        TruncatedSeries.constant(1, order),
        series_log(_truncated([1, 1], order)),
        order,
    )


def hermite_spec(order: int) -> ShefferSpec:
    """γ = exp(-λ²/2), α = λ: probabilists' Hermite polynomials."""
    return ShefferSpec(
        series_exp(_truncated([0, 0, Fraction(-1, 2)], order)),
        TruncatedSeries.variable(order),
        order,
    )


def charlier_spec(order: int, rate: Fraction = Fraction(1)) -> ShefferSpec:
    """γ = exp(-aλ), α = log(1+λ): Poisson-Charlier polynomials for Poisson(a)."""
    rate = Fraction(rate)
    if rate <= 0:
        raise InputError(f"Charlier rate must be positive, got {rate}")
    return ShefferSpec(
        series_exp(_truncated([0, -rate], order)),
        series_log(_truncated([1, 1], order)),
        order,
    )


def bernoulli_spec(order: int) -> ShefferSpec:
    """γ = λ/(e^λ - 1), α = λ: Bernoulli polynomials."""
    shifted_exp = [Fraction(1, math.factorial(k + 1)) for k in range(order + 1)]
    return ShefferSpec(
        series_inverse(TruncatedSeries(order, tuple(shifted_exp))),
        TruncatedSeries.variable(order),
        order,
    )


def family_preset(name: str, order: Optional[int] = None, rate: Fraction = Fraction(1)) -> PolynomialFamily:
    """
    Build a family by name.

    Raises:
        InputError: for an unknown preset name
    """
    order = _checked_order(order)
    if name == "monomial":
        return family_monomial(order)
    if name == "newton":
        return family_newton(order)
    if name == "hermite":
        return family_sheffer(hermite_spec(order), name="hermite")
    if name == "charlier":
        return family_sheffer(charlier_spec(order, rate), name="charlier")
    if name == "bernoulli":
        return family_sheffer(bernoulli_spec(order), name="bernoulli")
    raise InputError(f"unknown family '{name}', expected one of {', '.join(PRESETS)}")


def structure_constants(family: PolynomialFamily, j: int, k: int) -> tuple[Fraction, ...]:
    """
    Exact coefficients c[n] of P_j P_k = sum_n c[n] P_n, n = 0..j+k.

    Raises:
        TruncationError: if j + k exceeds the family order
    """
    return family.structure.get(j, k)


def evaluate(family: PolynomialFamily, n: int, x: float) -> float:
    """P_n(x) by Horner in floating point."""
    return horner([float(c) for c in family.row(n)], float(x))


def evaluate_sequence(family: PolynomialFamily, f: Sequence[Scalar], x: Scalar) -> Scalar:
    """(I_P f)(x) = sum_n f_n P_n(x); exact when f and x are exact."""
    if not f:
        return 0
    return horner(family.to_polynomial(list(f)), x)


@dataclass(frozen=True)
class GrowthBound:
    """
    Cauchy estimate for |P_n(x)| of a Sheffer family.

    Attributes:
        radius: r, circle radius on which |α| <= ε and |γ| <= 2
        circle_bound: n!/r^n · max over the sampled circle of |γ(λ) e^{α(λ)x}|
        coarse_bound: 2 n!/r^n · e^{ε|x|}
    """

    radius: float
    circle_bound: float
    coarse_bound: float


def sheffer_growth_bound(
    spec: ShefferSpec,
    n: int,
    x: float,
    eps: float = 1.0,
    samples: int = 256,
    initial_radius: float = 0.5,
) -> GrowthBound:
    """
    |P_n(x)| <= n!/r^n sup_{|λ|=r} |γ(λ) e^{α(λ)x}| <= 2 n!/r^n e^{ε|x|}.

    The radius is halved from ``initial_radius`` until the sampled circle
    satisfies |α(λ)| <= ε and |γ(λ)| <= 2. The truncated series stand in for
    γ and α, which is accurate for small radii.
    """
    if eps <= 0:
        raise InputError("eps must be positive")
    circle = [cmath.exp(2j * math.pi * k / samples) for k in range(samples)]

    radius = initial_radius
    for _ in range(60):
        points = [radius * z for z in circle]
        if all(abs(spec.alpha.evaluate(p)) <= eps and abs(spec.gamma.evaluate(p)) <= 2 for p in points):
            break
        radius /= 2
    else:
        raise InputError("no admissible radius found for the growth estimate")

    supremum = max(abs(spec.gamma.evaluate(p) * cmath.exp(spec.alpha.evaluate(p) * x)) for p in points)
    scale = math.factorial(n) / radius**n
    return GrowthBound(
        radius=radius,
        circle_bound=scale * supremum,
        coarse_bound=2 * scale * math.exp(eps * abs(x)),
    )


def _truncated(coeffs: Sequence, order: int) -> TruncatedSeries:
    """A known function's leading coefficients cut to the requested order."""
    return TruncatedSeries.from_coeffs(list(coeffs)[: order + 1], order)


def _checked_order(order: Optional[int]) -> int:
    settings = get_settings()
    if order is None:
        order = settings.default_order
    if order < 0:
        raise TruncationError(f"family order must be non-negative, got {order}")
    if order > settings.max_order:
        raise TruncationError(f"family order {order} exceeds the cap {settings.max_order}")
    return order
