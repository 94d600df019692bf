"""
Convolution Service

The algebra (l_fin, ∗_P): the generic product built from structure
constants, the Cauchy product for monomials, the closed-form Newton
product, the pairing τ(f), and the annihilation operator.
"""

from math import comb, factorial
from typing import Sequence

from moments.exceptions import FunctionalLengthError, TruncationError
from moments.models.family import PolynomialFamily
from moments.models.scalar import Scalar
from moments.models.sequence import FiniteSequence


def delta(n: int) -> FiniteSequence:
    """The unit vector δ_n."""
    if n < 0:
        raise TruncationError(f"delta index must be non-negative, got {n}")
    return FiniteSequence.delta(n)


def conv_general(f: FiniteSequence, g: FiniteSequence, family: PolynomialFamily) -> FiniteSequence:
    """
    (f ∗_P g)_n = sum_{j,k} f_j g_k (P_j P_k, P_n)_P.

    Raises:
        TruncationError: if deg f + deg g exceeds the family order
    """
    if not f.coeffs or not g.coeffs:
        return FiniteSequence()
    if f.degree + g.degree > family.order:
        raise TruncationError(
            f"deg f + deg g = {f.degree + g.degree} exceeds family order {family.order}"
        )
    out: list[Scalar] = [0] * (f.degree + g.degree + 1)
    for j, fj in enumerate(f.coeffs):
        if fj == 0:
            continue
        for k, gk in enumerate(g.coeffs):
            if gk == 0:
                continue
            weight = fj * gk
            for n, c in enumerate(family.structure.get(j, k)):
                if c != 0:
                    out[n] += weight * c
    return FiniteSequence(out)


def conv_cauchy(f: FiniteSequence, g: FiniteSequence) -> FiniteSequence:
    """(f ∗ g)_n = sum_{i+j=n} f_i g_j."""
    if not f.coeffs or not g.coeffs:
        return FiniteSequence()
    out: list[Scalar] = [0] * (f.degree + g.degree + 1)
    for i, fi in enumerate(f.coeffs):
        if fi == 0:
            continue
        for j, gj in enumerate(g.coeffs):
            out[i + j] += fi * gj
    return FiniteSequence(out)


def conv_newton(f: FiniteSequence, g: FiniteSequence) -> FiniteSequence:
    """
    (f ⋆ g)_n = sum_{i+j+k=n} (i+j)!(j+k)!/(i! j! k!) f_{i+j} g_{j+k}.

    With a = i+j and b = j+k the weight is a! b!/((a-j)! j! (b-j)!) and the
    target index is n = a + b - j, for 0 <= j <= min(a, b). This is the
    re-indexed Newton structure constant, so the result equals conv_general
    over the Newton family.
    """
    if not f.coeffs or not g.coeffs:
        return FiniteSequence()
    out: list[Scalar] = [0] * (f.degree + g.degree + 1)
    for a, fa in enumerate(f.coeffs):
        if fa == 0:
            continue
        for b, gb in enumerate(g.coeffs):
            if gb == 0:
                continue
            weight = fa * gb
            for j in range(min(a, b) + 1):
                out[a + b - j] += newton_weight(a, b, j) * weight
    return FiniteSequence(out)


def newton_weight(a: int, b: int, j: int) -> int:
    """a! b! / ((a-j)! j! (b-j)!) = C(a, j) C(b, j) j!."""
    return comb(a, j) * comb(b, j) * factorial(j)


def apply_functional(tau: Sequence[Scalar], f: FiniteSequence) -> Scalar:
    """
    τ(f) = sum_n τ_n f_n.

    Raises:
        FunctionalLengthError: if the functional is shorter than the sequence
    """
    values = tuple(tau)
    if f.degree >= len(values):
        raise FunctionalLengthError(
            f"functional has {len(values)} values, sequence needs {f.degree + 1}"
        )
    return sum((t * c for t, c in zip(values, f.coeffs)), 0)


def annihilate(f: FiniteSequence) -> FiniteSequence:
    """a_-(f) = (f_1, 2 f_2, 3 f_3, ...)."""
    return FiniteSequence(n * f[n] for n in range(1, len(f)))
