"""Coefficient-vector helpers for polynomials in x (index k holds x^k)."""

from typing import Sequence

from moments.models.scalar import Scalar


def poly_mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> list[Scalar]:
    """
    Product of two coefficient vectors.

    Args:
        a: coefficients of the first factor
        b: coefficients of the second factor

    Returns:
        list: len(a) + len(b) - 1 coefficients, or [] for an empty factor
    """
    if not a or not b:
        return []
    out: list[Scalar] = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def poly_add(a: Sequence[Scalar], b: Sequence[Scalar]) -> list[Scalar]:
    """Sum, padded to the longer vector."""
    size = max(len(a), len(b))
    return [
        (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0)
        for k in range(size)
    ]


def poly_shift(a: Sequence[Scalar]) -> list[Scalar]:
    """Multiply by x."""
    return [0, *a] if a else []


def horner(coeffs: Sequence[Scalar], x: Scalar) -> Scalar:
    """
    Value of sum_k coeffs[k] x^k.

    Args:
        coeffs: coefficient vector, constant term first
        x: evaluation point, exact or floating

    Returns:
        Scalar: exact when both coeffs and x are exact
    """
    value: Scalar = 0
    for c in reversed(coeffs):
        value = value * x + c
    return value
