"""
Series Service

Exact arithmetic on truncated power series: the Cauchy product, the
multiplicative inverse, and exp/log through their derivative recurrences
(exp a)' = a' exp a and (log a)' = a'/a.
"""

from fractions import Fraction

from moments.exceptions import SeriesDomainError, TruncationError
from moments.models.series import TruncatedSeries


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """
    Cauchy product truncated at the common order.

    Raises:
        TruncationError: if the orders differ
    """
    if a.order != b.order:
        raise TruncationError(f"series order mismatch: {a.order} vs {b.order}")
    return TruncatedSeries(a.order, tuple(_cauchy(a.coeffs, b.coeffs, a.order)))


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """
    Multiplicative inverse 1/a modulo λ^{N+1}.

    Raises:
        SeriesDomainError: if the constant term is zero
    """
    if a[0] == 0:
        raise SeriesDomainError("a series with zero constant term has no inverse")
    head = 1 / a[0]
    inverse = [head]
    for n in range(1, a.order + 1):
        acc = sum((a[k] * inverse[n - k] for k in range(1, n + 1)), Fraction(0))
        inverse.append(-head * acc)
    return TruncatedSeries(a.order, tuple(inverse))


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """
    exp(a) modulo λ^{N+1}.

    With b = exp(a), comparing coefficients in b' = a' b gives
    n b_n = sum_{k=1..n} k a_k b_{n-k}.

    Raises:
        SeriesDomainError: if a has a nonzero constant term
    """
    if a[0] != 0:
        raise SeriesDomainError(f"exp needs a zero constant term, got {a[0]}")
    result = [Fraction(1)]
    for n in range(1, a.order + 1):
        acc = sum((k * a[k] * result[n - k] for k in range(1, n + 1)), Fraction(0))
        result.append(acc / n)
    return TruncatedSeries(a.order, tuple(result))


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """
    log(a) modulo λ^{N+1}, as the antiderivative of a'/a with zero constant.

    Raises:
        SeriesDomainError: if the constant term is not 1
    """
    if a[0] != 1:
        raise SeriesDomainError(f"log needs constant term 1, got {a[0]}")
    if a.order == 0:
        return TruncatedSeries(0, (Fraction(0),))
    # a'/a is only known modulo λ^N; its antiderivative fills orders 1..N
    top = a.order - 1
    quotient = series_mul(
        TruncatedSeries(top, tuple(a.derivative())),
        series_inverse(a.truncate(top)),
    )
    return quotient.antiderivative()


def _cauchy(a, b, order: int) -> list:
    out = []
    for n in range(order + 1):
        out.append(sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0)))
    return out
