"""
Scalar Encoding

Shared field types for the JSON documents. Exact rationals travel as
strings ("p/q", "p" or a decimal literal), floating values as JSON numbers
and complex values as [re, im] pairs.
"""

from fractions import Fraction
from typing import Annotated, Union

from pydantic import BeforeValidator, StrictFloat, StrictInt

from moments.models.scalar import Scalar, format_exact, parse_scalar


def _check_rational_string(value: object) -> object:
    if isinstance(value, str):
        try:
            Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"'{value}' is not a rational literal") from e
    return value


ScalarValue = Annotated[
    Union[StrictInt, StrictFloat, str, tuple[float, float]],
    BeforeValidator(_check_rational_string),
]
RealValue = Annotated[
    Union[StrictInt, StrictFloat, str],
    BeforeValidator(_check_rational_string),
]
ExactValue = Annotated[Union[StrictInt, str], BeforeValidator(_check_rational_string)]


def load_scalar(value: Union[int, float, str, tuple[float, float]]) -> Scalar:
    """Document value to Fraction, float or complex."""
    if isinstance(value, (tuple, list)):
        return complex(value[0], value[1])
    return parse_scalar(value)


def dump_scalar(value: Scalar) -> Union[str, float, tuple[float, float]]:
    """Fraction, float or complex to its document form."""
    if isinstance(value, complex):
        return (value.real, value.imag)
    if isinstance(value, float):
        return value
    return format_exact(Fraction(value))


def dump_complex(value: complex) -> tuple[float, float]:
    value = complex(value)
    return (value.real, value.imag)
