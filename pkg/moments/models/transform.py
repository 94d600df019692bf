"""
Transform Sample Model

One evaluation of an S-transform, Laplace transform or Bogoliubov
functional at a complex argument.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class TransformSample:
    """
    Attributes:
        argument: λ
        value: the (partial) sum at λ
        terms_used: number of series terms summed, or atoms for a measure
        tail_bound: magnitude of the last term added; 0 for a closed-form sum
    """

    argument: complex
    value: complex
    terms_used: int
    tail_bound: float

    def __post_init__(self) -> None:
        if self.tail_bound < 0:
            raise ValueError("tail_bound must be non-negative")
