"""
Unit Tests for the Convolution Algebra
"""

from fractions import Fraction
from functools import cache

import pytest
from hypothesis import given
from hypothesis import strategies as st

from moments.exceptions import FunctionalLengthError, TruncationError
from moments.models.sequence import FiniteSequence
from moments.services.convolution_service import (
    annihilate,
    apply_functional,
    conv_cauchy,
    conv_general,
    conv_newton,
    delta,
)
from moments.services.family_service import family_monomial, family_newton, family_preset
from tests.factories import FiniteSequenceFactory

BUILT_IN = ("monomial", "newton", "hermite", "charlier", "bernoulli")

small_sequences = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=0, max_size=5
).map(FiniteSequence)


@cache
def built_in(name: str):
    return family_preset(name, 12)


@pytest.mark.unit
class TestFiniteSequence:
    """Canonical trimming and elementwise operations."""

    def test_trailing_zeros_are_trimmed(self):
        assert FiniteSequence([1, 2, 0, 0]) == FiniteSequence([1, 2])
        assert FiniteSequence([0, 0]).degree == -1

    def test_delta(self):
        assert delta(0).coeffs == (1,)
        assert delta(2).coeffs == (0, 0, 1)
        assert len(delta(5)) == 6

    def test_negative_delta_index(self):
        with pytest.raises(TruncationError):
            delta(-1)

    def test_conjugate(self):
        assert FiniteSequence([1 + 2j]).conjugate() == FiniteSequence([1 - 2j])


@pytest.mark.unit
class TestConvolutions:
    """Generic product and the two closed forms."""

    def test_monomial_square_of_one_plus_x(self):
        f = FiniteSequence([1, 1])

        assert conv_general(f, f, family_monomial(4)).coeffs == (1, 2, 1)

    def test_newton_delta_one_squared(self):
        d = delta(1)

        assert conv_general(d, d, family_newton(4)).coeffs == (0, 1, 1)
        assert conv_newton(d, d).coeffs == (0, 1, 1)

    def test_newton_delta_two_squared(self):
        result = conv_newton(delta(2), delta(2))

        assert result[2] == 2
        assert result == conv_general(delta(2), delta(2), family_newton(4))

    def test_cauchy_difference_of_squares(self):
        assert conv_cauchy(FiniteSequence([1, 1]), FiniteSequence([1, -1])).coeffs == (1, 0, -1)
        assert conv_cauchy(delta(1), delta(1)) == delta(2)

    @pytest.mark.parametrize("name", BUILT_IN)
    def test_delta_zero_is_unit(self, name):
        family = family_preset(name, 8)
        f = FiniteSequence([Fraction(1, 2), -3, 0, 7])

        assert conv_general(delta(0), f, family) == f

    def test_truncation_exceeded(self):
        with pytest.raises(TruncationError):
            conv_general(delta(2), delta(2), family_newton(3))

    def test_zero_sequence(self):
        assert conv_general(FiniteSequence(), delta(3), family_newton(3)) == FiniteSequence()

    def test_exactness_preserved(self):
        result = conv_newton(FiniteSequence([Fraction(1, 3)]), FiniteSequence([Fraction(3, 7), 1]))

        assert all(isinstance(c, Fraction) for c in result)

    def test_newton_closed_form_exhaustive_on_deltas(self):
        family = family_newton(24)

        for a in range(13):
            for b in range(13):
                assert conv_newton(delta(a), delta(b)) == conv_general(delta(a), delta(b), family)

    def test_newton_closed_form_on_random_sequences(self):
        family = family_newton(12)

        for _ in range(20):
            f, g = FiniteSequenceFactory(length=6), FiniteSequenceFactory(length=6)
            assert conv_newton(f, g) == conv_general(f, g, family)


@pytest.mark.unit
class TestAlgebraLaws:
    """Commutativity, associativity, bilinearity and conjugation."""

    @pytest.mark.parametrize("name", BUILT_IN)
    @given(f=small_sequences, g=small_sequences, h=small_sequences)
    def test_laws(self, name, f, g, h):
        family = built_in(name)
        fg = conv_general(f, g, family)

        assert fg == conv_general(g, f, family)
        assert conv_general(fg, h, family) == conv_general(f, conv_general(g, h, family), family)
        assert conv_general(f + g, h, family) == conv_general(f, h, family) + conv_general(g, h, family)

    @given(f=small_sequences, g=small_sequences)
    def test_cauchy_matches_monomial_family(self, f, g):
        assert conv_cauchy(f, g) == conv_general(f, g, family_monomial(12))

    def test_conjugation_commutes_with_product(self):
        family = family_newton(6)
        f = FiniteSequence([1 + 1j, 2 - 1j])
        g = FiniteSequence([0.5j, 1, -1j])

        left = conv_general(f, g, family).conjugate()
        right = conv_general(f.conjugate(), g.conjugate(), family)

        assert left == right


@pytest.mark.unit
class TestPairingAndAnnihilation:
    """τ(f) and the annihilation operator."""

    def test_apply_functional_on_delta(self):
        assert apply_functional((1, 2, 3), delta(1)) == 2

    def test_apply_functional_on_zero(self):
        assert apply_functional((5, 7), FiniteSequence()) == 0

    def test_apply_functional_sum(self):
        assert apply_functional((1, 1, 1), FiniteSequence([1, 1, 1])) == 3

    def test_apply_functional_too_short(self):
        with pytest.raises(FunctionalLengthError):
            apply_functional((1, 2), delta(2))

    def test_annihilate(self):
        assert annihilate(FiniteSequence([5, 1, 1, 1])).coeffs == (1, 2, 3)
        assert annihilate(delta(0)) == FiniteSequence()

    def test_annihilation_is_difference_on_newton_polynomials(self):
        # I_P a_- I_P^{-1} is F(x+1) - F(x) for the Newton family
        family = family_newton(6)
        f = [Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3)]
        shifted = annihilate(FiniteSequence(f))

        for x in range(-3, 4):
            polynomial = family.to_polynomial(f)
            difference = sum(c * (x + 1) ** k for k, c in enumerate(polynomial)) - sum(
                c * x**k for k, c in enumerate(polynomial)
            )
            derived = family.to_polynomial(list(shifted))
            assert sum(c * x**k for k, c in enumerate(derived)) == difference
