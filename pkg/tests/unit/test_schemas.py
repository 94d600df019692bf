"""
Unit Tests for Pydantic Schemas

This module tests the JSON documents: scalar encoding, family and
functional documents, measures and transform requests.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from moments.models.functional import MomentFunctional, PositivityVerdict, Verdict
from moments.models.sequence import FiniteSequence
from moments.models.transform import TransformSample
from moments.schemas.common import dump_scalar, load_scalar
from moments.schemas.family import FamilyDocument
from moments.schemas.functional import FunctionalDocument, VerdictDocument
from moments.schemas.measure import MeasureDocument
from moments.schemas.requests import CheckRequest, ReconstructRequest
from moments.schemas.sequence import SequenceDocument
from moments.schemas.transform import TransformRequest, TransformSampleDocument
from moments.services.family_service import family_newton
from tests.factories import FunctionalDocumentFactory, MeasureDocumentFactory


@pytest.mark.unit
class TestScalarEncoding:
    """Rational strings, JSON numbers and [re, im] pairs."""

    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-6/4", Fraction(-3, 2)),
            ("0.25", Fraction(1, 4)),
            (7, Fraction(7)),
        ],
    )
    def test_exact_values_load_as_fractions(self, raw, expected):
        value = load_scalar(raw)

        assert isinstance(value, Fraction)
        assert value == expected

    def test_float_stays_float(self):
        assert load_scalar(0.5) == 0.5
        assert isinstance(load_scalar(0.5), float)

    def test_pair_loads_as_complex(self):
        assert load_scalar((1.0, -2.0)) == complex(1, -2)

    def test_dump_formats(self):
        assert dump_scalar(Fraction(6, 4)) == "3/2"
        assert dump_scalar(Fraction(2)) == "2"
        assert dump_scalar(0.1) == 0.1
        assert dump_scalar(1 - 2j) == (1.0, -2.0)


@pytest.mark.unit
class TestSequenceDocument:
    def test_mixed_coefficients(self):
        # Arrange
        document = SequenceDocument(coeffs=["1", "1/2", 0.25, [0.0, 1.0]])

        # Act
        sequence = document.to_sequence()

        # Assert
        assert sequence.coeffs == (Fraction(1), Fraction(1, 2), 0.25, 1j)

    def test_malformed_rational_fails(self):
        with pytest.raises(ValidationError) as exc_info:
            SequenceDocument(coeffs=["1/x"])

        assert "not a rational literal" in str(exc_info.value)

    def test_zero_denominator_fails(self):
        with pytest.raises(ValidationError):
            SequenceDocument(coeffs=["1/0"])

    def test_from_sequence_trims_trailing_zeros(self):
        document = SequenceDocument.from_sequence(FiniteSequence([Fraction(1), Fraction(0)]))

        assert document.coeffs == ["1"]


@pytest.mark.unit
class TestFamilyDocument:
    def test_defaults_to_monomial(self):
        document = FamilyDocument(order=3)

        assert document.kind == "monomial"
        assert document.to_family().row(3) == (0, 0, 0, 1)

    def test_sheffer_needs_generating_function(self):
        with pytest.raises(ValidationError) as exc_info:
            FamilyDocument(kind="sheffer", order=4, gamma=["1"])

        assert "needs both gamma and alpha" in str(exc_info.value)

    def test_generating_function_only_for_sheffer(self):
        with pytest.raises(ValidationError):
            FamilyDocument(kind="newton", order=4, alpha=["0", "1"])

    def test_unknown_kind_fails(self):
        with pytest.raises(ValidationError):
            FamilyDocument(kind="legendre", order=4)

    def test_order_bounds(self):
        with pytest.raises(ValidationError):
            FamilyDocument(order=-1)
        with pytest.raises(ValidationError):
            FamilyDocument(order=257)

    def test_explicit_sheffer_matches_monomial(self):
        document = FamilyDocument(kind="sheffer", order=4, gamma=["1"], alpha=["0", "1"])

        family = document.to_family()

        assert family.monomial_coeffs == FamilyDocument(order=4).to_family().monomial_coeffs

    def test_from_family_lists_rows(self):
        document = FamilyDocument.from_family(family_newton(3))

        assert document.kind == "newton"
        assert document.rows == [["1"], ["0", "1"], ["0", "-1", "1"], ["0", "2", "-3", "1"]]

    def test_charlier_keeps_rate(self):
        family = FamilyDocument(kind="charlier", order=2, rate="2").to_family()

        document = FamilyDocument.from_family(family, rate="2")

        assert document.rate == "2"
        assert document.rows[1] == ["-2", "1"]


@pytest.mark.unit
class TestFunctionalDocument:
    def test_factory_default_round_trip(self):
        document = FunctionalDocumentFactory()

        tau = document.to_functional()

        assert tau.values == (1, 0, 1, 0, 1)
        assert FunctionalDocument.from_functional(tau) == document

    def test_empty_values_fail(self):
        with pytest.raises(ValidationError):
            FunctionalDocument(values=[])

    def test_complex_values_fail(self):
        with pytest.raises(ValidationError):
            FunctionalDocument(values=[[1.0, 0.0]])

    def test_family_label_is_carried(self):
        tau = MomentFunctional([0.5, 0.25], family_kind="newton")

        document = FunctionalDocument.from_functional(tau)

        assert document.family == "newton"
        assert document.values == [0.5, 0.25]

    def test_verdict_witness_serialized(self):
        verdict = PositivityVerdict(Verdict.INDEFINITE, witness=FiniteSequence([Fraction(0), Fraction(1)]), exact=True)

        document = VerdictDocument.from_verdict(verdict)

        assert document.model_dump(mode="json", exclude_none=True) == {
            "verdict": "indefinite",
            "witness": ["0", "1"],
            "exact": True,
        }


@pytest.mark.unit
class TestMeasureDocument:
    def test_factory_default(self):
        mu = MeasureDocumentFactory().to_measure()

        assert mu.atoms == (-1, 1)
        assert mu.weights == (Fraction(1, 2), Fraction(1, 2))

    def test_length_mismatch_fails(self):
        with pytest.raises(ValidationError) as exc_info:
            MeasureDocument(atoms=["0", "1"], weights=["1"])

        assert "2 atoms but 1 weights" in str(exc_info.value)


@pytest.mark.unit
class TestRequests:
    def test_reconstruct_needs_positive_truncation(self):
        with pytest.raises(ValidationError):
            ReconstructRequest(functional=FunctionalDocumentFactory(), n=0)

    def test_check_allows_truncation_zero(self):
        request = CheckRequest(functional=FunctionalDocumentFactory(), n=0)

        assert request.family is None

    def test_tolerance_must_be_positive(self):
        with pytest.raises(ValidationError):
            CheckRequest(functional=FunctionalDocumentFactory(), n=1, tol=0)


@pytest.mark.unit
class TestTransformDocuments:
    def test_source_discriminated_by_shape(self):
        measure = TransformRequest(kind="laplace", source={"atoms": [0], "weights": [1]}, grid=[0.1])
        functional = TransformRequest(kind="s", source={"values": ["1"]}, grid=[0.1])

        assert isinstance(measure.source, MeasureDocument)
        assert isinstance(functional.source, FunctionalDocument)

    def test_grid_points(self):
        request = TransformRequest(kind="s", source={"values": ["1"]}, grid=[0.3, [0.1, 0.2]])

        assert request.points() == [0.3 + 0j, 0.1 + 0.2j]

    def test_empty_grid_fails(self):
        with pytest.raises(ValidationError):
            TransformRequest(kind="s", source={"values": ["1"]}, grid=[])

    def test_sample_uses_lambda_key(self):
        sample = TransformSample(argument=0.5 + 0j, value=2 + 0j, terms_used=3, tail_bound=0.25)

        dumped = TransformSampleDocument.from_sample(sample).model_dump(mode="json", by_alias=True)

        assert dumped == {"lambda": [0.5, 0.0], "value": [2.0, 0.0], "terms_used": 3, "tail_bound": 0.25}
