"""
Moment Service

Command layer shared by the CLI and the HTTP API: takes validated request
documents, resolves families, runs the computation and returns response
documents.
"""

import logging
from typing import Optional, get_args

from moments.config import Settings, get_settings
from moments.exceptions import InputError, TruncationError
from moments.models.family import FamilyKind, PolynomialFamily
from moments.models.measure import DiscreteMeasure
from moments.models.transform import TransformSample
from moments.schemas.family import FamilyDocument, FamilyKindName
from moments.schemas.functional import (
    AnalyticDocument,
    CarlemanDocument,
    EnergyDocument,
    FunctionalDocument,
    GrowthDocument,
    VerdictDocument,
)
from moments.schemas.measure import JacobiDocument, MeasureDocument, RecurrenceDocument
from moments.schemas.requests import (
    CarlemanRequest,
    CheckRequest,
    ConvRequest,
    EnergyRequest,
    ForwardRequest,
    GrowthRequest,
    JacobiRequest,
    ReconstructRequest,
    RecurrenceRequest,
)
from moments.schemas.sequence import SequenceDocument
from moments.schemas.transform import TransformRequest, TransformSampleDocument
from moments.services.convolution_service import conv_cauchy, conv_general, conv_newton
from moments.services.functional_service import (
    analytic_criterion,
    carleman_report,
    diag_energy_check,
    growth_constant,
    is_positive,
)
from moments.services.spectral_service import (
    forward_moments,
    jacobi_matrix,
    reconstruct_measure,
    recurrence_coefficients,
)
from moments.services.transform_service import bogoliubov, laplace, s_transform

logger = logging.getLogger(__name__)


class MomentService:
    """
    Service class behind every command.

    Each method accepts a request document and returns a response
    document. Errors from the computation layer propagate unchanged: the
    callers map InputError and ComputationError to exit codes or HTTP
    status codes.
    """

    def __init__(self, settings: Settings):
        """
        Initialize the service.

        Args:
            settings: numerical defaults used when a request leaves them out
        """
        self.settings = settings

    def family(self, document: FamilyDocument) -> FamilyDocument:
        """Build a family and return it with its monomial rows."""
        return FamilyDocument.from_family(document.to_family(), rate=str(document.rate))

    def convolve(self, request: ConvRequest) -> SequenceDocument:
        """
        f ∗_P g, using the closed forms for the monomial and Newton families.

        Raises:
            TruncationError: if deg f + deg g exceeds the family order
        """
        family = request.family.to_family()
        f, g = request.f.to_sequence(), request.g.to_sequence()
        if f.coeffs and g.coeffs and f.degree + g.degree > family.order:
            raise TruncationError(
                f"deg f + deg g = {f.degree + g.degree} exceeds family order {family.order}"
            )
        if family.kind is FamilyKind.MONOMIAL:
            product = conv_cauchy(f, g)
        elif family.kind is FamilyKind.NEWTON:
            product = conv_newton(f, g)
        else:
            product = conv_general(f, g, family)
        return SequenceDocument.from_sequence(product)

    def check(self, request: CheckRequest) -> VerdictDocument:
        tau = request.functional.to_functional()
        family = self._resolve_family(request.functional, request.family)
        return VerdictDocument.from_verdict(is_positive(tau, family, request.n, request.tol))

    def reconstruct(self, request: ReconstructRequest) -> MeasureDocument:
        tau = request.functional.to_functional()
        family = self._resolve_family(request.functional, request.family)
        mu = reconstruct_measure(tau, family, request.n, tol=request.tol, pivot_rtol=self.settings.pivot_rtol)
        return MeasureDocument.from_measure(mu)

    def recurrence(self, request: RecurrenceRequest) -> RecurrenceDocument:
        tau = request.functional.to_functional()
        family = self._resolve_family(request.functional, request.family)
        coefficients = recurrence_coefficients(tau, family, request.n, self.settings.pivot_rtol)
        return RecurrenceDocument.from_coefficients(coefficients)

    def forward(self, request: ForwardRequest) -> FunctionalDocument:
        tau = forward_moments(request.measure.to_measure(), request.family.to_family(), request.m)
        return FunctionalDocument.from_functional(tau)

    def transform(self, request: TransformRequest) -> list[TransformSampleDocument]:
        """
        Evaluate ``request.kind`` at every grid point.

        Raises:
            InputError: if the source does not fit the transform
        """
        source = request.source
        samples = []
        for lam in request.points():
            if request.kind == "s":
                if not isinstance(source, FunctionalDocument):
                    raise InputError("the S-transform reads a functional, not a measure")
                sample = s_transform(source.to_functional().values, lam, request.terms)
            elif request.kind == "laplace":
                if not isinstance(source, MeasureDocument):
                    raise InputError("the Laplace transform reads a measure, not a functional")
                sample = self._laplace_sample(source.to_measure(), lam)
            elif isinstance(source, MeasureDocument):
                sample = bogoliubov(source.to_measure(), lam)
            else:
                if source.family != FamilyKind.NEWTON.value:
                    logger.warning(f"Bogoliubov series of a '{source.family}' functional; Newton moments expected")
                sample = bogoliubov(source.to_functional().values, lam, request.terms)
            samples.append(TransformSampleDocument.from_sample(sample))
        return samples

    def growth(self, request: GrowthRequest) -> GrowthDocument:
        report = growth_constant(request.functional.to_functional(), request.tail or self.settings.growth_tail)
        return GrowthDocument.from_report(report)

    def carleman(self, request: CarlemanRequest) -> CarlemanDocument:
        report = carleman_report(request.functional.to_functional(), request.k, request.terms)
        return CarlemanDocument.from_report(report)

    def energy(self, request: EnergyRequest) -> EnergyDocument:
        tau = request.functional.to_functional()
        family = self._resolve_family(request.functional, request.family)
        report = diag_energy_check(tau, family, request.n, request.tail or self.settings.growth_tail)
        return EnergyDocument.from_report(report)

    def jacobi(self, request: JacobiRequest) -> JacobiDocument:
        return JacobiDocument.from_matrix(jacobi_matrix(request.family.to_family(), request.n))

    def analytic(self, request: CheckRequest) -> AnalyticDocument:
        tau = request.functional.to_functional()
        family = self._resolve_family(request.functional, request.family)
        return AnalyticDocument.from_report(analytic_criterion(tau, family, request.n, request.tol))

    def _resolve_family(
        self, functional: FunctionalDocument, document: Optional[FamilyDocument]
    ) -> PolynomialFamily:
        """
        The explicit family, or the preset named by the functional with
        order len(values) - 1.

        Raises:
            InputError: if the functional names no buildable preset
        """
        if document is not None:
            return document.to_family()
        label = functional.family
        if label == FamilyKind.SHEFFER.value or label not in get_args(FamilyKindName):
            raise InputError(f"functional refers to family '{label}'; pass the family explicitly")
        order = min(len(functional.values) - 1, self.settings.max_order)
        return FamilyDocument(kind=label, order=order).to_family()

    @staticmethod
    def _laplace_sample(mu: DiscreteMeasure, lam: complex) -> TransformSample:
        value = laplace(mu, lam.real if lam.imag == 0 else lam)
        return TransformSample(argument=lam, value=complex(value), terms_used=len(mu), tail_bound=0.0)


def get_moment_service(settings: Optional[Settings] = None) -> MomentService:
    """
    Factory function to create a MomentService instance.

    Args:
        settings: overrides the cached application settings

    Returns:
        MomentService: Configured service instance
    """
    return MomentService(settings or get_settings())
