"""
JSON API Router

POST endpoints mirroring the CLI commands. Request and response bodies
are the same pydantic documents; errors are mapped by the handlers
registered in ``moments.main``.
"""

from fastapi import APIRouter, Depends

from moments.schemas.family import FamilyDocument
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
from moments.services.moment_service import MomentService, get_moment_service

router = APIRouter(
    prefix="/api",
    tags=["moments"],
    responses={
        409: {"description": "Numerical failure"},
        422: {"description": "Invalid input"},
    },
)


def get_service() -> MomentService:
    """Dependency returning the shared command service."""
    return get_moment_service()


@router.post("/family", response_model=FamilyDocument, response_model_exclude_none=True)
def build_family(document: FamilyDocument, service: MomentService = Depends(get_service)):
    """Rows of P_0..P_N in monomial coordinates."""
    return service.family(document)


@router.post("/conv", response_model=SequenceDocument)
def convolve(request: ConvRequest, service: MomentService = Depends(get_service)):
    """f ∗_P g; 422 when deg f + deg g exceeds the family order."""
    return service.convolve(request)


@router.post("/check", response_model=VerdictDocument, response_model_exclude_none=True)
def check(request: CheckRequest, service: MomentService = Depends(get_service)):
    """
    ∗_P-positivity at truncation n.

    Indefinite verdicts are a normal answer here and come with a witness.
    """
    return service.check(request)


@router.post("/reconstruct", response_model=MeasureDocument)
def reconstruct(request: ReconstructRequest, service: MomentService = Depends(get_service)):
    """Representing measure; 409 when the functional is not positive."""
    return service.reconstruct(request)


@router.post("/recurrence", response_model=RecurrenceDocument, response_model_exclude_none=True)
def recurrence(request: RecurrenceRequest, service: MomentService = Depends(get_service)):
    """Three-term recurrence coefficients of the orthogonal polynomials of τ."""
    return service.recurrence(request)


@router.post("/forward", response_model=FunctionalDocument)
def forward(request: ForwardRequest, service: MomentService = Depends(get_service)):
    """Moments τ_0..τ_M of a discrete measure."""
    return service.forward(request)


@router.post("/transform", response_model=list[TransformSampleDocument], response_model_by_alias=True)
def transform(request: TransformRequest, service: MomentService = Depends(get_service)):
    """
    S, Laplace or Bogoliubov transform, one sample per grid point.

    The source is a functional for "s", a measure for "laplace", and either
    for "bogoliubov". 409 on a branch error.
    """
    return service.transform(request)


@router.post("/growth", response_model=GrowthDocument)
def growth(request: GrowthRequest, service: MomentService = Depends(get_service)):
    """Fitted C in |τ_n| <= n! C^{n+1}."""
    return service.growth(request)


@router.post("/carleman", response_model=CarlemanDocument)
def carleman(request: CarlemanRequest, service: MomentService = Depends(get_service)):
    """Partial sums of τ_{2k+2n}^{-1/(2n)}."""
    return service.carleman(request)


@router.post("/energy", response_model=EnergyDocument)
def energy(request: EnergyRequest, service: MomentService = Depends(get_service)):
    """τ(δ_n ∗_P δ_n) against (n!)^2 C^{n+1}."""
    return service.energy(request)


@router.post("/jacobi", response_model=JacobiDocument)
def jacobi(request: JacobiRequest, service: MomentService = Depends(get_service)):
    """Matrix of multiplication by x in the basis P_0..P_N."""
    return service.jacobi(request)


@router.post("/analytic", response_model=AnalyticDocument, response_model_exclude_none=True)
def analytic(request: CheckRequest, service: MomentService = Depends(get_service)):
    """Positivity plus the diagonal growth bound."""
    return service.analytic(request)
