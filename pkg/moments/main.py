"""
HTTP Surface

The moment commands as POST endpoints. Request bodies use the same schemas
as the CLI documents, and errors map to 422 (input) and 409 (computation).
"""

import logging
from contextlib import asynccontextmanager
from typing import AsyncGenerator

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from moments.config import get_settings
from moments.exceptions import ComputationError, InputError
from moments.routers import api

settings = get_settings()

logging.basicConfig(
    level=getattr(logging, settings.log_level.upper()),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)

logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI) -> AsyncGenerator[None, None]:
    """
    Application lifespan context manager.

    Logs startup with the numerical defaults in effect, and shutdown.
    """
    logger.info(f"Starting {settings.app_name} v{settings.app_version}")
    logger.info(
        f"Defaults: order={settings.default_order}, positivity_tol={settings.positivity_tol}, "
        f"series_terms={settings.series_terms}"
    )

    yield

    logger.info("Application shutdown complete")


def _error_body(title: str, exc: Exception) -> dict:
    return {"error": title, "detail": str(exc), "type": type(exc).__name__}


def create_app() -> FastAPI:
    """Build the application: error handlers, the command router and /health."""
    app = FastAPI(
        title=settings.app_name,
        version=settings.app_version,
        debug=settings.debug,
        lifespan=lifespan,
    )

    @app.exception_handler(InputError)
    async def input_error_handler(request: Request, exc: InputError) -> JSONResponse:
        logger.info(f"Rejected input on {request.url.path}: {exc}")
        return JSONResponse(status_code=422, content=_error_body("Invalid Input", exc))

    @app.exception_handler(ValidationError)
    async def validation_error_handler(request: Request, exc: ValidationError) -> JSONResponse:
        return JSONResponse(status_code=422, content=_error_body("Invalid Input", exc))

    @app.exception_handler(ComputationError)
    async def computation_error_handler(request: Request, exc: ComputationError) -> JSONResponse:
        logger.warning(f"Computation failed on {request.url.path}: {exc}")
        return JSONResponse(status_code=409, content=_error_body("Computation Failed", exc))

    @app.exception_handler(Exception)
    async def global_exception_handler(request: Request, exc: Exception) -> JSONResponse:
        logger.error(f"Unhandled exception: {exc}", exc_info=True)

        if settings.debug:
            return JSONResponse(status_code=500, content=_error_body("Internal Server Error", exc))
        return JSONResponse(
            status_code=500,
            content={
                "error": "Internal Server Error",
                "detail": "An unexpected error occurred"
            }
        )

    app.include_router(api.router)

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": settings.app_version}

    return app


app = create_app()


def main() -> None:
    """Serve the API with uvicorn (the `moments-api` script)."""
    import uvicorn

    uvicorn.run(
        "moments.main:app",
        host=settings.host,
        port=settings.port,
        reload=settings.debug,
        log_level=settings.log_level.lower(),
    )


if __name__ == "__main__":
    main()
