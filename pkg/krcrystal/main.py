import logging
import time
import uuid

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from krcrystal.config import settings
from krcrystal.errors import KRError, format_error
from krcrystal.logging_config import configure_logging

configure_logging(settings.LOG_LEVEL)

logger = logging.getLogger("krcrystal")

settings.log_summary()

from krcrystal.routers import crystals, diagrams  # noqa: E402
from krcrystal.schemas import HealthResponse  # noqa: E402
from krcrystal.services.crystal_cache import crystal_cache  # noqa: E402

app = FastAPI(title="KR crystals")


@app.exception_handler(KRError)
async def kr_error_handler(request: Request, exc: KRError):
    logger.warning(
        "request_rejected",
        extra={
            "extra": {
                "request_id": getattr(request.state, "request_id", None),
                "path": request.url.path,
                "error": exc.title,
                "message": exc.message,
            }
        },
    )
    return JSONResponse(status_code=exc.http_status, content=format_error(exc))


app.include_router(crystals.router)
app.include_router(diagrams.router)

logger.info(
    "app_started",
    extra={"extra": {"vertex_budget": settings.VERTEX_BUDGET, "tensor_budget": settings.TENSOR_BUDGET}},
)


# ── Middleware ──────────────────────────────────────────────────────────

@app.middleware("http")
async def request_id_middleware(request: Request, call_next):
    request_id = request.headers.get("X-Request-Id") or str(uuid.uuid4())
    request.state.request_id = request_id
    start = time.time()

    method = request.method
    path = request.url.path

    logger.info(
        "request_started",
        extra={"extra": {"request_id": request_id, "method": method, "path": path}},
    )

    try:
        response = await call_next(request)
    except Exception as exc:
        logger.error(
            "request_failed",
            extra={
                "extra": {
                    "request_id": request_id,
                    "method": method,
                    "path": path,
                    "duration_ms": round((time.time() - start) * 1000, 1),
                }
            },
            exc_info=True,
        )
        return JSONResponse(status_code=500, content=format_error(exc))

    response.headers["X-Request-Id"] = request_id
    logger.info(
        "request_completed",
        extra={
            "extra": {
                "request_id": request_id,
                "method": method,
                "path": path,
                "status_code": response.status_code,
                "duration_ms": round((time.time() - start) * 1000, 1),
            }
        },
    )
    return response


# ── Health endpoint ─────────────────────────────────────────────────────

@app.get("/health", response_model=HealthResponse)
async def health():
    return HealthResponse(status="ok", cached_crystals=len(crystal_cache))
