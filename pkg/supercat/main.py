"""
Super Catalan Verifier - FastAPI Application
HTTP entry point onto the same scans the CLI runs.
"""
import logging
from contextlib import asynccontextmanager
from fastapi import FastAPI
from pydantic import BaseModel

from supercat.config import settings
from supercat.routers import verify

# Configure logging
logging.basicConfig(
    level=settings.LOG_LEVEL,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan events."""
    logger.info(f"🚀 Starting {settings.APP_NAME}...")
    yield
    logger.info(f"👋 Shutting down {settings.APP_NAME}...")


# Create FastAPI app
app = FastAPI(
    title=settings.APP_NAME,
    description="Exact and modular verification of super Catalan congruences and identities",
    version=settings.API_VERSION,
    lifespan=lifespan
)

# Include routers
app.include_router(verify.router, prefix="/api/v1", tags=["Verification"])


class HealthResponse(BaseModel):
    """Health check response."""
    status: str
    app_name: str
    version: str


@app.get("/", response_model=HealthResponse)
async def root():
    """Health check endpoint."""
    return HealthResponse(
        status="healthy",
        app_name=settings.APP_NAME,
        version=settings.API_VERSION,
    )


@app.get("/health")
async def health_check():
    """Detailed health check."""
    return {
        "status": "healthy",
        "app": settings.APP_NAME,
        "version": settings.API_VERSION,
        "debug": settings.DEBUG,
        "default_primes": settings.PRIMES,
        "default_suites": settings.SUITES,
    }


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(
        "supercat.main:app",
        host="0.0.0.0",
        port=8000,
        reload=settings.DEBUG
    )
