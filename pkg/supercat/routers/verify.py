"""
Super Catalan Verifier - Verification Router
Exact values and verification scans over HTTP.
"""
from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool
from pydantic import BaseModel
from enum import Enum
from typing import Optional
import logging

from supercat.exceptions import SupercatError
from supercat.models.records import Report
from supercat.models.scan import ScanConfig
from supercat.services.exact_core import compute_value
from supercat.suites.orchestrator import run_scan

logger = logging.getLogger(__name__)
router = APIRouter()


class ComputeKind(str, Enum):
    """Values /compute can return."""
    SUPERCATALAN = "supercatalan"
    CATALAN = "catalan"
    CENTRALBINOM = "centralbinom"


class ComputeResponse(BaseModel):
    """Exact value as a decimal string (values outgrow JSON numbers)."""
    kind: ComputeKind
    m: Optional[int] = None
    n: int
    value: str


@router.get("/compute/{kind}", response_model=ComputeResponse)
async def compute(kind: ComputeKind, n: int, m: Optional[int] = None):
    """
    Exact super Catalan, Catalan or central binomial value.

    ``supercatalan`` takes both m and n; the others take n only.
    """
    try:
        value = compute_value(kind.value, n, m)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return ComputeResponse(kind=kind, m=m, n=n, value=str(value))


@router.post("/verify", response_model=Report)
async def verify(config: ScanConfig):
    """
    Run a verification scan and return the full report.

    The scan is CPU bound, so it runs off the event loop.
    """
    logger.info(f"🔎 Verify request: suites={[s.value for s in config.suites]}")
    try:
        return await run_in_threadpool(run_scan, config)
    except SupercatError as e:
        raise HTTPException(status_code=400, detail=str(e))
