"""FastAPI application wrapping the exact-arithmetic core.

All endpoints are stateless and deterministic: the same request body
always produces the same response bytes, so records are safe for golden
tests.  Parse failures map to HTTP 400 with kind "parse", domain errors
(preconditions, dyadic-only or non-dyadic-only operations) to kind
"domain".
"""

from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..differentials import (
    classify,
    dini_estimate,
    dyadic_level,
    dyadic_quotient,
    is_local_max,
    mirror_quotient,
    predicted_dyadic_slope,
    predicted_mirror_slope,
    slope_limits,
    subdifferential,
    superdifferential,
)
from ..digits import DigitExpansion
from ..errors import DomainError, ParseError
from ..evaluator import takagi_certified, takagi_exact
from ..sets import in_A, in_M, in_script_A, max_value_check
from ..textform import decimal_str, fraction_str, parse_point
from .schemas import (
    ClassifyRequest,
    DiniRequest,
    EvalRequest,
    MaxsetRequest,
    OutputRecord,
    ScanRequest,
    ScanResponse,
    ScanRow,
)

DEFAULT_TERMS = 64
TERMS_ENV_VAR = "TAKAGI_DEFAULT_TERMS"

# mirror/one-sided quotient tables are truncated to keep payloads small
MAX_TABLE_ROWS = 24


def _limit_str(v: int | float) -> str:
    if v == math.inf:
        return "+inf"
    if v == -math.inf:
        return "-inf"
    return str(int(v))


def _classify_payload(q: Fraction) -> dict[str, Any]:
    e = DigitExpansion.from_rational(q)
    cls = classify(e)
    sd = superdifferential(e)
    payload: dict[str, Any] = {
        "expansion": str(e),
        "case": cls.case.value,
        "witness_m": cls.witness_m,
        "c_x": cls.c_x,
        "superdifferential": str(sd),
        "subdifferential": subdifferential(e).value,
        "local_max": is_local_max(e),
    }
    if e.is_dyadic:
        payload["slope_liminf"] = None
        payload["slope_limsup"] = None
    else:
        limits = slope_limits(e)
        payload["slope_liminf"] = _limit_str(limits.liminf)
        payload["slope_limsup"] = _limit_str(limits.limsup)
    return payload


def create_app() -> FastAPI:
    app = FastAPI(
        title="takagi",
        description="Exact evaluation and superdifferential classification of the Takagi function.",
        version="0.1.0",
    )

    @app.exception_handler(ParseError)
    async def _parse_error(request: Request, exc: ParseError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": "parse", "message": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": "domain", "message": str(exc)})

    @app.get("/health")
    def health() -> dict[str, str]:
        return {"status": "ok"}

    @app.post("/eval", response_model=OutputRecord)
    def eval_point(req: EvalRequest) -> OutputRecord:
        q = parse_point(req.point)
        if req.exact:
            value = takagi_exact(q)
            payload = {
                "value": fraction_str(value),
                "decimal": decimal_str(value, req.digits),
                "decimal_digits": req.digits,
            }
        else:
            terms = req.terms if req.terms is not None else int(os.environ.get(TERMS_ENV_VAR, str(DEFAULT_TERMS)))
            if terms < 1:
                raise DomainError(f"term count must be >= 1, got {terms}")
            cert = takagi_certified(q, terms)
            payload = {
                "value": fraction_str(cert.value),
                "error_bound": fraction_str(cert.error_bound),
                "terms_used": cert.terms_used,
                "decimal": decimal_str(cert.value, req.digits),
                "decimal_digits": req.digits,
            }
        return OutputRecord(input=req.point, command="eval", payload=payload, exact=req.exact)

    @app.post("/classify", response_model=OutputRecord)
    def classify_point(req: ClassifyRequest) -> OutputRecord:
        q = parse_point(req.point)
        return OutputRecord(input=req.point, command="classify", payload=_classify_payload(q), exact=True)

    @app.post("/dini", response_model=OutputRecord)
    def dini_point(req: DiniRequest) -> OutputRecord:
        q = parse_point(req.point)
        est = dini_estimate(q, depth=req.depth, width=req.width)
        e = DigitExpansion.from_rational(q)
        payload: dict[str, Any] = {
            "d_minus_est": decimal_str(est.d_minus_est, req.digits),
            "D_plus_est": decimal_str(est.D_plus_est, req.digits),
            "decimal_digits": req.digits,
            "depth": est.depth,
            "width": est.width,
            "divergent_up": est.divergent_up,
            "divergent_down": est.divergent_down,
        }
        if e.is_dyadic:
            level = dyadic_level(e)
            rows = []
            for p in range(level + 1, min(req.depth, level + MAX_TABLE_ROWS) + 1):
                rows.append(
                    {
                        "p": p,
                        "quotient": fraction_str(dyadic_quotient(e, p)),
                        "predicted": predicted_dyadic_slope(e, p),
                    }
                )
            payload["dyadic_quotients"] = rows
        else:
            rows = []
            for n in range(3, min(req.depth, 2 + MAX_TABLE_ROWS) + 1):
                mq = mirror_quotient(e, n)
                rows.append(
                    {
                        "n": n,
                        "x_prime": fraction_str(mq.x_prime),
                        "quotient": fraction_str(mq.quotient),
                        "predicted": predicted_mirror_slope(e, n),
                    }
                )
            payload["mirror_quotients"] = rows
        return OutputRecord(input=req.point, command="dini", payload=payload, exact=False)

    @app.post("/maxset", response_model=OutputRecord)
    def maxset_point(req: MaxsetRequest) -> OutputRecord:
        q = parse_point(req.point)
        e = DigitExpansion.from_rational(q)
        witness = in_script_A(e)
        payload: dict[str, Any] = {
            "in_M": in_M(e),
            "in_A": in_A(e),
            "in_script_A": None
            if witness is None
            else {
                "m": witness.m,
                "dyadic_part": fraction_str(witness.dyadic_part),
                "scaled_point": fraction_str(witness.scaled_point),
            },
            "max_value": max_value_check(e),
        }
        return OutputRecord(input=req.point, command="maxset", payload=payload, exact=True)

    @app.post("/scan", response_model=ScanResponse)
    def scan_grid(req: ScanRequest) -> ScanResponse:
        start = parse_point(req.start)
        stop = parse_point(req.stop)
        step = parse_point(req.step)
        if step <= 0:
            raise DomainError(f"scan step must be positive, got {step}")
        if not start < stop:
            raise DomainError(f"scan range is empty: {start} >= {stop}")
        rows: list[ScanRow] = []
        i = 0
        while True:
            x = start + i * step
            if x > stop:
                break
            e = DigitExpansion.from_rational(x)
            t = takagi_exact(e)
            rows.append(
                ScanRow(
                    x=fraction_str(x),
                    t_exact=fraction_str(t),
                    t_decimal=decimal_str(t, req.digits),
                    case=classify(e).case.value,
                    superdiff=str(superdifferential(e)),
                )
            )
            i += 1
        return ScanResponse(rows=rows)

    return app


app = create_app()
