"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field


class EvalRequest(BaseModel):
    point: str
    exact: bool = False
    terms: int | None = None
    digits: int = 12


class ClassifyRequest(BaseModel):
    point: str


class DiniRequest(BaseModel):
    point: str
    depth: int = 24
    width: int = 8
    digits: int = 12


class MaxsetRequest(BaseModel):
    point: str


class ScanRequest(BaseModel):
    start: str = Field(description="left end of the grid, 'p/q' or 'k.pre(per)'")
    stop: str = Field(description="right end of the grid")
    step: str = Field(description="positive rational grid spacing")
    digits: int = 12


class OutputRecord(BaseModel):
    """Envelope for single-point commands.

    Every numeric payload field is either a reduced fraction "p/q" or a
    decimal rendered at an explicit digit count.
    """

    input: str
    command: str
    payload: dict[str, Any]
    exact: bool


class ScanRow(BaseModel):
    x: str
    t_exact: str
    t_decimal: str
    case: str
    superdiff: str


class ScanResponse(BaseModel):
    rows: list[ScanRow]
