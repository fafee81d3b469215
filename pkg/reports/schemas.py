"""Pydantic records for every exported artifact."""

from typing import Any, Optional

from pydantic import BaseModel


class CensusRecord(BaseModel):
    x: int
    q: int
    k: int
    signature: str
    count: int


class ConstantRecord(BaseModel):
    name: str
    q: Optional[int] = None
    alpha: Optional[str] = None
    value: str
    err: str
    cutoff: Optional[int] = None
    heuristic_tail: Optional[str] = None
    exact: Optional[str] = None


class MncRecord(BaseModel):
    x: int
    count: int
    cyclic: int


class ComparisonRecord(BaseModel):
    target: str
    q: Optional[int] = None
    alpha: Optional[str] = None
    x: int
    empirical: int
    predicted: str
    ratio: str


class VerdictRecord(BaseModel):
    target: str
    verdict: str
    band: str
    final_deviation: str
    trend_ok: bool
    within_band: bool


class VerifySummary(BaseModel):
    xs: list[int]
    band: str
    passed: bool
    verdicts: list[VerdictRecord]


class ArtifactEntry(BaseModel):
    path: str
    sha256: str
    bytes: int


class RunManifest(BaseModel):
    command: str
    version: str
    config: dict[str, Any]
    artifacts: list[ArtifactEntry] = []
    wall_time_seconds: float = 0.0
