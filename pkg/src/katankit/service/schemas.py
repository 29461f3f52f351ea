"""Request/response models for the service endpoints."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class HealthResponse(BaseModel):
    status: str


class VariantInfo(BaseModel):
    name: str
    family: str
    block_bits: int
    len_l1: int
    len_l2: int
    steps_per_round: int
    rounds: int


class EncryptRequest(BaseModel):
    variant: str
    key: str = Field(description="80-bit key, 20 hex digits")
    plaintext: str = Field(description="block, block_bits/4 hex digits")
    bit_reverse: bool = False


class EncryptResponse(BaseModel):
    variant: str
    ciphertext: str


class DecryptRequest(BaseModel):
    variant: str
    key: str
    ciphertext: str
    bit_reverse: bool = False


class DecryptResponse(BaseModel):
    variant: str
    plaintext: str


class KeyScheduleRequest(BaseModel):
    variant: str
    key: str


class KeyScheduleResponse(BaseModel):
    variant: str
    rounds: int
    pairs: list[tuple[int, int]] = Field(description="(ka, kb) per round")


class IrResponse(BaseModel):
    rounds: int
    bits: list[int]
    counter_states: list[int]


class VerifyRequest(BaseModel):
    content: str = Field(description="vector file text")


class VerifyFailure(BaseModel):
    line: int
    variant: str
    key: str
    plaintext: str
    expected: str
    actual: str


class VerifyResponse(BaseModel):
    checked: int
    passed: int
    failed: int
    failures: list[VerifyFailure]


class BenchRequest(BaseModel):
    variant: str
    engine: str = "scalar"
    blocks: int = Field(10_000, description="blocks per rep")
    reps: int = Field(5, description="measured repetitions")
    seed: int = 1


class BenchResponse(BaseModel):
    variant: str
    engine: str
    blocks: int
    reps: int
    seed: int
    lanes: Optional[int]
    wall_time_s: float
    min_s: float
    max_s: float
    dispersion: float
    throughput_mbps: float
    sample_digest: str
    rep_times_s: list[float]


class StageCostsModel(BaseModel):
    load_cycles: int = Field(ge=1)
    round_cycles: int = Field(ge=1)
    emit_cycles: int = Field(ge=1)


class PipelineRequest(BaseModel):
    costs: Optional[StageCostsModel] = None
    variant: Optional[str] = Field(None, description="derive default costs from a variant")
    num_blocks: int
    mode: str = "pipelined"
    include_occupancy: bool = False


class OccupancyInterval(BaseModel):
    stage: int
    block: int
    start: int
    end: int


class PipelineResponse(BaseModel):
    mode: str
    num_blocks: int
    costs: StageCostsModel
    total_cycles: int
    blocks_per_cycle: float
    occupancy: Optional[list[OccupancyInterval]] = None


class ReportRequest(BaseModel):
    records: Optional[list[dict[str, Any]]] = None
    comparisons: Optional[list[dict[str, Any]]] = None
    numerator_mode: Optional[str] = None
    tables: Optional[list[str]] = Field(None, description="filter to these table keys")


class ReportResponse(BaseModel):
    tables: list[dict[str, Any]]
    text: str
    csv: str
