"""Cycle model of a three-stage encryption pipeline.

Stage 1 loads a block, stage 2 runs the key schedule and the 254 rounds,
stage 3 emits the ciphertext. Blocks flow through the stages via
single-buffered handoffs, so in pipelined mode the slowest stage sets the
steady-state rate while sequential mode drains each block end-to-end
before admitting the next.

Stage costs are model inputs, not measured quantities. The default profile
charges one cycle per block bit in stages 1 and 3 and, in stage 2,
254 x steps_per_round round cycles plus a schedule term (428 expansion
clocks for KATAN, one selection per round for KTANTAN).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidRunError
from .params import CipherParams, ROUNDS

MODE_SEQUENTIAL = "sequential"
MODE_PIPELINED = "pipelined"

# KATAN expands 508 schedule bits, of which 80 are the loaded key.
_KATAN_EXPANSION_CLOCKS = 2 * ROUNDS - 80


@dataclass(frozen=True)
class StageCosts:
    load_cycles: int
    round_cycles: int
    emit_cycles: int

    def __post_init__(self) -> None:
        for name, value in (
            ("load_cycles", self.load_cycles),
            ("round_cycles", self.round_cycles),
            ("emit_cycles", self.emit_cycles),
        ):
            if not isinstance(value, int) or value <= 0:
                raise InvalidRunError(f"{name} must be a positive integer, got {value!r}")

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.load_cycles, self.round_cycles, self.emit_cycles)

    @property
    def total(self) -> int:
        return self.load_cycles + self.round_cycles + self.emit_cycles

    @property
    def bottleneck(self) -> int:
        return max(self.as_tuple())


@dataclass(frozen=True)
class StageInterval:
    """One stage occupancy: block `block` holds stage `stage` during
    cycles [start, end)."""

    stage: int
    block: int
    start: int
    end: int


@dataclass(frozen=True)
class PipelineRun:
    mode: str
    num_blocks: int
    costs: StageCosts
    total_cycles: int
    occupancy: tuple[StageInterval, ...] = field(repr=False)

    def blocks_per_cycle(self) -> float:
        return self.num_blocks / self.total_cycles


def default_stage_costs(params: CipherParams) -> StageCosts:
    if params.family == "katan":
        schedule = _KATAN_EXPANSION_CLOCKS
    else:
        schedule = ROUNDS
    return StageCosts(
        load_cycles=params.block_bits,
        round_cycles=ROUNDS * params.steps_per_round + schedule,
        emit_cycles=params.block_bits,
    )


def sequential_cycles(costs: StageCosts, num_blocks: int) -> int:
    return num_blocks * costs.total


def pipelined_cycles(costs: StageCosts, num_blocks: int) -> int:
    return costs.total + (num_blocks - 1) * costs.bottleneck


def simulate(costs: StageCosts, num_blocks: int, mode: str = MODE_PIPELINED) -> PipelineRun:
    """Event-driven schedule of num_blocks through the three stages.

    The total is computed from the simulated occupancy, not from the
    closed-form invariants, so the invariants stay independently testable.
    """
    if not isinstance(num_blocks, int) or num_blocks < 1:
        raise InvalidRunError(f"num_blocks must be >= 1, got {num_blocks!r}")
    if mode not in (MODE_SEQUENTIAL, MODE_PIPELINED):
        raise InvalidRunError(f"mode must be sequential or pipelined, got {mode!r}")

    stage_costs = costs.as_tuple()
    intervals: list[StageInterval] = []
    # stage_free[s]: cycle at which stage s has finished its previous block
    stage_free = [0, 0, 0]
    prev_done = 0
    for b in range(num_blocks):
        t = prev_done if mode == MODE_SEQUENTIAL else 0
        for s, c in enumerate(stage_costs):
            start = max(t, stage_free[s])
            end = start + c
            intervals.append(StageInterval(stage=s + 1, block=b, start=start, end=end))
            stage_free[s] = end
            t = end
        prev_done = t
    total = max(iv.end for iv in intervals)
    return PipelineRun(
        mode=mode,
        num_blocks=num_blocks,
        costs=costs,
        total_cycles=total,
        occupancy=tuple(intervals),
    )


def pipeline_speedup(costs: StageCosts, num_blocks: int) -> float:
    return sequential_cycles(costs, num_blocks) / pipelined_cycles(costs, num_blocks)
