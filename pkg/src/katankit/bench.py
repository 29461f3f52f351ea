"""Wall-clock benchmarking of the scalar and bit-sliced engines.

Workloads are generated deterministically from a seed: one key and
`blocks` plaintexts. Before any timing, the engine under test is checked
against the scalar engine on a sampled subset of the workload; timing then
runs one discarded warm-up pass plus `reps` measured passes on a monotonic
clock, and the median rep is what the throughput figure reports.
"""

from __future__ import annotations

import hashlib
import random
import statistics
import time
from dataclasses import dataclass, field

from .bitslice import WORD_BITS, bitsliced_encrypt, slice_keys, transpose_in, transpose_out
from .core import encrypt_with_stream
from .errors import BenchConfigError, EquivalenceError
from .keyschedule import subkeys
from .params import CipherParams, parse_variant

ENGINE_SCALAR = "scalar"
_WARMUP_BLOCK_CAP = 1024
_SAMPLE_BLOCK_CAP = 64


@dataclass(frozen=True)
class BenchResult:
    variant: str
    engine: str
    blocks: int
    reps: int
    seed: int
    lanes: int | None
    wall_time_s: float  # median rep
    min_s: float
    max_s: float
    throughput_mbps: float
    sample_digest: str
    rep_times_s: tuple[float, ...] = field(repr=False)

    @property
    def dispersion(self) -> float:
        return self.max_s / self.min_s


def parse_engine(text: str) -> tuple[str, int | None]:
    """'scalar' or 'bitsliced-N' with 1 <= N <= word width."""
    name = text.strip().lower()
    if name == ENGINE_SCALAR:
        return ENGINE_SCALAR, None
    if name.startswith("bitsliced-"):
        try:
            lanes = int(name.split("-", 1)[1])
        except ValueError:
            raise BenchConfigError(f"bad engine {text!r}") from None
        if lanes < 1:
            raise BenchConfigError(f"lane count must be >= 1, got {lanes}")
        if lanes > WORD_BITS:
            raise BenchConfigError(f"lane count {lanes} exceeds the {WORD_BITS}-bit word width")
        return name, lanes
    raise BenchConfigError(f"unknown engine {text!r}; expected scalar or bitsliced-N")


def _workload(params: CipherParams, blocks: int, seed: int) -> tuple[int, list[int]]:
    rng = random.Random(seed)
    key = rng.getrandbits(80)
    return key, [rng.getrandbits(params.block_bits) for _ in range(blocks)]


def _run_scalar(params: CipherParams, key: int, blocks: list[int]) -> list[int]:
    stream = subkeys(params.family, key)
    return [encrypt_with_stream(b, stream, params) for b in blocks]


def _run_bitsliced(params: CipherParams, key: int, blocks: list[int], lanes: int) -> list[int]:
    keybatch = slice_keys(key, params, lanes)
    out: list[int] = []
    for i in range(0, len(blocks), lanes):
        chunk = blocks[i : i + lanes]
        batch = transpose_in(chunk, params, lanes)
        out.extend(transpose_out(bitsliced_encrypt(batch, keybatch), len(chunk)))
    return out


def _digest(params: CipherParams, cts: list[int]) -> str:
    h = hashlib.sha256()
    for ct in cts:
        h.update(ct.to_bytes(params.block_bits // 8, "little"))
    return h.hexdigest()


def run_bench(
    variant: str,
    engine: str = ENGINE_SCALAR,
    blocks: int = 10_000,
    reps: int = 5,
    seed: int = 1,
) -> BenchResult:
    params = parse_variant(variant)
    engine_name, lanes = parse_engine(engine)
    if not isinstance(blocks, int) or blocks < 1:
        raise BenchConfigError(f"blocks must be >= 1, got {blocks!r}")
    if not isinstance(reps, int) or reps < 1:
        raise BenchConfigError(f"reps must be >= 1, got {reps!r}")

    key, pts = _workload(params, blocks, seed)

    def run(batch: list[int]) -> list[int]:
        if lanes is None:
            return _run_scalar(params, key, batch)
        return _run_bitsliced(params, key, batch, lanes)

    # equivalence gate before any timing
    sample = pts[: min(blocks, _SAMPLE_BLOCK_CAP)]
    sample_cts = run(sample)
    digest = _digest(params, sample_cts)
    if lanes is not None:
        scalar_digest = _digest(params, _run_scalar(params, key, sample))
        if digest != scalar_digest:
            raise EquivalenceError(
                f"{engine_name} disagrees with scalar on the {len(sample)}-block sample"
            )

    run(pts[: min(blocks, _WARMUP_BLOCK_CAP)])  # warm-up, discarded

    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        run(pts)
        times.append(time.perf_counter() - t0)

    median = statistics.median(times)
    return BenchResult(
        variant=params.name,
        engine=engine_name,
        blocks=blocks,
        reps=reps,
        seed=seed,
        lanes=lanes,
        wall_time_s=median,
        min_s=min(times),
        max_s=max(times),
        throughput_mbps=blocks * params.block_bits / median / 1e6,
        sample_digest=digest,
        rep_times_s=tuple(times),
    )
