"""Bit-sliced batch engine: N independent (plaintext, key) lanes per word.

One machine word per state-bit position; lane j of every word belongs to
block j of the batch. The round function then runs as word-wide XOR/AND,
so all lanes advance in lockstep, the software analog of parallel cipher
instances in hardware. Lane counts are capped at WORD_BITS; batches with
fewer blocks than lanes leave the high lanes zero-filled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .counter import ir_sequence
from .errors import BatchShapeError
from .keyschedule import subkeys
from .params import CipherParams, ROUNDS

WORD_BITS = 64


@dataclass(frozen=True)
class BitsliceBatch:
    params: CipherParams
    lanes: int
    slices: tuple[int, ...]  # slices[w] lane-bit j = block bit w of lane j

    def __post_init__(self) -> None:
        if len(self.slices) != self.params.block_bits:
            raise BatchShapeError("slice count must equal the variant's block size")


@dataclass(frozen=True)
class BitsliceKeyBatch:
    params: CipherParams
    lanes: int
    ka_words: tuple[int, ...]
    kb_words: tuple[int, ...]


def _check_lanes(lanes: int) -> int:
    if not 1 <= lanes <= WORD_BITS:
        raise BatchShapeError(f"lane count must be in 1..{WORD_BITS}, got {lanes}")
    return lanes


def transpose_in(blocks: Sequence[int], params: CipherParams, lanes: int | None = None) -> BitsliceBatch:
    if lanes is None:
        lanes = len(blocks)
    _check_lanes(lanes)
    if len(blocks) > lanes:
        raise BatchShapeError(f"{len(blocks)} blocks do not fit in {lanes} lanes")
    nbits = params.block_bits
    for b in blocks:
        if not isinstance(b, int) or b < 0 or b >> nbits:
            raise BatchShapeError(f"block out of range for {params.name}")
    slices = [0] * nbits
    for j, b in enumerate(blocks):
        bit = 1 << j
        w = 0
        while b:
            if b & 1:
                slices[w] |= bit
            b >>= 1
            w += 1
    return BitsliceBatch(params=params, lanes=lanes, slices=tuple(slices))


def transpose_out(batch: BitsliceBatch, count: int | None = None) -> list[int]:
    if count is None:
        count = batch.lanes
    if count > batch.lanes:
        raise BatchShapeError(f"cannot extract {count} blocks from {batch.lanes} lanes")
    blocks = [0] * count
    for w, word in enumerate(batch.slices):
        if not word:
            continue
        for j in range(count):
            if (word >> j) & 1:
                blocks[j] |= 1 << w
    return blocks


def slice_keys(keys: int | Sequence[int], params: CipherParams, lanes: int | None = None) -> BitsliceKeyBatch:
    """Pack per-lane subkey schedules into one (ka, kb) word pair per round.

    A single int key is broadcast to every lane; a sequence supplies one
    key per lane, zero-filling any unused high lanes.
    """
    if isinstance(keys, int):
        if lanes is None:
            raise BatchShapeError("lane count required when broadcasting one key")
        _check_lanes(lanes)
        mask = (1 << lanes) - 1
        stream = subkeys(params.family, keys)
        ka_words = tuple(mask if ka else 0 for ka, _ in stream.pairs)
        kb_words = tuple(mask if kb else 0 for _, kb in stream.pairs)
        return BitsliceKeyBatch(params=params, lanes=lanes, ka_words=ka_words, kb_words=kb_words)

    if lanes is None:
        lanes = len(keys)
    _check_lanes(lanes)
    if len(keys) > lanes:
        raise BatchShapeError(f"{len(keys)} keys do not fit in {lanes} lanes")
    ka = [0] * ROUNDS
    kb = [0] * ROUNDS
    for j, key in enumerate(keys):
        bit = 1 << j
        for r, (a, b) in enumerate(subkeys(params.family, key).pairs):
            if a:
                ka[r] |= bit
            if b:
                kb[r] |= bit
    return BitsliceKeyBatch(params=params, lanes=lanes, ka_words=tuple(ka), kb_words=tuple(kb))


def _check_pairing(batch: BitsliceBatch, keys: BitsliceKeyBatch) -> None:
    if batch.params.name != keys.params.name:
        raise BatchShapeError(
            f"batch is {batch.params.name} but keys are for {keys.params.name}"
        )
    if batch.lanes != keys.lanes:
        raise BatchShapeError(f"batch has {batch.lanes} lanes but keys have {keys.lanes}")


def bitsliced_encrypt(batch: BitsliceBatch, keys: BitsliceKeyBatch) -> BitsliceBatch:
    _check_pairing(batch, keys)
    params = batch.params
    x1, x2, x3, x4, x5 = params.taps_x
    y1, y2, y3, y4, y5, y6 = params.taps_y
    n2 = params.len_l2
    steps = params.steps_per_round
    s2 = list(batch.slices[:n2])
    s1 = list(batch.slices[n2:])
    mask = (1 << batch.lanes) - 1
    ir = ir_sequence()
    ka_words = keys.ka_words
    kb_words = keys.kb_words
    for r in range(params.rounds):
        ka = ka_words[r]
        kb = kb_words[r]
        irw = mask if ir[r] else 0
        for _ in range(steps):
            a = s1[x1] ^ s1[x2] ^ (s1[x3] & s1[x4]) ^ (s1[x5] & irw) ^ ka
            b = s2[y1] ^ s2[y2] ^ (s2[y3] & s2[y4]) ^ (s2[y5] & s2[y6]) ^ kb
            s1.insert(0, b)
            s1.pop()
            s2.insert(0, a)
            s2.pop()
    return BitsliceBatch(params=params, lanes=batch.lanes, slices=tuple(s2 + s1))


def bitsliced_decrypt(batch: BitsliceBatch, keys: BitsliceKeyBatch) -> BitsliceBatch:
    _check_pairing(batch, keys)
    params = batch.params
    x1, x2, x3, x4, x5 = params.taps_x
    y1, y2, y3, y4, y5, y6 = params.taps_y
    n2 = params.len_l2
    steps = params.steps_per_round
    s2 = list(batch.slices[:n2])
    s1 = list(batch.slices[n2:])
    mask = (1 << batch.lanes) - 1
    ir = ir_sequence()
    ka_words = keys.ka_words
    kb_words = keys.kb_words
    for r in range(params.rounds - 1, -1, -1):
        ka = ka_words[r]
        kb = kb_words[r]
        irw = mask if ir[r] else 0
        for _ in range(steps):
            a_in = s2.pop(0)
            b_in = s1.pop(0)
            # taps x1/y1 are the register MSBs, so append lands the
            # recovered bits at the right position
            t1 = a_in ^ s1[x2] ^ (s1[x3] & s1[x4]) ^ (s1[x5] & irw) ^ ka
            t2 = b_in ^ s2[y2] ^ (s2[y3] & s2[y4]) ^ (s2[y5] & s2[y6]) ^ kb
            s1.append(t1)
            s2.append(t2)
    return BitsliceBatch(params=params, lanes=batch.lanes, slices=tuple(s2 + s1))


def encrypt_batch(
    blocks: Sequence[int],
    keys: int | Sequence[int],
    params: CipherParams,
    lanes: int | None = None,
) -> list[int]:
    """Transpose, encrypt, transpose back; returns one block per input."""
    batch = transpose_in(blocks, params, lanes)
    out = bitsliced_encrypt(batch, slice_keys(keys, params, batch.lanes))
    return transpose_out(out, len(blocks))


def decrypt_batch(
    blocks: Sequence[int],
    keys: int | Sequence[int],
    params: CipherParams,
    lanes: int | None = None,
) -> list[int]:
    batch = transpose_in(blocks, params, lanes)
    out = bitsliced_decrypt(batch, slice_keys(keys, params, batch.lanes))
    return transpose_out(out, len(blocks))
