"""Per-round subkey streams for both families.

KATAN clocks the 80 loaded key bits through an expanding LFSR and consumes
two fresh bits per round. KTANTAN never modifies the key; each round it
selects two bits straight out of the key through a multiplexer network
driven by the round counter. Both schedules are exposed as the same
SubkeyStream shape so the round engine does not care which family fed it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counter import counter_states
from .errors import InvalidKeyError
from .params import KEY_BITS, ROUNDS

SCHEDULE_BITS = 2 * ROUNDS  # 508 expanded bits for KATAN


@dataclass(frozen=True)
class SubkeyStream:
    """One (ka, kb) bit pair per round."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != ROUNDS:
            raise ValueError(f"expected {ROUNDS} subkey pairs, got {len(self.pairs)}")


def check_key(key: int) -> int:
    if not isinstance(key, int) or key < 0 or key >> KEY_BITS:
        raise InvalidKeyError(f"key must be an integer in [0, 2**{KEY_BITS})")
    return key


def key_to_bits(key: int) -> list[int]:
    check_key(key)
    return [(key >> i) & 1 for i in range(KEY_BITS)]


def katan_expand(key: int) -> list[int]:
    """All 508 expanded key bits; the first 80 are the key verbatim."""
    bits = key_to_bits(key)
    for i in range(KEY_BITS, SCHEDULE_BITS):
        bits.append(bits[i - 80] ^ bits[i - 61] ^ bits[i - 50] ^ bits[i - 13])
    return bits


def katan_subkeys(key: int) -> SubkeyStream:
    bits = katan_expand(key)
    return SubkeyStream(tuple((bits[2 * r], bits[2 * r + 1]) for r in range(ROUNDS)))


def _ktantan_select(bits: list[int], state: int) -> tuple[int, int]:
    """One round of the KTANTAN mux network for a given counter state.

    The key is treated as five 16-bit words; the counter's high nibble
    addresses the same bit position in every word, and the low nibble
    steers which word's bit lands in each subkey slot.
    """
    t0 = state & 1
    t1 = (state >> 1) & 1
    t2 = (state >> 2) & 1
    t3 = (state >> 3) & 1
    v = (state >> 4) & 0xF
    a = [bits[16 * i + v] for i in range(5)]
    if t3 == 0 and t2 == 0:
        ka = a[0]
    else:
        ka = (a[1], a[2], a[3], a[4])[(t1 << 1) | t0]
    if t3 == 0 and t1 == 0:
        kb = a[4]
    else:
        kb = (a[3], a[2], a[1], a[0])[(t2 << 1) | t0]
    return ka, kb


def ktantan_pair_indices() -> tuple[tuple[int, int], ...]:
    """Key-bit index pair (for ka, kb) selected in each round."""
    probe = list(range(KEY_BITS))
    return tuple(_ktantan_select(probe, s) for s in counter_states())


def ktantan_subkeys(key: int) -> SubkeyStream:
    bits = key_to_bits(key)
    return SubkeyStream(tuple(_ktantan_select(bits, s) for s in counter_states()))


def subkeys(family: str, key: int) -> SubkeyStream:
    if family == "katan":
        return katan_subkeys(key)
    if family == "ktantan":
        return ktantan_subkeys(key)
    raise ValueError(f"unknown family {family!r}")
